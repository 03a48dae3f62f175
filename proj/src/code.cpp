#include "codecert/code.hpp"

#include "codecert/kernels.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace codecert {

Code::Code(std::size_t length, std::vector<Word> words) : length_(length), words_(std::move(words)) {
    if (length == 0 || length > Word::kMaxLength) throw std::invalid_argument("code length must be in 1..64");
    for (const Word& w : words_)
        if (w.length() != length_) throw LengthMismatch(w.length(), length_);
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool Code::contains(const Word& w) const {
    return w.length() == length_ && std::binary_search(words_.begin(), words_.end(), w);
}

// --- LinearCode -------------------------------------------------------------

namespace {

std::uint64_t leading_bit(std::uint64_t x) { return std::uint64_t{1} << (63 - std::countl_zero(x)); }

}  // namespace

LinearCode::LinearCode(std::size_t length, std::span<const Word> generators) : length_(length) {
    if (length == 0 || length > Word::kMaxLength) throw std::invalid_argument("code length must be in 1..64");
    std::vector<std::uint64_t> rows;
    for (const Word& g : generators) {
        if (g.length() != length_) throw LengthMismatch(g.length(), length_);
        std::uint64_t v = g.bits();
        for (std::uint64_t r : rows)
            if (v & leading_bit(r)) v ^= r;
        if (v == 0) continue;
        const std::uint64_t pivot = leading_bit(v);
        for (std::uint64_t& r : rows)
            if (r & pivot) r ^= v;
        rows.push_back(v);
    }
    // Larger leading bit = smaller leading coordinate, so descending integer order.
    std::sort(rows.begin(), rows.end(), std::greater<>());
    basis_.reserve(rows.size());
    for (std::uint64_t r : rows) basis_.emplace_back(length_, r);
}

bool LinearCode::contains(const Word& w) const {
    if (w.length() != length_) return false;
    std::uint64_t v = w.bits();
    for (const Word& r : basis_)
        if (v & leading_bit(r.bits())) v ^= r.bits();
    return v == 0;
}

Code LinearCode::to_code() const {
    if (dimension() > 26) throw std::length_error("refusing to enumerate a code of dimension > 26");
    const std::size_t k = dimension();
    std::vector<Word> words;
    words.reserve(std::size_t{1} << k);
    // Gray-code walk: one XOR per word.
    std::uint64_t v = 0;
    words.emplace_back(length_, 0);
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
        v ^= basis_[static_cast<std::size_t>(std::countr_zero(i))].bits();
        words.emplace_back(length_, v);
    }
    return Code(length_, std::move(words));
}

// --- distributions -----------------------------------------------------------

bool DistanceDistribution::satisfies_invariants() const {
    if (size == 0 || a.empty() || a[0] != 1) return false;
    Rational total = 0;
    Rational unit(2, static_cast<unsigned long>(size));
    unit.canonicalize();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) < 0) return false;
        total += a[i];
        if (i >= 1) {
            const Rational multiple = a[i] / unit;
            if (multiple.get_den() != 1) return false;
        }
    }
    return total == Rational(static_cast<unsigned long>(size));
}

std::uint64_t WeightEnumerator::total() const {
    std::uint64_t t = 0;
    for (auto c : counts) t += c;
    return t;
}

std::optional<std::size_t> min_distance(const Code& c) {
    if (c.size() < 2) return std::nullopt;
    return c.size() >= kernels::kParallelThreshold ? kernels::parallel::min_pair_distance(c.words(), c.length())
                                                  : kernels::serial::min_pair_distance(c.words(), c.length());
}

DistanceDistribution distance_distribution(const Code& c) {
    if (c.empty()) throw std::invalid_argument("distance distribution of the empty code");
    DistanceDistribution dd;
    dd.size = c.size();
    dd.ordered_pairs = c.size() >= kernels::kParallelThreshold
                           ? kernels::parallel::pair_distance_histogram(c.words(), c.length())
                           : kernels::serial::pair_distance_histogram(c.words(), c.length());
    dd.a.reserve(dd.ordered_pairs.size());
    for (std::uint64_t count : dd.ordered_pairs) {
        Rational r(static_cast<unsigned long>(count), static_cast<unsigned long>(c.size()));
        r.canonicalize();
        dd.a.push_back(r);
    }
    return dd;
}

WeightEnumerator weight_enumerator(const Code& c) {
    WeightEnumerator we;
    we.counts.assign(c.length() + 1, 0);
    for (const Word& w : c) ++we.counts[weight(w)];
    return we;
}

LinearCode span(const Code& c) { return LinearCode(c.length(), c.words()); }

LinearCode dual(const LinearCode& l) {
    const std::size_t n = l.length();
    std::vector<bool> is_pivot(n, false);
    std::vector<std::size_t> pivot_of_row;
    for (const Word& r : l.basis()) {
        const auto coord = static_cast<std::size_t>(std::countl_zero(r.bits())) - (64 - n);
        is_pivot[coord] = true;
        pivot_of_row.push_back(coord);
    }
    std::vector<Word> generators;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Word x = Word::zero(n).with_bit(f, true);
        for (std::size_t r = 0; r < l.basis().size(); ++r)
            if (l.basis()[r].bit(f)) x = x.with_bit(pivot_of_row[r], true);
        generators.push_back(x);
    }
    return LinearCode(n, generators);
}

SelfOrthogonality self_orthogonality(const Code& c) {
    SelfOrthogonality result;
    const auto words = c.words();
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i; j < words.size(); ++j)
            if (std::popcount(words[i].bits() & words[j].bits()) & 1) result.odd_pairs.emplace_back(words[i], words[j]);
    result.self_orthogonal = result.odd_pairs.empty();
    return result;
}

Code greedy_orthogonal_subcode(const Code& c, const Word& seed, unsigned target_parity) {
    if (!c.contains(seed)) throw std::invalid_argument("greedy_orthogonal_subcode: seed is not a codeword");
    target_parity &= 1U;
    std::vector<Word> chosen{seed};
    for (const Word& d : c) {
        if (d == seed) continue;
        const bool fits = std::all_of(chosen.begin(), chosen.end(), [&](const Word& x) {
            return static_cast<unsigned>(std::popcount(d.bits() & x.bits()) & 1) == target_parity;
        });
        if (fits) chosen.push_back(d);
    }
    return Code(c.length(), std::move(chosen));
}

// --- transforms --------------------------------------------------------------

Word delete_coordinates(const Word& w, std::span<const std::size_t> positions) {
    std::vector<bool> drop(w.length(), false);
    for (std::size_t p : positions) {
        if (p >= w.length()) throw std::invalid_argument("coordinate " + std::to_string(p) + " out of range");
        drop[p] = true;
    }
    std::uint64_t bits = 0;
    std::size_t kept = 0;
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (drop[i]) continue;
        bits = (bits << 1) | static_cast<std::uint64_t>(w.bit(i));
        ++kept;
    }
    return Word(kept, bits);
}

Word permute_coordinates(const Word& w, std::span<const std::size_t> source) {
    if (source.size() != w.length()) throw std::invalid_argument("permutation size does not match word length");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < source.size(); ++i) bits = (bits << 1) | static_cast<std::uint64_t>(w.bit(source[i]));
    return Word(w.length(), bits);
}

Code permute_coordinates(const Code& c, std::span<const std::size_t> source) {
    std::vector<bool> used(c.length(), false);
    if (source.size() != c.length()) throw std::invalid_argument("permutation size does not match code length");
    for (std::size_t s : source) {
        if (s >= c.length() || used[s]) throw std::invalid_argument("not a permutation of the coordinates");
        used[s] = true;
    }
    std::vector<Word> out;
    out.reserve(c.size());
    for (const Word& w : c) out.push_back(permute_coordinates(w, source));
    return Code(c.length(), std::move(out));
}

namespace {

std::size_t checked_remaining(const Code& c, std::span<const std::size_t> positions) {
    std::vector<std::size_t> sorted(positions.begin(), positions.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("repeated coordinate in position list");
    for (std::size_t p : sorted)
        if (p >= c.length()) throw std::invalid_argument("coordinate " + std::to_string(p) + " out of range");
    if (sorted.size() >= c.length()) throw std::invalid_argument("cannot delete every coordinate");
    return c.length() - sorted.size();
}

struct TransformVisitor {
    const Code& c;

    Code operator()(const op::Shorten& s) const {
        const std::size_t n = checked_remaining(c, s.positions);
        std::vector<Word> out;
        for (const Word& w : c) {
            const bool zero_there =
                std::none_of(s.positions.begin(), s.positions.end(), [&](std::size_t p) { return w.bit(p); });
            if (zero_there) out.push_back(delete_coordinates(w, s.positions));
        }
        return Code(n, std::move(out));
    }
    Code operator()(const op::Puncture& p) const {
        const std::size_t n = checked_remaining(c, p.positions);
        std::vector<Word> out;
        for (const Word& w : c) out.push_back(delete_coordinates(w, p.positions));
        return Code(n, std::move(out));
    }
    Code operator()(const op::Translate& t) const {
        if (t.word.length() != c.length()) throw LengthMismatch(t.word.length(), c.length());
        std::vector<Word> out;
        for (const Word& w : c) out.push_back(w + t.word);
        return Code(c.length(), std::move(out));
    }
    Code operator()(const op::SliceWeight& s) const {
        std::vector<Word> out;
        for (const Word& w : c)
            if (weight(w) == s.weight) out.push_back(w);
        return Code(c.length(), std::move(out));
    }
    Code operator()(const op::ExtendWithBit& e) const {
        if (c.length() >= Word::kMaxLength) throw std::invalid_argument("cannot extend a length-64 code");
        std::vector<Word> out;
        for (const Word& w : c) out.emplace_back(c.length() + 1, (w.bits() << 1) | static_cast<std::uint64_t>(e.bit));
        return Code(c.length() + 1, std::move(out));
    }
    Code operator()(const op::Complement&) const {
        std::vector<Word> out;
        for (const Word& w : c) out.push_back(w.complement());
        return Code(c.length(), std::move(out));
    }
};

}  // namespace

Code transform(const Code& c, const CodeTransform& t) { return std::visit(TransformVisitor{c}, t); }

}  // namespace codecert
