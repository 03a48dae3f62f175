#include "codecert/classify20.hpp"

#include "codecert/golay.hpp"
#include "codecert/kernels.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <optional>

namespace codecert::classify20 {

namespace {

constexpr std::size_t kLength = 20;
constexpr std::size_t kMasks = 1U << 16;

void require(bool ok, const std::string& what) {
    if (!ok) throw golay::VerificationFailure("classify20: " + what);
}

std::vector<Word> members(const LinearCode& l) {
    const Code c = l.to_code();
    return {c.begin(), c.end()};
}

LinearCode with_all_ones(const Code& c) {
    std::vector<Word> gens(c.begin(), c.end());
    gens.push_back(Word::ones(c.length()));
    return LinearCode(c.length(), gens);
}

std::string count_detail(std::size_t got, std::size_t want) {
    return "got " + std::to_string(got) + ", want " + std::to_string(want);
}

}  // namespace

FlipBase build_base() {
    const Code original = golay::build_shortened(4).to_code();
    const Code heavy = transform(original, op::SliceWeight{16});
    require(heavy.size() == 5, "B does not have exactly 5 words of weight 16");

    std::vector<std::vector<std::size_t>> blocks;
    std::vector<bool> covered(kLength, false);
    for (const Word& x : heavy) {
        std::vector<std::size_t> zeros;
        for (std::size_t i = 0; i < kLength; ++i)
            if (!x.bit(i)) zeros.push_back(i);
        require(zeros.size() == 4, "weight-16 word without a 4-block of zeros");
        for (std::size_t i : zeros) {
            require(!covered[i], "zero blocks of the weight-16 words overlap");
            covered[i] = true;
        }
        blocks.push_back(std::move(zeros));
    }
    std::sort(blocks.begin(), blocks.end());

    FlipBase base{LinearCode(kLength), Code(kLength), Code(kLength), LinearCode(kLength), {}, {}};
    for (const auto& b : blocks) base.source.insert(base.source.end(), b.begin(), b.end());
    base.code = permute_coordinates(original, base.source);
    base.linear = span(base.code);
    require(base.linear.dimension() == 8, "B is not 8-dimensional");

    std::vector<Word> d;
    for (std::size_t k = 0; k < 5; ++k) {
        Word x = Word::ones(kLength);
        for (std::size_t i = 4 * k; i < 4 * k + 4; ++i) x = x.with_bit(i, false);
        require(base.code.contains(x), "arranged B misses a block word");
        d.push_back(x);
    }
    base.D = Code(kLength, d);
    base.span_D = LinearCode(kLength, d);
    require(base.span_D.dimension() == 4, "<D> is not 4-dimensional");

    const std::vector<Word> sub = members(base.span_D);
    std::vector<bool> seen(std::size_t{1} << kLength, false);
    for (const Word& x : base.code) {
        if (seen[x.bits()]) continue;
        base.reps.push_back(x);
        for (const Word& y : sub) seen[(x + y).bits()] = true;
    }
    require(base.reps.size() == 16, "B is not a union of 16 cosets of <D>");
    return base;
}

Code flip_code(const FlipBase& base, std::uint16_t mask) {
    const std::vector<Word> sub = members(base.span_D);
    std::vector<Word> words;
    words.reserve(base.reps.size() * sub.size());
    for (std::size_t i = 0; i < base.reps.size(); ++i) {
        const bool flip = (mask >> i) & 1U;
        for (const Word& y : sub) {
            const Word x = base.reps[i] + y;
            words.push_back(flip ? x.complement() : x);
        }
    }
    return Code(base.code.length(), std::move(words));
}

bool FlipReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

FlipReport verify_flip_properties(const Code& c) {
    FlipReport r;
    r.checks.push_back({"size 256", c.size() == 256, count_detail(c.size(), 256)});
    if (c.empty()) return r;

    Code x = c;
    if (!c.contains(Word::zero(c.length()))) {
        x = transform(c, op::Translate{c[0]});
        r.translated = true;
    }
    const std::size_t n = x.length();
    const DistanceDistribution dd = distance_distribution(x);
    std::optional<std::size_t> md;
    for (std::size_t i = 1; i < dd.ordered_pairs.size() && !md; ++i)
        if (dd.ordered_pairs[i]) md = i;
    r.checks.push_back({"min distance 8", md == 8, md ? "got " + std::to_string(*md) : "got infinity"});

    std::string odd;
    for (std::size_t i = 1; i < dd.ordered_pairs.size(); ++i)
        if (dd.ordered_pairs[i] && i % 4) odd += (odd.empty() ? "" : ",") + std::to_string(i);
    r.checks.push_back({"distances divisible by 4", odd.empty(), odd.empty() ? "" : "distances " + odd});
    r.checks.push_back({"a_" + std::to_string(n) + " = 0", dd.ordered_pairs[n] == 0, "a_n = " + to_string(dd.a[n])});

    std::size_t heavy = 0;
    std::size_t invariant = 0;
    for (const Word& a : x) {
        if (weight(a) != 16) continue;
        ++heavy;
        if (transform(x, op::Translate{a}) == x) ++invariant;
    }
    r.checks.push_back({"invariant under weight-16 translations", invariant == heavy,
                        std::to_string(invariant) + " of " + std::to_string(heavy) + " words"});

    const LinearCode e = with_all_ones(x);
    bool exactly_one = e.dimension() <= 24;
    std::size_t violations = 0;
    if (exactly_one) {
        const Word ones = Word::ones(n);
        for (const Word& u : e.to_code())
            if (x.contains(u) == x.contains(u + ones)) ++violations;
        exactly_one = violations == 0;
    }
    r.checks.push_back({"exactly one of u, 1+u", exactly_one,
                        "dim <c,1> = " + std::to_string(e.dimension()) + ", " + std::to_string(violations) + " violations"});

    std::map<std::size_t, Rational> want{{0, 1}, {8, 130}, {12, 120}, {16, 5}};
    bool dist_ok = true;
    std::string got;
    for (std::size_t i = 0; i < dd.a.size(); ++i) {
        const Rational expected = want.count(i) ? want[i] : Rational(0);
        dist_ok = dist_ok && dd.a[i] == expected;
        if (sgn(dd.a[i]) != 0) got += (got.empty() ? "" : " ") + ("a_" + std::to_string(i) + "=" + to_string(dd.a[i]));
    }
    r.checks.push_back({"distribution 130/120/5", dist_ok, got});
    return r;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> interaction_key(const Code& c) {
    const auto words = c.words();
    const std::size_t m = words.size();
    std::vector<std::size_t> comp(m);
    std::iota(comp.begin(), comp.end(), 0);
    const auto find = [&](std::size_t v) {
        while (comp[v] != v) v = comp[v] = comp[comp[v]];
        return v;
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (hamming_distance(words[i], words[j]) == 16) {
                const std::size_t a = find(i), b = find(j);
                if (a != b) comp[std::max(a, b)] = std::min(a, b);
            }
    std::map<std::size_t, std::size_t> dense;
    for (std::size_t i = 0; i < m; ++i) dense.emplace(find(i), dense.size());
    const std::size_t k = dense.size();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> counts(k * k, {0, 0});
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            std::size_t a = dense[find(i)], b = dense[find(j)];
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            const std::size_t dist = hamming_distance(words[i], words[j]);
            if (dist == 8) ++counts[a * k + b].first;
            if (dist == 12) ++counts[a * k + b].second;
        }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> key;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) key.push_back(counts[a * k + b]);
    std::sort(key.begin(), key.end());
    return key;
}

std::uint16_t MaskSymmetry::apply(std::uint16_t mask) const {
    std::uint16_t out = 0;
    for (std::size_t i = 0; i < 16; ++i)
        if ((mask >> i) & 1U) out = static_cast<std::uint16_t>(out | (1U << perm[i]));
    return complement ? static_cast<std::uint16_t>(~out) : out;
}

std::vector<MaskSymmetry> mask_symmetries(const FlipBase& base) {
    const std::vector<Word> sub = members(base.span_D);
    std::vector<std::uint8_t> coset_of(base.code.size());
    for (std::size_t i = 0; i < base.reps.size(); ++i)
        for (const Word& y : sub) {
            const auto it = std::lower_bound(base.code.begin(), base.code.end(), base.reps[i] + y);
            coset_of[static_cast<std::size_t>(it - base.code.begin())] = static_cast<std::uint8_t>(i);
        }

    std::vector<MaskSymmetry> out;
    const CanonicalResult search = canonical_search(code_to_graph(base.code));
    for (const Permutation& gamma : search.automorphisms) {
        MaskSymmetry s;
        std::vector<int> image(16, -1);
        for (std::size_t k = 0; k < base.code.size(); ++k) {
            require(gamma[k] < base.code.size(), "automorphism moves a codeword vertex off the codewords");
            const std::uint8_t from = coset_of[k], to = coset_of[gamma[k]];
            require(image[from] < 0 || image[from] == to, "automorphism does not permute the cosets of <D>");
            image[from] = to;
        }
        for (std::size_t i = 0; i < 16; ++i) s.perm[i] = static_cast<std::uint8_t>(image[i]);
        out.push_back(s);
    }
    MaskSymmetry all_ones;
    std::iota(all_ones.perm.begin(), all_ones.perm.end(), std::uint8_t{0});
    all_ones.complement = true;
    out.push_back(all_ones);
    return out;
}

namespace {

void verify_range(const FlipBase& base, const LinearCode& reference, std::size_t begin, std::size_t end,
                  VerifySummary& out) {
    for (std::size_t mask = begin; mask < end; ++mask) {
        const Code c = flip_code(base, static_cast<std::uint16_t>(mask));
        if (verify_flip_properties(c).pass()) ++out.passed;
        else out.failed.push_back(static_cast<std::uint16_t>(mask));
        if (!(with_all_ones(c) == reference)) out.span_constant = false;
    }
}

}  // namespace

namespace serial {

VerifySummary verify_all(const FlipBase& base) {
    VerifySummary out;
    const LinearCode reference = with_all_ones(base.code);
    out.span_constant = reference.dimension() == 9;
    verify_range(base, reference, 0, kMasks, out);
    return out;
}

}  // namespace serial

namespace parallel {

VerifySummary verify_all(const FlipBase& base, int jobs) {
    const int threads = jobs > 0 ? jobs : kernels::default_jobs();
    constexpr std::size_t kBlocks = 256;
    std::vector<VerifySummary> parts(kBlocks);
    const LinearCode reference = with_all_ones(base.code);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(kBlocks); ++b) {
        const std::size_t begin = static_cast<std::size_t>(b) * (kMasks / kBlocks);
        verify_range(base, reference, begin, begin + kMasks / kBlocks, parts[static_cast<std::size_t>(b)]);
    }
    VerifySummary out;
    out.span_constant = reference.dimension() == 9;
    for (const VerifySummary& p : parts) {
        out.passed += p.passed;
        out.failed.insert(out.failed.end(), p.failed.begin(), p.failed.end());
        out.span_constant = out.span_constant && p.span_constant;
    }
    return out;
}

}  // namespace parallel

std::size_t Classification::total() const {
    std::size_t t = 0;
    for (const FlipClass& c : classes) t += c.size;
    return t;
}

Classification classify_all(const FlipBase& base, const ClassifyOptions& options) {
    Classification out;
    std::vector<std::uint16_t> reps;
    std::vector<std::size_t> weight;  // masks represented by each entry of reps
    if (options.exhaustive) {
        reps.resize(kMasks);
        std::iota(reps.begin(), reps.end(), std::uint16_t{0});
        weight.assign(kMasks, 1);
        out.mask_orbits = kMasks;
    } else {
        std::vector<std::uint16_t> parent(kMasks);
        std::iota(parent.begin(), parent.end(), std::uint16_t{0});
        const auto find = [&](std::uint16_t v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        const std::vector<MaskSymmetry> symmetries = mask_symmetries(base);
        for (std::size_t m = 0; m < kMasks; ++m)
            for (const MaskSymmetry& s : symmetries) {
                const std::uint16_t a = find(static_cast<std::uint16_t>(m)), b = find(s.apply(static_cast<std::uint16_t>(m)));
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        std::map<std::uint16_t, std::size_t> sizes;
        for (std::size_t m = 0; m < kMasks; ++m) ++sizes[find(static_cast<std::uint16_t>(m))];
        for (const auto& [rep, size] : sizes) {
            reps.push_back(rep);
            weight.push_back(size);
        }
        out.mask_orbits = reps.size();
    }

    const auto classes = partition_generated(
        reps.size(), [&](std::size_t i) { return flip_code(base, reps[i]); }, options.jobs);
    out.labels_computed = reps.size();

    std::map<std::vector<std::pair<std::uint32_t, std::uint32_t>>, int> buckets;
    for (const EquivalenceClass& cls : classes) {
        FlipClass fc;
        fc.mask = reps[cls.representative];
        const Code rep_code = flip_code(base, fc.mask);
        fc.digest = canonical_form(code_to_graph(rep_code)).digest();
        const auto key = interaction_key(rep_code);
        buckets.emplace(key, 0);
        for (std::size_t member : cls.members) {
            fc.size += weight[member];
            if (!options.exhaustive && interaction_key(flip_code(base, reps[member])) != key) out.keys_consistent = false;
        }
        out.classes.push_back(std::move(fc));
    }
    out.key_buckets = buckets.size();
    std::sort(out.classes.begin(), out.classes.end(), [](const FlipClass& a, const FlipClass& b) { return a.mask < b.mask; });
    return out;
}

std::string mask_hex(std::uint16_t mask) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%04x", static_cast<unsigned>(mask));
    return buf;
}

}  // namespace codecert::classify20
