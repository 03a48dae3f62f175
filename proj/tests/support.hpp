#pragma once

#include "codecert/code.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <vector>

namespace testing {

using codecert::Code;
using codecert::Word;

inline Code random_code(std::mt19937_64& rng, std::size_t n, std::size_t count) {
    std::uniform_int_distribution<std::uint64_t> bits(0, Word::mask(n));
    std::vector<Word> words;
    for (std::size_t k = 0; k < count; ++k) words.emplace_back(n, bits(rng));
    return Code(n, std::move(words));
}

/// Applies x -> perm(x) + flip, perm given as source coordinates.
inline Code apply_equivalence(const Code& c, const std::vector<std::size_t>& source, const Word& flip) {
    std::vector<Word> out;
    for (const Word& w : c) out.push_back(codecert::permute_coordinates(w, source) + flip);
    return Code(c.length(), std::move(out));
}

inline Code random_image(std::mt19937_64& rng, const Code& c) {
    std::vector<std::size_t> source(c.length());
    std::iota(source.begin(), source.end(), 0);
    std::shuffle(source.begin(), source.end(), rng);
    std::uniform_int_distribution<std::uint64_t> bits(0, Word::mask(c.length()));
    return apply_equivalence(c, source, Word(c.length(), bits(rng)));
}

/// Tries every coordinate permutation and every flip pattern.
inline bool brute_force_equivalent(const Code& a, const Code& b) {
    if (a.length() != b.length() || a.size() != b.size()) return false;
    const std::size_t n = a.length();
    std::vector<std::size_t> source(n);
    std::iota(source.begin(), source.end(), 0);
    do {
        std::vector<Word> moved;
        for (const Word& w : a) moved.push_back(codecert::permute_coordinates(w, source));
        for (std::uint64_t f = 0; f <= Word::mask(n); ++f) {
            const Word flip(n, f);
            bool all = true;
            for (const Word& w : moved)
                if (!b.contains(w + flip)) {
                    all = false;
                    break;
                }
            if (all) return true;
        }
    } while (std::next_permutation(source.begin(), source.end()));
    return false;
}

/// |C|^-1 #{(u,v) : d(u,v) = i} by a plain double loop over strings.
inline std::vector<std::uint64_t> naive_pair_counts(const Code& c) {
    std::vector<std::uint64_t> out(c.length() + 1, 0);
    for (const Word& u : c)
        for (const Word& v : c) {
            const std::string s = u.to_string(), t = v.to_string();
            std::size_t d = 0;
            for (std::size_t i = 0; i < s.size(); ++i) d += s[i] != t[i];
            ++out[d];
        }
    return out;
}

}  // namespace testing
