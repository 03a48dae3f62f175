#pragma once

#include "codecert/rational.hpp"
#include "codecert/word.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace codecert {

/// A binary code: a set of distinct words of a common length.
/// Words are kept sorted ascending (lexicographic); duplicates are dropped on construction.
class Code {
public:
    explicit Code(std::size_t length, std::vector<Word> words = {});

    std::size_t length() const { return length_; }
    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }
    std::span<const Word> words() const { return words_; }
    const Word& operator[](std::size_t i) const { return words_[i]; }
    bool contains(const Word& w) const;

    auto begin() const { return words_.begin(); }
    auto end() const { return words_.end(); }

    friend bool operator==(const Code&, const Code&) = default;

private:
    std::size_t length_;
    std::vector<Word> words_;
};

/// Linear code over F2 held as a reduced row echelon basis.
///
/// Each basis row has a leading coordinate (its first 1); leading coordinates
/// are strictly increasing down the rows and every other row is zero there.
/// The basis is therefore unique for a given subspace, so == compares subspaces.
class LinearCode {
public:
    explicit LinearCode(std::size_t length, std::span<const Word> generators = {});

    std::size_t length() const { return length_; }
    std::size_t dimension() const { return basis_.size(); }
    std::span<const Word> basis() const { return basis_; }
    bool contains(const Word& w) const;

    /// All 2^dimension members as a Code. Dimension must be at most 26.
    Code to_code() const;

    friend bool operator==(const LinearCode&, const LinearCode&) = default;

private:
    std::size_t length_;
    std::vector<Word> basis_;
};

/// a_i = |C|^-1 * #{(u,v) in C x C : d(u,v) = i}, stored exactly.
struct DistanceDistribution {
    std::size_t size = 0;
    std::vector<std::uint64_t> ordered_pairs;  // index = distance
    std::vector<Rational> a;                   // index = distance

    /// a_0 = 1, sum a_i = |C|, a_i >= 0, and a_i (i >= 1) a multiple of 2/|C|.
    bool satisfies_invariants() const;
};

struct WeightEnumerator {
    std::vector<std::uint64_t> counts;  // index = weight
    std::uint64_t total() const;
};

/// nullopt stands for infinity (fewer than two words).
std::optional<std::size_t> min_distance(const Code& c);

/// Throws std::invalid_argument for the empty code.
DistanceDistribution distance_distribution(const Code& c);

WeightEnumerator weight_enumerator(const Code& c);

LinearCode span(const Code& c);
LinearCode dual(const LinearCode& l);

struct SelfOrthogonality {
    bool self_orthogonal = true;
    /// Unordered pairs {u, v} (u <= v, including u == v) with wt(u & v) odd.
    std::vector<std::pair<Word, Word>> odd_pairs;
};

SelfOrthogonality self_orthogonality(const Code& c);

/// Greedy subcode in which every pair of distinct words has intersection parity
/// target_parity. Starts from seed and scans c in ascending order.
/// Throws std::invalid_argument if seed is not in c.
Code greedy_orthogonal_subcode(const Code& c, const Word& seed, unsigned target_parity);

namespace op {
struct Shorten { std::vector<std::size_t> positions; };
struct Puncture { std::vector<std::size_t> positions; };
struct Translate { Word word; };
struct SliceWeight { std::size_t weight; };
struct ExtendWithBit { bool bit; };
struct Complement {};
}  // namespace op

using CodeTransform =
    std::variant<op::Shorten, op::Puncture, op::Translate, op::SliceWeight, op::ExtendWithBit, op::Complement>;

/// Throws std::invalid_argument on invalid positions or lengths.
Code transform(const Code& c, const CodeTransform& t);

/// Deletes the given coordinates from a word (positions need not be sorted).
Word delete_coordinates(const Word& w, std::span<const std::size_t> positions);

/// New coordinate i takes old coordinate source[i]; source must be a permutation of 0..n-1.
Word permute_coordinates(const Word& w, std::span<const std::size_t> source);
Code permute_coordinates(const Code& c, std::span<const std::size_t> source);

}  // namespace codecert
