#pragma once

#include "codecert/canon.hpp"
#include "codecert/code.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace codecert::classify20 {

/// The quadruply shortened Golay code B with coordinates arranged so that its
/// five weight-16 words vanish on the blocks {0..3}, {4..7}, ..., {16..19}.
struct FlipBase {
    LinearCode linear;
    Code code;                 // all 256 members of B
    Code D;                    // the five weight-16 words, D[k] zero on block k
    LinearCode span_D;         // dimension 4
    std::vector<Word> reps;    // 16 coset representatives, each the smallest member of its coset
    std::vector<std::size_t> source;  // new coordinate i = original coordinate source[i]
};

FlipBase build_base();

/// Bit i of mask replaces coset reps[i] + <D> by its complement.
Code flip_code(const FlipBase& base, std::uint16_t mask);

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct FlipReport {
    std::vector<Check> checks;
    bool translated = false;  // the code lacked 0 and was checked through a translate
    bool pass() const;
};

/// Size 256, minimum distance 8, distances divisible by 4, a_20 = 0,
/// invariance under translation by every weight-16 word, exactly one of u and
/// 1+u in the code for each u in <c, 1>, and distribution a_8 = 130,
/// a_12 = 120, a_16 = 5. A code without 0 is checked through the translate by
/// its smallest word. Failures are listed, never thrown.
FlipReport verify_flip_properties(const Code& c);

/// Components of the distance-16 graph on c, and for each unordered pair of
/// components the number of cross pairs at distance 8 and at distance 12,
/// sorted. Equal for equivalent codes.
std::vector<std::pair<std::uint32_t, std::uint32_t>> interaction_key(const Code& c);

/// A permutation of the 16 cosets, optionally followed by complementing every
/// mask bit. Sends a mask to a mask whose flip code is equivalent.
struct MaskSymmetry {
    std::array<std::uint8_t, 16> perm{};
    bool complement = false;
    std::uint16_t apply(std::uint16_t mask) const;
};

/// Coset permutations induced by the automorphisms of B found by the canonical
/// search, plus translation by the all-ones word (mask -> ~mask).
std::vector<MaskSymmetry> mask_symmetries(const FlipBase& base);

struct VerifySummary {
    std::size_t passed = 0;
    std::vector<std::uint16_t> failed;
    bool span_constant = true;  // <c, 1> is the same 9-dimensional code for every mask
};

namespace serial {
VerifySummary verify_all(const FlipBase& base);
}
namespace parallel {
VerifySummary verify_all(const FlipBase& base, int jobs = 0);
}

struct FlipClass {
    std::uint16_t mask = 0;  // smallest mask in the class
    std::size_t size = 0;
    std::string digest;
};

struct ClassifyOptions {
    int jobs = 0;
    bool exhaustive = false;  // label every mask instead of one per mask orbit
};

struct Classification {
    std::vector<FlipClass> classes;  // ordered by mask
    std::size_t labels_computed = 0;
    std::size_t mask_orbits = 0;
    std::size_t key_buckets = 0;
    bool keys_consistent = true;  // equal labels always came with equal interaction keys
    std::size_t total() const;
};

Classification classify_all(const FlipBase& base, const ClassifyOptions& options = {});

std::string mask_hex(std::uint16_t mask);

}  // namespace codecert::classify20
