#pragma once

#include "codecert/code.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace codecert::golay {

/// Thrown when a constructed code fails its own size/distance/duality check.
class VerificationFailure : public std::logic_error {
    using std::logic_error::logic_error;
};

/// Extended [24,12,8] Golay code from a fixed [I | A] generator.
/// Checks dimension 12, minimum distance 8, self-duality and weights in
/// {0, 8, 12, 16, 24}; throws VerificationFailure otherwise.
LinearCode build_extended_golay();

/// The [23,12,7] code: extended Golay punctured at coordinate 0.
LinearCode build_punctured_golay();

/// Extended Golay shortened at its first i coordinates, 1 <= i <= 4.
/// Length 24 - i, size 2^(12 - i), minimum distance 8.
LinearCode build_shortened(int i);

struct GolayFamily {
    LinearCode extended24;
    LinearCode punctured23;
    std::map<int, LinearCode> shortened;  // i -> i-times shortened
};

GolayFamily build_family();

/// Optimal constant weight codes for (n, d, w) in
/// {(24,8,12), (23,8,11), (22,8,11), (22,8,10)}; sizes 2576, 1288, 672, 616.
/// Throws std::invalid_argument for any other triple.
Code build_optimal_cw(int n, int d, int w);

/// The (20,8) size-256 code built from eight 32-word cosets of the octad
/// subcode of the Golay code, with each 8-bit prefix swapped for a 4-bit one.
struct PrefixReplacement {
    std::vector<Code> constituents;  // eight length-16 codes (prefix removed)
    Code code;                       // length 20, size 256
};

PrefixReplacement build_prefix_replacement();
Code build_prefix_replacement_code();

}  // namespace codecert::golay
