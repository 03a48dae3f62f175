#pragma once

// Pairwise distance kernels. Each kernel exists twice: a plain serial loop kept
// as the reference, and an OpenMP version used on large inputs. Tests assert the
// two agree; bench/ times them against each other.

#include "codecert/word.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace codecert::kernels {

/// Inputs at or above this many words go to the parallel kernels.
inline constexpr std::size_t kParallelThreshold = 512;

namespace serial {

/// Histogram of d(u,v) over all ordered pairs, index = distance, size length+1.
std::vector<std::uint64_t> pair_distance_histogram(std::span<const Word> words, std::size_t length);

/// Minimum distance over distinct pairs; length+1 when there are fewer than two words.
std::size_t min_pair_distance(std::span<const Word> words, std::size_t length);

}  // namespace serial

namespace parallel {

std::vector<std::uint64_t> pair_distance_histogram(std::span<const Word> words, std::size_t length);
std::size_t min_pair_distance(std::span<const Word> words, std::size_t length);

}  // namespace parallel

/// Number of OpenMP workers: CODECERT_JOBS if set, else the OpenMP default.
int default_jobs();

}  // namespace codecert::kernels
