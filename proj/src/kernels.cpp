#include "codecert/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

namespace codecert::kernels {

namespace serial {

std::vector<std::uint64_t> pair_distance_histogram(std::span<const Word> words, std::size_t length) {
    std::vector<std::uint64_t> hist(length + 1, 0);
    const std::size_t m = words.size();
    hist[0] = m;
    for (std::size_t i = 0; i < m; ++i) {
        const std::uint64_t x = words[i].bits();
        for (std::size_t j = i + 1; j < m; ++j) hist[std::popcount(x ^ words[j].bits())] += 2;
    }
    return hist;
}

std::size_t min_pair_distance(std::span<const Word> words, std::size_t length) {
    std::size_t best = length + 1;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            best = std::min<std::size_t>(best, std::popcount(words[i].bits() ^ words[j].bits()));
    return best;
}

}  // namespace serial

namespace parallel {

std::vector<std::uint64_t> pair_distance_histogram(std::span<const Word> words, std::size_t length) {
    const auto m = static_cast<std::ptrdiff_t>(words.size());
    std::vector<std::uint64_t> hist(length + 1, 0);
    hist[0] = words.size();
    // Bits only: Word accessors are not needed in the hot loop.
    std::vector<std::uint64_t> bits(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) bits[i] = words[i].bits();

#pragma omp parallel
    {
        std::vector<std::uint64_t> local(length + 1, 0);
#pragma omp for schedule(dynamic, 32) nowait
        for (std::ptrdiff_t i = 0; i < m; ++i) {
            const std::uint64_t x = bits[i];
            for (std::ptrdiff_t j = i + 1; j < m; ++j) local[std::popcount(x ^ bits[j])] += 2;
        }
#pragma omp critical(codecert_histogram_merge)
        for (std::size_t d = 0; d <= length; ++d) hist[d] += local[d];
    }
    return hist;
}

std::size_t min_pair_distance(std::span<const Word> words, std::size_t length) {
    const auto m = static_cast<std::ptrdiff_t>(words.size());
    std::vector<std::uint64_t> bits(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) bits[i] = words[i].bits();
    std::size_t best = length + 1;
#pragma omp parallel for schedule(dynamic, 32) reduction(min : best)
    for (std::ptrdiff_t i = 0; i < m; ++i) {
        const std::uint64_t x = bits[i];
        for (std::ptrdiff_t j = i + 1; j < m; ++j) {
            const auto d = static_cast<std::size_t>(std::popcount(x ^ bits[j]));
            if (d < best) best = d;
        }
    }
    return best;
}

}  // namespace parallel

int default_jobs() {
    if (const char* env = std::getenv("CODECERT_JOBS")) {
        try {
            const int jobs = std::stoi(env);
            if (jobs > 0) return jobs;
        } catch (const std::exception&) {
        }
    }
    return omp_get_max_threads();
}

}  // namespace codecert::kernels
