#pragma once

#include "codecert/code.hpp"
#include "codecert/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace codecert {

/// Serialization of the canonically relabeled graph: vertex count, colors in
/// canonical order, then the adjacency matrix rows as bits. Equal labels hold
/// exactly for color-preserving isomorphic graphs.
struct CanonicalLabel {
    std::vector<std::uint8_t> bytes;

    /// 128-bit hex digest of the bytes, for display.
    std::string digest() const;

    friend bool operator==(const CanonicalLabel&, const CanonicalLabel&) = default;
    friend auto operator<=>(const CanonicalLabel&, const CanonicalLabel&) = default;
};

using Permutation = std::vector<std::size_t>;  // v -> p[v]

struct CanonicalResult {
    CanonicalLabel label;
    Permutation labeling;                 // vertex -> canonical position
    std::vector<Permutation> automorphisms;  // found during the search; all genuine
    std::size_t nodes = 0;                // search tree nodes visited
};

/// Individualization-refinement search: equitable refinement by neighbor counts,
/// branching on the first smallest non-singleton cell, pruning by refinement
/// traces and by automorphisms found at the leaves.
CanonicalResult canonical_search(const ColoredGraph& g);
CanonicalLabel canonical_form(const ColoredGraph& g);

/// Equal lengths and sizes and equal canonical labels of the code graphs.
bool are_equivalent(const Code& a, const Code& b);

struct EquivalenceClass {
    std::size_t representative = 0;  // lowest input index in the class
    std::size_t count = 0;
    std::vector<std::size_t> members;
};

/// Classes ordered by representative. Throws std::invalid_argument on mixed lengths.
namespace serial {
std::vector<EquivalenceClass> partition_classes(std::span<const Code> codes);
}
namespace parallel {
std::vector<EquivalenceClass> partition_classes(std::span<const Code> codes, int jobs = 0);
}
std::vector<EquivalenceClass> partition_classes(std::span<const Code> codes, int jobs = 0);

/// Groups items by label; the building block of partition_classes.
std::vector<EquivalenceClass> group_labels(std::span<const CanonicalLabel> labels);

/// partition_classes over codes produced on demand by make(i), i < count, so
/// the whole list never has to be held in memory.
std::vector<EquivalenceClass> partition_generated(std::size_t count, const std::function<Code(std::size_t)>& make,
                                                  int jobs = 0);

}  // namespace codecert
