#pragma once

#include "codecert/code.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace codecert {

/// Simple undirected vertex-colored graph. Colors are small non-negative integers.
class ColoredGraph {
public:
    explicit ColoredGraph(std::size_t vertex_count, std::vector<int> colors = {});

    /// Throws std::invalid_argument on a self-loop or out-of-range vertex; repeated edges are ignored.
    void add_edge(std::size_t u, std::size_t v);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_; }
    std::span<const int> colors() const { return colors_; }
    int color(std::size_t v) const { return colors_[v]; }
    std::span<const std::uint32_t> neighbors(std::size_t v) const { return adj_[v]; }
    bool adjacent(std::size_t u, std::size_t v) const;
    std::size_t degree(std::size_t v) const { return adj_[v].size(); }

    /// Image under v -> perm[v]. Colors travel with their vertices.
    ColoredGraph relabeled(std::span<const std::size_t> perm) const;

private:
    std::size_t n_;
    std::size_t words_;
    std::size_t edges_ = 0;
    std::vector<int> colors_;
    std::vector<std::vector<std::uint32_t>> adj_;
    std::vector<std::uint64_t> bits_;
};

/// Codeword k is vertex k (color 0). Coordinate i contributes 0_i = m + 2i and
/// 1_i = m + 2i + 1 (color 1). Codeword u is joined to b_i where b = u_i, and
/// 0_i is joined to 1_i. Throws std::invalid_argument for the empty code.
ColoredGraph code_to_graph(const Code& c);

inline std::size_t zero_vertex(const Code& c, std::size_t i) { return c.size() + 2 * i; }
inline std::size_t one_vertex(const Code& c, std::size_t i) { return c.size() + 2 * i + 1; }

}  // namespace codecert
