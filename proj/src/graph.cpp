#include "codecert/graph.hpp"

#include <stdexcept>
#include <string>

namespace codecert {

ColoredGraph::ColoredGraph(std::size_t vertex_count, std::vector<int> colors)
    : n_(vertex_count), words_((vertex_count + 63) / 64), colors_(std::move(colors)), adj_(vertex_count),
      bits_(vertex_count * words_, 0) {
    if (colors_.empty()) colors_.assign(n_, 0);
    if (colors_.size() != n_) throw std::invalid_argument("color list does not match vertex count");
    for (int c : colors_)
        if (c < 0) throw std::invalid_argument("colors must be non-negative");
}

bool ColoredGraph::adjacent(std::size_t u, std::size_t v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
}

void ColoredGraph::add_edge(std::size_t u, std::size_t v) {
    if (u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) return;
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    adj_[u].push_back(static_cast<std::uint32_t>(v));
    adj_[v].push_back(static_cast<std::uint32_t>(u));
    ++edges_;
}

ColoredGraph ColoredGraph::relabeled(std::span<const std::size_t> perm) const {
    if (perm.size() != n_) throw std::invalid_argument("permutation size does not match vertex count");
    std::vector<int> colors(n_);
    std::vector<bool> seen(n_, false);
    for (std::size_t v = 0; v < n_; ++v) {
        if (perm[v] >= n_ || seen[perm[v]]) throw std::invalid_argument("not a permutation of the vertices");
        seen[perm[v]] = true;
        colors[perm[v]] = colors_[v];
    }
    ColoredGraph g(n_, std::move(colors));
    for (std::size_t u = 0; u < n_; ++u)
        for (std::uint32_t v : adj_[u])
            if (u < v) g.add_edge(perm[u], perm[v]);
    return g;
}

ColoredGraph code_to_graph(const Code& c) {
    if (c.empty()) throw std::invalid_argument("code_to_graph: empty code");
    const std::size_t m = c.size();
    const std::size_t n = c.length();
    std::vector<int> colors(m + 2 * n, 1);
    std::fill(colors.begin(), colors.begin() + static_cast<std::ptrdiff_t>(m), 0);
    ColoredGraph g(m + 2 * n, std::move(colors));
    for (std::size_t i = 0; i < n; ++i) g.add_edge(m + 2 * i, m + 2 * i + 1);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < n; ++i) g.add_edge(k, m + 2 * i + (c[k].bit(i) ? 1 : 0));
    return g;
}

}  // namespace codecert
