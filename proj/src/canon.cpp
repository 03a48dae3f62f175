#include "codecert/canon.hpp"

#include "codecert/kernels.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace codecert {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL + h;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct Partition {
    std::vector<std::uint32_t> order;     // position -> vertex
    std::vector<std::uint32_t> pos;       // vertex -> position
    std::vector<std::uint32_t> cell_of;   // vertex -> start of its cell
    std::vector<std::uint32_t> cell_len;  // cell start -> length
    std::size_t cells = 0;

    bool discrete() const { return cells == order.size(); }
};

class Refiner {
public:
    explicit Refiner(const ColoredGraph& g)
        : g_(g), count_(g.vertex_count(), 0), cell_mark_(g.vertex_count(), 0), in_queue_(g.vertex_count(), 0) {}

    // Refines p to an equitable partition starting from the given splitter cells.
    // Returns a hash of everything the refinement did, invariant under relabeling.
    std::uint64_t refine(Partition& p, std::span<const std::uint32_t> splitters) {
        std::uint64_t h = 0;
        queue_.assign(splitters.begin(), splitters.end());
        for (std::uint32_t s : splitters) in_queue_[s] = 1;
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            const std::uint32_t w = queue_[head];
            in_queue_[w] = 0;
            if (p.discrete()) continue;

            for (std::uint32_t k = w; k < w + p.cell_len[w]; ++k)
                for (std::uint32_t u : g_.neighbors(p.order[k]))
                    if (count_[u]++ == 0) touched_.push_back(u);
            for (std::uint32_t u : touched_) {
                const std::uint32_t c = p.cell_of[u];
                if (!cell_mark_[c]) {
                    cell_mark_[c] = 1;
                    touched_cells_.push_back(c);
                }
            }
            std::sort(touched_cells_.begin(), touched_cells_.end());
            h = mix(h, w);
            for (std::uint32_t c : touched_cells_) {
                cell_mark_[c] = 0;
                h = split(p, c, h);
            }
            for (std::uint32_t u : touched_) count_[u] = 0;
            touched_.clear();
            touched_cells_.clear();
        }
        for (std::uint32_t s : queue_) in_queue_[s] = 0;
        return mix(h, p.cells);
    }

private:
    std::uint64_t split(Partition& p, std::uint32_t c, std::uint64_t h) {
        const std::uint32_t len = p.cell_len[c];
        if (len == 1) return mix(h, (std::uint64_t{c} << 32) | count_[p.order[c]]);
        scratch_.clear();
        for (std::uint32_t k = c; k < c + len; ++k) scratch_.emplace_back(count_[p.order[k]], p.order[k]);
        std::sort(scratch_.begin(), scratch_.end());
        if (scratch_.front().first == scratch_.back().first)
            return mix(h, (std::uint64_t{c} << 32) | scratch_.front().first);

        h = mix(h, c);
        fragments_.clear();
        for (std::uint32_t k = 0; k < len; ++k) {
            const std::uint32_t v = scratch_[k].second;
            p.order[c + k] = v;
            p.pos[v] = c + k;
            if (k == 0 || scratch_[k].first != scratch_[k - 1].first) fragments_.push_back(c + k);
            p.cell_of[v] = fragments_.back();
        }
        fragments_.push_back(c + len);
        std::size_t largest = 0;
        for (std::size_t f = 0; f + 1 < fragments_.size(); ++f) {
            const std::uint32_t start = fragments_[f];
            p.cell_len[start] = fragments_[f + 1] - start;
            h = mix(h, (std::uint64_t{scratch_[start - c].first} << 32) | p.cell_len[start]);
            if (p.cell_len[start] > p.cell_len[fragments_[largest]]) largest = f;
        }
        const std::size_t pieces = fragments_.size() - 1;
        p.cells += pieces - 1;
        const bool queued = in_queue_[c] != 0;
        for (std::size_t f = 0; f < pieces; ++f) {
            const std::uint32_t start = fragments_[f];
            if (in_queue_[start]) continue;
            if (!queued && f == largest) continue;
            in_queue_[start] = 1;
            queue_.push_back(start);
        }
        return h;
    }

    const ColoredGraph& g_;
    std::vector<std::uint32_t> count_;
    std::vector<char> cell_mark_;
    std::vector<char> in_queue_;
    std::vector<std::uint32_t> queue_;
    std::vector<std::uint32_t> touched_;
    std::vector<std::uint32_t> touched_cells_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> scratch_;
    std::vector<std::uint32_t> fragments_;
};

// Moves v into a singleton cell at the front of its cell. Returns the new cell start.
std::uint32_t individualize(Partition& p, std::uint32_t v) {
    const std::uint32_t c = p.cell_of[v];
    const std::uint32_t len = p.cell_len[c];
    const std::uint32_t u = p.order[c];
    std::swap(p.order[c], p.order[p.pos[v]]);
    p.pos[u] = p.pos[v];
    p.pos[v] = c;
    p.cell_len[c] = 1;
    p.cell_len[c + 1] = len - 1;
    for (std::uint32_t k = c + 1; k < c + len; ++k) p.cell_of[p.order[k]] = c + 1;
    ++p.cells;
    return c;
}

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

struct Leaf {
    std::vector<std::uint64_t> trace;
    std::vector<std::uint64_t> graph;
    std::vector<std::uint32_t> order;
    std::vector<std::uint32_t> pos;
    std::vector<std::uint32_t> path;
};

int compare_prefix(const std::vector<std::uint64_t>& cur, const std::vector<std::uint64_t>& best) {
    const std::size_t m = std::min(cur.size(), best.size());
    for (std::size_t i = 0; i < m; ++i)
        if (cur[i] != best[i]) return cur[i] < best[i] ? -1 : 1;
    return cur.size() <= best.size() ? 0 : 1;
}

class Search {
public:
    explicit Search(const ColoredGraph& g) : g_(g), n_(g.vertex_count()), words_((n_ + 63) / 64), refiner_(g) {}

    CanonicalResult run() {
        CanonicalResult out;
        if (n_ == 0) {
            out.label.bytes = {0, 0, 0, 0};
            return out;
        }
        Partition root;
        root.order.resize(n_);
        std::iota(root.order.begin(), root.order.end(), 0U);
        std::stable_sort(root.order.begin(), root.order.end(),
                         [&](std::uint32_t a, std::uint32_t b) { return g_.color(a) < g_.color(b); });
        root.pos.resize(n_);
        root.cell_of.resize(n_);
        root.cell_len.assign(n_, 0);
        std::vector<std::uint32_t> splitters;
        for (std::uint32_t k = 0; k < n_; ++k) {
            const std::uint32_t v = root.order[k];
            root.pos[v] = k;
            if (k == 0 || g_.color(root.order[k - 1]) != g_.color(v)) {
                splitters.push_back(k);
                ++root.cells;
            }
            root.cell_of[v] = splitters.back();
            ++root.cell_len[splitters.back()];
        }
        std::uint64_t h = 0;
        for (std::uint32_t s : splitters)
            h = mix(h, (static_cast<std::uint64_t>(g_.color(root.order[s])) << 32) | root.cell_len[s]);
        trace_.push_back(mix(h, refiner_.refine(root, splitters)));
        explore(root, 0);

        out.labeling.assign(best_.pos.begin(), best_.pos.end());
        out.automorphisms = std::move(generators_);
        out.nodes = nodes_;
        auto& bytes = out.label.bytes;
        const auto put32 = [&](std::uint32_t x) {
            for (int s = 0; s < 32; s += 8) bytes.push_back(static_cast<std::uint8_t>(x >> s));
        };
        put32(static_cast<std::uint32_t>(n_));
        for (std::uint32_t v : best_.order) put32(static_cast<std::uint32_t>(g_.color(v)));
        for (std::uint64_t word : best_.graph)
            for (int s = 0; s < 64; s += 8) bytes.push_back(static_cast<std::uint8_t>(word >> s));
        return out;
    }

private:
    // Returns the level to unwind to, or -1.
    int explore(const Partition& p, int level) {
        ++nodes_;
        if (p.discrete()) return leaf(p);

        std::uint32_t target = 0;
        std::uint32_t target_len = 0;
        for (std::uint32_t s = 0; s < n_; s += p.cell_len[s])
            if (p.cell_len[s] > 1 && (target_len == 0 || p.cell_len[s] < target_len)) {
                target = s;
                target_len = p.cell_len[s];
            }
        const std::vector<std::uint32_t> candidates(p.order.begin() + target, p.order.begin() + target + target_len);

        std::vector<std::uint32_t> explored;
        UnionFind orbits(n_);
        std::size_t gens_seen = 0;
        Partition child;
        for (std::uint32_t w : candidates) {
            if (generators_.size() != gens_seen) {
                orbits = stabilizer_orbits();
                gens_seen = generators_.size();
            }
            const std::uint32_t root = orbits.find(w);
            if (std::any_of(explored.begin(), explored.end(), [&](std::uint32_t x) { return orbits.find(x) == root; }))
                continue;
            explored.push_back(w);

            child = p;
            const std::uint32_t cell = individualize(child, w);
            const std::uint64_t t = mix(cell, refiner_.refine(child, std::span<const std::uint32_t>(&cell, 1)));
            path_.push_back(w);
            trace_.push_back(t);
            int jump = -1;
            if (!have_best_ || compare_prefix(trace_, best_.trace) >= 0) jump = explore(child, level + 1);
            path_.pop_back();
            trace_.pop_back();
            if (jump >= 0 && jump < level) return jump;
        }
        return -1;
    }

    int leaf(const Partition& p) {
        std::vector<std::uint64_t> graph(n_ * words_, 0);
        for (std::uint32_t k = 0; k < n_; ++k)
            for (std::uint32_t u : g_.neighbors(p.order[k])) {
                const std::uint32_t j = p.pos[u];
                graph[k * words_ + j / 64] |= std::uint64_t{1} << (63 - j % 64);
            }
        if (!have_best_) {
            best_ = {trace_, std::move(graph), p.order, p.pos, path_};
            first_ = best_;
            have_best_ = true;
            return -1;
        }
        if (trace_ == first_.trace && graph == first_.graph) {
            add_automorphism(first_, p);
            std::size_t k = 0;
            while (k < path_.size() && path_[k] == first_.path[k]) ++k;
            return static_cast<int>(k);
        }
        const int by_trace = compare_prefix(trace_, best_.trace);
        if (by_trace == 0 && trace_.size() == best_.trace.size()) {
            if (graph == best_.graph) {
                add_automorphism(best_, p);
                std::size_t k = 0;
                while (k < path_.size() && path_[k] == best_.path[k]) ++k;
                return static_cast<int>(k);
            }
            if (graph > best_.graph) best_ = {trace_, std::move(graph), p.order, p.pos, path_};
        } else if (by_trace > 0) {
            best_ = {trace_, std::move(graph), p.order, p.pos, path_};
        }
        return -1;
    }

    void add_automorphism(const Leaf& reference, const Partition& p) {
        Permutation gamma(n_);
        bool identity = true;
        for (std::uint32_t v = 0; v < n_; ++v) {
            gamma[v] = reference.order[p.pos[v]];
            identity = identity && gamma[v] == v;
        }
        if (!identity) generators_.push_back(std::move(gamma));
    }

    // Orbits of the group generated by the found automorphisms that fix the current path pointwise.
    UnionFind stabilizer_orbits() const {
        UnionFind uf(n_);
        for (const Permutation& gamma : generators_) {
            if (!std::all_of(path_.begin(), path_.end(), [&](std::uint32_t v) { return gamma[v] == v; })) continue;
            for (std::uint32_t v = 0; v < n_; ++v) uf.unite(v, static_cast<std::uint32_t>(gamma[v]));
        }
        return uf;
    }

    const ColoredGraph& g_;
    std::size_t n_;
    std::size_t words_;
    Refiner refiner_;
    std::vector<std::uint64_t> trace_;
    std::vector<std::uint32_t> path_;
    std::vector<Permutation> generators_;
    Leaf first_;
    Leaf best_;
    bool have_best_ = false;
    std::size_t nodes_ = 0;
};

void check_lengths(std::span<const Code> codes) {
    for (const Code& c : codes)
        if (c.length() != codes.front().length()) throw std::invalid_argument("partition_classes: codes of different lengths");
}

// Streams labels chunk by chunk; each class keeps one representative label for byte comparison.
template <typename LabelChunk>
std::vector<EquivalenceClass> stream_classes(std::size_t total, LabelChunk&& label_chunk) {
    constexpr std::size_t kChunk = 1024;
    std::vector<EquivalenceClass> classes;
    std::vector<CanonicalLabel> reps;
    std::unordered_multimap<std::string, std::size_t> by_digest;
    std::vector<CanonicalLabel> labels;
    for (std::size_t begin = 0; begin < total; begin += kChunk) {
        const std::size_t end = std::min(total, begin + kChunk);
        labels.assign(end - begin, {});
        label_chunk(begin, end, labels);
        for (std::size_t i = begin; i < end; ++i) {
            CanonicalLabel& label = labels[i - begin];
            const std::string key = label.digest();
            std::size_t found = classes.size();
            for (auto [it, last] = by_digest.equal_range(key); it != last; ++it)
                if (reps[it->second] == label) found = it->second;
            if (found == classes.size()) {
                classes.push_back({i, 0, {}});
                reps.push_back(std::move(label));
                by_digest.emplace(key, found);
            }
            ++classes[found].count;
            classes[found].members.push_back(i);
        }
    }
    return classes;
}

}  // namespace

std::string CanonicalLabel::digest() const {
    std::uint64_t a = 0xcbf29ce484222325ULL;
    std::uint64_t b = 0x84222325cbf29ce4ULL;
    for (std::uint8_t byte : bytes) {
        a = (a ^ byte) * 0x100000001b3ULL;
        b = (b ^ byte) * 0x100000001b3ULL;
        b ^= b >> 29;
    }
    char buf[33];
    std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(a), static_cast<unsigned long long>(b));
    return buf;
}

CanonicalResult canonical_search(const ColoredGraph& g) { return Search(g).run(); }

CanonicalLabel canonical_form(const ColoredGraph& g) { return canonical_search(g).label; }

bool are_equivalent(const Code& a, const Code& b) {
    if (a.length() != b.length() || a.size() != b.size()) return false;
    if (a.empty()) return true;
    return canonical_form(code_to_graph(a)) == canonical_form(code_to_graph(b));
}

std::vector<EquivalenceClass> group_labels(std::span<const CanonicalLabel> labels) {
    return stream_classes(labels.size(), [&](std::size_t begin, std::size_t end, std::vector<CanonicalLabel>& out) {
        for (std::size_t i = begin; i < end; ++i) out[i - begin] = labels[i];
    });
}

namespace serial {

std::vector<EquivalenceClass> partition_classes(std::span<const Code> codes) {
    if (codes.empty()) return {};
    check_lengths(codes);
    return stream_classes(codes.size(), [&](std::size_t begin, std::size_t end, std::vector<CanonicalLabel>& out) {
        for (std::size_t i = begin; i < end; ++i) out[i - begin] = canonical_form(code_to_graph(codes[i]));
    });
}

}  // namespace serial

namespace parallel {

std::vector<EquivalenceClass> partition_classes(std::span<const Code> codes, int jobs) {
    if (codes.empty()) return {};
    check_lengths(codes);
    const int threads = jobs > 0 ? jobs : kernels::default_jobs();
    return stream_classes(codes.size(), [&](std::size_t begin, std::size_t end, std::vector<CanonicalLabel>& out) {
        const auto count = static_cast<std::ptrdiff_t>(end - begin);
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
        for (std::ptrdiff_t k = 0; k < count; ++k)
            out[static_cast<std::size_t>(k)] = canonical_form(code_to_graph(codes[begin + static_cast<std::size_t>(k)]));
    });
}

}  // namespace parallel

std::vector<EquivalenceClass> partition_generated(std::size_t count, const std::function<Code(std::size_t)>& make,
                                                  int jobs) {
    const int threads = jobs > 0 ? jobs : kernels::default_jobs();
    return stream_classes(count, [&](std::size_t begin, std::size_t end, std::vector<CanonicalLabel>& out) {
        const auto n = static_cast<std::ptrdiff_t>(end - begin);
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
        for (std::ptrdiff_t k = 0; k < n; ++k)
            out[static_cast<std::size_t>(k)] = canonical_form(code_to_graph(make(begin + static_cast<std::size_t>(k))));
    });
}

std::vector<EquivalenceClass> partition_classes(std::span<const Code> codes, int jobs) {
    return jobs == 1 ? serial::partition_classes(codes) : parallel::partition_classes(codes, jobs);
}

}  // namespace codecert
