#include "distspec/iso.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

namespace distspec {

namespace {

// adjacency rows as word bitsets for O(1) edge tests during backtracking
struct Rows {
    int n;
    int words;
    std::vector<std::uint64_t> bits; // row-major, n rows of `words` words

    explicit Rows(const Graph& g) : n(g.order()), words((g.order() + 63) / 64) {
        bits.assign(static_cast<std::size_t>(n) * words, 0);
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if (g.adjacent(u, v)) {
                    bits[static_cast<std::size_t>(u) * words + (v >> 6)] |= std::uint64_t{1}
                                                                            << (v & 63);
                    bits[static_cast<std::size_t>(v) * words + (u >> 6)] |= std::uint64_t{1}
                                                                            << (u & 63);
                }
    }
    bool adj(int u, int v) const {
        return (bits[static_cast<std::size_t>(u) * words + (v >> 6)] >> (v & 63)) & 1u;
    }
};

// per-vertex all-pairs hop counts, order() for unreachable
std::vector<std::vector<int>> hop_counts(const Graph& g) {
    const int n = g.order();
    auto adj = g.adjacency_lists();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        auto& d = dist[s];
        d[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (int v : adj[queue[head]])
                if (d[v] < 0) {
                    d[v] = d[queue[head]] + 1;
                    queue.push_back(v);
                }
        for (int& x : d)
            if (x < 0) x = n;
    }
    return dist;
}

// Iterated partition refinement over both graphs with a shared signature
// dictionary, so equal colors mean "indistinguishable so far" across g
// and h.  Initial color: sorted distance profile (subsumes degree).
struct Coloring {
    std::vector<int> g_color;
    std::vector<int> h_color;
    bool comparable = true; // false when color class sizes differ
};

Coloring refine(const Graph& g, const Graph& h) {
    const int n = g.order();
    Coloring c;
    c.g_color.assign(n, 0);
    c.h_color.assign(n, 0);

    {
        std::map<std::vector<int>, int> dict;
        auto assign = [&dict](const std::vector<std::vector<int>>& hops, std::vector<int>& color) {
            for (std::size_t v = 0; v < hops.size(); ++v) {
                std::vector<int> profile = hops[v];
                std::sort(profile.begin(), profile.end());
                auto [it, inserted] = dict.try_emplace(std::move(profile),
                                                       static_cast<int>(dict.size()));
                color[v] = it->second;
            }
        };
        assign(hop_counts(g), c.g_color);
        assign(hop_counts(h), c.h_color);
    }

    auto adj_g = g.adjacency_lists();
    auto adj_h = h.adjacency_lists();
    for (int round = 0; round < n; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> dict;
        auto next = [&dict](const std::vector<std::vector<int>>& adj,
                            const std::vector<int>& color) {
            std::vector<int> out(color.size());
            for (std::size_t v = 0; v < color.size(); ++v) {
                std::vector<int> around;
                around.reserve(adj[v].size());
                for (int u : adj[v]) around.push_back(color[u]);
                std::sort(around.begin(), around.end());
                auto [it, inserted] = dict.try_emplace({color[v], std::move(around)},
                                                       static_cast<int>(dict.size()));
                out[v] = it->second;
            }
            return out;
        };
        std::vector<int> ng = next(adj_g, c.g_color);
        std::vector<int> nh = next(adj_h, c.h_color);
        bool stable = true;
        for (int v = 0; v < n && stable; ++v)
            if (ng[v] != c.g_color[v]) stable = false;
        bool changed_classes =
            *std::max_element(ng.begin(), ng.end()) != *std::max_element(c.g_color.begin(),
                                                                         c.g_color.end());
        c.g_color = std::move(ng);
        c.h_color = std::move(nh);
        if (stable && !changed_classes) break;
    }

    // class size histograms must match
    std::map<int, int> gs, hs;
    for (int x : c.g_color) ++gs[x];
    for (int x : c.h_color) ++hs[x];
    c.comparable = gs == hs;
    return c;
}

struct Matcher {
    const Rows& rg;
    const Rows& rh;
    const Coloring& colors;
    std::vector<int> order;   // g vertices in assignment order
    std::vector<int> mapping; // g -> h, -1 unassigned
    std::vector<bool> used;   // h side

    Matcher(const Rows& g, const Rows& h, const Coloring& c)
        : rg(g), rh(h), colors(c), mapping(g.n, -1), used(h.n, false) {}

    bool consistent(int u, int x) const {
        if (colors.g_color[u] != colors.h_color[x]) return false;
        for (int v = 0; v < rg.n; ++v) {
            int y = mapping[v];
            if (y >= 0 && rg.adj(u, v) != rh.adj(x, y)) return false;
        }
        return true;
    }

    bool search(std::size_t depth) {
        if (depth == order.size()) return true;
        int u = order[depth];
        for (int x = 0; x < rh.n; ++x) {
            if (used[x] || !consistent(u, x)) continue;
            mapping[u] = x;
            used[x] = true;
            if (search(depth + 1)) return true;
            mapping[u] = -1;
            used[x] = false;
        }
        return false;
    }
};

// assignment order: seed first, then BFS-ish preference for vertices with
// many already-ordered neighbors (most constrained first)
std::vector<int> assignment_order(const Rows& rg, int seed) {
    const int n = rg.n;
    std::vector<int> order;
    std::vector<bool> placed(n, false);
    order.reserve(n);
    order.push_back(seed);
    placed[seed] = true;
    while (static_cast<int>(order.size()) < n) {
        int best = -1, best_links = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            int links = 0;
            for (int u : order)
                if (rg.adj(u, v)) ++links;
            if (links > best_links) {
                best = v;
                best_links = links;
            }
        }
        order.push_back(best);
        placed[best] = true;
    }
    return order;
}

bool verify_bijection(const Graph& g, const Graph& h, const std::vector<int>& phi) {
    for (int v = 1; v < g.order(); ++v)
        for (int u = 0; u < v; ++u)
            if (g.adjacent(u, v) != h.adjacent(phi[u], phi[v])) return false;
    return true;
}

std::optional<std::vector<int>> find_mapping(const Graph& g, const Graph& h, int pin_from,
                                             int pin_to) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
    Coloring colors = refine(g, h);
    if (!colors.comparable) return std::nullopt;

    Rows rg(g), rh(h);
    Matcher m(rg, rh, colors);
    int seed = 0;
    if (pin_from >= 0) {
        if (!m.consistent(pin_from, pin_to)) return std::nullopt;
        m.mapping[pin_from] = pin_to;
        m.used[pin_to] = true;
        seed = pin_from;
    } else {
        // start from the rarest color class
        std::map<int, int> class_size;
        for (int x : colors.g_color) ++class_size[x];
        for (int v = 0; v < g.order(); ++v)
            if (class_size[colors.g_color[v]] < class_size[colors.g_color[seed]]) seed = v;
    }
    std::vector<int> order = assignment_order(rg, seed);
    if (pin_from >= 0) order.erase(order.begin()); // already assigned
    m.order = std::move(order);
    if (!m.search(0)) return std::nullopt;
    if (pin_from >= 0) m.mapping[pin_from] = pin_to;
    if (!verify_bijection(g, h, m.mapping)) return std::nullopt;
    return m.mapping;
}

} // namespace

std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h) {
    return find_mapping(g, h, -1, -1);
}

bool is_self_complementary(const Graph& g) {
    return are_isomorphic(g, complement(g)).has_value();
}

std::optional<std::vector<int>> automorphism_mapping(const Graph& g, int from, int to) {
    return find_mapping(g, g, from, to);
}

bool is_vertex_transitive(const Graph& g) {
    for (int v = 1; v < g.order(); ++v)
        if (!automorphism_mapping(g, 0, v)) return false;
    return true;
}

} // namespace distspec
