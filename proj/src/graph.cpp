#include "distspec/graph.hpp"

#include "distspec/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>

namespace distspec {

Graph::Graph(int order) : n_(order) {
    if (order < 1) throw DomainError("graph order must be >= 1");
    bits_.assign(static_cast<std::size_t>((triangle_bits() + 63) / 64), 0);
}

std::int64_t Graph::edge_count() const {
    std::int64_t c = 0;
    for (std::uint64_t w : bits_) c += __builtin_popcountll(w);
    return c;
}

void Graph::set_edge(int u, int v, bool present) {
    if (u == v) throw DomainError("self-loops not allowed");
    set_triangle_bit(tri_index(u, v), present);
}

void Graph::set_triangle_bit(std::int64_t t, bool value) {
    if (value)
        bits_[t >> 6] |= std::uint64_t{1} << (t & 63);
    else
        bits_[t >> 6] &= ~(std::uint64_t{1} << (t & 63));
}

int Graph::degree(int v) const {
    int d = 0;
    for (int u = 0; u < n_; ++u)
        if (u != v && adjacent(u, v)) ++d;
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (u != v && adjacent(u, v)) out.push_back(u);
    return out;
}

std::vector<std::vector<int>> Graph::adjacency_lists() const {
    std::vector<std::vector<int>> adj(n_);
    for (int v = 1; v < n_; ++v)
        for (int u = 0; u < v; ++u)
            if (adjacent(u, v)) {
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
    return adj;
}

int DistanceMatrix::max_entry() const {
    return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

namespace {

// single-source BFS over adjacency lists, -1 for unreachable
void bfs(const std::vector<std::vector<int>>& adj, int src, std::vector<int>& dist) {
    dist.assign(adj.size(), -1);
    dist[src] = 0;
    std::vector<int> queue{src};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int v : adj[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
}

} // namespace

bool is_connected(const Graph& g) {
    auto adj = g.adjacency_lists();
    std::vector<int> dist;
    bfs(adj, 0, dist);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

DistanceMatrix distance_matrix(const Graph& g) {
    const int n = g.order();
    auto adj = g.adjacency_lists();
    DistanceMatrix dm;
    dm.n = n;
    dm.d.assign(static_cast<std::size_t>(n) * n, 0);
    std::vector<int> dist;
    for (int s = 0; s < n; ++s) {
        bfs(adj, s, dist);
        for (int v = 0; v < n; ++v) {
            if (dist[v] < 0) throw DomainError("distance matrix of a disconnected graph");
            dm.at(s, v) = dist[v];
        }
    }
    return dm;
}

int diameter(const Graph& g) { return distance_matrix(g).max_entry(); }

Graph complement(const Graph& g) {
    Graph c(g.order());
    for (std::int64_t t = 0; t < g.triangle_bits(); ++t)
        c.set_triangle_bit(t, !g.triangle_bit(t));
    return c;
}

bool is_regular(const Graph& g, int* degree_out) {
    int d0 = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != d0) return false;
    if (degree_out) *degree_out = d0;
    return true;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) g.set_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.set_edge(v - 1, v);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw DomainError("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.set_edge(n - 1, 0);
    return g;
}

Graph complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) throw DomainError("multipartite graph needs at least one part");
    int n = 0;
    for (int p : parts) {
        if (p < 1) throw DomainError("part sizes must be >= 1");
        n += p;
    }
    std::vector<int> part_of(n);
    int v = 0, pid = 0;
    for (int p : parts) {
        for (int i = 0; i < p; ++i) part_of[v++] = pid;
        ++pid;
    }
    Graph g(n);
    for (int b = 1; b < n; ++b)
        for (int a = 0; a < b; ++a)
            if (part_of[a] != part_of[b]) g.set_edge(a, b);
    return g;
}

Graph rook_graph(int m) {
    if (m < 1) throw DomainError("rook graph needs m >= 1");
    Graph g(m * m);
    for (int b = 1; b < m * m; ++b)
        for (int a = 0; a < b; ++a)
            if (a / m == b / m || a % m == b % m) g.set_edge(a, b);
    return g;
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw DomainError("tree order must be >= 1");
    Graph g(n);
    if (n == 1) return g;
    if (n == 2) {
        g.set_edge(0, 1);
        return g;
    }
    std::mt19937_64 gen(seed);
    std::vector<int> pruefer(n - 2);
    for (int& x : pruefer) x = static_cast<int>(gen() % static_cast<std::uint64_t>(n));

    std::vector<int> remaining_degree(n, 1);
    for (int x : pruefer) ++remaining_degree[x];
    // classic decode: repeatedly join the smallest leaf to the next code entry
    std::vector<bool> used(n, false);
    for (int code : pruefer) {
        int leaf = -1;
        for (int v = 0; v < n; ++v)
            if (remaining_degree[v] == 1 && !used[v]) {
                leaf = v;
                break;
            }
        g.set_edge(leaf, code);
        used[leaf] = true;
        --remaining_degree[code];
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (!used[v] && remaining_degree[v] == 1) (a < 0 ? a : b) = v;
    g.set_edge(a, b);
    return g;
}

} // namespace distspec
