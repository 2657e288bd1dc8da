#ifndef DISTSPEC_GRAPH_HPP
#define DISTSPEC_GRAPH_HPP

#include <cstdint>
#include <vector>

namespace distspec {

// Simple undirected graph: order n plus the upper adjacency triangle packed
// into a bitset.  Bit t covers pair (i, j), i < j, in column order
// (0,1),(0,2),(1,2),(0,3),... which is also the graph6 bit order.
class Graph {
public:
    explicit Graph(int order);

    int order() const { return n_; }
    std::int64_t edge_count() const;

    bool adjacent(int u, int v) const {
        if (u == v) return false;
        return test(tri_index(u, v));
    }
    void set_edge(int u, int v, bool present = true);

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    std::vector<std::vector<int>> adjacency_lists() const;

    bool operator==(const Graph& rhs) const = default;

    // raw triangle bit access for the codec
    std::int64_t triangle_bits() const { return static_cast<std::int64_t>(n_) * (n_ - 1) / 2; }
    bool triangle_bit(std::int64_t t) const { return test(t); }
    void set_triangle_bit(std::int64_t t, bool value);

    static std::int64_t tri_index(int u, int v) {
        if (u > v) std::swap(u, v);
        return static_cast<std::int64_t>(v) * (v - 1) / 2 + u;
    }

private:
    int n_;
    std::vector<std::uint64_t> bits_;

    bool test(std::int64_t t) const { return (bits_[t >> 6] >> (t & 63)) & 1u; }
};

// Symmetric matrix of shortest-path hop counts, zero diagonal.
struct DistanceMatrix {
    int n = 0;
    std::vector<int> d; // row-major n*n

    int at(int i, int j) const { return d[static_cast<std::size_t>(i) * n + j]; }
    int& at(int i, int j) { return d[static_cast<std::size_t>(i) * n + j]; }
    int max_entry() const;
};

bool is_connected(const Graph& g);

// BFS from every vertex; throws DomainError if g is disconnected.
DistanceMatrix distance_matrix(const Graph& g);

// max distance; throws DomainError if g is disconnected.
int diameter(const Graph& g);

Graph complement(const Graph& g);

bool is_regular(const Graph& g, int* degree_out = nullptr);

// --- constructors for the test families ---

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_multipartite(const std::vector<int>& parts);
Graph rook_graph(int m); // m x m rook's graph, vertex (r,c) -> r*m + c

// Uniform over Pruefer sequences, deterministic per seed.
Graph random_tree(int n, std::uint64_t seed);

} // namespace distspec

#endif
