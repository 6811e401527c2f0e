#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace contextkit {

// Simple undirected graph on vertices 0..n-1, adjacency held as bitset rows.
class Graph {
public:
    Graph() : n_(0), words_(0) {}
    explicit Graph(std::size_t vertex_count);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const;

    void add_edge(std::size_t a, std::size_t b);
    bool has_edge(std::size_t a, std::size_t b) const;

    // Unordered pairs (a < b), lexicographically sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    std::size_t degree(std::size_t v) const;

    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }
    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    std::size_t n_, words_;
    std::vector<uint64_t> bits_;  // n_ rows of words_ 64-bit words
};

// Co-normal product: composite vertices are tuples of factor vertices in
// lexicographic order (last factor fastest); (v1..vn) ~ (w1..wn) iff some
// factor has vk ~ wk. Throws on an empty factor list.
Graph disjunctive_product(const std::vector<Graph>& factors);

Graph complement(const Graph& g);

// All maximal cliques, each sorted ascending, the collection sorted
// lexicographically. Bron-Kerbosch with pivoting over a degeneracy order.
std::vector<std::vector<std::size_t>> maximal_cliques(const Graph& g);

// Identical edge sets under identical vertex indexing.
// Throws std::invalid_argument on a vertex-count mismatch.
bool graphs_equal(const Graph& a, const Graph& b);

// True iff every edge of `sub` is an edge of `super` (same vertex count).
bool is_subgraph(const Graph& sub, const Graph& super);

}  // namespace contextkit
