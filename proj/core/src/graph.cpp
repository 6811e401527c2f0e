#include "contextkit/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace contextkit {

Graph::Graph(std::size_t vertex_count)
    : n_(vertex_count), words_((vertex_count + 63) / 64), bits_(n_ * words_, 0) {}

void Graph::add_edge(std::size_t a, std::size_t b) {
    if (a >= n_ || b >= n_) throw std::out_of_range("Graph::add_edge: vertex out of range");
    if (a == b) throw std::invalid_argument("Graph::add_edge: self-loop");
    bits_[a * words_ + b / 64] |= uint64_t(1) << (b % 64);
    bits_[b * words_ + a / 64] |= uint64_t(1) << (a % 64);
}

bool Graph::has_edge(std::size_t a, std::size_t b) const {
    if (a >= n_ || b >= n_) return false;
    return (bits_[a * words_ + b / 64] >> (b % 64)) & 1;
}

std::size_t Graph::degree(std::size_t v) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += std::popcount(bits_[v * words_ + w]);
    return d;
}

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (std::size_t v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = a + 1; b < n_; ++b)
            if (has_edge(a, b)) out.emplace_back(a, b);
    return out;
}

Graph disjunctive_product(const std::vector<Graph>& factors) {
    if (factors.empty())
        throw std::invalid_argument("disjunctive_product: no factors");
    if (factors.size() == 1) return factors[0];

    std::size_t total = 1;
    for (const Graph& g : factors) total *= g.vertex_count();

    // radix decode of composite index, last factor fastest
    const std::size_t n = factors.size();
    std::vector<std::size_t> radix(n);
    for (std::size_t k = 0; k < n; ++k) radix[k] = factors[k].vertex_count();

    auto decode = [&](std::size_t idx) {
        std::vector<std::size_t> t(n);
        for (std::size_t k = n; k-- > 0;) {
            t[k] = idx % radix[k];
            idx /= radix[k];
        }
        return t;
    };

    Graph out(total);
    for (std::size_t i = 0; i < total; ++i) {
        auto ti = decode(i);
        for (std::size_t j = i + 1; j < total; ++j) {
            auto tj = decode(j);
            for (std::size_t k = 0; k < n; ++k) {
                if (factors[k].has_edge(ti[k], tj[k])) {
                    out.add_edge(i, j);
                    break;
                }
            }
        }
    }
    return out;
}

Graph complement(const Graph& g) {
    Graph out(g.vertex_count());
    for (std::size_t a = 0; a < g.vertex_count(); ++a)
        for (std::size_t b = a + 1; b < g.vertex_count(); ++b)
            if (!g.has_edge(a, b)) out.add_edge(a, b);
    return out;
}

bool graphs_equal(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count())
        throw std::invalid_argument("graphs_equal: vertex-count mismatch");
    return a == b;
}

bool is_subgraph(const Graph& sub, const Graph& super) {
    if (sub.vertex_count() != super.vertex_count())
        throw std::invalid_argument("is_subgraph: vertex-count mismatch");
    for (auto [a, b] : sub.edges())
        if (!super.has_edge(a, b)) return false;
    return true;
}

namespace {

using Bitset = std::vector<uint64_t>;

struct CliqueEnum {
    std::size_t n, words;
    std::vector<Bitset> adj;
    std::vector<std::vector<std::size_t>> out;

    static bool test(const Bitset& s, std::size_t v) { return (s[v / 64] >> (v % 64)) & 1; }
    static void set(Bitset& s, std::size_t v) { s[v / 64] |= uint64_t(1) << (v % 64); }
    static void clear(Bitset& s, std::size_t v) { s[v / 64] &= ~(uint64_t(1) << (v % 64)); }
    static bool empty(const Bitset& s) {
        for (uint64_t w : s)
            if (w) return false;
        return true;
    }
    std::size_t count_and(const Bitset& a, const Bitset& b) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words; ++i) c += std::popcount(a[i] & b[i]);
        return c;
    }

    void expand(std::vector<std::size_t>& r, Bitset p, Bitset x) {
        bool p_empty = empty(p), x_empty = empty(x);
        if (p_empty && x_empty) {
            out.push_back(r);
            return;
        }
        if (p_empty) return;

        // pivot: vertex of P ∪ X with most neighbours in P
        std::size_t pivot = 0, best = 0;
        bool found = false;
        for (std::size_t v = 0; v < n; ++v) {
            if (!test(p, v) && !test(x, v)) continue;
            std::size_t c = count_and(adj[v], p);
            if (!found || c > best) {
                best = c;
                pivot = v;
                found = true;
            }
        }

        for (std::size_t v = 0; v < n; ++v) {
            if (!test(p, v) || test(adj[pivot], v)) continue;
            Bitset p2(words), x2(words);
            for (std::size_t i = 0; i < words; ++i) {
                p2[i] = p[i] & adj[v][i];
                x2[i] = x[i] & adj[v][i];
            }
            r.push_back(v);
            expand(r, std::move(p2), std::move(x2));
            r.pop_back();
            clear(p, v);
            set(x, v);
        }
    }
};

}  // namespace

std::vector<std::vector<std::size_t>> maximal_cliques(const Graph& g) {
    const std::size_t n = g.vertex_count();
    CliqueEnum ce;
    ce.n = n;
    ce.words = (n + 63) / 64;
    ce.adj.assign(n, Bitset(ce.words, 0));
    for (auto [a, b] : g.edges()) {
        CliqueEnum::set(ce.adj[a], b);
        CliqueEnum::set(ce.adj[b], a);
    }

    // degeneracy order for the top level
    std::vector<std::size_t> deg(n), order;
    std::vector<bool> removed(n, false);
    for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);
    for (std::size_t it = 0; it < n; ++it) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!removed[v] && (best == n || deg[v] < deg[best])) best = v;
        removed[best] = true;
        order.push_back(best);
        for (std::size_t w = 0; w < n; ++w)
            if (!removed[w] && CliqueEnum::test(ce.adj[best], w)) --deg[w];
    }

    Bitset p(ce.words, 0), x(ce.words, 0);
    for (std::size_t v = 0; v < n; ++v) CliqueEnum::set(p, v);
    std::vector<std::size_t> r;
    for (std::size_t v : order) {
        Bitset p2(ce.words), x2(ce.words);
        for (std::size_t i = 0; i < ce.words; ++i) {
            p2[i] = p[i] & ce.adj[v][i];
            x2[i] = x[i] & ce.adj[v][i];
        }
        r.push_back(v);
        ce.expand(r, std::move(p2), std::move(x2));
        r.pop_back();
        CliqueEnum::clear(p, v);
        CliqueEnum::set(x, v);
    }

    for (auto& c : ce.out) std::sort(c.begin(), c.end());
    std::sort(ce.out.begin(), ce.out.end());
    return ce.out;
}

}  // namespace contextkit
