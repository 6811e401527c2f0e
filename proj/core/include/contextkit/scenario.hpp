#pragma once

#include "contextkit/graph.hpp"
#include "contextkit/matrix.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace contextkit {

// A contextuality scenario: labelled vertices plus hyperedges given as
// sorted vertex-index sets.
struct Scenario {
    std::vector<std::string> vertex_labels;
    std::vector<std::vector<std::size_t>> edges;

    std::size_t vertex_count() const { return vertex_labels.size(); }
    std::size_t edge_count() const { return edges.size(); }

    // Index of a label; throws std::invalid_argument when absent.
    std::size_t index_of(const std::string& label) const;

    // Enforces: unique labels, nonempty edges, valid indices, no duplicate
    // edges. Throws std::invalid_argument with a message on violation.
    // Vertex coverage is deliberately not enforced here; see fully_covered.
    void validate() const;

    // True iff every vertex belongs to at least one edge.
    bool fully_covered() const;

    // Canonicalize: sorts each edge and the edge list.
    void canonicalize();
};

// Rendering/splitting of composite labels ("o|s" parts joined by commas).
std::string join_label_parts(const std::vector<std::string>& parts);
std::vector<std::string> split_label_parts(const std::string& label);

// Edge-vertex incidence matrix: rows = edges, cols = vertices, entry 1 iff
// vertex in edge; optional trailing all-ones column.
RatMatrix matrix_rep(const Scenario& h, bool append_ones);

// v ~ w iff some edge contains both.
Graph ortho_graph(const Scenario& h);

// True iff `candidate` is not an edge of h and its 0/1 row (ones entry 1)
// lies in the row space of the ones-padded incidence matrix.
bool is_virtual_edge(const Scenario& h, const std::vector<std::size_t>& candidate);

enum class VirtualEdgeMode { exhaustive, clique_restricted };

struct VirtualEdgeSearch {
    std::vector<std::vector<std::size_t>> edges;  // canonically sorted
    bool complete = true;  // false for clique_restricted (lower bound only)
};

// All virtual hyperedges. Exhaustive mode is exact but requires
// vertex_count <= cap; clique_restricted only tests cliques of the
// orthogonality graph and flags its result as a lower bound.
VirtualEdgeSearch virtual_edges(const Scenario& h, VirtualEdgeMode mode,
                                std::size_t cap = 20);

Scenario completion(const Scenario& h, VirtualEdgeMode mode, std::size_t cap = 20);

bool is_ortho_stable(const Scenario& h, VirtualEdgeMode mode = VirtualEdgeMode::exhaustive,
                     std::size_t cap = 20);

// rref equality of the ones-padded incidence matrices.
// Requires identical vertex labels in identical order.
bool equivalent_under_completion(const Scenario& h1, const Scenario& h2);

// Scenario text format: '#' comments, `v <label>` declarations in order,
// `e <label> <label> ...` edges by label.
Scenario parse_scenario(std::istream& in);
Scenario parse_scenario_file(const std::string& path);
void write_scenario(std::ostream& out, const Scenario& h);
void write_scenario_file(const std::string& path, const Scenario& h);

}  // namespace contextkit
