#pragma once

// Resolution-graph data model: weighted trees, the reduced-fundamental-cycle
// condition, fundamental cycle / multiplicity, and enumeration of the
// extensions obtained by attaching (-1)-leaves and deleting one of them.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace plumbfill {

// Thrown when input data is structurally broken (duplicate ids, self-loops,
// multi-edges, unknown ids).  Semantic failures (not a tree, not negative
// definite, ...) are reported through ValidationReport instead.
struct structure_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A weighted graph on integer vertex ids.  Immutable after construction via
// make_graph(); adjacency is precomputed there.
struct PlumbingGraph {
  std::vector<int> ids;                     // vertex ids in input order
  std::vector<int> self_int;                // parallel to ids
  std::vector<std::pair<int, int>> edges;   // unordered id pairs
  std::optional<int> root;                  // optional root id

  std::vector<std::vector<int>> adj;        // adjacency by vertex index

  int size() const { return static_cast<int>(ids.size()); }
  int index_of(int id) const;               // throws structure_error if unknown
  int degree(int index) const { return static_cast<int>(adj[index].size()); }
};

// Validates ids/edges structurally (throws structure_error on duplicates,
// self-loops, multi-edges or unknown endpoints) and builds adjacency.
PlumbingGraph make_graph(std::vector<std::pair<int, int>> vertices,
                         std::vector<std::pair<int, int>> edges,
                         std::optional<int> root = std::nullopt);

struct ValidationReport {
  bool is_tree = false;            // connected with |E| = |V| - 1
  bool negative_definite = false;  // intersection matrix negative definite
  bool reduced_cycle = false;      // a(v) <= -v.v everywhere, on a neg.def. tree
  std::vector<int> violating_ids;  // vertices with a(v) > -v.v

  bool all_ok() const { return is_tree && negative_definite && reduced_cycle; }
};

ValidationReport validate_reduced_cycle(const PlumbingGraph& g);

struct FundamentalCycle {
  std::vector<int> coefficients;  // per vertex, always 1 for reduced cycles
  int multiplicity = 0;           // -Z_min^2 = -sum_v (v.v + a(v))
};

// Throws std::domain_error if validate_reduced_cycle fails.
FundamentalCycle fundamental_cycle(const PlumbingGraph& g);

// One "slot" of the doubly-extended graph: a place where a (-1)-leaf is
// attached.  Vertex v carries -(v.v + a(v)) slots; slots are enumerated in
// vertex order, copies consecutively.
struct Slot {
  int vertex_id = 0;
  int copy = 0;  // 0-based copy index at this vertex
};

std::vector<Slot> enumerate_slots(const PlumbingGraph& g);

// Extension G' of G: all (-1)-leaf slots filled except one (the deleted slot
// becomes the outer boundary).  Curvetta labels 1..m follow slot order.
struct ExtendedGraph {
  PlumbingGraph base;
  std::vector<std::pair<int, int>> leaves;  // (attached_to id, leaf id), label = pos+1
  int root_id = 0;                          // the unique vertex with v.v + a(v) = -1

  int branch_count() const { return static_cast<int>(leaves.size()); }
  int carrier(int label) const;             // base vertex id carrying leaf `label`
};

// Throws std::domain_error if G fails validation or contains a (-1) vertex.
// Returns fundamental_cycle(G).multiplicity extensions, one per deleted slot,
// in slot order; each has multiplicity-1 curvetta labels.
std::vector<ExtendedGraph> enumerate_extensions(const PlumbingGraph& g);

// Checks the ExtendedGraph invariant: exactly one vertex with v.v + a(v) = -1
// (the recorded root), all others 0, valencies computed in the extended graph.
bool extension_invariant_holds(const ExtendedGraph& ext);

struct LengthOverlap {
  int length = 0;   // l(v0, v_i): vertices on the root path to carrier(i), inclusive
  int overlap = 0;  // rho(v_i, v_j; v0): common vertices of the two root paths
};

// Throws std::domain_error on unknown labels.
LengthOverlap length_overlap(const ExtendedGraph& ext, int i, int j);

// Path from the root to the carrier of label i, as base-vertex indices.
std::vector<int> root_path(const ExtendedGraph& ext, int label);

// Unrooted isomorphism of self-intersection-labeled trees (used by the
// recognition round-trip tests).  Both graphs must be trees.
bool trees_isomorphic(const PlumbingGraph& a, const PlumbingGraph& b);

}  // namespace plumbfill
