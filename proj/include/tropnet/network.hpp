#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tropnet/tropical.hpp"

namespace tropnet {

struct Vertex {
  int id = 0;
  Rat x;
  Rat y;
};

// Oriented left to right: x(tail) < x(head). Multiplicity is 1 everywhere
// except inside multipath unions (recombine module), which need double edges.
struct Edge {
  int id = 0;
  int tail = 0;
  int head = 0;
  int multiplicity = 1;
};

/// A finite graph embedded in the vertical strip {a <= x <= b} with straight,
/// never-vertical edges. Vertices on x = a are sources, on x = b sinks.
/// Immutable after construction; all operations below are pure functions.
class PlanarNetwork {
 public:
  PlanarNetwork() = default;

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Rank n when the y-coordinates of sources and of sinks are exactly
  // {1, ..., n}; detected at construction.
  std::optional<int> rank() const { return rank_; }

  // Set by concatenate(): the x-coordinate of the shared boundary line.
  const std::optional<Rat>& middle() const { return middle_; }

  const Vertex& vertex(int id) const;
  const Edge& edge(int id) const;
  bool has_vertex(int id) const { return vidx_.count(id) != 0; }
  bool has_edge(int id) const { return eidx_.count(id) != 0; }

  // Edge ids, sorted, for deterministic iteration.
  const std::vector<int>& out_edges(int vertex_id) const;
  const std::vector<int>& in_edges(int vertex_id) const;

  // Vertex ids sorted by y.
  const std::vector<int>& source_ids() const { return sources_; }
  const std::vector<int>& sink_ids() const { return sinks_; }

  bool is_source(int vertex_id) const { return vertex(vertex_id).x == a_; }
  bool is_sink(int vertex_id) const { return vertex(vertex_id).x == b_; }
  bool on_middle(int vertex_id) const {
    return middle_ && vertex(vertex_id).x == *middle_;
  }

  // Construction without geometric validation, for operations that preserve
  // combinatorial soundness (truncate, concatenate, simplify). Checks ids and
  // degree/strip invariants; build_network() additionally validates the
  // embedding.
  static PlanarNetwork assemble(Rat a, Rat b, std::vector<Vertex> vertices,
                                std::vector<Edge> edges,
                                std::optional<Rat> middle = std::nullopt);

 private:
  Rat a_, b_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::optional<int> rank_;
  std::optional<Rat> middle_;

  std::map<int, int> vidx_, eidx_;
  std::map<int, std::vector<int>> out_, in_;
  std::vector<int> sources_, sinks_;

  void finalize();
};

/// Total assignment of tropical numbers to the edges of a network.
class Weighting {
 public:
  Weighting() = default;

  const Trop& at(int edge_id) const;
  void set(int edge_id, Trop w) { w_[edge_id] = std::move(w); }
  bool has(int edge_id) const { return w_.count(edge_id) != 0; }
  const std::map<int, Trop>& entries() const { return w_; }

  bool total_on(const PlanarNetwork& net) const;

  static Weighting zero(const PlanarNetwork& net);

 private:
  std::map<int, Trop> w_;
};

struct RandomWeightOptions {
  int max_abs_numerator = 12;
  int max_denominator = 4;
  // Probability (out of 64) that an edge gets -inf.
  int neg_inf_chance = 0;
};

// Deterministic per (net, seed, options); does not use platform-dependent
// distributions.
Weighting random_weighting(const PlanarNetwork& net, std::uint64_t seed,
                           const RandomWeightOptions& opt = {});

// Validates everything: ids unique, a < b, all vertices inside the strip,
// sources/sinks exactly on the boundary lines with in-degree 0 / out-degree 0,
// x(tail) < x(head) for every edge, and straight-segment images of distinct
// edges intersecting only at shared endpoints.
// Errors: VerticalEdge, CrossingEdges (reports the offending pair),
// VertexOutsideStrip, DuplicateId.
PlanarNetwork build_network(Rat a, Rat b, std::vector<Vertex> vertices,
                            std::vector<Edge> edges);

// Embedding part of the validation, usable on its own.
void validate_embedding(const PlanarNetwork& net);

// Maximal subnetwork omitting the boundary vertices with y > k; the result
// has rank k. Errors: RankMissing, KOutOfRange.
PlanarNetwork truncate(const PlanarNetwork& net, int k);

// Glues g and d along x = b(g) = a(d); every source of d must coincide (same
// y) with a sink of g. Shared boundary vertices are merged, d's edge ids are
// offset by max edge id of g plus one, and the middle line is recorded.
// Error: NotComposable.
PlanarNetwork concatenate(const PlanarNetwork& g, const PlanarNetwork& d);

// Removes vertices unreachable from any source, then contracts every internal
// degree-(1,1) vertex, replacing its two edges by one carrying the sum of the
// weights (the s-map). l-functionals are preserved. Vertices on a recorded
// middle line are kept. The contracted edges need not be straight segments,
// so the result is combinatorial data; its embedding is not revalidated.
std::pair<PlanarNetwork, Weighting> simplify(const PlanarNetwork& net,
                                             const Weighting& w);
PlanarNetwork simplify(const PlanarNetwork& net);

// Horizontal shift by dx; combinatorially the identity.
PlanarNetwork translate(const PlanarNetwork& net, const Rat& dx);

// The staircase network of rank n on the strip [0, 3n-1] (n = 1: [0, 2]):
// horizontal lines y = 1..n and slants a_{r,s}, 1 <= s <= r <= n-1, running
// from (u(r,s), r+1) to (u(r,s)+1, r) with u(r,s) = 2(n-1-r) + 3(s-1) + 2.
// Error: NOutOfRange.
PlanarNetwork gamma0(int n);

// The straight network: one edge per line y = 1..n on the strip [0, 2].
PlanarNetwork delta0(int n);

// concatenate(gamma0(n), translate(delta0(n), 3n-1)); the network whose
// hive map is onto the Horn cone.
PlanarNetwork horn_network(int n);

// All horizontal edges lying on the line y = j, sorted by x.
std::vector<int> tau_line(const PlanarNetwork& net, int j);

// Sum of edge weights; empty set has weight 0.
Trop weight_of_edges(const Weighting& w, const std::vector<int>& edge_ids);

}  // namespace tropnet
