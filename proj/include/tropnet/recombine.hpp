#pragma once

#include <utility>
#include <vector>

#include "tropnet/multipath.hpp"

namespace tropnet {

/// A source-to-sink path viewed as the graph of a continuous function over
/// the strip; heights are evaluated by linear interpolation along the vertex
/// chain.
struct PathFn {
  std::vector<int> vertex_ids;
  std::vector<int> edge_ids;

  static PathFn from_edges(const PlanarNetwork& net,
                           const std::vector<int>& edges);
  Rat height_at(const PlanarNetwork& net, const Rat& x) const;
};

// The sorted family dor_1 >= ... >= dor_N of the input functions, each
// realized again as a path in the network. Requires that no height occurs
// more than twice at any x (error: TripleContact); pointwise comparisons are
// decided combinatorially on vertex abscissas and segment midpoints. Ties
// (shared vertices or a doubly used segment) keep the lower-index input on
// top along each maximal contact run.
std::vector<PathFn> interleave_sort(const PlanarNetwork& net,
                                    const std::vector<PathFn>& fns);

// The even/odd recombination behind the first interlacing inequality:
// f in P_{i-1} of the k-truncation and g in P_i of the (k-1)-truncation map
// to even(f,g) = (dor_2, dor_4, ..., dor_{2i-2}) in P_{i-1} of the (k-1)-
// truncation and odd(f,g) = (dor_1, ..., dor_{2i-1}) in P_i of the
// k-truncation, with w[even] + w[odd] = w[f] + w[g] for every weighting.
// Error: TypeMismatch.
std::pair<Multipath, Multipath> recombine_shift(const PlanarNetwork& net,
                                                const Multipath& f,
                                                const Multipath& g, int k);

// The variant behind the second inequality: f in P_{i+1} of the
// k-truncation, g in P_{i-1} of the (k-1)-truncation; even = (dor_2, ...,
// dor_{2i}) and odd = (dor_1, ..., dor_{2i-1}), both i-paths.
std::pair<Multipath, Multipath> recombine_balance(const PlanarNetwork& net,
                                                  const Multipath& f,
                                                  const Multipath& g, int k);

/// The union of two composable-pair systems with multiplicities up to 2,
/// degree-(1,1) vertices contracted away. Each edge copy is one entry;
/// chains record the underlying network edges.
struct MultipathUnion {
  struct ThetaEdge {
    int tail = 0, head = 0;     // vertex ids in the base network
    std::vector<int> chain;     // underlying edge ids, left to right
  };
  std::vector<ThetaEdge> edges;  // copy index = position
  int type_sources = 0;          // sum of source out-degrees
  int type_sinks = 0;            // sum of sink in-degrees
};

MultipathUnion make_union(const PlanarNetwork& gd, const GammaDeltaPath& alpha,
                          const GammaDeltaPath& beta);

enum class PathClass { Q00, QL0, Q0R, QLR, QLL, QRR, QCL };

struct DecompPath {
  std::vector<int> copies;  // theta edge-copy indices, in path order
  PathClass cls = PathClass::QCL;
};

/// Canonical path decomposition: equivalence classes of the relation linking
/// two edge copies that are co-incoming or co-outgoing at a vertex; each
/// class is an unoriented path or cycle with alternating orientations.
struct PathDecomposition {
  std::vector<DecompPath> paths;

  int count(PathClass c) const;
};

PathDecomposition canonical_decomposition(const PlanarNetwork& gd,
                                          const MultipathUnion& theta);

enum class SplitVariant { FIRST, SECOND, THIRD };

// Alternating-coloring split of theta into a red member of P~^k_i and a
// green member of the complementary class (FIRST: P~^{k-1}_{i-1}, theta of
// type [2k-1, 2i-1]; SECOND: P~^{k-1}_i, type [2k-1, 2i]; THIRD: P~^k_{i-1},
// type [2k, 2i-1]). Red plus green carries the full weight of theta, with
// multiplicity, exactly. Errors: TypeMismatch, InfeasibleColoring.
std::pair<GammaDeltaPath, GammaDeltaPath> split(const PlanarNetwork& gd,
                                                const MultipathUnion& theta,
                                                int k, int i,
                                                SplitVariant variant);

/// How many paths of each open class get a red end edge; the class-parity
/// rule behind the split.
struct ColoringPlan {
  int red_lr_sinks = 0;  // paths in Q_LR whose sink (and source) edge is red
  int red_0r_sinks = 0;
  int red_l0_sources = 0;
};

// The class-parity rule for the remaining type [2k, 2i-1]: red source-edges
// tie green and red sink-edges exceed green by one. Error:
// InfeasibleColoring when the class parities contradict that type.
ColoringPlan third_variant_rule(const PathDecomposition& decomposition);

}  // namespace tropnet
