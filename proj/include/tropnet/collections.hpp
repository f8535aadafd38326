#pragma once

#include <map>
#include <vector>

#include "tropnet/hive.hpp"
#include "tropnet/multipath.hpp"

namespace tropnet {

enum class CollectionKind { GZ, HORN };

/// The canonical multipath families: alpha(k,i) on the staircase network
/// (GZ, members for 0 < i <= k <= n) and beta(k,i) on its concatenation with
/// the straight network (HORN, members for 0 <= i <= k <= n). The collection
/// owns a copy of its network; weightings are keyed on its edge ids, which
/// match gamma0(n) / horn_network(n).
struct Collection {
  CollectionKind kind = CollectionKind::GZ;
  int n = 0;
  PlanarNetwork net;
  std::map<std::pair<int, int>, Multipath> gz_members;
  std::map<std::pair<int, int>, GammaDeltaPath> horn_members;

  const Multipath& alpha(int k, int i) const { return gz_members.at({k, i}); }
  const GammaDeltaPath& beta(int k, int i) const {
    return horn_members.at({k, i});
  }
};

/// Free-coordinate labels on the staircase network: h_k is the horizontal
/// edge of line k adjacent to sink k, a_{r,s} the slants, d_j the straight
/// lines of the right part (HORN only); everything else is a zero edge.
struct FreeEdgeLabels {
  int n = 0;
  std::vector<std::vector<int>> line_edges;        // [j-1]: left-part line j, x-sorted
  std::map<std::pair<int, int>, int> slant;        // (r,s) -> edge id
  std::vector<int> h_edge;                         // [k-1] -> edge id
  std::vector<int> d_edge;                         // [j-1] -> edge id (may be empty)
  std::vector<int> zero_edges;
};

// Recovers the labels structurally from gamma0(n) or horn_network(n) (also
// after translation). Error: InvalidArgument when the network is not of that
// shape.
FreeEdgeLabels analyze_labels(const PlanarNetwork& net);

// alpha(k,i): the unique member of P_i of the k-truncation whose sources are
// (k, ..., k-i+1) and sinks (1, ..., i); the j-th path from the top starts at
// source k-j+1 and descends through strips r = k-j, ..., i-j+1 along the
// slants a_{r, i-j+1}.
Collection collection_A(int n);

// beta(k,i) = alpha(n-i, k-i) extended by the top i full horizontal lines of
// the concatenation.
Collection collection_B(int n);

// t^k_i = weight of member (k,i); linear in the weighting and exact. The GZ
// column t^k_0 and the HORN corner t^0_0 are 0.
Tableau w_collection(const Collection& c, const Weighting& w);

// Exact right-inverses of w_collection on finite tableaux: back-substitution
// in the triangular order for GZ, exact Gaussian elimination in the order
// (d_n..d_1, h/a triangular) for HORN. Errors: NonFiniteEntry,
// NonZeroFirstColumn, SingularSystem (HORN; asserts w_B non-degeneracy).
Weighting invert_gz(const Collection& A, const Tableau& t);
Weighting invert_gz(const Tableau& t);
Weighting invert_horn(const Collection& B, const Tableau& t);
Weighting invert_horn(const Tableau& t);

/// Cells of the complement: left-part cells [k,i] (k = 0..n-1, i = 0..k) and,
/// on concatenations, right-part cells [j, j+1] (j = 0..n).
struct CellId {
  bool delta = false;
  int k = 0;
  int i = 0;  // for delta cells, the cell is [k, k+1] and i is ignored

  static CellId gamma(int k, int i) { return CellId{false, k, i}; }
  static CellId delta_cell(int j) { return CellId{true, j, j + 1}; }
};

// Sum of the signed weights along the clockwise oriented boundary of the
// cell: top edges +, bottom edges -, left slant -, right slant +. Unbounded
// cells sum their incident network edges only. Errors: UnknownCell,
// NonFiniteEntry.
Rat cell_functional(const PlanarNetwork& net, const CellId& cell,
                    const Weighting& w);

enum class RegionKind { NE, SE, E };  // r-up-right, r-down-right, r-right

// NE: c[k,i] + c[k-1,i-1] + ... + c[k-i,0]   (diagonal)
// SE: c[k,i] + c[k-1,i] + ... + c[i,i]       (column)
// E:  c[k,i] + ... + c[k,k] + c[k,k+1]       (row, into the right part)
// Errors: UnknownRegion, NonFiniteEntry.
Rat region_functional(const PlanarNetwork& net, RegionKind kind, int k, int i,
                      const Weighting& w);

}  // namespace tropnet
