#pragma once

#include <optional>
#include <vector>

#include "tropnet/network.hpp"

namespace tropnet {

/// Maximum-weight vertex-disjoint path systems via min-cost flow.
///
/// Every vertex is split into capacity-1 in/out halves (vertex-disjointness
/// is exactly unit vertex capacity), a super-source feeds all sources through
/// capacity-1 arcs, weights are negated, and k units are routed by successive
/// shortest paths with potentials; the DAG structure supplies the initial
/// potential. Edges with weight -inf are omitted from the flow graph.
///
/// Two terminal classes are supported: paths ending at a sink of the network
/// and paths ending on the recorded middle line (used for the m^k_i
/// functionals on concatenated networks, where i paths run all the way
/// through and k - i stop at the middle).
class DisjointPathSolver {
 public:
  DisjointPathSolver(const PlanarNetwork& net, const Weighting& w);

  struct Result {
    bool feasible = false;
    Trop value = Trop::neg_inf();
    // Bottom-to-top (by source height). Middle-terminated paths, if any,
    // are interleaved in the same order.
    std::vector<std::vector<int>> paths;
  };

  /// k_total paths, of which sink_terminated end at sinks and the rest on the
  /// middle line. k_total == 0 yields the empty system of weight 0.
  Result solve(int k_total, int sink_terminated) const;

  /// Same optimum, but the witness is canonical: among all maximum-weight
  /// systems, the one whose sorted edge-id sequence is lexicographically
  /// smallest.
  Result solve_canonical(int k_total, int sink_terminated) const;

 private:
  struct Arc {
    int to;
    int rev;      // index of the reverse arc in arcs_[to]
    int cap;
    int orig;     // forward arcs carry orig > 0; residuals have orig == 0
    Rat cost;
    int edge_id;  // underlying network edge, or -1
  };

  const PlanarNetwork& net_;
  const Weighting& w_;

  int node_count_ = 0;
  int s_ = 0, t_thru_ = 0, t_mid_ = 0, t_ = 0;
  std::vector<std::vector<Arc>> base_;   // template graph (no budget arcs)
  std::vector<int> topo_;                // topological order of the base DAG
  std::vector<int> vin_, vout_;          // vertex id -> node (dense map)
  std::vector<int> vid_of_; /* node -> vertex id for path extraction */
  Rat bonus_unit_;                       // exceeds any possible weight spread

  Result run(int k_total, int sink_terminated,
             const std::vector<char>& forced) const;
};

}  // namespace tropnet
