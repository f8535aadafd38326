#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tropnet/network.hpp"

namespace tropnet {

/// A union of k pairwise vertex-disjoint source-to-sink paths (a k-path).
/// Paths are stored bottom to top; disjoint paths in a planar strip never
/// cross, so this order is pointwise.
struct Multipath {
  std::vector<std::vector<int>> paths;  // edge-id sequences

  int size() const { return static_cast<int>(paths.size()); }

  std::vector<Rat> sources_decreasing(const PlanarNetwork& net) const;
  std::vector<Rat> sinks_increasing(const PlanarNetwork& net) const;

  // All edge ids, sorted (the canonical tie-break key).
  std::vector<int> sorted_edge_ids() const;

  Trop weight(const Weighting& w) const;

  friend bool operator==(const Multipath& a, const Multipath& b) {
    return a.paths == b.paths;
  }
};

/// A composable pair: a k-path in the left part of a concatenated network
/// and an i-path in the right part whose sources are sinks of the former.
struct GammaDeltaPath {
  Multipath gamma_part;
  Multipath delta_part;
  int k = 0;
  int i = 0;

  Trop weight(const Weighting& w) const;
  std::vector<int> sorted_edge_ids() const;

  friend bool operator==(const GammaDeltaPath& a, const GammaDeltaPath& b) {
    return a.k == b.k && a.i == b.i && a.gamma_part == b.gamma_part &&
           a.delta_part == b.delta_part;
  }
};

/// Triangular array t^k_i, 0 <= i <= k <= n.
struct Tableau {
  int n = 0;
  std::vector<std::vector<Trop>> rows;  // rows[k] has k+1 entries

  explicit Tableau(int n_ = 0) : n(n_), rows(n_ + 1) {
    for (int k = 0; k <= n_; ++k) rows[k].assign(k + 1, Trop(0));
  }

  Trop& at(int k, int i) { return rows[k][i]; }
  const Trop& at(int k, int i) const { return rows[k][i]; }

  bool all_finite() const;

  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.n == b.n && a.rows == b.rows;
  }
};

struct EnumOptions {
  long long cap = 1000000;  // ExplosionGuard threshold
};

// Throws on invalid multipaths (used by tests and by the recombination
// procedures to certify memberships).
void validate_multipath(const PlanarNetwork& net, const Multipath& mp);
void validate_gd_path(const PlanarNetwork& gd, const GammaDeltaPath& p);

// Complete list of P_k; k = 0 yields the single empty multipath. Error:
// ExplosionGuard when the output exceeds opt.cap.
std::vector<Multipath> enumerate_kpaths(const PlanarNetwork& net, int k,
                                        const EnumOptions& opt = {});

// l_k as a value: max over P_k of the weight, -inf when P_k is empty, 0 when
// k == 0. Computed by the flow solver, not enumeration.
Trop max_kpath_value(const PlanarNetwork& net, const Weighting& w, int k);

// Value plus the canonical maximizing witness (absent when the value is
// -inf). Ties are broken by the lexicographically smallest sorted edge-id
// sequence, so witnesses are deterministic.
std::pair<Trop, std::optional<Multipath>> max_kpath_weight(
    const PlanarNetwork& net, const Weighting& w, int k);

struct EigenvalueVector {
  std::vector<Trop> l;                       // l_0, ..., l_n
  std::vector<std::optional<Rat>> lambda;    // defined where both l's finite
};

EigenvalueVector eigenvalue_vector(const PlanarNetwork& net,
                                   const Weighting& w);

// All composable pairs (gamma in P_k of the left part, delta in P_i of the
// right part). The network must carry a middle line. Error: ExplosionGuard.
std::vector<GammaDeltaPath> enumerate_gd_paths(const PlanarNetwork& gd, int k,
                                               int i,
                                               const EnumOptions& opt = {});

Trop max_gd_value(const PlanarNetwork& gd, const Weighting& w, int k, int i);

std::pair<Trop, std::optional<GammaDeltaPath>> max_gd_weight(
    const PlanarNetwork& gd, const Weighting& w, int k, int i);

// The tableau map L: t^k_i = l_i of the k-truncation, t^k_0 = 0. Cells are
// independent; with parallel = true they are evaluated under OpenMP.
Tableau l_map(const PlanarNetwork& net, const Weighting& w,
              bool parallel = false);

// The tableau map M on a concatenated network: t^k_i = m^k_i, t^0_0 = 0.
Tableau m_map(const PlanarNetwork& gd, const Weighting& w,
              bool parallel = false);

// Convenience overload gluing g and d first. Error: NotComposable.
Tableau m_map(const PlanarNetwork& g, const PlanarNetwork& d,
              const Weighting& w, bool parallel = false);

// Serial reference implementations backed by exhaustive enumeration; kept
// for testing and benchmarked against the flow route.
Tableau l_map_reference(const PlanarNetwork& net, const Weighting& w,
                        const EnumOptions& opt = {});
Tableau m_map_reference(const PlanarNetwork& gd, const Weighting& w,
                        const EnumOptions& opt = {});

// Batch evaluation over many weightings; the OpenMP lane of the library.
std::vector<Tableau> l_map_batch(const PlanarNetwork& net,
                                 const std::vector<Weighting>& ws,
                                 bool parallel = true);
std::vector<Tableau> m_map_batch(const PlanarNetwork& gd,
                                 const std::vector<Weighting>& ws,
                                 bool parallel = true);

// Left/right parts of a concatenated network (split at the middle line).
PlanarNetwork gamma_part_network(const PlanarNetwork& gd);
PlanarNetwork delta_part_network(const PlanarNetwork& gd);

}  // namespace tropnet
