#pragma once

#include <random>

#include "tropnet/multipath.hpp"
#include "tropnet/network.hpp"

namespace tropnet::testing {

// The rank-3 network of the worked example (heights 1..3). The maximal
// source-to-sink path has weight 1 + 1 + 2 + 0 = 4.
inline PlanarNetwork intro_net() {
  std::vector<Vertex> vs = {
      {0, 0, 1}, {1, 0, 2}, {2, 0, 3},        // sources
      {3, 6, 1}, {4, 6, 2}, {5, 6, 3},        // sinks
      {6, 2, 1}, {7, 1, 2}, {8, 3, 2}, {9, 5, 3},
  };
  std::vector<Edge> es = {
      {0, 0, 6}, {1, 6, 3},            // line 1
      {2, 1, 7}, {3, 7, 8}, {4, 8, 4}, // line 2
      {5, 2, 9}, {6, 9, 5},            // line 3
      {7, 7, 6},                       // down slant
      {8, 8, 9},                       // up slant
  };
  return build_network(0, 6, std::move(vs), std::move(es));
}

inline Weighting intro_weights() {
  Weighting w;
  w.set(0, Trop(0));
  w.set(1, Trop(1));
  w.set(2, Trop(1));
  w.set(3, Trop(1));
  w.set(4, Trop(-1));
  w.set(5, Trop(1));
  w.set(6, Trop(0));
  w.set(7, Trop(1));
  w.set(8, Trop(2));
  return w;
}

// The figure's red maximal path for l_1.
inline Multipath intro_red_path() {
  Multipath mp;
  mp.paths = {{2, 3, 8, 6}};
  return mp;
}

// Brute-force l_k through complete enumeration; the independent oracle for
// the flow solver.
inline Trop oracle_lk(const PlanarNetwork& net, const Weighting& w, int k,
                      long long cap = 1000000) {
  if (k == 0) return Trop(0);
  Trop best = Trop::neg_inf();
  for (const Multipath& mp : enumerate_kpaths(net, k, {cap}))
    best = max(best, mp.weight(w));
  return best;
}

inline Trop oracle_mki(const PlanarNetwork& gd, const Weighting& w, int k,
                       int i, long long cap = 1000000) {
  if (k == 0) return Trop(0);
  Trop best = Trop::neg_inf();
  for (const GammaDeltaPath& p : enumerate_gd_paths(gd, k, i, {cap}))
    best = max(best, p.weight(w));
  return best;
}

// Random small networks of rank <= max_rank with internal columns, for
// randomized oracle equivalence. Candidate edges hop one column to the
// right; additions that break the embedding are dropped and resampled.
inline PlanarNetwork random_network(std::uint64_t seed, int max_rank = 3,
                                    int max_extra_edges = 6) {
  std::mt19937_64 rng(seed);
  const int n = 1 + static_cast<int>(rng() % max_rank);
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  int vid = 0, eid = 0;
  for (int j = 1; j <= n; ++j) vs.push_back({vid++, 0, Rat(j)});
  for (int j = 1; j <= n; ++j) vs.push_back({vid++, 4, Rat(j)});
  const int cols = 3;
  for (int c = 0; c < cols; ++c) {
    const int rows = 1 + static_cast<int>(rng() % (n + 1));
    for (int r = 0; r < rows; ++r) {
      const Rat y = Rat(1 + static_cast<int>(rng() % (2 * n + 1)), 2) +
                    Rat(c + 1, 7);
      bool clash = false;
      for (const Vertex& v : vs)
        if (v.x == c + 1 && v.y == y) clash = true;
      if (!clash) vs.push_back({vid++, Rat(c + 1), y});
    }
  }
  auto column_of = [&](int v) -> int {
    const Rat& x = vs[v].x;
    if (x == 0) return -1;
    if (x == 4) return cols;
    return x.convert_to<int>() - 1;
  };
  std::vector<int> lefts;
  for (int v = 0; v < vid; ++v)
    if (column_of(v) < cols) lefts.push_back(v);
  const int tries = n + 2 + static_cast<int>(rng() % (max_extra_edges + 1));
  for (int t = 0; t < tries; ++t) {
    const int a = lefts[rng() % lefts.size()];
    std::vector<int> cands;
    for (int v = 0; v < vid; ++v)
      if (column_of(v) == column_of(a) + 1) cands.push_back(v);
    if (cands.empty()) continue;
    const int b = cands[rng() % cands.size()];
    bool dup = false;
    for (const Edge& e : es)
      if (e.tail == a && e.head == b) dup = true;
    if (dup) continue;
    es.push_back({eid++, a, b});
    try {
      build_network(0, 4, vs, es);
    } catch (const Error&) {
      es.pop_back();
      --eid;
    }
  }
  return build_network(0, 4, std::move(vs), std::move(es));
}

}  // namespace tropnet::testing
