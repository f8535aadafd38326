// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Every tolerance is pinned here, in code.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <vector>

#include "fixtures.hpp"
#include "tropnet/collections.hpp"
#include "tropnet/io.hpp"
#include "tropnet/recombine.hpp"
#include "tropnet/spectra.hpp"

using namespace tropnet;
using namespace tropnet::testing;

namespace {

int failures = 0;

void criterion(int number, const std::string& name,
               const std::function<bool()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::printf("%s criterion %d: %s [%.1fs]%s\n", ok ? "PASS" : "FAIL", number,
              name.c_str(), secs, note.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

// ---- 1: figure reproduction ------------------------------------------------

bool figure_reproduction() {
  const PlanarNetwork net = intro_net();
  const Weighting w = intro_weights();
  auto [value, witness] = max_kpath_weight(net, w, 1);
  return value == Trop(4) && witness && *witness == intro_red_path();
}

// ---- 2: oracle equivalence ---------------------------------------------------

bool oracle_equivalence() {
  int done = 0;
  for (std::uint64_t seed = 0; done < 1000; ++seed) {
    const PlanarNetwork net = random_network(seed);
    if (net.edges().size() > 14) continue;
    ++done;
    RandomWeightOptions opt;
    opt.neg_inf_chance = seed % 4 == 0 ? 6 : 0;
    const Weighting w = random_weighting(net, seed * 31 + 7, opt);
    for (int k = 0; k <= 3; ++k)
      if (max_kpath_value(net, w, k) != oracle_lk(net, w, k)) return false;
  }
  for (int n = 1; n <= 3; ++n) {
    const PlanarNetwork h = horn_network(n);
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const Weighting w = random_weighting(h, seed);
      for (int k = 0; k <= n; ++k)
        for (int i = 0; i <= k; ++i)
          if (max_gd_value(h, w, k, i) != oracle_mki(h, w, k, i)) return false;
    }
  }
  return true;
}

// ---- 3: cone membership of the tableau maps ----------------------------------

bool cone_membership() {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const PlanarNetwork net = random_network(seed, 4);
    RandomWeightOptions opt;
    opt.neg_inf_chance = seed % 5 == 0 ? 6 : 0;
    const Weighting w = random_weighting(net, seed * 13 + 1, opt);
    const Tableau t = l_map(net, w);
    if (!in_c2(t).member) return false;
    for (int k = 0; k <= t.n; ++k)
      if (t.at(k, 0) != Trop(0)) return false;
  }
  for (int n = 1; n <= 4; ++n) {
    const PlanarNetwork h = horn_network(n);
    std::vector<Weighting> ws;
    for (std::uint64_t seed = 0; seed < 125; ++seed) {
      RandomWeightOptions opt;
      opt.neg_inf_chance = seed % 6 == 0 ? 4 : 0;
      ws.push_back(random_weighting(h, seed * 17 + n, opt));
    }
    const std::vector<Tableau> ts = m_map_batch(h, ws, true);
    for (const Tableau& t : ts) {
      if (!in_c3(t).member) return false;
      if (t.at(0, 0) != Trop(0)) return false;
    }
  }
  return true;
}

// ---- 4: inversion round trips -------------------------------------------------

bool round_trips() {
  for (int n = 1; n <= 5; ++n) {
    const Collection A = collection_A(n);
    std::vector<Weighting> ws;
    for (std::uint64_t seed = 0; seed < 100; ++seed)
      ws.push_back(random_weighting(A.net, seed * 7 + n));
    const std::vector<Tableau> cones = l_map_batch(A.net, ws, true);
    for (const Tableau& t : cones) {
      if (!t.all_finite() || !in_c2(t).member) return false;
      if (l_map(A.net, invert_gz(A, t)) != t) return false;
    }
  }
  for (int n = 1; n <= 5; ++n) {
    const Collection B = collection_B(n);
    std::vector<Weighting> ws;
    for (std::uint64_t seed = 0; seed < 100; ++seed)
      ws.push_back(random_weighting(B.net, seed * 11 + n));
    const std::vector<Tableau> cones = m_map_batch(B.net, ws, true);
    for (const Tableau& t : cones) {
      if (!t.all_finite() || !in_c3(t).member) return false;
      if (m_map(B.net, invert_horn(B, t)) != t) return false;
    }
  }
  return true;
}

// ---- 5: recombination conservation -------------------------------------------

bool recombination_conservation() {
  std::mt19937_64 rng(2718);

  // shift and balance on the staircase truncations
  const PlanarNetwork g = gamma0(3);
  std::vector<PlanarNetwork> trunc;
  for (int k = 0; k <= 3; ++k) trunc.push_back(truncate(g, k));
  std::map<std::pair<int, int>, std::vector<Multipath>> pool;
  for (int k = 0; k <= 3; ++k)
    for (int i = 0; i <= k; ++i) pool[{k, i}] = enumerate_kpaths(trunc[k], i);

  int shift_runs = 0;
  while (shift_runs < 1000) {
    const int k = 1 + static_cast<int>(rng() % 3);
    const int i = 1 + static_cast<int>(rng() % k);
    const auto& fs = pool[{k, i - 1}];
    const auto& gs = pool[{k - 1, i}];
    if (fs.empty() || gs.empty()) continue;
    const Multipath f = fs[rng() % fs.size()];
    const Multipath gg = gs[rng() % gs.size()];
    auto [even, odd] = recombine_shift(g, f, gg, k);
    if (even.size() != i - 1 || odd.size() != i) return false;
    const Weighting w = random_weighting(g, rng());
    if (even.weight(w) + odd.weight(w) != f.weight(w) + gg.weight(w))
      return false;
    ++shift_runs;
  }
  int balance_runs = 0;
  while (balance_runs < 1000) {
    const int k = 1 + static_cast<int>(rng() % 3);
    if (k < 2) continue;
    const int i = 1 + static_cast<int>(rng() % (k - 1));
    const auto& fs = pool[{k, i + 1}];
    const auto& gs = pool[{k - 1, i - 1}];
    if (fs.empty() || gs.empty()) continue;
    const Multipath f = fs[rng() % fs.size()];
    const Multipath gg = gs[rng() % gs.size()];
    auto [even, odd] = recombine_balance(g, f, gg, k);
    if (even.size() != i || odd.size() != i) return false;
    const Weighting w = random_weighting(g, rng());
    if (even.weight(w) + odd.weight(w) != f.weight(w) + gg.weight(w))
      return false;
    ++balance_runs;
  }

  // split across all three variants on the rank-3 horn network
  const PlanarNetwork h = horn_network(3);
  std::map<std::pair<int, int>, std::vector<GammaDeltaPath>> gd;
  for (int k = 0; k <= 3; ++k)
    for (int i = 0; i <= k; ++i) gd[{k, i}] = enumerate_gd_paths(h, k, i);
  const Weighting hw = random_weighting(h, 404);
  int split_runs = 0;
  while (split_runs < 1000) {
    const int k = 1 + static_cast<int>(rng() % 3);
    const int i = 1 + static_cast<int>(rng() % k);
    const int variant = static_cast<int>(rng() % 3);
    int ak = k, ai = i - 1, bk = k - 1, bi = i;
    if (variant == 1) {
      ai = i;
      bi = i;
    } else if (variant == 2) {
      ai = i;
      bk = k;
      bi = i - 1;
    }
    if (ak < ai || bk < bi || bk < 0) continue;
    const auto& as = gd[{ak, ai}];
    const auto& bs = gd[{bk, bi}];
    if (as.empty() || bs.empty()) continue;
    const GammaDeltaPath alpha = as[rng() % as.size()];
    const GammaDeltaPath beta = bs[rng() % bs.size()];
    const MultipathUnion theta = make_union(h, alpha, beta);
    auto [red, green] =
        split(h, theta, k, i, static_cast<SplitVariant>(variant));
    if (red.k != k || red.i != i) return false;
    validate_gd_path(h, red);
    if (green.k > 0) validate_gd_path(h, green);
    if (red.weight(hw) + green.weight(hw) !=
        alpha.weight(hw) + beta.weight(hw))
      return false;
    ++split_runs;
  }

  // 2^|Q| coloring counts against exhaustive enumeration, |Q| <= 12
  const PlanarNetwork h2 = horn_network(2);
  std::map<std::pair<int, int>, std::vector<GammaDeltaPath>> gd2;
  for (int k = 0; k <= 2; ++k)
    for (int i = 0; i <= k; ++i) gd2[{k, i}] = enumerate_gd_paths(h2, k, i);
  int count_runs = 0;
  while (count_runs < 120) {
    const int k = 1 + static_cast<int>(rng() % 2);
    const int i = static_cast<int>(rng() % (k + 1));
    const auto& as = gd2[{k, i}];
    if (as.empty()) continue;
    const GammaDeltaPath alpha = as[rng() % as.size()];
    const GammaDeltaPath beta = as[rng() % as.size()];
    const MultipathUnion theta = make_union(h2, alpha, beta);
    const int copies = static_cast<int>(theta.edges.size());
    if (copies > 20) continue;
    const PathDecomposition dec = canonical_decomposition(h2, theta);
    if (dec.paths.size() > 12) continue;
    ++count_runs;

    std::map<int, std::vector<int>> in_of, out_of;
    for (int c = 0; c < copies; ++c) {
      out_of[theta.edges[c].tail].push_back(c);
      in_of[theta.edges[c].head].push_back(c);
    }
    long long alternating = 0;
    for (std::uint32_t mask = 0; mask < (1u << copies); ++mask) {
      bool ok = true;
      for (const auto& [v, list] : in_of)
        if (list.size() == 2 &&
            ((mask >> list[0]) & 1) == ((mask >> list[1]) & 1))
          ok = false;
      for (const auto& [v, list] : out_of)
        if (list.size() == 2 &&
            ((mask >> list[0]) & 1) == ((mask >> list[1]) & 1))
          ok = false;
      if (ok) ++alternating;
    }
    if (alternating != (1ll << dec.paths.size())) return false;
  }
  return true;
}

// ---- 6: region identities -----------------------------------------------------

bool region_identities() {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);  // 2..6
    const Collection A = collection_A(n);
    const Weighting w = random_weighting(A.net, seed * 3 + 2);
    auto wa = [&](int k, int i) {
      return i == 0 ? Rat(0) : A.alpha(k, i).weight(w).finite_value();
    };
    for (int k = 1; k < n; ++k)
      for (int i = 1; i <= k; ++i) {
        const Rat f1 =
            wa(k + 1, i) + wa(k, i - 1) - wa(k + 1, i - 1) - wa(k, i);
        if (f1 != region_functional(A.net, RegionKind::NE, k, i - 1, w))
          return false;
        const Rat f2 =
            wa(k + 1, i) + wa(k, i) - wa(k + 1, i + 1) - wa(k, i - 1);
        if (f2 != -region_functional(A.net, RegionKind::SE, k, i, w))
          return false;
      }

    const Collection B = collection_B(n);
    const Weighting v = random_weighting(B.net, seed * 5 + 3);
    auto wb = [&](int k, int i) {
      return k == 0 ? Rat(0) : B.beta(k, i).weight(v).finite_value();
    };
    for (int k = 1; k < n; ++k)
      for (int i = 1; i <= k; ++i) {
        const Rat f1 =
            wb(k + 1, i) + wb(k, i - 1) - wb(k + 1, i - 1) - wb(k, i);
        if (f1 !=
            -region_functional(B.net, RegionKind::SE, n - i, k - i + 1, v))
          return false;
        const Rat f2 =
            wb(k + 1, i) + wb(k, i) - wb(k + 1, i + 1) - wb(k, i - 1);
        if (f2 != region_functional(B.net, RegionKind::E, n - i, k - i + 1, v))
          return false;
        const Rat f3 =
            wb(k, i) + wb(k, i - 1) - wb(k + 1, i) - wb(k - 1, i - 1);
        if (f3 != region_functional(B.net, RegionKind::NE, n - i, k - i, v))
          return false;
      }
  }
  return true;
}

// ---- 7: spectral cross-check ---------------------------------------------------

bool spectral_cross_check() {
  const Rat c2_slack(1, 1000000000);
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(trial % 6);
    SymmetricMatrix m = SymmetricMatrix::zero(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        m.a[i][j] = m.a[j][i] = 2 * u - 1;
      }
    if (!in_c2(principal_tableau(m), c2_slack).member) return false;
  }

  HornOptions opt;
  opt.slack = Rat(1, 10000);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 2;
    const HornSample s = sample_horn_instance(n, 9000 + trial, 1.0);
    const HornTriple fixed = rationalize_with_trace_repair(s.triple);
    if (fixed.trace_gap() != 0 || !fixed.sorted()) return false;
    if (!horn_feasible(fixed, opt).feasible) return false;
  }

  HornTriple bad;
  bad.lambda = {1, 0};
  bad.mu = {1, 0};
  bad.nu = {3, -1};
  return !horn_feasible(bad).feasible;
}

// ---- 8: boundary identities ------------------------------------------------------

bool boundary_identities() {
  for (int n = 1; n <= 4; ++n) {
    const PlanarNetwork h = horn_network(n);
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const Tableau t = m_map(h, random_weighting(h, seed * 19 + n));
      if (!t.all_finite()) return false;
      if (boundary_outer(t).trace_gap() != 0) return false;
    }
  }
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 3;
    Tableau t(n);
    for (int k = 1; k <= n; ++k)
      for (int i = 1; i <= k; ++i)
        t.at(k, i) = Trop(Rat(static_cast<long>(rng() % 17) - 8,
                              1 + static_cast<long>(rng() % 3)));
    if (in_gz(boundary_horizontal(t)) != in_c2(t).member) return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "figure reproduction: l_1 = 4 with the red witness",
            figure_reproduction);
  criterion(2, "oracle equivalence of flow l_k / m^k_i vs enumeration",
            oracle_equivalence);
  criterion(3, "tableau maps land in C2 / C3 (500 weightings each)",
            cone_membership);
  criterion(4, "inversion round trips on 500 cone tableaux each, n <= 5",
            round_trips);
  criterion(5, "recombination and splitting conserve weight; 2^|Q| colorings",
            recombination_conservation);
  criterion(6, "region functionals equal the cone combinations, n <= 6",
            region_identities);
  criterion(7, "spectral cross-checks (interlacing, Horn feasibility)",
            spectral_cross_check);
  criterion(8, "boundary identities (trace and GZ slice equivalence)",
            boundary_identities);
  if (failures == 0) std::printf("all acceptance criteria passed\n");
  return failures;
}
