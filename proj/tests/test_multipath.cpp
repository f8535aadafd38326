#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "tropnet/hive.hpp"
#include "tropnet/multipath.hpp"

using namespace tropnet;
using namespace tropnet::testing;

TEST_CASE("delta0(3) has three 2-paths and one 3-path") {
  const PlanarNetwork d = delta0(3);
  CHECK(enumerate_kpaths(d, 2).size() == 3);
  CHECK(enumerate_kpaths(d, 3).size() == 1);
  CHECK(enumerate_kpaths(d, 4).empty());
  CHECK(enumerate_kpaths(d, 0).size() == 1);  // the empty multipath
}

TEST_CASE("gamma0(3) has exactly one 3-path") {
  const auto all = enumerate_kpaths(gamma0(3), 3);
  REQUIRE(all.size() == 1);
  CHECK(all[0].size() == 3);
}

TEST_CASE("intro network: 1-paths include the red path, maximum is 4") {
  const PlanarNetwork net = intro_net();
  const Weighting w = intro_weights();
  const auto ones = enumerate_kpaths(net, 1);
  CHECK(ones.size() == 5);
  bool found = false;
  for (const auto& mp : ones)
    if (mp == intro_red_path()) found = true;
  CHECK(found);

  auto [value, witness] = max_kpath_weight(net, w, 1);
  CHECK(value == Trop(4));
  REQUIRE(witness.has_value());
  CHECK(*witness == intro_red_path());
}

TEST_CASE("k = 0 gives weight 0 with the empty witness") {
  auto [value, witness] = max_kpath_weight(intro_net(), intro_weights(), 0);
  CHECK(value == Trop(0));
  REQUIRE(witness.has_value());
  CHECK(witness->size() == 0);
}

TEST_CASE("intro network k = 2 matches the enumeration oracle") {
  const PlanarNetwork net = intro_net();
  const Weighting w = intro_weights();
  CHECK(max_kpath_value(net, w, 2) == oracle_lk(net, w, 2));
}

TEST_CASE("explosion guard trips on tiny caps") {
  CHECK_THROWS_AS(enumerate_kpaths(gamma0(4), 2, {3}), Error);
}

TEST_CASE("oracle equivalence on random networks, with -inf weights") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const PlanarNetwork net = random_network(seed);
    RandomWeightOptions opt;
    opt.neg_inf_chance = seed % 3 == 0 ? 8 : 0;
    const Weighting w = random_weighting(net, seed + 1000, opt);
    for (int k = 0; k <= 3; ++k) {
      CHECK(max_kpath_value(net, w, k) == oracle_lk(net, w, k));
    }
  }
}

TEST_CASE("canonical witnesses match enumeration tie-breaks") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const PlanarNetwork net = random_network(seed);
    // coarse weights force plenty of ties
    RandomWeightOptions opt;
    opt.max_abs_numerator = 1;
    opt.max_denominator = 1;
    const Weighting w = random_weighting(net, seed + 5, opt);
    for (int k = 1; k <= 2; ++k) {
      auto [value, witness] = max_kpath_weight(net, w, k);
      Trop best = Trop::neg_inf();
      std::optional<Multipath> expect;
      for (const Multipath& mp : enumerate_kpaths(net, k)) {
        const Trop wt = mp.weight(w);
        if (wt > best) {
          best = wt;
          expect = mp;
        } else if (wt == best && expect &&
                   mp.sorted_edge_ids() < expect->sorted_edge_ids()) {
          expect = mp;
        }
      }
      CHECK(value == best);
      if (expect) {
        REQUIRE(witness.has_value());
        CHECK(witness->sorted_edge_ids() == expect->sorted_edge_ids());
      } else {
        CHECK(!witness.has_value());
      }
    }
  }
}

TEST_CASE("monotone support: empty P_k forces empty P_{k+1}") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const PlanarNetwork net = random_network(seed);
    const Weighting w = random_weighting(net, seed);
    bool dead = false;
    for (int k = 1; k <= 4; ++k) {
      const bool empty = enumerate_kpaths(net, k).empty();
      if (dead) CHECK(empty);
      if (empty) dead = true;
      if (dead) CHECK(!max_kpath_value(net, w, k).is_finite());
    }
  }
}

TEST_CASE("setting a weight to -inf never increases any l_k") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const PlanarNetwork net = random_network(seed);
    if (net.edges().empty()) continue;
    const Weighting w = random_weighting(net, seed);
    Weighting w2 = w;
    w2.set(net.edges()[seed % net.edges().size()].id, Trop::neg_inf());
    for (int k = 1; k <= 3; ++k)
      CHECK(max_kpath_value(net, w2, k) <= max_kpath_value(net, w, k));
  }
}

TEST_CASE("eigenvalue vector of delta0(3) sorts the weights") {
  const PlanarNetwork d = delta0(3);
  Weighting w;
  w.set(0, Trop(2));
  w.set(1, Trop(5));
  w.set(2, Trop(3));
  const EigenvalueVector ev = eigenvalue_vector(d, w);
  REQUIRE(ev.l.size() == 4);
  CHECK(ev.l[0] == Trop(0));
  CHECK(ev.l[1] == Trop(5));
  CHECK(ev.l[2] == Trop(8));
  CHECK(ev.l[3] == Trop(10));
  CHECK(ev.lambda[0] == Rat(5));
  CHECK(ev.lambda[1] == Rat(3));
  CHECK(ev.lambda[2] == Rat(2));
}

TEST_CASE("edgeless rank-n network maps to (0, -inf, ...)") {
  std::vector<Vertex> vs;
  int id = 0;
  for (int j = 1; j <= 3; ++j) vs.push_back({id++, 0, Rat(j)});
  for (int j = 1; j <= 3; ++j) vs.push_back({id++, 2, Rat(j)});
  const PlanarNetwork net = build_network(0, 2, vs, {});
  const Weighting w;
  const EigenvalueVector ev = eigenvalue_vector(net, w);
  CHECK(ev.l[0] == Trop(0));
  for (int i = 1; i <= 3; ++i) {
    CHECK(!ev.l[i].is_finite());
    CHECK(!ev.lambda[i - 1].has_value());
  }
}

TEST_CASE("symmetric two-line network has equal eigenvalues") {
  const PlanarNetwork d = delta0(2);
  Weighting w;
  w.set(0, Trop(Rat(7, 3)));
  w.set(1, Trop(Rat(7, 3)));
  const EigenvalueVector ev = eigenvalue_vector(d, w);
  CHECK(ev.lambda[0] == Rat(7, 3));
  CHECK(ev.lambda[1] == Rat(7, 3));
}

TEST_CASE("gamma-delta pairs: degenerate shapes") {
  const PlanarNetwork h = horn_network(2);
  const Weighting w = random_weighting(h, 9);

  // k = i: every union is a k-path of the whole network
  const auto full = enumerate_gd_paths(h, 2, 2);
  for (const auto& p : full) {
    Multipath joined;
    for (int t = 0; t < 2; ++t) {
      std::vector<int> path = p.gamma_part.paths[t];
      path.insert(path.end(), p.delta_part.paths[t].begin(),
                  p.delta_part.paths[t].end());
      joined.paths.push_back(std::move(path));
    }
    CHECK_NOTHROW(validate_multipath(h, joined));
  }

  // i = 0: pairs are P_k of the left part with the empty delta
  const auto lonly = enumerate_gd_paths(h, 1, 0);
  CHECK(lonly.size() == enumerate_kpaths(gamma_part_network(h), 1).size());
  for (const auto& p : lonly) CHECK(p.delta_part.size() == 0);

  // (k, 0) maximum equals l_k of the left part
  CHECK(max_gd_value(h, w, 2, 0) ==
        max_kpath_value(gamma_part_network(h), w, 2));

  // (0,0) is zero
  CHECK(max_gd_value(h, w, 0, 0) == Trop(0));
}

TEST_CASE("the worked concatenation example composes; its red pair is in P~^2_1") {
  // left part: three lines with a down slant into line 1 and an up slant
  // into line 3 of the middle; right part: three straight lines
  std::vector<Vertex> gvs = {
      {0, 0, 1},  {1, 0, 2},  {2, 0, 3},   // sources
      {3, 29, 1}, {4, 29, 2}, {5, 29, 3},  // middle line
      {6, 22, 1}, {7, 12, 2}, {8, 17, 2}, {9, 22, 2}, {10, 7, 3}, {11, 17, 3},
  };
  std::vector<Edge> ges = {
      {0, 0, 6},  {1, 6, 3},                            // line 1
      {2, 1, 7},  {3, 7, 8}, {4, 8, 9}, {5, 9, 4},      // line 2
      {6, 2, 10}, {7, 10, 11}, {8, 11, 5},              // line 3
      {9, 8, 6},                                        // slant 2 -> 1
      {10, 10, 7},                                      // slant 3 -> 2
      {11, 11, 9},                                      // slant 3 -> 2 (right)
  };
  const PlanarNetwork gamma = build_network(0, 29, gvs, ges);
  const PlanarNetwork delta = translate(delta0(3), 29);
  const PlanarNetwork gd = concatenate(gamma, delta);
  CHECK(gd.rank() == 3);
  CHECK(gd.edges().size() == gamma.edges().size() + 3);

  // the figure's red pair: a path along line 2 dropping to the middle of
  // line 1, plus the full top line running through
  GammaDeltaPath red;
  red.k = 2;
  red.i = 1;
  red.gamma_part.paths = {{2, 3, 9, 1}, {6, 7, 8}};
  const int top_delta = 12 + 2;  // delta ids offset past the gamma ids
  red.delta_part.paths = {{top_delta}};
  CHECK_NOTHROW(validate_gd_path(gd, red));

  bool found = false;
  for (const GammaDeltaPath& p : enumerate_gd_paths(gd, 2, 1))
    if (p == red) found = true;
  CHECK(found);
}

TEST_CASE("pair enumeration honors the explosion guard") {
  const PlanarNetwork h = horn_network(3);
  CHECK_THROWS_AS(enumerate_gd_paths(h, 2, 1, {2}), Error);
}

TEST_CASE("m^k_i equals the pair-enumeration oracle on horn networks") {
  for (int n = 2; n <= 3; ++n) {
    const PlanarNetwork h = horn_network(n);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const Weighting w = random_weighting(h, seed);
      for (int k = 0; k <= n; ++k)
        for (int i = 0; i <= k; ++i)
          CHECK(max_gd_value(h, w, k, i) == oracle_mki(h, w, k, i));
    }
  }
}

TEST_CASE("gd witnesses validate and attain the maximum") {
  const PlanarNetwork h = horn_network(3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Weighting w = random_weighting(h, seed);
    for (int k = 1; k <= 3; ++k)
      for (int i = 0; i <= k; ++i) {
        auto [value, witness] = max_gd_weight(h, w, k, i);
        if (!value.is_finite()) continue;
        REQUIRE(witness.has_value());
        validate_gd_path(h, *witness);
        CHECK(witness->weight(w) == value);
      }
  }
}

TEST_CASE("L map: delta0(2) with weights (3,1)") {
  const PlanarNetwork d = delta0(2);
  Weighting w;
  w.set(0, Trop(3));
  w.set(1, Trop(1));
  const Tableau t = l_map(d, w);
  CHECK(t.at(0, 0) == Trop(0));
  CHECK(t.at(1, 0) == Trop(0));
  CHECK(t.at(1, 1) == Trop(3));
  CHECK(t.at(2, 1) == Trop(3));
  CHECK(t.at(2, 2) == Trop(4));
}

TEST_CASE("L map top row equals the l-vector") {
  const PlanarNetwork net = intro_net();
  const Weighting w = intro_weights();
  const Tableau t = l_map(net, w);
  const EigenvalueVector ev = eigenvalue_vector(net, w);
  for (int i = 0; i <= 3; ++i) CHECK(t.at(3, i) == ev.l[i]);
}

TEST_CASE("L and M maps agree with their serial reference implementations") {
  const PlanarNetwork net = intro_net();
  const Weighting w = intro_weights();
  CHECK(l_map(net, w) == l_map_reference(net, w));
  CHECK(l_map(net, w, true) == l_map_reference(net, w));

  const PlanarNetwork h = horn_network(3);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Weighting hw = random_weighting(h, seed);
    CHECK(m_map(h, hw) == m_map_reference(h, hw));
    CHECK(m_map(h, hw, true) == m_map_reference(h, hw));
  }
}

TEST_CASE("parallel batch evaluation equals the serial batch") {
  const PlanarNetwork g = gamma0(3);
  std::vector<Weighting> ws;
  for (std::uint64_t seed = 0; seed < 24; ++seed)
    ws.push_back(random_weighting(g, seed));
  CHECK(l_map_batch(g, ws, true) == l_map_batch(g, ws, false));
}

TEST_CASE("L map outputs satisfy the interlacing cone") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const PlanarNetwork net = random_network(seed, 4);
    RandomWeightOptions opt;
    opt.neg_inf_chance = seed % 4 == 0 ? 6 : 0;
    const Weighting w = random_weighting(net, seed, opt);
    const Tableau t = l_map(net, w);
    for (int k = 0; k <= t.n; ++k) CHECK(t.at(k, 0) == Trop(0));
    CHECK(in_c2(t).member);
  }
}

TEST_CASE("M map outputs satisfy the hive cone and the trace identity") {
  for (int n = 1; n <= 3; ++n) {
    const PlanarNetwork h = horn_network(n);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const Weighting w = random_weighting(h, seed);
      const Tableau t = m_map(h, w);
      CHECK(t.at(0, 0) == Trop(0));
      CHECK(in_c3(t).member);
      // boundary columns: t^k_0 is l_k of the left part, diagonal is l_k of
      // the whole network
      const PlanarNetwork gpart = gamma_part_network(h);
      for (int k = 1; k <= n; ++k) {
        CHECK(t.at(k, 0) == max_kpath_value(gpart, w, k));
        CHECK(t.at(k, k) == max_kpath_value(h, w, k));
      }
      if (t.all_finite()) {
        const HornTriple b = boundary_outer(t);
        CHECK(b.trace_gap() == 0);
      }
    }
  }
}
