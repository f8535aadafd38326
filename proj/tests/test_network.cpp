#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "fixtures.hpp"
#include "tropnet/network.hpp"

using namespace tropnet;
using namespace tropnet::testing;

namespace {

// Combinatorial equality up to x-reparametrization: vertices are keyed by
// (y, rank along their horizontal level), edges compared through the keys.
bool combinatorially_equal(const PlanarNetwork& a, const PlanarNetwork& b) {
  auto keys = [](const PlanarNetwork& net) {
    std::map<int, std::pair<Rat, int>> key_of;  // vertex id -> (y, x-rank)
    std::map<Rat, std::vector<std::pair<Rat, int>>> lines;
    for (const Vertex& v : net.vertices()) lines[v.y].emplace_back(v.x, v.id);
    for (auto& [y, list] : lines) {
      std::sort(list.begin(), list.end());
      for (std::size_t r = 0; r < list.size(); ++r)
        key_of[list[r].second] = {y, static_cast<int>(r)};
    }
    std::set<std::pair<std::pair<Rat, int>, std::pair<Rat, int>>> edges;
    for (const Edge& e : net.edges())
      edges.insert({key_of.at(e.tail), key_of.at(e.head)});
    return edges;
  };
  return keys(a) == keys(b);
}

}  // namespace

TEST_CASE("intro network validates and has rank 3") {
  const PlanarNetwork net = intro_net();
  CHECK(net.rank() == 3);
  CHECK(net.source_ids().size() == 3);
  CHECK(net.sink_ids().size() == 3);
}

TEST_CASE("empty network is valid and has no sources") {
  const PlanarNetwork net = build_network(0, 1, {}, {});
  CHECK(net.source_ids().empty());
  CHECK(net.rank() == 0);
}

TEST_CASE("crossing edges are rejected with the offending pair") {
  std::vector<Vertex> vs = {{0, 0, 1}, {1, 0, 2}, {2, 2, 1}, {3, 2, 2}};
  std::vector<Edge> es = {{0, 0, 3}, {1, 1, 2}};
  try {
    build_network(0, 2, vs, es);
    FAIL("expected CrossingEdges");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CrossingEdges);
    CHECK(std::string(e.what()).find("0") != std::string::npos);
    CHECK(std::string(e.what()).find("1") != std::string::npos);
  }
}

TEST_CASE("vertical edges, strip violations, duplicate ids") {
  CHECK_THROWS_AS(build_network(0, 2, {{0, 1, 1}, {1, 1, 2}}, {{0, 0, 1}}),
                  Error);
  try {
    build_network(0, 2, {{0, 1, 1}, {1, 1, 2}}, {{0, 0, 1}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::VerticalEdge);
  }
  try {
    build_network(0, 2, {{0, 3, 1}}, {});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::VertexOutsideStrip);
  }
  try {
    build_network(0, 2, {{0, 0, 1}, {0, 2, 1}}, {});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DuplicateId);
  }
}

TEST_CASE("a vertex sitting inside another edge is not an embedding") {
  // edge 0 runs (0,1)-(2,1); vertex 3 at (1,1) has an edge leaving it
  std::vector<Vertex> vs = {{0, 0, 1}, {1, 2, 1}, {2, 2, 2}, {3, 1, 1}};
  std::vector<Edge> es = {{0, 0, 1}, {1, 3, 2}};
  try {
    build_network(0, 2, vs, es);
    FAIL("expected CrossingEdges");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CrossingEdges);
  }
}

TEST_CASE("gamma0 shapes") {
  const PlanarNetwork g1 = gamma0(1);
  CHECK(g1.edges().size() == 1);
  CHECK(g1.rank() == 1);

  const PlanarNetwork g3 = gamma0(3);
  int slants = 0;
  for (const Edge& e : g3.edges())
    if (g3.vertex(e.tail).y != g3.vertex(e.head).y) ++slants;
  CHECK(slants == 3);  // a_{1,1}, a_{2,1}, a_{2,2}
  CHECK_NOTHROW(validate_embedding(g3));
  CHECK_THROWS_AS(gamma0(0), Error);
}

TEST_CASE("gamma0 and delta0 validate up to n = 8 with boundary sets 1..n") {
  for (int n = 1; n <= 8; ++n) {
    const PlanarNetwork g = gamma0(n);
    CHECK(g.rank() == n);
    CHECK_NOTHROW(validate_embedding(g));
    const PlanarNetwork d = delta0(n);
    CHECK(d.rank() == n);
    CHECK(d.edges().size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("tau_line lists the horizontal edges of a line in x order") {
  const PlanarNetwork g = gamma0(3);
  const auto line2 = tau_line(g, 2);
  REQUIRE(!line2.empty());
  Rat x = g.a() - 1;
  for (int id : line2) {
    const Rat tx = g.vertex(g.edge(id).tail).x;
    CHECK(tx > x);
    x = tx;
    CHECK(g.vertex(g.edge(id).tail).y == 2);
    CHECK(g.vertex(g.edge(id).head).y == 2);
  }
  CHECK(tau_line(g, 7).empty());
}

TEST_CASE("truncate identity and edge cases") {
  const PlanarNetwork g = gamma0(4);
  const PlanarNetwork same = truncate(g, 4);
  CHECK(same.edges().size() == g.edges().size());
  CHECK_THROWS_AS(truncate(g, 5), Error);
  CHECK_THROWS_AS(truncate(g, -1), Error);

  const PlanarNetwork noRank = build_network(
      0, 2, {{0, 0, Rat(1, 2)}, {1, 2, Rat(1, 2)}}, {{0, 0, 1}});
  CHECK_THROWS_AS(truncate(noRank, 1), Error);
}

TEST_CASE("truncate of gamma0 then simplify is gamma0 of lower rank") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k) {
      const PlanarNetwork cut = simplify(truncate(gamma0(n), k));
      CHECK(combinatorially_equal(cut, gamma0(k)));
    }
}

TEST_CASE("truncate(intro_net, 1) leaves the bottom line reachable") {
  const PlanarNetwork t1 = truncate(intro_net(), 1);
  CHECK(t1.rank() == 1);
  const Weighting w = intro_weights();
  CHECK(oracle_lk(t1, w, 1) == Trop(1));  // 0 + 1 along the bottom line
}

TEST_CASE("concatenate delta0 with itself doubles the strip") {
  const PlanarNetwork d = delta0(3);
  const PlanarNetwork dd = concatenate(d, translate(d, d.b()));
  CHECK(dd.rank() == 3);
  CHECK(dd.edges().size() == 6);
  CHECK(dd.middle() == Rat(2));
  // middle-line vertices are exactly the sinks of the first copy
  int mid = 0;
  for (const Vertex& v : dd.vertices())
    if (v.x == *dd.middle()) ++mid;
  CHECK(mid == 3);
}

TEST_CASE("concatenate rejects mismatched pieces") {
  CHECK_THROWS_AS(concatenate(delta0(3), delta0(3)), Error);  // bounds
  const PlanarNetwork g2 = gamma0(2);
  const PlanarNetwork d3 = translate(delta0(3), g2.b());
  CHECK_THROWS_AS(concatenate(g2, d3), Error);  // source set
}

TEST_CASE("horn network composes gamma0 and delta0") {
  for (int n = 1; n <= 5; ++n) {
    const PlanarNetwork h = horn_network(n);
    CHECK(h.rank() == n);
    CHECK(h.middle().has_value());
    CHECK(h.edges().size() ==
          gamma0(n).edges().size() + delta0(n).edges().size());
  }
}

TEST_CASE("simplify contracts a subdivided line to one edge with summed weight") {
  // three segments with weights 1, 2, 3
  std::vector<Vertex> vs = {{0, 0, 1}, {1, 1, 1}, {2, 2, 1}, {3, 3, 1}};
  std::vector<Edge> es = {{0, 0, 1}, {1, 1, 2}, {2, 2, 3}};
  const PlanarNetwork net = build_network(0, 3, vs, es);
  Weighting w;
  w.set(0, Trop(1));
  w.set(1, Trop(2));
  w.set(2, Trop(3));
  auto [net2, w2] = simplify(net, w);
  CHECK(net2.edges().size() == 1);
  CHECK(w2.at(net2.edges()[0].id) == Trop(6));
}

TEST_CASE("simplify is a fixed point on networks without (1,1) vertices") {
  const PlanarNetwork g = gamma0(3);
  const PlanarNetwork s = simplify(g);
  CHECK(s.edges().size() == g.edges().size());
  CHECK(combinatorially_equal(s, g));
}

TEST_CASE("simplify preserves the l-vector on random subdivided networks") {
  int done = 0;
  for (std::uint64_t seed = 0; done < 500; ++seed) {
    const PlanarNetwork net = random_network(seed);
    if (net.edges().size() > 12) continue;
    ++done;
    const Weighting w = random_weighting(net, seed * 7 + 1);
    auto [net2, w2] = simplify(net, w);
    for (int k = 0; k <= 3; ++k)
      CHECK(oracle_lk(net, w, k) == oracle_lk(net2, w2, k));
  }
}

TEST_CASE("random weightings are deterministic per seed") {
  const PlanarNetwork g = gamma0(3);
  const Weighting a = random_weighting(g, 42);
  const Weighting b = random_weighting(g, 42);
  CHECK(a.entries() == b.entries());
}
