#include "tropnet/multipath.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <set>
#include <string>

#include "tropnet/flow.hpp"

namespace tropnet {

std::vector<Rat> Multipath::sources_decreasing(const PlanarNetwork& net) const {
  std::vector<Rat> ys;
  for (const auto& p : paths) ys.push_back(net.vertex(net.edge(p.front()).tail).y);
  std::sort(ys.rbegin(), ys.rend());
  return ys;
}

std::vector<Rat> Multipath::sinks_increasing(const PlanarNetwork& net) const {
  std::vector<Rat> ys;
  for (const auto& p : paths) ys.push_back(net.vertex(net.edge(p.back()).head).y);
  std::sort(ys.begin(), ys.end());
  return ys;
}

std::vector<int> Multipath::sorted_edge_ids() const {
  std::vector<int> ids;
  for (const auto& p : paths) ids.insert(ids.end(), p.begin(), p.end());
  std::sort(ids.begin(), ids.end());
  return ids;
}

Trop Multipath::weight(const Weighting& w) const {
  Trop sum(0);
  for (const auto& p : paths)
    for (int id : p) sum += w.at(id);
  return sum;
}

Trop GammaDeltaPath::weight(const Weighting& w) const {
  return gamma_part.weight(w) + delta_part.weight(w);
}

std::vector<int> GammaDeltaPath::sorted_edge_ids() const {
  std::vector<int> ids = gamma_part.sorted_edge_ids();
  const std::vector<int> d = delta_part.sorted_edge_ids();
  ids.insert(ids.end(), d.begin(), d.end());
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool Tableau::all_finite() const {
  for (const auto& row : rows)
    for (const Trop& t : row)
      if (!t.is_finite()) return false;
  return true;
}

void validate_multipath(const PlanarNetwork& net, const Multipath& mp) {
  std::set<int> used_vertices;
  for (const auto& p : mp.paths) {
    if (p.empty()) fail(Errc::TypeMismatch, "multipath contains an empty path");
    const Edge& first = net.edge(p.front());
    if (!net.is_source(first.tail))
      fail(Errc::TypeMismatch, "path does not start at a source");
    int cur = first.tail;
    for (int id : p) {
      const Edge& e = net.edge(id);
      if (e.tail != cur)
        fail(Errc::TypeMismatch, "path edges are not consecutive");
      if (!used_vertices.insert(e.tail).second)
        fail(Errc::TypeMismatch, "paths are not vertex-disjoint");
      cur = e.head;
    }
    if (!net.is_sink(cur))
      fail(Errc::TypeMismatch, "path does not end at a sink");
    if (!used_vertices.insert(cur).second)
      fail(Errc::TypeMismatch, "paths are not vertex-disjoint");
  }
}

PlanarNetwork gamma_part_network(const PlanarNetwork& gd) {
  if (!gd.middle())
    fail(Errc::InvalidArgument, "network carries no middle line");
  const Rat& m = *gd.middle();
  std::vector<Vertex> vs;
  for (const Vertex& v : gd.vertices())
    if (v.x <= m) vs.push_back(v);
  std::vector<Edge> es;
  for (const Edge& e : gd.edges())
    if (gd.vertex(e.head).x <= m) es.push_back(e);
  return PlanarNetwork::assemble(gd.a(), m, std::move(vs), std::move(es));
}

PlanarNetwork delta_part_network(const PlanarNetwork& gd) {
  if (!gd.middle())
    fail(Errc::InvalidArgument, "network carries no middle line");
  const Rat& m = *gd.middle();
  std::vector<Vertex> vs;
  for (const Vertex& v : gd.vertices())
    if (v.x >= m) vs.push_back(v);
  std::vector<Edge> es;
  for (const Edge& e : gd.edges())
    if (gd.vertex(e.tail).x >= m) es.push_back(e);
  return PlanarNetwork::assemble(m, gd.b(), std::move(vs), std::move(es));
}

void validate_gd_path(const PlanarNetwork& gd, const GammaDeltaPath& p) {
  if (p.k < p.i || p.i < 0)
    fail(Errc::TypeMismatch, "need k >= i >= 0 for a composable pair");
  if (p.gamma_part.size() != p.k || p.delta_part.size() != p.i)
    fail(Errc::TypeMismatch, "part sizes do not match (k, i)");
  const PlanarNetwork gpart = gamma_part_network(gd);
  const PlanarNetwork dpart = delta_part_network(gd);
  validate_multipath(gpart, p.gamma_part);
  validate_multipath(dpart, p.delta_part);
  std::set<int> gamma_sinks;
  for (const auto& path : p.gamma_part.paths)
    gamma_sinks.insert(gd.edge(path.back()).head);
  for (const auto& path : p.delta_part.paths)
    if (!gamma_sinks.count(gd.edge(path.front()).tail))
      fail(Errc::TypeMismatch,
           "a delta path does not start at a sink of the gamma part");
}

namespace {

struct PathPool {
  // One entry per simple source->sink path.
  std::vector<std::vector<int>> edge_seqs;
  std::vector<std::vector<std::uint64_t>> vertex_masks;

  static PathPool collect(const PlanarNetwork& net, long long cap) {
    PathPool pool;
    std::map<int, int> dense;
    for (const Vertex& v : net.vertices())
      dense.emplace(v.id, static_cast<int>(dense.size()));
    const std::size_t words = dense.size() / 64 + 1;

    std::vector<int> edge_stack;
    std::vector<std::uint64_t> mask(words, 0);
    auto mark = [&](int vid, bool on) {
      const int d = dense.at(vid);
      if (on)
        mask[d / 64] |= 1ull << (d % 64);
      else
        mask[d / 64] &= ~(1ull << (d % 64));
    };

    std::function<void(int)> dfs = [&](int vid) {
      mark(vid, true);
      if (net.is_sink(vid)) {
        if (static_cast<long long>(pool.edge_seqs.size()) >= cap)
          fail(Errc::ExplosionGuard, "path enumeration exceeded the cap");
        pool.edge_seqs.push_back(edge_stack);
        pool.vertex_masks.push_back(mask);
      } else {
        for (int eid : net.out_edges(vid)) {
          edge_stack.push_back(eid);
          dfs(net.edge(eid).head);
          edge_stack.pop_back();
        }
      }
      mark(vid, false);
    };
    for (int src : net.source_ids()) dfs(src);
    return pool;
  }

  bool disjoint(const std::vector<std::uint64_t>& acc, int p) const {
    const auto& m = vertex_masks[p];
    for (std::size_t i = 0; i < m.size(); ++i)
      if (acc[i] & m[i]) return false;
    return true;
  }
};

}  // namespace

std::vector<Multipath> enumerate_kpaths(const PlanarNetwork& net, int k,
                                        const EnumOptions& opt) {
  if (k < 0) fail(Errc::InvalidArgument, "k must be nonnegative");
  if (k == 0) return {Multipath{}};

  PathPool pool = PathPool::collect(net, opt.cap);
  const int np = static_cast<int>(pool.edge_seqs.size());

  // Pool order is (source y, edge ids) ascending, so index-increasing
  // selections are already bottom-to-top.
  std::vector<Multipath> out;
  std::vector<int> pick;
  std::vector<std::uint64_t> acc(pool.vertex_masks.empty()
                                     ? 1
                                     : pool.vertex_masks[0].size(),
                                 0);
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(pick.size()) == k) {
      if (static_cast<long long>(out.size()) >= opt.cap)
        fail(Errc::ExplosionGuard, "multipath enumeration exceeded the cap");
      Multipath mp;
      for (int p : pick) mp.paths.push_back(pool.edge_seqs[p]);
      out.push_back(std::move(mp));
      return;
    }
    for (int p = from; p < np; ++p) {
      if (!pool.disjoint(acc, p)) continue;
      for (std::size_t i = 0; i < acc.size(); ++i)
        acc[i] |= pool.vertex_masks[p][i];
      pick.push_back(p);
      rec(p + 1);
      pick.pop_back();
      for (std::size_t i = 0; i < acc.size(); ++i)
        acc[i] &= ~pool.vertex_masks[p][i];
    }
  };
  rec(0);
  return out;
}

Trop max_kpath_value(const PlanarNetwork& net, const Weighting& w, int k) {
  if (k < 0) fail(Errc::InvalidArgument, "k must be nonnegative");
  if (k == 0) return Trop(0);
  return DisjointPathSolver(net, w).solve(k, k).value;
}

std::pair<Trop, std::optional<Multipath>> max_kpath_weight(
    const PlanarNetwork& net, const Weighting& w, int k) {
  if (k < 0) fail(Errc::InvalidArgument, "k must be nonnegative");
  if (k == 0) return {Trop(0), Multipath{}};
  auto res = DisjointPathSolver(net, w).solve_canonical(k, k);
  if (!res.feasible) return {Trop::neg_inf(), std::nullopt};
  Multipath mp;
  mp.paths = std::move(res.paths);
  return {res.value, std::move(mp)};
}

EigenvalueVector eigenvalue_vector(const PlanarNetwork& net,
                                   const Weighting& w) {
  if (!net.rank()) fail(Errc::RankMissing, "eigenvalues need a ranked network");
  const int n = *net.rank();
  EigenvalueVector ev;
  ev.l.push_back(Trop(0));
  DisjointPathSolver solver(net, w);
  for (int k = 1; k <= n; ++k) ev.l.push_back(solver.solve(k, k).value);
  for (int i = 1; i <= n; ++i) {
    if (ev.l[i].is_finite() && ev.l[i - 1].is_finite())
      ev.lambda.push_back(ev.l[i].finite_value() - ev.l[i - 1].finite_value());
    else
      ev.lambda.push_back(std::nullopt);
  }
  return ev;
}

std::vector<GammaDeltaPath> enumerate_gd_paths(const PlanarNetwork& gd, int k,
                                               int i, const EnumOptions& opt) {
  if (!gd.middle())
    fail(Errc::InvalidArgument, "enumerate_gd_paths needs a concatenated network");
  if (k < i || i < 0) fail(Errc::InvalidArgument, "need k >= i >= 0");

  const PlanarNetwork gpart = gamma_part_network(gd);
  const PlanarNetwork dpart = delta_part_network(gd);
  const auto gammas = enumerate_kpaths(gpart, k, opt);
  const auto deltas = enumerate_kpaths(dpart, i, opt);

  std::vector<GammaDeltaPath> out;
  for (const Multipath& g : gammas) {
    std::set<int> gsinks;
    for (const auto& p : g.paths) gsinks.insert(gd.edge(p.back()).head);
    for (const Multipath& d : deltas) {
      bool ok = true;
      for (const auto& p : d.paths)
        if (!gsinks.count(gd.edge(p.front()).tail)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      if (static_cast<long long>(out.size()) >= opt.cap)
        fail(Errc::ExplosionGuard, "pair enumeration exceeded the cap");
      out.push_back(GammaDeltaPath{g, d, k, i});
    }
  }
  return out;
}

Trop max_gd_value(const PlanarNetwork& gd, const Weighting& w, int k, int i) {
  if (!gd.middle())
    fail(Errc::InvalidArgument, "max_gd_value needs a concatenated network");
  if (k < i || i < 0) fail(Errc::InvalidArgument, "need k >= i >= 0");
  if (k == 0) return Trop(0);
  return DisjointPathSolver(gd, w).solve(k, i).value;
}

std::pair<Trop, std::optional<GammaDeltaPath>> max_gd_weight(
    const PlanarNetwork& gd, const Weighting& w, int k, int i) {
  if (!gd.middle())
    fail(Errc::InvalidArgument, "max_gd_weight needs a concatenated network");
  if (k < i || i < 0) fail(Errc::InvalidArgument, "need k >= i >= 0");
  if (k == 0) return {Trop(0), GammaDeltaPath{{}, {}, 0, 0}};

  auto res = DisjointPathSolver(gd, w).solve_canonical(k, i);
  if (!res.feasible) return {Trop::neg_inf(), std::nullopt};

  const Rat& m = *gd.middle();
  GammaDeltaPath p;
  p.k = k;
  p.i = i;
  for (const auto& path : res.paths) {
    std::vector<int> gpiece, dpiece;
    for (int id : path) {
      if (gd.vertex(gd.edge(id).head).x <= m)
        gpiece.push_back(id);
      else
        dpiece.push_back(id);
    }
    p.gamma_part.paths.push_back(std::move(gpiece));
    if (!dpiece.empty()) p.delta_part.paths.push_back(std::move(dpiece));
  }
  std::sort(p.delta_part.paths.begin(), p.delta_part.paths.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              return gd.vertex(gd.edge(a.front()).tail).y <
                     gd.vertex(gd.edge(b.front()).tail).y;
            });
  return {res.value, std::move(p)};
}

namespace {

template <class Fn>
void run_cells(const std::vector<std::pair<int, int>>& cells, bool parallel,
               Fn&& fn) {
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::size_t c = 0; c < cells.size(); ++c) {
    try {
      fn(cells[c].first, cells[c].second);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace

Tableau l_map(const PlanarNetwork& net, const Weighting& w, bool parallel) {
  if (!net.rank()) fail(Errc::RankMissing, "L map needs a ranked network");
  const int n = *net.rank();
  Tableau t(n);

  std::vector<PlanarNetwork> trunc;
  std::vector<std::unique_ptr<DisjointPathSolver>> solvers;
  trunc.reserve(n + 1);
  for (int k = 0; k <= n; ++k) trunc.push_back(truncate(net, k));
  for (int k = 0; k <= n; ++k)
    solvers.push_back(std::make_unique<DisjointPathSolver>(trunc[k], w));

  std::vector<std::pair<int, int>> cells;
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= k; ++i) cells.emplace_back(k, i);
  run_cells(cells, parallel, [&](int k, int i) {
    t.at(k, i) = solvers[k]->solve(i, i).value;
  });
  return t;
}

Tableau m_map(const PlanarNetwork& gd, const Weighting& w, bool parallel) {
  if (!gd.middle() || !gd.rank())
    fail(Errc::NotComposable, "M map needs a ranked concatenated network");
  const int n = *gd.rank();
  Tableau t(n);

  DisjointPathSolver solver(gd, w);
  std::vector<std::pair<int, int>> cells;
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i <= k; ++i) cells.emplace_back(k, i);
  run_cells(cells, parallel, [&](int k, int i) {
    t.at(k, i) = solver.solve(k, i).value;
  });
  return t;
}

Tableau m_map(const PlanarNetwork& g, const PlanarNetwork& d,
              const Weighting& w, bool parallel) {
  return m_map(concatenate(g, d), w, parallel);
}

Tableau l_map_reference(const PlanarNetwork& net, const Weighting& w,
                        const EnumOptions& opt) {
  if (!net.rank()) fail(Errc::RankMissing, "L map needs a ranked network");
  const int n = *net.rank();
  Tableau t(n);
  for (int k = 1; k <= n; ++k) {
    const PlanarNetwork tr = truncate(net, k);
    for (int i = 1; i <= k; ++i) {
      Trop best = Trop::neg_inf();
      for (const Multipath& mp : enumerate_kpaths(tr, i, opt))
        best = max(best, mp.weight(w));
      t.at(k, i) = best;
    }
  }
  return t;
}

Tableau m_map_reference(const PlanarNetwork& gd, const Weighting& w,
                        const EnumOptions& opt) {
  if (!gd.middle() || !gd.rank())
    fail(Errc::NotComposable, "M map needs a ranked concatenated network");
  const int n = *gd.rank();
  Tableau t(n);
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i <= k; ++i) {
      Trop best = Trop::neg_inf();
      for (const GammaDeltaPath& p : enumerate_gd_paths(gd, k, i, opt))
        best = max(best, p.weight(w));
      t.at(k, i) = best;
    }
  return t;
}

namespace {

template <class MapFn>
std::vector<Tableau> batch(const std::vector<Weighting>& ws, bool parallel,
                           MapFn&& fn) {
  std::vector<Tableau> out(ws.size());
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::size_t i = 0; i < ws.size(); ++i) {
    try {
      out[i] = fn(ws[i]);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace

std::vector<Tableau> l_map_batch(const PlanarNetwork& net,
                                 const std::vector<Weighting>& ws,
                                 bool parallel) {
  return batch(ws, parallel,
               [&](const Weighting& w) { return l_map(net, w, false); });
}

std::vector<Tableau> m_map_batch(const PlanarNetwork& gd,
                                 const std::vector<Weighting>& ws,
                                 bool parallel) {
  return batch(ws, parallel,
               [&](const Weighting& w) { return m_map(gd, w, false); });
}

}  // namespace tropnet
