#include "tropnet/flow.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace tropnet {

namespace {

struct EdgeIndex {
  std::map<int, int> dense;
  int of(int edge_id) const { return dense.at(edge_id); }
};

}  // namespace

DisjointPathSolver::DisjointPathSolver(const PlanarNetwork& net,
                                       const Weighting& w)
    : net_(net), w_(w) {
  const auto& vs = net.vertices();
  const int nv = static_cast<int>(vs.size());

  // Dense vertex order: by (x, id). in-node before out-node.
  std::vector<int> order(nv);
  for (int i = 0; i < nv; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int p, int q) {
    if (vs[p].x != vs[q].x) return vs[p].x < vs[q].x;
    return vs[p].id < vs[q].id;
  });

  node_count_ = 2 * nv + 4;
  s_ = 2 * nv;
  t_mid_ = 2 * nv + 1;
  t_thru_ = 2 * nv + 2;
  t_ = 2 * nv + 3;

  vin_.assign(nv, 0);
  vout_.assign(nv, 0);
  vid_of_.assign(node_count_, -1);
  std::map<int, int> pos;  // vertex id -> dense slot
  for (int slot = 0; slot < nv; ++slot) {
    const int vi = order[slot];
    pos[vs[vi].id] = slot;
    vin_[slot] = 2 * slot;
    vout_[slot] = 2 * slot + 1;
    vid_of_[2 * slot] = vs[vi].id;
    vid_of_[2 * slot + 1] = vs[vi].id;
  }

  topo_.clear();
  topo_.push_back(s_);
  for (int slot = 0; slot < nv; ++slot) {
    topo_.push_back(2 * slot);
    topo_.push_back(2 * slot + 1);
  }
  topo_.push_back(t_mid_);
  topo_.push_back(t_thru_);
  topo_.push_back(t_);

  base_.assign(node_count_, {});
  auto add_arc = [&](int u, int v, int cap, Rat cost, int edge_id) {
    base_[u].push_back(Arc{v, static_cast<int>(base_[v].size()), cap, cap,
                           cost, edge_id});
    base_[v].push_back(Arc{u, static_cast<int>(base_[u].size()) - 1, 0, 0,
                           -cost, edge_id});
  };

  Rat abs_sum = 0;
  for (int slot = 0; slot < nv; ++slot) add_arc(vin_[slot], vout_[slot], 1, 0, -1);
  for (int vid : net.source_ids()) add_arc(s_, vin_[pos.at(vid)], 1, 0, -1);
  for (int vid : net.sink_ids()) add_arc(vout_[pos.at(vid)], t_thru_, 1, 0, -1);
  if (net.middle()) {
    for (const Vertex& v : vs)
      if (v.x == *net.middle()) add_arc(vout_[pos.at(v.id)], t_mid_, 1, 0, -1);
  }
  for (const Edge& e : net.edges()) {
    const Trop& we = w.at(e.id);
    if (!we.is_finite()) continue;  // -inf edges never lie on a maximizer
    add_arc(vout_[pos.at(e.tail)], vin_[pos.at(e.head)], 1,
            -we.finite_value(), e.id);
    abs_sum += rat_abs(we.finite_value());
  }
  bonus_unit_ = 2 * abs_sum + 1;
}

DisjointPathSolver::Result DisjointPathSolver::run(
    int k_total, int sink_terminated, const std::vector<char>& forced) const {
  if (k_total < 0 || sink_terminated < 0 || sink_terminated > k_total)
    fail(Errc::InvalidArgument, "bad path counts for the flow solver");

  Result res;
  if (k_total == 0) {
    res.feasible = true;
    res.value = Trop(0);
    return res;
  }

  auto graph = base_;
  if (!forced.empty()) {
    EdgeIndex idx;
    int d = 0;
    for (const Edge& e : net_.edges()) idx.dense[e.id] = d++;
    for (auto& arcs : graph)
      for (Arc& a : arcs) {
        if (a.edge_id < 0 || !forced[idx.of(a.edge_id)]) continue;
        if (a.cap > 0)
          a.cost -= bonus_unit_;
        else
          a.cost += bonus_unit_;
      }
  }
  auto add_arc = [&](int u, int v, int cap) {
    graph[u].push_back(Arc{v, static_cast<int>(graph[v].size()), cap, cap, 0,
                           -1});
    graph[v].push_back(Arc{u, static_cast<int>(graph[u].size()) - 1, 0, 0, 0,
                           -1});
  };
  add_arc(t_thru_, t_, sink_terminated);
  add_arc(t_mid_, t_, k_total - sink_terminated);

  // Initial potentials by relaxation in topological order (the graph is a
  // DAG; edge costs may be negative).
  std::vector<Rat> pot(node_count_, 0);
  {
    std::vector<char> reach(node_count_, 0);
    std::vector<Rat> dist(node_count_, 0);
    reach[s_] = 1;
    for (int u : topo_) {
      if (!reach[u]) continue;
      for (const Arc& a : graph[u]) {
        if (a.cap <= 0) continue;
        const Rat nd = dist[u] + a.cost;
        if (!reach[a.to] || nd < dist[a.to]) {
          reach[a.to] = 1;
          dist[a.to] = nd;
        }
      }
    }
    for (int u = 0; u < node_count_; ++u)
      if (reach[u]) pot[u] = dist[u];
  }

  Rat total_cost = 0;
  std::vector<int> par_node(node_count_, -1), par_arc(node_count_, -1);
  for (int unit = 0; unit < k_total; ++unit) {
    std::vector<Rat> dist(node_count_, 0);
    std::vector<char> reach(node_count_, 0), done(node_count_, 0);
    using QItem = std::pair<Rat, int>;
    std::priority_queue<QItem, std::vector<QItem>, std::greater<QItem>> pq;
    reach[s_] = 1;
    pq.emplace(0, s_);
    while (!pq.empty()) {
      auto [du, u] = pq.top();
      pq.pop();
      if (done[u] || du > dist[u]) continue;
      done[u] = 1;
      for (std::size_t ai = 0; ai < graph[u].size(); ++ai) {
        const Arc& a = graph[u][ai];
        if (a.cap <= 0) continue;
        const Rat rc = a.cost + pot[u] - pot[a.to];
        const Rat nd = du + rc;
        if (!reach[a.to] || nd < dist[a.to]) {
          reach[a.to] = 1;
          dist[a.to] = nd;
          par_node[a.to] = u;
          par_arc[a.to] = static_cast<int>(ai);
          pq.emplace(nd, a.to);
        }
      }
    }
    if (!reach[t_]) return res;  // fewer than k_total disjoint paths exist

    const Rat cap_d = dist[t_];
    for (int u = 0; u < node_count_; ++u)
      pot[u] += reach[u] ? std::min(dist[u], cap_d) : cap_d;

    for (int v = t_; v != s_; v = par_node[v]) {
      Arc& a = graph[par_node[v]][par_arc[v]];
      a.cap -= 1;
      graph[v][a.rev].cap += 1;
      total_cost += a.cost;
    }
  }

  res.feasible = true;
  res.value = Trop(-total_cost);

  // Unit vertex capacities make the flow decomposition unique.
  for (const Arc& sa : graph[s_]) {
    if (sa.orig != 1 || sa.cap != 0) continue;  // S-arc without a unit
    std::vector<int> path;
    int node = sa.to;  // a v_in node
    for (;;) {
      const Arc* used = nullptr;
      for (const Arc& a : graph[node])
        if (a.orig > 0 && a.cap < a.orig) {
          used = &a;
          break;
        }
      if (!used) fail(Errc::InvalidArgument, "flow decomposition broke");
      if (used->to == t_thru_ || used->to == t_mid_) break;
      if (used->edge_id >= 0) path.push_back(used->edge_id);
      node = used->to;
    }
    res.paths.push_back(std::move(path));
  }
  std::sort(res.paths.begin(), res.paths.end(),
            [&](const std::vector<int>& p, const std::vector<int>& q) {
              const Rat py = net_.vertex(net_.edge(p.front()).tail).y;
              const Rat qy = net_.vertex(net_.edge(q.front()).tail).y;
              return py < qy;
            });
  return res;
}

DisjointPathSolver::Result DisjointPathSolver::solve(
    int k_total, int sink_terminated) const {
  return run(k_total, sink_terminated, {});
}

namespace {

// Assembles an edge-id set into k_total disjoint paths from sources, with
// sink_terminated of them ending at a sink and the rest on the middle line.
// Returns paths bottom-to-top, or nothing if the set is not such a system.
std::optional<std::vector<std::vector<int>>> try_assemble(
    const PlanarNetwork& net, const std::vector<int>& ids, int k_total,
    int sink_terminated) {
  std::map<int, int> out_of, in_of;
  for (int id : ids) {
    const Edge& e = net.edge(id);
    if (out_of.count(e.tail) || in_of.count(e.head)) return std::nullopt;
    out_of[e.tail] = id;
    in_of[e.head] = id;
  }
  std::vector<std::vector<int>> paths;
  int at_sink = 0, at_mid = 0;
  for (int id : ids) {
    const Edge& e = net.edge(id);
    if (in_of.count(e.tail)) continue;  // not a path start
    if (!net.is_source(e.tail)) return std::nullopt;
    std::vector<int> path;
    int cur = id;
    for (;;) {
      path.push_back(cur);
      const int head = net.edge(cur).head;
      auto it = out_of.find(head);
      if (it == out_of.end()) {
        if (net.is_sink(head))
          ++at_sink;
        else if (net.on_middle(head))
          ++at_mid;
        else
          return std::nullopt;
        break;
      }
      cur = it->second;
    }
    paths.push_back(std::move(path));
  }
  std::size_t covered = 0;
  for (const auto& p : paths) covered += p.size();
  if (covered != ids.size()) return std::nullopt;  // leftover edges or cycle
  if (static_cast<int>(paths.size()) != k_total || at_sink != sink_terminated ||
      at_mid != k_total - sink_terminated)
    return std::nullopt;
  std::sort(paths.begin(), paths.end(),
            [&](const std::vector<int>& p, const std::vector<int>& q) {
              return net.vertex(net.edge(p.front()).tail).y <
                     net.vertex(net.edge(q.front()).tail).y;
            });
  return paths;
}

}  // namespace

DisjointPathSolver::Result DisjointPathSolver::solve_canonical(
    int k_total, int sink_terminated) const {
  Result base = run(k_total, sink_terminated, {});
  if (!base.feasible || k_total == 0) return base;
  const Rat v = base.value.finite_value();

  std::vector<int> edge_ids;
  for (const Edge& e : net_.edges())
    if (w_.at(e.id).is_finite()) edge_ids.push_back(e.id);
  std::sort(edge_ids.begin(), edge_ids.end());

  EdgeIndex idx;
  int d = 0;
  for (const Edge& e : net_.edges()) idx.dense[e.id] = d++;

  std::vector<char> forced(net_.edges().size(), 0);
  std::vector<int> chosen;
  for (int e : edge_ids) {
    // The forced set may already be a complete optimal system; any proper
    // superset sorts lexicographically after it.
    if (auto done = try_assemble(net_, chosen, k_total, sink_terminated)) {
      if (weight_of_edges(w_, chosen) == Trop(v)) break;
    }
    forced[idx.of(e)] = 1;
    Result r = run(k_total, sink_terminated, forced);
    const Rat expected = v + bonus_unit_ * static_cast<int>(chosen.size() + 1);
    if (r.feasible && r.value.finite_value() == expected) {
      chosen.push_back(e);
    } else {
      forced[idx.of(e)] = 0;
    }
  }

  auto paths = try_assemble(net_, chosen, k_total, sink_terminated);
  if (!paths || weight_of_edges(w_, chosen) != Trop(v))
    fail(Errc::InvalidArgument, "canonical witness extraction failed");
  Result res;
  res.feasible = true;
  res.value = Trop(v);
  res.paths = std::move(*paths);
  return res;
}

}  // namespace tropnet
