#include "tropnet/network.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace tropnet {

namespace {

std::string vtx_str(const Vertex& v) {
  return "vertex " + std::to_string(v.id) + " at (" + rat_str(v.x) + ", " +
         rat_str(v.y) + ")";
}

// Sign of the cross product (q - p) x (r - p).
int orient(const Vertex& p, const Vertex& q, const Vertex& r) {
  const Rat c = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  if (c > 0) return 1;
  if (c < 0) return -1;
  return 0;
}

bool on_segment_collinear(const Vertex& p, const Vertex& a, const Vertex& b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

void PlanarNetwork::finalize() {
  vidx_.clear();
  eidx_.clear();
  out_.clear();
  in_.clear();
  sources_.clear();
  sinks_.clear();
  rank_.reset();

  if (!(a_ < b_)) fail(Errc::InvalidArgument, "strip needs a < b");

  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Vertex& v = vertices_[i];
    if (!vidx_.emplace(v.id, static_cast<int>(i)).second)
      fail(Errc::DuplicateId, "duplicate vertex id " + std::to_string(v.id));
    if (v.x < a_ || v.x > b_)
      fail(Errc::VertexOutsideStrip, vtx_str(v) + " outside [" + rat_str(a_) +
                                         ", " + rat_str(b_) + "]");
  }
  // An embedding is injective on vertices.
  {
    std::set<std::pair<Rat, Rat>> seen;
    for (const Vertex& v : vertices_)
      if (!seen.emplace(v.x, v.y).second)
        fail(Errc::DuplicateId, "two vertices share the position of " + vtx_str(v));
  }

  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (!eidx_.emplace(e.id, static_cast<int>(i)).second)
      fail(Errc::DuplicateId, "duplicate edge id " + std::to_string(e.id));
    if (!vidx_.count(e.tail) || !vidx_.count(e.head))
      fail(Errc::InvalidArgument,
           "edge " + std::to_string(e.id) + " references a missing vertex");
    if (e.multiplicity < 1)
      fail(Errc::InvalidArgument, "edge multiplicity must be positive");
    const Vertex& t = vertex(e.tail);
    const Vertex& h = vertex(e.head);
    if (!(t.x < h.x))
      fail(Errc::VerticalEdge, "edge " + std::to_string(e.id) +
                                   " must run left to right: x(tail) = " +
                                   rat_str(t.x) + ", x(head) = " + rat_str(h.x));
    out_[e.tail].push_back(e.id);
    in_[e.head].push_back(e.id);
  }
  for (auto& [v, ids] : out_) std::sort(ids.begin(), ids.end());
  for (auto& [v, ids] : in_) std::sort(ids.begin(), ids.end());

  for (const Vertex& v : vertices_) {
    if (v.x == a_) {
      if (in_.count(v.id))
        fail(Errc::InvalidArgument, "source " + vtx_str(v) + " has incoming edges");
      sources_.push_back(v.id);
    } else if (v.x == b_) {
      if (out_.count(v.id))
        fail(Errc::InvalidArgument, "sink " + vtx_str(v) + " has outgoing edges");
      sinks_.push_back(v.id);
    }
  }
  auto by_y = [&](int p, int q) { return vertex(p).y < vertex(q).y; };
  std::sort(sources_.begin(), sources_.end(), by_y);
  std::sort(sinks_.begin(), sinks_.end(), by_y);

  // Rank detection: boundary heights exactly {1, ..., n} on both sides.
  if (sources_.empty() && sinks_.empty()) {
    rank_ = 0;
  } else if (!sources_.empty() && sources_.size() == sinks_.size()) {
    const int n = static_cast<int>(sources_.size());
    bool ok = true;
    for (int j = 0; j < n && ok; ++j)
      ok = vertex(sources_[j]).y == j + 1 && vertex(sinks_[j]).y == j + 1;
    if (ok) rank_ = n;
  }
}

PlanarNetwork PlanarNetwork::assemble(Rat a, Rat b, std::vector<Vertex> vertices,
                                      std::vector<Edge> edges,
                                      std::optional<Rat> middle) {
  PlanarNetwork net;
  net.a_ = std::move(a);
  net.b_ = std::move(b);
  net.vertices_ = std::move(vertices);
  net.edges_ = std::move(edges);
  net.middle_ = std::move(middle);
  net.finalize();
  return net;
}

const Vertex& PlanarNetwork::vertex(int id) const {
  auto it = vidx_.find(id);
  if (it == vidx_.end())
    fail(Errc::InvalidArgument, "no vertex with id " + std::to_string(id));
  return vertices_[it->second];
}

const Edge& PlanarNetwork::edge(int id) const {
  auto it = eidx_.find(id);
  if (it == eidx_.end())
    fail(Errc::InvalidArgument, "no edge with id " + std::to_string(id));
  return edges_[it->second];
}

const std::vector<int>& PlanarNetwork::out_edges(int vertex_id) const {
  static const std::vector<int> kEmpty;
  auto it = out_.find(vertex_id);
  return it == out_.end() ? kEmpty : it->second;
}

const std::vector<int>& PlanarNetwork::in_edges(int vertex_id) const {
  static const std::vector<int> kEmpty;
  auto it = in_.find(vertex_id);
  return it == in_.end() ? kEmpty : it->second;
}

void validate_embedding(const PlanarNetwork& net) {
  const auto& edges = net.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& e = edges[i];
      const Edge& f = edges[j];
      const Vertex& p1 = net.vertex(e.tail);
      const Vertex& p2 = net.vertex(e.head);
      const Vertex& q1 = net.vertex(f.tail);
      const Vertex& q2 = net.vertex(f.head);

      const int d1 = orient(p1, p2, q1);
      const int d2 = orient(p1, p2, q2);
      const int d3 = orient(q1, q2, p1);
      const int d4 = orient(q1, q2, p2);

      auto crossing = [&]() {
        fail(Errc::CrossingEdges, "edges " + std::to_string(e.id) + " and " +
                                      std::to_string(f.id) +
                                      " intersect away from a shared vertex");
      };

      if (d1 * d2 < 0 && d3 * d4 < 0) crossing();  // proper crossing

      // Touching contacts: allowed only at a vertex shared by both edges.
      auto shared_vertex = [&](const Vertex& v) {
        return (v.id == e.tail || v.id == e.head) &&
               (v.id == f.tail || v.id == f.head);
      };
      auto check_touch = [&](const Vertex& p, const Vertex& a,
                             const Vertex& b) {
        if (orient(a, b, p) == 0 && on_segment_collinear(p, a, b) &&
            !shared_vertex(p))
          crossing();
      };
      check_touch(q1, p1, p2);
      check_touch(q2, p1, p2);
      check_touch(p1, q1, q2);
      check_touch(p2, q1, q2);

      // Collinear overlap beyond a single shared point.
      if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0) {
        const Rat lo = std::max(std::min(p1.x, p2.x), std::min(q1.x, q2.x));
        const Rat hi = std::min(std::max(p1.x, p2.x), std::max(q1.x, q2.x));
        if (lo < hi) crossing();
      }
    }
  }
}

PlanarNetwork build_network(Rat a, Rat b, std::vector<Vertex> vertices,
                            std::vector<Edge> edges) {
  PlanarNetwork net =
      PlanarNetwork::assemble(std::move(a), std::move(b), std::move(vertices),
                              std::move(edges));
  validate_embedding(net);
  return net;
}

PlanarNetwork truncate(const PlanarNetwork& net, int k) {
  if (!net.rank()) fail(Errc::RankMissing, "truncate needs a ranked network");
  const int n = *net.rank();
  if (k < 0 || k > n)
    fail(Errc::KOutOfRange,
         "k = " + std::to_string(k) + " not in [0, " + std::to_string(n) + "]");

  std::set<int> dropped;
  for (int vid : net.source_ids())
    if (net.vertex(vid).y > k) dropped.insert(vid);
  for (int vid : net.sink_ids())
    if (net.vertex(vid).y > k) dropped.insert(vid);

  std::vector<Vertex> vs;
  for (const Vertex& v : net.vertices())
    if (!dropped.count(v.id)) vs.push_back(v);
  std::vector<Edge> es;
  for (const Edge& e : net.edges())
    if (!dropped.count(e.tail) && !dropped.count(e.head)) es.push_back(e);

  return PlanarNetwork::assemble(net.a(), net.b(), std::move(vs), std::move(es),
                                 net.middle());
}

PlanarNetwork concatenate(const PlanarNetwork& g, const PlanarNetwork& d) {
  if (g.b() != d.a())
    fail(Errc::NotComposable, "strip bounds do not meet: b(first) = " +
                                  rat_str(g.b()) + ", a(second) = " +
                                  rat_str(d.a()));

  // Match d's sources to g's sinks by height.
  std::map<Rat, int> sink_at_y;
  for (int vid : g.sink_ids()) sink_at_y[g.vertex(vid).y] = vid;
  std::map<int, int> vmap;  // d vertex id -> merged id
  for (int vid : d.source_ids()) {
    auto it = sink_at_y.find(d.vertex(vid).y);
    if (it == sink_at_y.end())
      fail(Errc::NotComposable,
           "source at y = " + rat_str(d.vertex(vid).y) +
               " of the second network is not a sink of the first");
    vmap[vid] = it->second;
  }

  int voffset = 0;
  for (const Vertex& v : g.vertices()) voffset = std::max(voffset, v.id + 1);
  int eoffset = 0;
  for (const Edge& e : g.edges()) eoffset = std::max(eoffset, e.id + 1);

  std::vector<Vertex> vs = g.vertices();
  for (const Vertex& v : d.vertices()) {
    if (vmap.count(v.id)) continue;
    vmap[v.id] = v.id + voffset;
    vs.push_back(Vertex{v.id + voffset, v.x, v.y});
  }
  std::vector<Edge> es = g.edges();
  for (const Edge& e : d.edges())
    es.push_back(Edge{e.id + eoffset, vmap.at(e.tail), vmap.at(e.head),
                      e.multiplicity});

  return PlanarNetwork::assemble(g.a(), d.b(), std::move(vs), std::move(es),
                                 g.b());
}

namespace {

std::pair<PlanarNetwork, Weighting> simplify_impl(const PlanarNetwork& net,
                                                  const Weighting* w) {
  // Reachability from the sources.
  std::set<int> reach;
  std::vector<int> stack(net.source_ids().begin(), net.source_ids().end());
  for (int vid : stack) reach.insert(vid);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int eid : net.out_edges(v)) {
      int h = net.edge(eid).head;
      if (reach.insert(h).second) stack.push_back(h);
    }
  }

  auto alive = [&](const Edge& e) {
    return reach.count(e.tail) && reach.count(e.head);
  };

  std::map<int, int> in_deg, out_deg;
  for (const Edge& e : net.edges()) {
    if (!alive(e)) continue;
    ++out_deg[e.tail];
    ++in_deg[e.head];
  }
  auto contractible = [&](int vid) {
    if (net.is_source(vid) || net.is_sink(vid)) return false;
    if (net.middle() && net.vertex(vid).x == *net.middle()) return false;
    auto i = in_deg.find(vid);
    auto o = out_deg.find(vid);
    return i != in_deg.end() && o != out_deg.end() && i->second == 1 &&
           o->second == 1;
  };

  Weighting w2;
  std::vector<Edge> es;
  std::set<int> consumed;
  for (const Edge& e0 : net.edges()) {
    if (!alive(e0) || consumed.count(e0.id)) continue;
    if (contractible(e0.tail)) continue;  // chain interior, handled by its head
    // Walk the maximal chain starting at e0; keep e0's id.
    Trop sum = w ? w->at(e0.id) : Trop(0);
    const Edge* cur = &e0;
    consumed.insert(e0.id);
    while (contractible(cur->head)) {
      const int next_id = net.out_edges(cur->head)[0];
      cur = &net.edge(next_id);
      consumed.insert(next_id);
      if (w) sum += w->at(next_id);
    }
    es.push_back(Edge{e0.id, e0.tail, cur->head, e0.multiplicity});
    w2.set(e0.id, sum);
  }

  std::set<int> used;
  for (const Edge& e : es) {
    used.insert(e.tail);
    used.insert(e.head);
  }
  std::vector<Vertex> vs;
  for (const Vertex& v : net.vertices()) {
    if (used.count(v.id)) {
      vs.push_back(v);
    } else if (reach.count(v.id) && (net.is_source(v.id) || net.is_sink(v.id))) {
      vs.push_back(v);  // isolated boundary vertices stay
    }
  }

  return {PlanarNetwork::assemble(net.a(), net.b(), std::move(vs),
                                  std::move(es), net.middle()),
          std::move(w2)};
}

}  // namespace

std::pair<PlanarNetwork, Weighting> simplify(const PlanarNetwork& net,
                                             const Weighting& w) {
  return simplify_impl(net, &w);
}

PlanarNetwork simplify(const PlanarNetwork& net) {
  return simplify_impl(net, nullptr).first;
}

PlanarNetwork translate(const PlanarNetwork& net, const Rat& dx) {
  std::vector<Vertex> vs = net.vertices();
  for (Vertex& v : vs) v.x += dx;
  std::optional<Rat> middle = net.middle();
  if (middle) *middle += dx;
  return PlanarNetwork::assemble(net.a() + dx, net.b() + dx, std::move(vs),
                                 net.edges(), std::move(middle));
}

PlanarNetwork gamma0(int n) {
  if (n < 1) fail(Errc::NOutOfRange, "gamma0 needs n >= 1");
  const int width = n == 1 ? 2 : 3 * n - 1;

  auto u = [&](int r, int s) { return 2 * (n - 1 - r) + 3 * (s - 1) + 2; };

  // Vertices per line, x-sorted: source, slant endpoints, sink.
  std::vector<Vertex> vs;
  std::map<std::pair<int, int>, int> vid_at;  // (line j, x) -> id
  int next_vid = 0;
  for (int j = 1; j <= n; ++j) {
    std::set<int> xs = {0, width};
    for (int s = 1; s <= j - 1; ++s) xs.insert(u(j - 1, s));      // slant tops
    if (j <= n - 1)
      for (int s = 1; s <= j; ++s) xs.insert(u(j, s) + 1);        // slant bottoms
    for (int x : xs) {
      vid_at[{j, x}] = next_vid;
      vs.push_back(Vertex{next_vid, Rat(x), Rat(j)});
      ++next_vid;
    }
  }

  std::vector<Edge> es;
  int next_eid = 0;
  for (int j = 1; j <= n; ++j) {
    int prev = -1;
    for (const auto& [key, vid] : vid_at) {
      if (key.first != j) continue;
      if (prev >= 0) es.push_back(Edge{next_eid++, prev, vid});
      prev = vid;
    }
  }
  for (int r = 1; r <= n - 1; ++r)
    for (int s = 1; s <= r; ++s)
      es.push_back(Edge{next_eid++, vid_at.at({r + 1, u(r, s)}),
                        vid_at.at({r, u(r, s) + 1})});

  return build_network(0, width, std::move(vs), std::move(es));
}

PlanarNetwork delta0(int n) {
  if (n < 1) fail(Errc::NOutOfRange, "delta0 needs n >= 1");
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (int j = 1; j <= n; ++j) {
    vs.push_back(Vertex{2 * (j - 1), 0, Rat(j)});
    vs.push_back(Vertex{2 * (j - 1) + 1, 2, Rat(j)});
    es.push_back(Edge{j - 1, 2 * (j - 1), 2 * (j - 1) + 1});
  }
  return build_network(0, 2, std::move(vs), std::move(es));
}

PlanarNetwork horn_network(int n) {
  PlanarNetwork g = gamma0(n);
  return concatenate(g, translate(delta0(n), g.b()));
}

std::vector<int> tau_line(const PlanarNetwork& net, int j) {
  std::vector<std::pair<Rat, int>> found;
  for (const Edge& e : net.edges()) {
    const Vertex& t = net.vertex(e.tail);
    const Vertex& h = net.vertex(e.head);
    if (t.y == j && h.y == j) found.emplace_back(t.x, e.id);
  }
  std::sort(found.begin(), found.end());
  std::vector<int> ids;
  ids.reserve(found.size());
  for (auto& [x, id] : found) ids.push_back(id);
  return ids;
}

const Trop& Weighting::at(int edge_id) const {
  auto it = w_.find(edge_id);
  if (it == w_.end())
    fail(Errc::InvalidArgument,
         "weighting has no entry for edge " + std::to_string(edge_id));
  return it->second;
}

bool Weighting::total_on(const PlanarNetwork& net) const {
  for (const Edge& e : net.edges())
    if (!has(e.id)) return false;
  return true;
}

Weighting Weighting::zero(const PlanarNetwork& net) {
  Weighting w;
  for (const Edge& e : net.edges()) w.set(e.id, Trop(0));
  return w;
}

Weighting random_weighting(const PlanarNetwork& net, std::uint64_t seed,
                           const RandomWeightOptions& opt) {
  std::mt19937_64 rng(seed);
  Weighting w;
  for (const Edge& e : net.edges()) {
    if (opt.neg_inf_chance > 0 &&
        static_cast<int>(rng() % 64) < opt.neg_inf_chance) {
      w.set(e.id, Trop::neg_inf());
      continue;
    }
    const long span = 2L * opt.max_abs_numerator + 1;
    const long num = static_cast<long>(rng() % span) - opt.max_abs_numerator;
    const long den = 1 + static_cast<long>(rng() % opt.max_denominator);
    w.set(e.id, Trop(Rat(num, den)));
  }
  return w;
}

Trop weight_of_edges(const Weighting& w, const std::vector<int>& edge_ids) {
  Trop sum(0);
  for (int id : edge_ids) sum += w.at(id);
  return sum;
}

}  // namespace tropnet
