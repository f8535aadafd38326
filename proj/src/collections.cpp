#include "tropnet/collections.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace tropnet {

FreeEdgeLabels analyze_labels(const PlanarNetwork& net) {
  if (!net.rank() || *net.rank() < 1)
    fail(Errc::InvalidArgument, "labels need a ranked network");
  const int n = *net.rank();
  const bool has_delta = net.middle().has_value();
  const Rat gamma_end = has_delta ? *net.middle() : net.b();

  FreeEdgeLabels lab;
  lab.n = n;
  lab.line_edges.assign(n, {});
  lab.h_edge.assign(n, -1);
  if (has_delta) lab.d_edge.assign(n, -1);

  std::map<int, std::vector<std::pair<Rat, int>>> slants_by_r;
  for (const Edge& e : net.edges()) {
    const Vertex& t = net.vertex(e.tail);
    const Vertex& h = net.vertex(e.head);
    const bool in_gamma = h.x <= gamma_end;
    if (t.y == h.y) {
      if (t.y.is_zero() || denominator(t.y) != 1)
        fail(Errc::InvalidArgument, "line off the integer grid");
      const int j = t.y.convert_to<int>();
      if (j < 1 || j > n)
        fail(Errc::InvalidArgument, "line outside 1..n");
      if (in_gamma) {
        lab.line_edges[j - 1].push_back(e.id);
      } else {
        if (lab.d_edge[j - 1] != -1)
          fail(Errc::InvalidArgument, "right part is not the straight network");
        lab.d_edge[j - 1] = e.id;
      }
    } else {
      if (!in_gamma || t.y != h.y + 1 || denominator(h.y) != 1)
        fail(Errc::InvalidArgument, "slant is not a unit descent in the left part");
      const int r = h.y.convert_to<int>();
      slants_by_r[r].emplace_back(t.x, e.id);
    }
  }

  for (int j = 1; j <= n; ++j) {
    auto& line = lab.line_edges[j - 1];
    std::sort(line.begin(), line.end(), [&](int p, int q) {
      return net.vertex(net.edge(p).tail).x < net.vertex(net.edge(q).tail).x;
    });
    if (line.empty())
      fail(Errc::InvalidArgument, "line " + std::to_string(j) + " has no edges");
    lab.h_edge[j - 1] = line.back();
    for (std::size_t idx = 0; idx + 1 < line.size(); ++idx)
      lab.zero_edges.push_back(line[idx]);
    if (has_delta && lab.d_edge[j - 1] == -1)
      fail(Errc::InvalidArgument, "right part misses line " + std::to_string(j));
  }
  for (auto& [r, list] : slants_by_r) {
    if (r < 1 || r > n - 1 || static_cast<int>(list.size()) != r)
      fail(Errc::InvalidArgument, "slant pattern is not the staircase one");
    std::sort(list.begin(), list.end());
    for (int s = 1; s <= r; ++s) lab.slant[{r, s}] = list[s - 1].second;
  }
  if (static_cast<int>(slants_by_r.size()) != std::max(0, n - 1))
    fail(Errc::InvalidArgument, "slant pattern is not the staircase one");
  return lab;
}

namespace {

// Line edges from the vertex at x_from to the vertex at x_to (whole line when
// the bounds are the line ends).
std::vector<int> line_run(const PlanarNetwork& net,
                          const std::vector<int>& line, const Rat& x_from,
                          const Rat& x_to) {
  std::vector<int> out;
  for (int id : line) {
    const Edge& e = net.edge(id);
    if (net.vertex(e.tail).x >= x_from && net.vertex(e.head).x <= x_to)
      out.push_back(id);
  }
  return out;
}

Rat line_start_x(const PlanarNetwork& net, const FreeEdgeLabels& lab, int j) {
  return net.vertex(net.edge(lab.line_edges[j - 1].front()).tail).x;
}

Rat line_end_x(const PlanarNetwork& net, const FreeEdgeLabels& lab, int j) {
  return net.vertex(net.edge(lab.line_edges[j - 1].back()).head).x;
}

// The j-th path (from the top) of alpha(k,i): source k-j+1, slants
// a_{r, i-j+1} for r = k-j ... i-j+1, then horizontal to sink i-j+1.
std::vector<int> alpha_path(const PlanarNetwork& net, const FreeEdgeLabels& lab,
                            int k, int i, int j) {
  const int s = i - j + 1;
  std::vector<int> path;
  int line = k - j + 1;
  Rat x = line_start_x(net, lab, line);
  for (int r = k - j; r >= i - j + 1; --r) {
    const int slant_id = lab.slant.at({r, s});
    const Rat top_x = net.vertex(net.edge(slant_id).tail).x;
    for (int id : line_run(net, lab.line_edges[line - 1], x, top_x))
      path.push_back(id);
    path.push_back(slant_id);
    line = r;
    x = net.vertex(net.edge(slant_id).head).x;
  }
  for (int id : line_run(net, lab.line_edges[line - 1], x,
                         line_end_x(net, lab, line)))
    path.push_back(id);
  return path;
}

Multipath build_alpha(const PlanarNetwork& net, const FreeEdgeLabels& lab,
                      int k, int i) {
  Multipath mp;
  for (int j = i; j >= 1; --j)  // bottom path first
    mp.paths.push_back(alpha_path(net, lab, k, i, j));
  return mp;
}

}  // namespace

Collection collection_A(int n) {
  if (n < 1) fail(Errc::NOutOfRange, "collection A needs n >= 1");
  Collection c;
  c.kind = CollectionKind::GZ;
  c.n = n;
  c.net = gamma0(n);
  const FreeEdgeLabels lab = analyze_labels(c.net);
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= k; ++i) {
      Multipath mp = build_alpha(c.net, lab, k, i);
      validate_multipath(c.net, mp);
      c.gz_members[{k, i}] = std::move(mp);
    }
  return c;
}

Collection collection_B(int n) {
  if (n < 1) fail(Errc::NOutOfRange, "collection B needs n >= 1");
  Collection c;
  c.kind = CollectionKind::HORN;
  c.n = n;
  c.net = horn_network(n);
  const FreeEdgeLabels lab = analyze_labels(c.net);
  for (int k = 0; k <= n; ++k)
    for (int i = 0; i <= k; ++i) {
      GammaDeltaPath p;
      p.k = k;
      p.i = i;
      if (k - i > 0) p.gamma_part = build_alpha(c.net, lab, n - i, k - i);
      for (int j = n - i + 1; j <= n; ++j) {
        p.gamma_part.paths.push_back(lab.line_edges[j - 1]);
        p.delta_part.paths.push_back({lab.d_edge[j - 1]});
      }
      if (k > 0) validate_gd_path(c.net, p);
      c.horn_members[{k, i}] = std::move(p);
    }
  return c;
}

Tableau w_collection(const Collection& c, const Weighting& w) {
  Tableau t(c.n);
  if (c.kind == CollectionKind::GZ) {
    for (int k = 1; k <= c.n; ++k)
      for (int i = 1; i <= k; ++i) t.at(k, i) = c.alpha(k, i).weight(w);
  } else {
    for (int k = 1; k <= c.n; ++k)
      for (int i = 0; i <= k; ++i) t.at(k, i) = c.beta(k, i).weight(w);
  }
  return t;
}

namespace {

void check_invert_input(const Collection& c, const Tableau& t,
                        CollectionKind kind) {
  if (c.kind != kind) fail(Errc::InvalidArgument, "collection kind mismatch");
  if (t.n != c.n) fail(Errc::InvalidArgument, "tableau size mismatch");
  if (!t.all_finite())
    fail(Errc::NonFiniteEntry, "inversion needs a finite tableau");
}

}  // namespace

Weighting invert_gz(const Collection& A, const Tableau& t) {
  check_invert_input(A, t, CollectionKind::GZ);
  for (int k = 0; k <= t.n; ++k)
    if (t.at(k, 0) != Trop(0))
      fail(Errc::NonZeroFirstColumn,
           "t^" + std::to_string(k) + "_0 must be 0");

  const FreeEdgeLabels lab = analyze_labels(A.net);
  std::set<int> labeled(lab.h_edge.begin(), lab.h_edge.end());
  for (const auto& [rs, id] : lab.slant) labeled.insert(id);
  std::map<int, Rat> value;  // labeled edge id -> solved weight

  // Triangular back-substitution: equation (k,i) pins a_{k-1,i} for i < k and
  // h_k for i = k; everything else it touches is already solved.
  for (int k = 1; k <= A.n; ++k)
    for (int i = 1; i <= k; ++i) {
      const int pin =
          (i == k) ? lab.h_edge[k - 1] : lab.slant.at({k - 1, i});
      Rat known = 0;
      int pin_count = 0;
      for (int id : A.alpha(k, i).sorted_edge_ids()) {
        if (id == pin) {
          ++pin_count;
          continue;
        }
        auto it = value.find(id);
        if (it != value.end()) {
          known += it->second;
        } else if (labeled.count(id)) {
          fail(Errc::SingularSystem, "triangular structure violated");
        }
        // unlabeled edges are zero
      }
      if (pin_count != 1)
        fail(Errc::SingularSystem, "triangular structure violated");
      value[pin] = t.at(k, i).finite_value() - known;
    }

  Weighting w = Weighting::zero(A.net);
  for (const auto& [id, v] : value) w.set(id, Trop(v));
  return w;
}

Weighting invert_gz(const Tableau& t) {
  return invert_gz(collection_A(t.n), t);
}

Weighting invert_horn(const Collection& B, const Tableau& t) {
  check_invert_input(B, t, CollectionKind::HORN);
  if (t.at(0, 0) != Trop(0))
    fail(Errc::NonZeroFirstColumn, "t^0_0 must be 0");

  const FreeEdgeLabels lab = analyze_labels(B.net);
  const int n = B.n;

  // Unknown order: d_n, ..., d_1, then the GZ triangular order.
  std::vector<int> unknown;
  for (int j = n; j >= 1; --j) unknown.push_back(lab.d_edge[j - 1]);
  for (int k = 1; k <= n; ++k) {
    for (int i = 1; i < k; ++i) unknown.push_back(lab.slant.at({k - 1, i}));
    unknown.push_back(lab.h_edge[k - 1]);
  }
  std::map<int, int> col_of;
  for (std::size_t c = 0; c < unknown.size(); ++c)
    col_of[unknown[c]] = static_cast<int>(c);
  const int nv = static_cast<int>(unknown.size());

  std::vector<std::vector<Rat>> m;  // rows: [coefs | rhs]
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i <= k; ++i) {
      std::vector<Rat> row(nv + 1, Rat(0));
      for (int id : B.beta(k, i).sorted_edge_ids()) {
        auto it = col_of.find(id);
        if (it != col_of.end()) row[it->second] += 1;
      }
      row[nv] = t.at(k, i).finite_value();
      m.push_back(std::move(row));
    }
  if (static_cast<int>(m.size()) != nv)
    fail(Errc::SingularSystem, "equation count mismatch");

  // Exact Gaussian elimination.
  for (int col = 0; col < nv; ++col) {
    int pivot = -1;
    for (int r = col; r < nv; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0)
      fail(Errc::SingularSystem, "collection B weight map is degenerate");
    std::swap(m[col], m[pivot]);
    for (int r = 0; r < nv; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rat f = m[r][col] / m[col][col];
      for (int cc = col; cc <= nv; ++cc) m[r][cc] -= f * m[col][cc];
    }
  }

  Weighting w = Weighting::zero(B.net);
  for (int c = 0; c < nv; ++c) w.set(unknown[c], Trop(m[c][nv] / m[c][c]));
  return w;
}

Weighting invert_horn(const Tableau& t) {
  return invert_horn(collection_B(t.n), t);
}

Rat cell_functional(const PlanarNetwork& net, const CellId& cell,
                    const Weighting& w) {
  const FreeEdgeLabels lab = analyze_labels(net);
  const int n = lab.n;
  auto val = [&](int id) { return w.at(id).finite_value(); };

  if (cell.delta) {
    const int j = cell.k;
    if (lab.d_edge.empty() || j < 0 || j > n)
      fail(Errc::UnknownCell, "no such right-part cell");
    Rat sum = 0;
    if (j + 1 <= n) sum += val(lab.d_edge[j]);      // top edge d_{j+1}
    if (j >= 1) sum -= val(lab.d_edge[j - 1]);      // bottom edge d_j
    return sum;
  }

  const int k = cell.k, i = cell.i;
  if (k < 0 || k > n - 1 || i < 0 || i > k)
    fail(Errc::UnknownCell,
         "no cell [" + std::to_string(k) + "," + std::to_string(i) + "]");

  if (k == 0) {  // unbounded cell below line 1; its incident edges are on top
    Rat sum = 0;
    for (int id : lab.line_edges[0]) sum += val(id);
    return sum;
  }

  const Rat neg_sentinel = net.a() - 1;
  const Rat pos_sentinel = net.b() + 1;
  Rat top_lo = neg_sentinel, top_hi = pos_sentinel;
  Rat bot_lo = neg_sentinel, bot_hi = pos_sentinel;
  Rat sum = 0;
  if (i >= 1) {
    const int left = lab.slant.at({k, i});
    sum -= val(left);
    top_lo = net.vertex(net.edge(left).tail).x;
    bot_lo = net.vertex(net.edge(left).head).x;
  }
  if (i <= k - 1) {
    const int right = lab.slant.at({k, i + 1});
    sum += val(right);
    top_hi = net.vertex(net.edge(right).tail).x;
    bot_hi = net.vertex(net.edge(right).head).x;
  }
  for (int id : line_run(net, lab.line_edges[k], top_lo, top_hi))
    sum += val(id);
  for (int id : line_run(net, lab.line_edges[k - 1], bot_lo, bot_hi))
    sum -= val(id);
  return sum;
}

Rat region_functional(const PlanarNetwork& net, RegionKind kind, int k, int i,
                      const Weighting& w) {
  const FreeEdgeLabels lab = analyze_labels(net);
  const int n = lab.n;
  if (k < 0 || k > n - 1 || i < 0 || i > k)
    fail(Errc::UnknownRegion,
         "no region at [" + std::to_string(k) + "," + std::to_string(i) + "]");
  Rat sum = 0;
  switch (kind) {
    case RegionKind::NE:
      for (int s = 0; s <= i; ++s)
        sum += cell_functional(net, CellId::gamma(k - s, i - s), w);
      break;
    case RegionKind::SE:
      for (int s = 0; s <= k - i; ++s)
        sum += cell_functional(net, CellId::gamma(k - s, i), w);
      break;
    case RegionKind::E:
      if (lab.d_edge.empty())
        fail(Errc::UnknownRegion, "row regions need a concatenated network");
      for (int s = i; s <= k; ++s)
        sum += cell_functional(net, CellId::gamma(k, s), w);
      sum += cell_functional(net, CellId::delta_cell(k), w);
      break;
  }
  return sum;
}

}  // namespace tropnet
