#include "tropnet/recombine.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>

namespace tropnet {

PathFn PathFn::from_edges(const PlanarNetwork& net,
                          const std::vector<int>& edges) {
  if (edges.empty()) fail(Errc::InvalidArgument, "empty path");
  PathFn fn;
  fn.edge_ids = edges;
  fn.vertex_ids.push_back(net.edge(edges.front()).tail);
  for (int id : edges) {
    const Edge& e = net.edge(id);
    if (e.tail != fn.vertex_ids.back())
      fail(Errc::InvalidArgument, "edges do not chain into a path");
    fn.vertex_ids.push_back(e.head);
  }
  return fn;
}

Rat PathFn::height_at(const PlanarNetwork& net, const Rat& x) const {
  const Vertex* prev = &net.vertex(vertex_ids.front());
  if (x < prev->x) fail(Errc::InvalidArgument, "x left of the path");
  if (x == prev->x) return prev->y;
  for (std::size_t i = 1; i < vertex_ids.size(); ++i) {
    const Vertex* cur = &net.vertex(vertex_ids[i]);
    if (x <= cur->x) {
      return prev->y +
             (cur->y - prev->y) * (x - prev->x) / (cur->x - prev->x);
    }
    prev = cur;
  }
  fail(Errc::InvalidArgument, "x right of the path");
}

std::vector<PathFn> interleave_sort(const PlanarNetwork& net,
                                    const std::vector<PathFn>& fns) {
  const int n = static_cast<int>(fns.size());
  if (n == 0) return {};

  std::set<Rat> xs;
  for (const PathFn& f : fns)
    for (int vid : f.vertex_ids) xs.insert(net.vertex(vid).x);
  const std::vector<Rat> events(xs.begin(), xs.end());

  auto check_contacts = [&](const Rat& x) {
    std::map<Rat, int> mult;
    for (const PathFn& f : fns) ++mult[f.height_at(net, x)];
    for (const auto& [h, m] : mult)
      if (m > 2)
        fail(Errc::TripleContact,
             "three paths meet at x = " + rat_str(x));
  };
  for (const Rat& x : events) check_contacts(x);

  // Heights are linear and cannot swap inside an interval (edges of an
  // embedding cross only at shared endpoints), so the order at the midpoint
  // is the order on the whole open interval.
  const int intervals = static_cast<int>(events.size()) - 1;
  std::vector<std::vector<int>> order(intervals);
  for (int t = 0; t < intervals; ++t) {
    const Rat mid = (events[t] + events[t + 1]) / 2;
    check_contacts(mid);
    std::vector<std::pair<Rat, int>> hs;
    for (int p = 0; p < n; ++p) hs.emplace_back(fns[p].height_at(net, mid), p);
    std::stable_sort(hs.begin(), hs.end(),
                     [](const auto& a, const auto& b) {
                       if (a.first != b.first) return a.first > b.first;
                       return a.second < b.second;
                     });
    order[t].reserve(n);
    for (auto& [h, p] : hs) order[t].push_back(p);
  }

  std::vector<PathFn> out;
  for (int slot = 0; slot < n; ++slot) {
    std::vector<int> edges;
    for (int t = 0; t < intervals; ++t) {
      const PathFn& src = fns[order[t][slot]];
      // The interval lies inside a single edge of the source path.
      const Rat mid = (events[t] + events[t + 1]) / 2;
      int covering = -1;
      for (std::size_t e = 0; e < src.edge_ids.size(); ++e) {
        const Edge& ed = net.edge(src.edge_ids[e]);
        if (net.vertex(ed.tail).x < mid && mid < net.vertex(ed.head).x) {
          covering = src.edge_ids[e];
          break;
        }
      }
      if (covering < 0)
        fail(Errc::InvalidArgument, "interval not covered by the source path");
      if (edges.empty() || edges.back() != covering) edges.push_back(covering);
    }
    out.push_back(PathFn::from_edges(net, edges));  // validates chaining
  }
  return out;
}

namespace {

Rat path_source_y(const PlanarNetwork& net, const std::vector<int>& p) {
  return net.vertex(net.edge(p.front()).tail).y;
}
Rat path_sink_y(const PlanarNetwork& net, const std::vector<int>& p) {
  return net.vertex(net.edge(p.back()).head).y;
}

void check_truncation_membership(const PlanarNetwork& net, const Multipath& mp,
                                 int k, const char* who) {
  for (const auto& p : mp.paths)
    if (path_source_y(net, p) > k || path_sink_y(net, p) > k)
      fail(Errc::TypeMismatch, std::string(who) +
                                   " is not inside the truncation at level " +
                                   std::to_string(k));
}

std::pair<Multipath, Multipath> recombine_common(const PlanarNetwork& net,
                                                 const Multipath& f,
                                                 const Multipath& g, int k,
                                                 int even_count) {
  std::vector<PathFn> fns;
  for (const auto& p : f.paths) fns.push_back(PathFn::from_edges(net, p));
  for (const auto& p : g.paths) fns.push_back(PathFn::from_edges(net, p));
  const std::vector<PathFn> dor = interleave_sort(net, fns);

  Multipath even, odd;
  const int n = static_cast<int>(dor.size());
  // dor_1 is the top slot; multipaths store paths bottom to top.
  for (int slot = n - 1; slot >= 0; --slot) {
    if (slot % 2 == 1)
      even.paths.push_back(dor[slot].edge_ids);
    else
      odd.paths.push_back(dor[slot].edge_ids);
  }
  if (even.size() != even_count)
    fail(Errc::TypeMismatch, "unexpected recombination arity");

  validate_multipath(net, even);
  validate_multipath(net, odd);
  check_truncation_membership(net, even, k - 1, "even output");
  check_truncation_membership(net, odd, k, "odd output");
  return {std::move(even), std::move(odd)};
}

}  // namespace

std::pair<Multipath, Multipath> recombine_shift(const PlanarNetwork& net,
                                                const Multipath& f,
                                                const Multipath& g, int k) {
  const int i = g.size();
  if (f.size() != i - 1 || i < 1)
    fail(Errc::TypeMismatch, "shift recombination needs |f| + 1 = |g|");
  validate_multipath(net, f);
  validate_multipath(net, g);
  check_truncation_membership(net, f, k, "f");
  check_truncation_membership(net, g, k - 1, "g");
  return recombine_common(net, f, g, k, i - 1);
}

std::pair<Multipath, Multipath> recombine_balance(const PlanarNetwork& net,
                                                  const Multipath& f,
                                                  const Multipath& g, int k) {
  if (f.size() != g.size() + 2)
    fail(Errc::TypeMismatch, "balance recombination needs |f| = |g| + 2");
  const int i = g.size() + 1;
  validate_multipath(net, f);
  validate_multipath(net, g);
  check_truncation_membership(net, f, k, "f");
  check_truncation_membership(net, g, k - 1, "g");
  auto [even, odd] = recombine_common(net, f, g, k, i);
  if (odd.size() != i) fail(Errc::TypeMismatch, "unexpected recombination arity");
  return {std::move(even), std::move(odd)};
}

MultipathUnion make_union(const PlanarNetwork& gd, const GammaDeltaPath& alpha,
                          const GammaDeltaPath& beta) {
  validate_gd_path(gd, alpha);
  validate_gd_path(gd, beta);

  struct Copy {
    int tail, head;
    std::vector<int> chain;
    bool alive = true;
  };
  std::vector<Copy> copies;
  auto add_edges = [&](const Multipath& mp) {
    for (const auto& p : mp.paths)
      for (int id : p) {
        const Edge& e = gd.edge(id);
        copies.push_back(Copy{e.tail, e.head, {id}, true});
      }
  };
  add_edges(alpha.gamma_part);
  add_edges(alpha.delta_part);
  add_edges(beta.gamma_part);
  add_edges(beta.delta_part);

  std::map<int, std::vector<int>> in_of, out_of;
  for (std::size_t c = 0; c < copies.size(); ++c) {
    out_of[copies[c].tail].push_back(static_cast<int>(c));
    in_of[copies[c].head].push_back(static_cast<int>(c));
  }

  // Contract internal degree-(1,1) vertices; the images of the union are not
  // affected and the canonical decomposition requires it.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = in_of.begin(); it != in_of.end(); ++it) {
      const int v = it->first;
      if (gd.vertex(v).x == gd.a() || gd.vertex(v).x == gd.b()) continue;
      auto ot = out_of.find(v);
      if (ot == out_of.end() || it->second.size() != 1 ||
          ot->second.size() != 1)
        continue;
      const int ci = it->second[0];
      const int co = ot->second[0];
      copies[ci].chain.insert(copies[ci].chain.end(),
                              copies[co].chain.begin(),
                              copies[co].chain.end());
      copies[ci].head = copies[co].head;
      copies[co].alive = false;
      auto& heads = in_of[copies[co].head];
      std::replace(heads.begin(), heads.end(), co, ci);
      in_of.erase(it);
      out_of.erase(ot);
      changed = true;
      break;
    }
  }

  MultipathUnion theta;
  for (const Copy& c : copies)
    if (c.alive) theta.edges.push_back({c.tail, c.head, c.chain});
  for (const auto& e : theta.edges) {
    if (gd.vertex(e.tail).x == gd.a()) ++theta.type_sources;
    if (gd.vertex(e.head).x == gd.b()) ++theta.type_sinks;
  }
  return theta;
}

int PathDecomposition::count(PathClass c) const {
  int n = 0;
  for (const auto& p : paths)
    if (p.cls == c) ++n;
  return n;
}

namespace {

struct DecompWork {
  PathDecomposition decomp;
  // For each open path: the copies at its two ends and their labels,
  // in the order the path was walked.
  struct Ends {
    int first_copy = -1, last_copy = -1;
    char first_label = '0', last_label = '0';  // 'L', 'R', or '0'
  };
  std::vector<Ends> ends;  // parallel to decomp.paths (closed: unused)
};

DecompWork decompose(const PlanarNetwork& gd, const MultipathUnion& theta) {
  const int nc = static_cast<int>(theta.edges.size());
  std::map<int, std::vector<int>> in_of, out_of;
  for (int c = 0; c < nc; ++c) {
    out_of[theta.edges[c].tail].push_back(c);
    in_of[theta.edges[c].head].push_back(c);
  }
  for (const auto& [v, list] : in_of)
    if (list.size() > 2)
      fail(Errc::TypeMismatch, "vertex with in-degree above two");
  for (const auto& [v, list] : out_of)
    if (list.size() > 2)
      fail(Errc::TypeMismatch, "vertex with out-degree above two");

  // partner[c][port]: the copy linked at the tail port (0) or head port (1).
  std::vector<std::array<int, 2>> partner(nc, {-1, -1});
  for (const auto& [v, list] : out_of)
    if (list.size() == 2) {
      partner[list[0]][0] = list[1];
      partner[list[1]][0] = list[0];
    }
  for (const auto& [v, list] : in_of)
    if (list.size() == 2) {
      partner[list[0]][1] = list[1];
      partner[list[1]][1] = list[0];
    }

  auto label_of = [&](int vid) -> char {
    if (gd.vertex(vid).x == gd.a()) return 'L';
    if (gd.vertex(vid).x == gd.b()) return 'R';
    return '0';
  };

  DecompWork work;
  std::vector<char> seen(nc, 0);

  auto walk = [&](int start, int start_port) {
    DecompPath path;
    DecompWork::Ends ends;
    ends.first_copy = start;
    const int start_vertex =
        start_port == 0 ? theta.edges[start].tail : theta.edges[start].head;
    ends.first_label = label_of(start_vertex);
    int c = start, enter = start_port;
    for (;;) {
      seen[c] = 1;
      path.copies.push_back(c);
      const int exit = 1 - enter;
      const int next = partner[c][exit];
      if (next < 0) {
        ends.last_copy = c;
        const int end_vertex =
            exit == 0 ? theta.edges[c].tail : theta.edges[c].head;
        ends.last_label = label_of(end_vertex);
        break;
      }
      c = next;
      enter = exit;  // co-incoming pairs meet at their head ports, etc.
    }
    auto key = [](char a, char b) { return std::string{a, b}; };
    std::string ks = key(std::min(ends.first_label, ends.last_label),
                         std::max(ends.first_label, ends.last_label));
    if (ks == "00")
      path.cls = PathClass::Q00;
    else if (ks == "0L")
      path.cls = PathClass::QL0;
    else if (ks == "0R")
      path.cls = PathClass::Q0R;
    else if (ks == "LR")
      path.cls = PathClass::QLR;
    else if (ks == "LL")
      path.cls = PathClass::QLL;
    else
      path.cls = PathClass::QRR;
    work.decomp.paths.push_back(std::move(path));
    work.ends.push_back(ends);
  };

  for (int c = 0; c < nc; ++c) {
    if (seen[c]) continue;
    if (partner[c][0] < 0)
      walk(c, 0);
    else if (partner[c][1] < 0)
      walk(c, 1);
  }
  for (int c = 0; c < nc; ++c) {  // remaining components are closed
    if (seen[c]) continue;
    DecompPath path;
    path.cls = PathClass::QCL;
    int cur = c, enter = 0;
    do {
      seen[cur] = 1;
      path.copies.push_back(cur);
      const int exit = 1 - enter;
      cur = partner[cur][exit];
      enter = exit;
    } while (cur != c || enter != 0);
    work.decomp.paths.push_back(std::move(path));
    work.ends.push_back({});
  }
  return work;
}

}  // namespace

PathDecomposition canonical_decomposition(const PlanarNetwork& gd,
                                          const MultipathUnion& theta) {
  return decompose(gd, theta).decomp;
}

namespace {

struct EssentialCounts {
  int lr = 0, l0 = 0, r0 = 0;
};

ColoringPlan plan_for(SplitVariant variant, const EssentialCounts& q) {
  ColoringPlan plan;
  const bool lr_even = q.lr % 2 == 0;
  auto need = [&](bool cond) {
    if (!cond)
      fail(Errc::InfeasibleColoring, "class parities contradict the type");
  };
  switch (variant) {
    case SplitVariant::FIRST:
      // Source and sink budgets both odd.
      if (lr_even) {
        need(q.r0 % 2 == 1 && q.l0 % 2 == 1);
        plan = {q.lr / 2, (q.r0 + 1) / 2, (q.l0 + 1) / 2};
      } else {
        need(q.r0 % 2 == 0 && q.l0 % 2 == 0);
        plan = {(q.lr + 1) / 2, q.r0 / 2, q.l0 / 2};
      }
      break;
    case SplitVariant::SECOND:
      // Source budget odd, sink budget even.
      if (lr_even) {
        need(q.r0 % 2 == 0 && q.l0 % 2 == 1);
        plan = {q.lr / 2, q.r0 / 2, (q.l0 + 1) / 2};
      } else {
        need(q.r0 % 2 == 1 && q.l0 % 2 == 0);
        plan = {(q.lr + 1) / 2, (q.r0 - 1) / 2, q.l0 / 2};
      }
      break;
    case SplitVariant::THIRD:
      // Source budget even, sink budget odd.
      if (lr_even) {
        need(q.r0 % 2 == 1 && q.l0 % 2 == 0);
        plan = {q.lr / 2, (q.r0 + 1) / 2, q.l0 / 2};
      } else {
        need(q.r0 % 2 == 0 && q.l0 % 2 == 1);
        plan = {(q.lr + 1) / 2, q.r0 / 2, (q.l0 - 1) / 2};
      }
      break;
  }
  return plan;
}

// Splits an edge set of a valid coloring into a composable pair.
GammaDeltaPath assemble_gd(const PlanarNetwork& gd,
                           const std::set<int>& edge_ids, int k, int i) {
  std::map<int, int> next_of;
  std::set<int> has_in;
  for (int id : edge_ids) {
    const Edge& e = gd.edge(id);
    if (next_of.count(e.tail))
      fail(Errc::InfeasibleColoring, "colored subgraph is not a multipath");
    next_of[e.tail] = id;
    if (!has_in.insert(e.head).second)
      fail(Errc::InfeasibleColoring, "colored subgraph is not a multipath");
  }
  GammaDeltaPath out;
  out.k = k;
  out.i = i;
  const Rat m = gd.middle() ? *gd.middle() : gd.b();
  std::vector<std::pair<Rat, std::vector<int>>> deltas;
  for (int id : edge_ids) {
    const Edge& first = gd.edge(id);
    if (has_in.count(first.tail)) continue;
    if (!gd.is_source(first.tail))
      fail(Errc::InfeasibleColoring, "colored path does not start at a source");
    std::vector<int> gpiece, dpiece;
    int cur = id;
    for (;;) {
      const Edge& e = gd.edge(cur);
      if (gd.vertex(e.head).x <= m)
        gpiece.push_back(cur);
      else
        dpiece.push_back(cur);
      auto it = next_of.find(e.head);
      if (it == next_of.end()) break;
      cur = it->second;
    }
    out.gamma_part.paths.push_back(std::move(gpiece));
    if (!dpiece.empty())
      deltas.emplace_back(gd.vertex(gd.edge(dpiece.front()).tail).y,
                          std::move(dpiece));
  }
  auto by_y = [&](const std::vector<int>& a, const std::vector<int>& b) {
    return gd.vertex(gd.edge(a.front()).tail).y <
           gd.vertex(gd.edge(b.front()).tail).y;
  };
  std::sort(out.gamma_part.paths.begin(), out.gamma_part.paths.end(), by_y);
  std::sort(deltas.begin(), deltas.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [y, p] : deltas) out.delta_part.paths.push_back(std::move(p));
  if (out.gamma_part.size() != k || out.delta_part.size() != i)
    fail(Errc::InfeasibleColoring, "colored subgraph has the wrong type");
  validate_gd_path(gd, out);
  return out;
}

}  // namespace

ColoringPlan third_variant_rule(const PathDecomposition& decomposition) {
  EssentialCounts q;
  q.lr = decomposition.count(PathClass::QLR);
  q.l0 = decomposition.count(PathClass::QL0);
  q.r0 = decomposition.count(PathClass::Q0R);
  return plan_for(SplitVariant::THIRD, q);
}

std::pair<GammaDeltaPath, GammaDeltaPath> split(const PlanarNetwork& gd,
                                                const MultipathUnion& theta,
                                                int k, int i,
                                                SplitVariant variant) {
  int want_sources = 0, want_sinks = 0;
  int green_k = 0, green_i = 0;
  switch (variant) {
    case SplitVariant::FIRST:
      want_sources = 2 * k - 1;
      want_sinks = 2 * i - 1;
      green_k = k - 1;
      green_i = i - 1;
      break;
    case SplitVariant::SECOND:
      want_sources = 2 * k - 1;
      want_sinks = 2 * i;
      green_k = k - 1;
      green_i = i;
      break;
    case SplitVariant::THIRD:
      want_sources = 2 * k;
      want_sinks = 2 * i - 1;
      green_k = k;
      green_i = i - 1;
      break;
  }
  if (theta.type_sources != want_sources || theta.type_sinks != want_sinks)
    fail(Errc::TypeMismatch,
         "theta has type [" + std::to_string(theta.type_sources) + "," +
             std::to_string(theta.type_sinks) + "], expected [" +
             std::to_string(want_sources) + "," + std::to_string(want_sinks) +
             "]");

  const DecompWork work = decompose(gd, theta);
  EssentialCounts q;
  q.lr = work.decomp.count(PathClass::QLR);
  q.l0 = work.decomp.count(PathClass::QL0);
  q.r0 = work.decomp.count(PathClass::Q0R);
  const ColoringPlan plan = plan_for(variant, q);

  // Color every decomposition path; only the essential classes affect the
  // red source/sink counts.
  const int nc = static_cast<int>(theta.edges.size());
  std::vector<char> red(nc, 0);
  int lr_seen = 0, l0_seen = 0, r0_seen = 0;
  for (std::size_t p = 0; p < work.decomp.paths.size(); ++p) {
    const DecompPath& path = work.decomp.paths[p];
    const auto& ends = work.ends[p];
    // Reference copy and its color.
    int ref = path.copies.front();
    bool ref_red = true;
    switch (path.cls) {
      case PathClass::QLR:
        ref = ends.first_label == 'R' ? ends.first_copy : ends.last_copy;
        ref_red = lr_seen++ < plan.red_lr_sinks;
        break;
      case PathClass::Q0R:
        ref = ends.first_label == 'R' ? ends.first_copy : ends.last_copy;
        ref_red = r0_seen++ < plan.red_0r_sinks;
        break;
      case PathClass::QL0:
        ref = ends.first_label == 'L' ? ends.first_copy : ends.last_copy;
        ref_red = l0_seen++ < plan.red_l0_sources;
        break;
      default:
        break;  // contribution independent of the choice
    }
    int ref_pos = 0;
    for (std::size_t pos = 0; pos < path.copies.size(); ++pos)
      if (path.copies[pos] == ref) ref_pos = static_cast<int>(pos);
    for (std::size_t pos = 0; pos < path.copies.size(); ++pos) {
      const bool same = ((static_cast<int>(pos) - ref_pos) % 2) == 0;
      red[path.copies[pos]] = same == ref_red;
    }
  }

  std::set<int> red_edges, green_edges;
  for (int c = 0; c < nc; ++c) {
    auto& target = red[c] ? red_edges : green_edges;
    for (int id : theta.edges[c].chain) {
      if (!target.insert(id).second)
        fail(Errc::InfeasibleColoring, "double edge colored twice the same");
    }
  }

  GammaDeltaPath red_path = assemble_gd(gd, red_edges, k, i);
  GammaDeltaPath green_path = assemble_gd(gd, green_edges, green_k, green_i);
  return {std::move(red_path), std::move(green_path)};
}

}  // namespace tropnet
