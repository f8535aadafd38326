#include "tropnet/hive.hpp"

#include <algorithm>
#include <map>

namespace tropnet {

namespace {

// Extended-arithmetic comparison lhs >= rhs - slack, where each side is a sum
// of two tableau entries: sums with -inf are -inf, and -inf >= -inf holds.
bool trop_pair_ge(const Trop& a1, const Trop& a2, const Trop& b1,
                  const Trop& b2, const Rat& slack) {
  const bool lf = a1.is_finite() && a2.is_finite();
  const bool rf = b1.is_finite() && b2.is_finite();
  if (!rf) return true;        // rhs is -inf
  if (!lf) return false;       // lhs is -inf, rhs finite
  return a1.finite_value() + a2.finite_value() >=
         b1.finite_value() + b2.finite_value() - slack;
}

}  // namespace

ConeCheck in_c2(const Tableau& t, const Rat& slack) {
  ConeCheck res;
  for (int k = 1; k < t.n; ++k)
    for (int i = 1; i <= k; ++i) {
      if (!trop_pair_ge(t.at(k + 1, i), t.at(k, i - 1), t.at(k + 1, i - 1),
                        t.at(k, i), slack))
        res.violations.push_back({1, k, i});
      if (!trop_pair_ge(t.at(k + 1, i), t.at(k, i), t.at(k + 1, i + 1),
                        t.at(k, i - 1), slack))
        res.violations.push_back({2, k, i});
    }
  res.member = res.violations.empty();
  return res;
}

ConeCheck in_c3(const Tableau& t, const Rat& slack) {
  ConeCheck res = in_c2(t, slack);
  for (int k = 1; k < t.n; ++k)
    for (int i = 1; i <= k; ++i)
      if (!trop_pair_ge(t.at(k, i), t.at(k, i - 1), t.at(k + 1, i),
                        t.at(k - 1, i - 1), slack))
        res.violations.push_back({3, k, i});
  res.member = res.violations.empty();
  return res;
}

GZData boundary_horizontal(const Tableau& t) {
  if (!t.all_finite())
    fail(Errc::NonFiniteEntry, "boundary map needs a finite tableau");
  GZData h(t.n);
  for (int k = 1; k <= t.n; ++k)
    for (int i = 1; i <= k; ++i)
      h.h(k, i) = t.at(k, i).finite_value() - t.at(k, i - 1).finite_value();
  return h;
}

HornTriple boundary_outer(const Tableau& t) {
  if (!t.all_finite())
    fail(Errc::NonFiniteEntry, "boundary map needs a finite tableau");
  HornTriple out;
  for (int i = 1; i <= t.n; ++i) {
    out.lambda.push_back(t.at(i, 0).finite_value() -
                         t.at(i - 1, 0).finite_value());
    out.mu.push_back(t.at(t.n, i).finite_value() -
                     t.at(t.n, i - 1).finite_value());
    out.nu.push_back(t.at(i, i).finite_value() -
                     t.at(i - 1, i - 1).finite_value());
  }
  return out;
}

bool HornTriple::sorted() const {
  auto dec = [](const std::vector<Rat>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i - 1] < v[i]) return false;
    return true;
  };
  return dec(lambda) && dec(mu) && dec(nu);
}

Rat HornTriple::trace_gap() const {
  Rat g = 0;
  for (const Rat& x : lambda) g += x;
  for (const Rat& x : mu) g += x;
  for (const Rat& x : nu) g -= x;
  return g;
}

bool in_gz(const GZData& h) {
  for (int k = 1; k < h.n; ++k)
    for (int i = 1; i <= k; ++i)
      if (!(h.h(k + 1, i) >= h.h(k, i) && h.h(k, i) >= h.h(k + 1, i + 1)))
        return false;
  return true;
}

Tableau tableau_plus_constant(const Tableau& t, const Rat& c) {
  Tableau out = t;
  for (auto& row : out.rows)
    for (Trop& x : row)
      if (x.is_finite()) x = Trop(x.finite_value() + c);
  return out;
}

namespace {

// A linear inequality coef . x >= rhs over the interior variables.
struct LinIneq {
  std::vector<Rat> coef;
  Rat rhs;
};

// Scale so the first nonzero coefficient has magnitude 1 (positive scaling
// preserves the inequality); then identical coefficient vectors dedup to the
// largest rhs.
void prune(std::vector<LinIneq>& sys) {
  std::map<std::vector<Rat>, Rat> best;
  for (LinIneq& q : sys) {
    Rat scale = 0;
    for (const Rat& c : q.coef)
      if (c != 0) {
        scale = rat_abs(c);
        break;
      }
    if (scale != 0 && scale != 1) {
      for (Rat& c : q.coef) c /= scale;
      q.rhs /= scale;
    }
    auto [it, fresh] = best.emplace(q.coef, q.rhs);
    if (!fresh && q.rhs > it->second) it->second = q.rhs;
  }
  sys.clear();
  for (auto& [c, r] : best) sys.push_back(LinIneq{c, r});
}

}  // namespace

HornFeasibility horn_feasible(const HornTriple& triple,
                              const HornOptions& opt) {
  const int n = triple.n();
  if (n < 1 || static_cast<int>(triple.mu.size()) != n ||
      static_cast<int>(triple.nu.size()) != n)
    fail(Errc::InvalidArgument, "triple needs three n-tuples, n >= 1");
  if (!triple.sorted())
    fail(Errc::InvalidArgument, "triple must be weakly decreasing");
  if (triple.trace_gap() != 0)
    fail(Errc::TraceMismatch,
         "sum(lambda) + sum(mu) - sum(nu) = " + rat_str(triple.trace_gap()));
  if (n > opt.n_cap)
    fail(Errc::NTooLarge, "n = " + std::to_string(n) + " exceeds the cap " +
                              std::to_string(opt.n_cap));

  // Boundary entries are pinned by the triple (t^0_0 = 0).
  std::map<std::pair<int, int>, Rat> fixed;
  fixed[{0, 0}] = 0;
  Rat acc = 0;
  for (int i = 1; i <= n; ++i) {
    acc += triple.lambda[i - 1];
    fixed[{i, 0}] = acc;
  }
  acc = fixed[{n, 0}];
  for (int i = 1; i <= n; ++i) {
    acc += triple.mu[i - 1];
    fixed[{n, i}] = acc;
  }
  acc = 0;
  for (int i = 1; i <= n; ++i) {
    acc += triple.nu[i - 1];
    fixed[{i, i}] = acc;  // t^n_n agrees with the mu chain by the trace check
  }

  // Interior variables, eliminated bottom row upward, left to right.
  std::map<std::pair<int, int>, int> var_of;
  for (int k = 2; k < n; ++k)
    for (int i = 1; i < k; ++i)
      var_of.emplace(std::make_pair(k, i), static_cast<int>(var_of.size()));
  const int nv = static_cast<int>(var_of.size());

  std::vector<LinIneq> sys;
  auto add_ineq = [&](std::initializer_list<std::pair<std::pair<int, int>, int>>
                          terms) {
    LinIneq q;
    q.coef.assign(nv, Rat(0));
    q.rhs = -opt.slack;
    for (const auto& [node, sign] : terms) {
      auto itv = var_of.find(node);
      if (itv != var_of.end())
        q.coef[itv->second] += sign;
      else
        q.rhs -= sign * fixed.at(node);
    }
    sys.push_back(std::move(q));
  };
  for (int k = 1; k < n; ++k)
    for (int i = 1; i <= k; ++i) {
      add_ineq({{{k + 1, i}, 1}, {{k, i - 1}, 1}, {{k + 1, i - 1}, -1},
                {{k, i}, -1}});
      add_ineq({{{k + 1, i}, 1}, {{k, i}, 1}, {{k + 1, i + 1}, -1},
                {{k, i - 1}, -1}});
      add_ineq({{{k, i}, 1}, {{k, i - 1}, 1}, {{k + 1, i}, -1},
                {{k - 1, i - 1}, -1}});
    }

  // Fourier-Motzkin, keeping each level's system for back-substitution.
  std::vector<std::vector<LinIneq>> levels;
  for (int v = 0; v < nv; ++v) {
    prune(sys);
    levels.push_back(sys);
    std::vector<LinIneq> lower, upper, rest;
    for (const LinIneq& q : sys) {
      if (q.coef[v] > 0)
        lower.push_back(q);
      else if (q.coef[v] < 0)
        upper.push_back(q);
      else
        rest.push_back(q);
    }
    for (const LinIneq& lo : lower)
      for (const LinIneq& up : upper) {
        // Combine so that x_v cancels: lo/|lo_v| + up/|up_v|.
        LinIneq q;
        q.coef.assign(nv, Rat(0));
        for (int j = 0; j < nv; ++j)
          q.coef[j] = lo.coef[j] / lo.coef[v] - up.coef[j] / up.coef[v];
        q.rhs = lo.rhs / lo.coef[v] - up.rhs / up.coef[v];
        rest.push_back(std::move(q));
      }
    sys = std::move(rest);
  }

  HornFeasibility out;
  for (const LinIneq& q : sys)
    if (q.rhs > 0) return out;  // 0 >= rhs fails
  out.feasible = true;

  // Back-substitute in reverse elimination order at interval midpoints.
  std::vector<Rat> x(nv, 0);
  for (int v = nv - 1; v >= 0; --v) {
    std::optional<Rat> lo, hi;
    for (const LinIneq& q : levels[v]) {
      if (q.coef[v] == 0) continue;
      Rat bound = q.rhs;
      for (int j = v + 1; j < nv; ++j) bound -= q.coef[j] * x[j];
      bound /= q.coef[v];
      if (q.coef[v] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi)
      x[v] = (*lo + *hi) / 2;
    else if (lo)
      x[v] = *lo;
    else if (hi)
      x[v] = *hi;
  }

  Tableau t(n);
  for (const auto& [node, val] : fixed) t.at(node.first, node.second) = Trop(val);
  for (const auto& [node, v] : var_of) t.at(node.first, node.second) = Trop(x[v]);
  out.witness = std::move(t);
  return out;
}

}  // namespace tropnet
