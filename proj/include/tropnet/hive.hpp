#pragma once

#include <optional>
#include <vector>

#include "tropnet/multipath.hpp"

namespace tropnet {

/// Gelfand-Zeitlin data: h^{(k)}_i for 0 < i <= k <= n.
struct GZData {
  int n = 0;
  std::vector<std::vector<Rat>> rows;  // rows[k-1] holds h^{(k)}_1..h^{(k)}_k

  explicit GZData(int n_ = 0) : n(n_), rows(n_) {
    for (int k = 1; k <= n_; ++k) rows[k - 1].assign(k, Rat(0));
  }
  Rat& h(int k, int i) { return rows[k - 1][i - 1]; }
  const Rat& h(int k, int i) const { return rows[k - 1][i - 1]; }

  friend bool operator==(const GZData& a, const GZData& b) {
    return a.n == b.n && a.rows == b.rows;
  }
};

/// Three weakly decreasing n-tuples.
struct HornTriple {
  std::vector<Rat> lambda, mu, nu;

  int n() const { return static_cast<int>(lambda.size()); }
  bool sorted() const;
  Rat trace_gap() const;  // sum(lambda) + sum(mu) - sum(nu)
};

struct RhombusViolation {
  int family;  // 1, 2, or 3
  int k, i;    // inequality index, 0 < i <= k < n
};

struct ConeCheck {
  bool member = true;
  std::vector<RhombusViolation> violations;
};

// Rhombus inequalities of the first two families under extended arithmetic:
// sums with -inf are -inf and -inf >= -inf holds. A nonzero slack relaxes
// every inequality to lhs >= rhs - slack.
ConeCheck in_c2(const Tableau& t, const Rat& slack = Rat(0));

// All three families (the hive cone).
ConeCheck in_c3(const Tableau& t, const Rat& slack = Rat(0));

// h^{(k)}_i = t^k_i - t^k_{i-1}. Error: NonFiniteEntry.
GZData boundary_horizontal(const Tableau& t);

// The outer-edge boundary: lambda_i = t^i_0 - t^{i-1}_0,
// mu_i = t^n_i - t^n_{i-1}, nu_i = t^i_i - t^{i-1}_{i-1}. Outputs are not
// assumed sorted; callers can ask the triple. Error: NonFiniteEntry.
HornTriple boundary_outer(const Tableau& t);

// Interlacing h^{(k+1)}_i >= h^{(k)}_i >= h^{(k+1)}_{i+1}.
bool in_gz(const GZData& h);

Tableau tableau_plus_constant(const Tableau& t, const Rat& c);

struct HornOptions {
  int n_cap = 5;      // Fourier-Motzkin size cap
  Rat slack = Rat(0);  // per-inequality relaxation
};

struct HornFeasibility {
  bool feasible = false;
  std::optional<Tableau> witness;
};

// Decides whether some t in C3 with t^0_0 = 0 has boundary equal to the
// triple: boundary entries are fixed from the triple and the interior
// variables are eliminated by exact Fourier-Motzkin (bottom row upward, left
// to right). The witness fills eliminated variables back in at interval
// midpoints. Errors: TraceMismatch (checked first), NTooLarge,
// InvalidArgument (unsorted or ragged input).
HornFeasibility horn_feasible(const HornTriple& triple,
                              const HornOptions& opt = {});

}  // namespace tropnet
