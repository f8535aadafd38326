#include "tropnet/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace tropnet {

SymmetricMatrix SymmetricMatrix::zero(int n) {
  SymmetricMatrix m;
  m.n = n;
  m.a.assign(n, std::vector<double>(n, 0.0));
  return m;
}

SymmetricMatrix SymmetricMatrix::leading_principal(int k) const {
  SymmetricMatrix m = zero(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m.a[i][j] = a[i][j];
  return m;
}

double SymmetricMatrix::trace() const {
  double t = 0;
  for (int i = 0; i < n; ++i) t += a[i][i];
  return t;
}

namespace {

double fro_norm(const std::vector<std::vector<double>>& a) {
  double s = 0;
  for (const auto& row : a)
    for (double x : row) s += x * x;
  return std::sqrt(s);
}

double off_norm(const std::vector<std::vector<double>>& a) {
  double s = 0;
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s += a[i][j] * a[i][j];
  return std::sqrt(s);
}

}  // namespace

Spectrum eigenvalues_symmetric(const SymmetricMatrix& m) {
  const int n = m.n;
  if (n <= 0) fail(Errc::InvalidArgument, "empty matrix");
  auto a = m.a;
  const double scale = std::max(fro_norm(a), 1e-300);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (std::abs(a[i][j] - a[j][i]) > 1e-12 * scale)
        fail(Errc::NotSymmetric, "matrix is not symmetric");

  // Accumulate the rotations so the residual can be reported.
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) v[i][i] = 1.0;

  const int max_sweeps = 100;
  int sweep = 0;
  while (off_norm(a) > 1e-12 * scale) {
    if (++sweep > max_sweeps)
      fail(Errc::NoConvergence, "Jacobi iteration cap reached");
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int i = 0; i < n; ++i) {
          const double aip = a[i][p], aiq = a[i][q];
          a[i][p] = c * aip - s * aiq;
          a[i][q] = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          const double api = a[p][i], aqi = a[q][i];
          a[p][i] = c * api - s * aqi;
          a[q][i] = s * api + c * aqi;
        }
        for (int i = 0; i < n; ++i) {
          const double vip = v[i][p], viq = v[i][q];
          v[i][p] = c * vip - s * viq;
          v[i][q] = s * vip + c * viq;
        }
      }
  }

  std::vector<std::pair<double, int>> order;
  for (int i = 0; i < n; ++i) order.emplace_back(a[i][i], i);
  std::sort(order.rbegin(), order.rend());

  Spectrum spec;
  double residual = 0;
  for (const auto& [lam, col] : order) {
    spec.eigenvalues.push_back(lam);
    for (int r = 0; r < n; ++r) {
      double av = 0;
      for (int c2 = 0; c2 < n; ++c2) av += m.a[r][c2] * v[c2][col];
      residual = std::max(residual, std::abs(av - lam * v[r][col]));
    }
  }
  spec.residual = residual;
  return spec;
}

Tableau principal_tableau(const SymmetricMatrix& m) {
  Tableau t(m.n);
  for (int k = 1; k <= m.n; ++k) {
    const Spectrum s = eigenvalues_symmetric(m.leading_principal(k));
    Rat acc = 0;
    for (int i = 1; i <= k; ++i) {
      acc += rat_from_double(s.eigenvalues[i - 1]);
      t.at(k, i) = Trop(acc);
    }
  }
  return t;
}

namespace {

// Platform-independent uniform in [-scale, scale].
double uniform_signed(std::mt19937_64& rng, double scale) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return (2.0 * u - 1.0) * scale;
}

HornTriple spectrum_triple(const SymmetricMatrix& A, const SymmetricMatrix& B,
                           const SymmetricMatrix& C) {
  HornTriple t;
  for (double x : eigenvalues_symmetric(A).eigenvalues)
    t.lambda.push_back(rat_from_double(x));
  for (double x : eigenvalues_symmetric(B).eigenvalues)
    t.mu.push_back(rat_from_double(x));
  for (double x : eigenvalues_symmetric(C).eigenvalues)
    t.nu.push_back(rat_from_double(x));
  return t;
}

}  // namespace

HornSample sample_horn_instance(int n, std::uint64_t seed, double scale) {
  if (n < 1 || n > 6) fail(Errc::InvalidArgument, "sample needs 1 <= n <= 6");
  std::mt19937_64 rng(seed);
  HornSample out;
  out.A = SymmetricMatrix::zero(n);
  out.B = SymmetricMatrix::zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      out.A.a[i][j] = out.A.a[j][i] = uniform_signed(rng, scale);
      out.B.a[i][j] = out.B.a[j][i] = uniform_signed(rng, scale);
    }
  out.C = SymmetricMatrix::zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.C.a[i][j] = out.A.a[i][j] + out.B.a[i][j];
  out.triple = spectrum_triple(out.A, out.B, out.C);
  return out;
}

HornTriple rationalize_with_trace_repair(const HornTriple& raw, long denom) {
  auto round_to = [&](const Rat& x) {
    const Rat scaled = x * denom;
    const BigInt num = numerator(scaled);
    const BigInt den = denominator(scaled);
    // round half away from zero
    const BigInt q = (2 * num + (num < 0 ? -den : den)) / (2 * den);
    return Rat(q, BigInt(denom));
  };
  HornTriple out;
  for (const Rat& x : raw.lambda) out.lambda.push_back(round_to(x));
  for (const Rat& x : raw.mu) out.mu.push_back(round_to(x));
  for (const Rat& x : raw.nu) out.nu.push_back(round_to(x));
  // Restore the trace identity exactly on the last nu entry.
  const int n = out.n();
  Rat target = 0;
  for (const Rat& x : out.lambda) target += x;
  for (const Rat& x : out.mu) target += x;
  for (int i = 0; i + 1 < n; ++i) target -= out.nu[i];
  out.nu[n - 1] = target;
  return out;
}

}  // namespace tropnet
