#pragma once

#include <cstdint>
#include <vector>

#include "tropnet/hive.hpp"

namespace tropnet {

struct SymmetricMatrix {
  int n = 0;
  std::vector<std::vector<double>> a;

  static SymmetricMatrix zero(int n);
  SymmetricMatrix leading_principal(int k) const;
  double trace() const;
};

struct Spectrum {
  std::vector<double> eigenvalues;  // weakly decreasing
  double residual = 0;              // max |A v - lambda v|
};

// Cyclic Jacobi rotations; the off-diagonal Frobenius norm is driven below
// 1e-12 times the matrix norm. Errors: NotSymmetric, NoConvergence.
Spectrum eigenvalues_symmetric(const SymmetricMatrix& m);

// t^k_i = lambda^{(k)}_1 + ... + lambda^{(k)}_i over the leading principal
// k-by-k submatrices, t^k_0 = 0; doubles are converted to rationals exactly.
Tableau principal_tableau(const SymmetricMatrix& m);

struct HornSample {
  SymmetricMatrix A, B, C;  // C = A + B
  HornTriple triple;        // their sorted spectra, converted exactly
};

// Deterministic per (n, seed, scale); entries uniform in [-scale, scale].
HornSample sample_horn_instance(int n, std::uint64_t seed, double scale);

// Rounds each entry to the nearest multiple of 1/denom and restores the
// trace identity exactly by adjusting nu_n.
HornTriple rationalize_with_trace_repair(const HornTriple& raw,
                                         long denom = 1000000);

}  // namespace tropnet
