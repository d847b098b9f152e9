#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace axiquad {

/// Complete elliptic integrals K(m), E(m) with parameter m = k^2.
struct EllipticKE {
  double K;
  double E;
};

/// K for m in [0,1), E for m in [0,1]. Computed by the arithmetic-geometric
/// mean, accurate to ~1e-15 relative.
EllipticKE elliptic_ke(double m);

// The half-integer exponent p of the kernel 1/r^(2p) is carried as
// two_p = 2p in {1, 3, 5} throughout.

/// Azimuthal basis integrals
///   omega_k^p(alpha) = int_0^pi cos(k phi) / (1 - 2 alpha cos(phi) +
///   alpha^2)^p dphi = mu_k^p(alpha) / (1-alpha)^(2p-1),
/// for alpha in (0,1). mu is the scaled, recurrence-friendly form.
struct MuTable {
  int two_p = 1;
  double alpha = 0;
  std::vector<double> mu;  // indices 0..k_max
  bool stabilized = false;

  double omega(int k) const;  // omega_{|k|}^p(alpha)
};

/// Initial values: (mu_0, mu_1) for p=1/2; (mu_0, unused) for p=3/2, 5/2.
std::pair<double, double> mu_initial(int two_p, double alpha);

/// Plain forward recursion (including the lower-p chains it needs).
MuTable mu_forward(int two_p, double alpha, int k_max);

/// A-priori bound on the forward-recurrence roundoff error at index k.
double mu_recurrence_error_estimate(int two_p, double alpha, int k);

/// Boundary-value stabilization: the recurrence is solved as a linear system
/// with mu_0 pinned to its initial value and mu forced to zero at
/// k0 = max(ceil(1.5*kbar), k_max+1, 2). Accurate to <= eps absolute.
MuTable mu_stabilized(int two_p, double alpha, int k_max, double eps);

/// Forward when the recurrence error estimate permits, stabilized otherwise.
MuTable mu_table(int two_p, double alpha, int k_max, double eps);

/// Single omega value (mainly for oracle-style checks).
double omega(int two_p, double alpha, int k, double eps = 1e-14);

/// Polar basis integrals
///   nu_k^p(t0) = int_{-1}^{1} t^(k-1) / |t - t0|^(2p-1) dt,  k = 1..n,
/// for two_p in {3,5} and t0 off [-1,1].
struct NuTable {
  enum class Path { forward, backward };
  int two_p = 3;
  std::complex<double> t0;
  std::vector<double> nu;  // nu[k-1] = nu_k, k = 1..n
  Path path = Path::forward;

  double value(int k) const { return nu[k - 1]; }
};

/// Closed-form (nu_1, nu_2), including the branch for real t0.
std::pair<double, double> nu_initial(int two_p, std::complex<double> t0);

/// Forward recursion for |t0| <= 1.1; otherwise backward recursion seeded by
/// Gauss-Legendre quadrature of the last two entries, guarded by a quadrature
/// error estimate (reverts to forward if the seed is untrustworthy).
NuTable nu_table(int two_p, std::complex<double> t0, int n, double eps);

/// Tridiagonal solve by the Thomas elimination; diagonal dominance asserted.
std::vector<double> solve_tridiagonal(const std::vector<double>& sub,
                                      const std::vector<double>& diag,
                                      const std::vector<double>& super,
                                      std::vector<double> rhs);

}  // namespace axiquad
