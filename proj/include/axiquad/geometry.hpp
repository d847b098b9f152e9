#pragma once

#include <array>
#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace axiquad {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;
using Vec3c = std::array<Complex, 3>;

/// Profile functions of a body of revolution
///   gamma(theta,phi) = (a(theta) sin(theta) cos(phi),
///                       a(theta) sin(theta) sin(phi),
///                       b(theta) cos(theta)),
/// with a,b > 0 on [0,pi]. The callables must accept complex arguments
/// (analytic at least in the strip |Im theta| <= 1) so that distance-function
/// roots and error estimates can be evaluated off the real axis.
struct GeneratingCurve {
  enum class Kind { spheroid, custom };

  Kind kind = Kind::custom;
  double A = 1.0;  // spheroid semi-axes, valid when kind == spheroid
  double B = 1.0;

  std::function<Complex(Complex)> a, b;
  std::function<Complex(Complex)> da, db;

  double a_at(double theta) const { return a(Complex(theta)).real(); }
  double b_at(double theta) const { return b(Complex(theta)).real(); }
  double da_at(double theta) const { return da(Complex(theta)).real(); }
  double db_at(double theta) const { return db(Complex(theta)).real(); }
  bool is_spheroid() const { return kind == Kind::spheroid; }

  /// Constant profile a(theta)=a0, b(theta)=b0.
  static GeneratingCurve spheroid(double a0, double b0);

  /// a(theta) = b(theta) = 1 + sum_j beta_j cos(m_j theta). A single
  /// {m=2, beta} term gives a peanut-like body, higher m a star-like one.
  static GeneratingCurve trig(const std::vector<std::pair<int, double>>& terms);
  static GeneratingCurve trig(double beta, int m);
};

/// Evaluation point with cached cylindrical radius.
struct Target {
  double x = 0, y = 0, z = 0;
  double rho = 0;
  bool on_axis = true;
};

Target make_target(double x, double y, double z, double axis_tol);

/// Affine map between the panel [theta_a, theta_b] and the base interval
/// [-1,1]: theta(t) = mid + half*t.
struct ParamMap {
  double theta_a = 0, theta_b = 0;

  double mid() const { return 0.5 * (theta_a + theta_b); }
  double half() const { return 0.5 * (theta_b - theta_a); }

  double to_theta(double t) const { return mid() + half() * t; }
  Complex to_theta(Complex t) const { return mid() + half() * t; }
  double to_t(double theta) const;
  Complex to_t(Complex theta) const;
};

ParamMap make_param_map(double theta_a, double theta_b);

/// Axisymmetric surface: generating curve plus base discretization
/// (Gauss-Legendre panels in theta, uniform grid in phi).
struct AxisymSurface {
  GeneratingCurve curve;
  std::vector<ParamMap> panels;  // partition of [0,pi]
  int n_t = 16;                  // nodes per polar panel
  int n_phi = 16;
  double diameter = 2.0;  // bounding-box estimate, sets axis_tol scale

  double axis_tol() const { return 1e-13 * diameter; }
  Target target(double x, double y, double z) const {
    return make_target(x, y, z, axis_tol());
  }
};

AxisymSurface make_surface(GeneratingCurve curve, int n_t, int n_phi,
                           int n_panels = 1);

/// Parse {"kind":"spheroid","a":..,"b":..} / {"kind":"trig",...} plus
/// {"n_t","n_phi","panels"} from a JSON document.
AxisymSurface surface_from_json(const std::string& json_text);
AxisymSurface surface_from_json_file(const std::string& path);

Vec3c surface_point(const GeneratingCurve& c, Complex theta, Complex phi);
Vec3 surface_point(const GeneratingCurve& c, double theta, double phi);

/// Unit outward normal and areal Jacobian |d_theta gamma x d_phi gamma|.
/// At the poles the normal is taken as the theta -> 0, pi limit.
std::pair<Vec3, double> normal_and_jacobian(const GeneratingCurve& c,
                                            double theta, double phi);

/// Squared distance |gamma(theta,phi) - x|^2, complex-capable.
Complex r2(const GeneratingCurve& c, Complex theta, Complex phi,
           const Target& x);
double r2(const GeneratingCurve& c, double theta, double phi, const Target& x);

/// lambda(theta) = (at^2 + rho^2 + (bt - z)^2) / (2 a), at = a sin, bt = b cos.
double lambda_fn(const GeneratingCurve& c, double theta, const Target& x);
Complex lambda_fn(const GeneratingCurve& c, Complex theta, const Target& x);

/// Squared distance in the rho-z plane:
///   (a sin(theta) - rho)^2 + (b cos(theta) - z)^2.
Complex r2_lambda(const GeneratingCurve& c, Complex theta, const Target& x);
double r2_lambda(const GeneratingCurve& c, double theta, const Target& x);

/// (lambda + sqrt(lambda^2 - rho^2 sin^2 theta))^(-1/2); the nearly
/// non-differentiable factor of the reduced polar integrand.
Complex l_sq(const GeneratingCurve& c, Complex theta, const Target& x);
double l_sq(const GeneratingCurve& c, double theta, const Target& x);

/// Derivative of the generating curve in the rho-z plane,
/// gamma_rho(theta) = (a sin, b cos); used for metric conversions.
double curve_speed(const GeneratingCurve& c, double theta);

}  // namespace axiquad
