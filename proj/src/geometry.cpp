#include "axiquad/geometry.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace axiquad {

GeneratingCurve GeneratingCurve::spheroid(double a0, double b0) {
  if (!(a0 > 0) || !(b0 > 0))
    throw std::invalid_argument("spheroid: semi-axes must be positive");
  GeneratingCurve c;
  c.kind = Kind::spheroid;
  c.A = a0;
  c.B = b0;
  c.a = [a0](Complex) { return Complex(a0); };
  c.b = [b0](Complex) { return Complex(b0); };
  c.da = [](Complex) { return Complex(0.0); };
  c.db = [](Complex) { return Complex(0.0); };
  return c;
}

GeneratingCurve GeneratingCurve::trig(
    const std::vector<std::pair<int, double>>& terms) {
  double total = 0.0;
  for (auto& [m, beta] : terms) {
    if (m < 1) throw std::invalid_argument("trig: mode index must be >= 1");
    total += std::abs(beta);
  }
  if (total >= 1.0)
    throw std::invalid_argument("trig: sum |beta| must be < 1 to keep a,b > 0");
  GeneratingCurve c;
  c.kind = Kind::custom;
  auto val = [terms](Complex t) {
    Complex s(1.0);
    for (auto& [m, beta] : terms) s += beta * std::cos(double(m) * t);
    return s;
  };
  auto der = [terms](Complex t) {
    Complex s(0.0);
    for (auto& [m, beta] : terms) s -= beta * double(m) * std::sin(double(m) * t);
    return s;
  };
  c.a = val;
  c.b = val;
  c.da = der;
  c.db = der;
  return c;
}

GeneratingCurve GeneratingCurve::trig(double beta, int m) {
  return trig(std::vector<std::pair<int, double>>{{m, beta}});
}

Target make_target(double x, double y, double z, double axis_tol) {
  Target t;
  t.x = x;
  t.y = y;
  t.z = z;
  t.rho = std::hypot(x, y);
  t.on_axis = t.rho < axis_tol;
  return t;
}

double ParamMap::to_t(double theta) const {
  const double h = half();
  if (h == 0.0) throw std::invalid_argument("ParamMap: zero-length panel");
  return (theta - mid()) / h;
}

Complex ParamMap::to_t(Complex theta) const {
  const double h = half();
  if (h == 0.0) throw std::invalid_argument("ParamMap: zero-length panel");
  return (theta - mid()) / h;
}

ParamMap make_param_map(double theta_a, double theta_b) {
  if (!(theta_b > theta_a))
    throw std::invalid_argument("ParamMap: need theta_b > theta_a");
  return ParamMap{theta_a, theta_b};
}

AxisymSurface make_surface(GeneratingCurve curve, int n_t, int n_phi,
                           int n_panels) {
  if (n_phi < 3) throw std::invalid_argument("make_surface: n_phi must be >= 3");
  if (n_t < 2) throw std::invalid_argument("make_surface: n_t must be >= 2");
  if (n_panels < 1)
    throw std::invalid_argument("make_surface: need at least one panel");
  AxisymSurface s;
  s.curve = std::move(curve);
  s.n_t = n_t;
  s.n_phi = n_phi;
  for (int i = 0; i < n_panels; ++i) {
    const double ta = std::numbers::pi * i / n_panels;
    const double tb = std::numbers::pi * (i + 1) / n_panels;
    s.panels.push_back(make_param_map(ta, tb));
  }
  // Bounding-box diameter from a dense scan of the generating curve.
  double rho_max = 0.0, z_min = 1e300, z_max = -1e300;
  for (int i = 0; i <= 512; ++i) {
    const double th = std::numbers::pi * i / 512;
    const double at = s.curve.a_at(th) * std::sin(th);
    const double bt = s.curve.b_at(th) * std::cos(th);
    rho_max = std::max(rho_max, at);
    z_min = std::min(z_min, bt);
    z_max = std::max(z_max, bt);
  }
  s.diameter = std::max(2.0 * rho_max, z_max - z_min);
  return s;
}

AxisymSurface surface_from_json(const std::string& json_text) {
  const auto j = nlohmann::json::parse(json_text);
  const std::string kind = j.at("kind").get<std::string>();
  GeneratingCurve curve;
  if (kind == "spheroid") {
    curve = GeneratingCurve::spheroid(j.at("a").get<double>(),
                                      j.at("b").get<double>());
  } else if (kind == "trig") {
    std::vector<std::pair<int, double>> terms;
    if (j.contains("coefficients")) {
      for (const auto& term : j.at("coefficients"))
        terms.emplace_back(term.at("m").get<int>(),
                           term.at("beta").get<double>());
    } else {
      terms.emplace_back(j.value("m", 2), j.at("beta").get<double>());
    }
    curve = GeneratingCurve::trig(terms);
  } else {
    throw std::invalid_argument("surface_from_json: unknown kind '" + kind +
                                "'");
  }
  return make_surface(std::move(curve), j.value("n_t", 16),
                      j.value("n_phi", 16), j.value("panels", 1));
}

AxisymSurface surface_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open surface file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return surface_from_json(ss.str());
}

Vec3c surface_point(const GeneratingCurve& c, Complex theta, Complex phi) {
  const Complex at = c.a(theta) * std::sin(theta);
  const Complex bt = c.b(theta) * std::cos(theta);
  return {at * std::cos(phi), at * std::sin(phi), bt};
}

Vec3 surface_point(const GeneratingCurve& c, double theta, double phi) {
  const auto p = surface_point(c, Complex(theta), Complex(phi));
  return {p[0].real(), p[1].real(), p[2].real()};
}

std::pair<Vec3, double> normal_and_jacobian(const GeneratingCurve& c,
                                            double theta, double phi) {
  const double a = c.a_at(theta), b = c.b_at(theta);
  const double da = c.da_at(theta), db = c.db_at(theta);
  const double st = std::sin(theta), ct = std::cos(theta);
  // d_theta gamma x d_phi gamma = a sin(theta) * v with
  //   v = ((b st - db ct) cos(phi), (b st - db ct) sin(phi), da st + a ct).
  const double vr = b * st - db * ct;
  const double vz = da * st + a * ct;
  const double vnorm = std::hypot(vr, vz);
  if (!(vnorm > 0))
    throw std::runtime_error("normal_and_jacobian: degenerate tangents");
  const Vec3 normal{vr * std::cos(phi) / vnorm, vr * std::sin(phi) / vnorm,
                    vz / vnorm};
  const double jac = a * st * vnorm;
  return {normal, jac};
}

Complex r2(const GeneratingCurve& c, Complex theta, Complex phi,
           const Target& x) {
  const Complex at = c.a(theta) * std::sin(theta);
  const Complex bt = c.b(theta) * std::cos(theta);
  const Complex dz = bt - x.z;
  return at * at - 2.0 * at * (x.x * std::cos(phi) + x.y * std::sin(phi)) +
         x.rho * x.rho + dz * dz;
}

double r2(const GeneratingCurve& c, double theta, double phi, const Target& x) {
  return r2(c, Complex(theta), Complex(phi), x).real();
}

Complex lambda_fn(const GeneratingCurve& c, Complex theta, const Target& x) {
  const Complex a = c.a(theta);
  const Complex at = a * std::sin(theta);
  const Complex bt = c.b(theta) * std::cos(theta);
  const Complex dz = bt - x.z;
  return (at * at + x.rho * x.rho + dz * dz) / (2.0 * a);
}

double lambda_fn(const GeneratingCurve& c, double theta, const Target& x) {
  return lambda_fn(c, Complex(theta), x).real();
}

Complex r2_lambda(const GeneratingCurve& c, Complex theta, const Target& x) {
  const Complex dr = c.a(theta) * std::sin(theta) - x.rho;
  const Complex dz = c.b(theta) * std::cos(theta) - x.z;
  return dr * dr + dz * dz;
}

double r2_lambda(const GeneratingCurve& c, double theta, const Target& x) {
  return r2_lambda(c, Complex(theta), x).real();
}

Complex l_sq(const GeneratingCurve& c, Complex theta, const Target& x) {
  const Complex lam = lambda_fn(c, theta, x);
  const Complex st = std::sin(theta);
  const Complex root = std::sqrt(lam * lam - x.rho * x.rho * st * st);
  return 1.0 / std::sqrt(lam + root);
}

double l_sq(const GeneratingCurve& c, double theta, const Target& x) {
  return l_sq(c, Complex(theta), x).real();
}

double curve_speed(const GeneratingCurve& c, double theta) {
  const double a = c.a_at(theta), b = c.b_at(theta);
  const double da = c.da_at(theta), db = c.db_at(theta);
  const double st = std::sin(theta), ct = std::cos(theta);
  return std::hypot(da * st + a * ct, db * ct - b * st);
}

}  // namespace axiquad
