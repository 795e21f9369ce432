#include "inscribed/closed_forms.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace insc::forms {

namespace {
constexpr double kPi = 3.14159265358979323846;

double cot(double x) { return std::cos(x) / std::sin(x); }

// v(tau, c) as a function of two variables, no domain checks.
double v_tau_c(double tau, double c) {
  double num = std::cos(0.5 * (tau - c)) - std::cos(0.5 * tau) * std::cos(0.5 * c);
  double den = 1.0 - std::cos(0.5 * c) * std::cos(0.5 * tau);
  return std::sin(c) / 6.0 * num / den;
}

// det of the 2x2 Hessian of v at (tau, c), central differences.
double hessian_det(double tau, double c) {
  const double h = 1e-5;
  double vtt = (v_tau_c(tau + h, c) - 2.0 * v_tau_c(tau, c) + v_tau_c(tau - h, c)) / (h * h);
  double vcc = (v_tau_c(tau, c + h) - 2.0 * v_tau_c(tau, c) + v_tau_c(tau, c - h)) / (h * h);
  double vtc = (v_tau_c(tau + h, c + h) - v_tau_c(tau + h, c - h) -
                v_tau_c(tau - h, c + h) + v_tau_c(tau - h, c - h)) /
               (4.0 * h * h);
  return vtt * vcc - vtc * vtc;
}

double c_max() { return 2.0 * std::asin(std::sqrt(2.0 / 3.0)); }
}  // namespace

double omega(int n) { return static_cast<double>(n) / (n - 2) * kPi / 6.0; }

FTBounds fejes_toth_bounds(int e, int f, int v, double r, double R) {
  if (v - e + f != 2) throw std::invalid_argument("Euler relation violated");
  if (r <= 0.0 || R <= 0.0) throw std::invalid_argument("radii must be positive");
  double af = kPi * f / (2.0 * e);
  double av = kPi * v / (2.0 * e);
  FTBounds b;
  // The inradius side carries the classical -1 term; with it both sides are
  // tight simultaneously for the regular solids.
  b.lower = e / 3.0 * std::sin(2.0 * af) *
            (std::tan(af) * std::tan(af) * std::tan(av) * std::tan(av) - 1.0) *
            r * r * r;
  b.upper = 2.0 * e / 3.0 * std::cos(af) * std::cos(af) * cot(av) *
            (1.0 - cot(af) * cot(af) * cot(av) * cot(av)) * R * R * R;
  return b;
}

double vertex_bound(int v, double R) {
  if (v < 4) throw std::invalid_argument("vertex count below 4");
  double w = omega(v);
  return (v - 2) / 6.0 * cot(w) * (3.0 - cot(w) * cot(w)) * R * R * R;
}

FTBounds face_bound(int f, double r, double R) {
  if (f < 4) throw std::invalid_argument("face count below 4");
  double w = omega(f);
  FTBounds b;
  b.lower = (f - 2) * std::sin(2.0 * w) * (3.0 * std::tan(w) * std::tan(w) - 1.0) * r * r * r;
  b.upper = 2.0 * std::sqrt(3.0) / 9.0 * (f - 2) * std::cos(w) * std::cos(w) *
            (3.0 - cot(w) * cot(w)) * R * R * R;
  return b;
}

double facial_tetra_bound(double tau, double c) {
  if (!(tau > 0.0 && tau <= kPi / 2.0 && tau <= c && c <= kPi / 2.0))
    throw std::invalid_argument("facial_tetra_bound domain violation");
  return v_tau_c(tau, c);
}

double star_shaped_bound(const std::vector<double>& taus,
                         const std::vector<double>& cs, int f_prime) {
  const int f = static_cast<int>(taus.size());
  if (static_cast<int>(cs.size()) != f || f < 1)
    throw std::invalid_argument("star_shaped_bound needs equal nonempty lists");
  if (f_prime < 0 || f_prime > f)
    throw std::invalid_argument("invalid partition index");
  for (int i = 0; i < f; ++i)
    if (!(taus[i] > 0.0 && taus[i] <= kPi / 2.0))
      throw std::invalid_argument("face area out of range");

  double c_prime = 0.0;
  for (int i = 0; i < f_prime; ++i) c_prime += cs[i];
  if (f_prime > 0) c_prime /= f_prime;
  double c_star = 0.0;
  for (int i = f_prime; i < f; ++i) c_star += hessian_zero_split(taus[i]);
  if (f > f_prime) c_star /= (f - f_prime);

  double mixed = f_prime * c_prime + (f - f_prime) * c_star;
  double cbar = mixed / f;
  double num = std::cos((4.0 * kPi - mixed) / (2.0 * f)) -
               std::cos(2.0 * kPi / f) * std::cos(0.5 * cbar);
  double den = 1.0 - std::cos(4.0 * kPi / (2.0 * f)) * std::cos(0.5 * cbar);
  return f / 6.0 * std::sin(cbar) * num / den;
}

double hessian_zero_split(double tau) {
  double lo = tau + 1e-6, hi = c_max();
  if (lo >= hi) return std::numeric_limits<double>::quiet_NaN();
  double flo = hessian_det(tau, lo), fhi = hessian_det(tau, hi);
  if (flo * fhi > 0.0) return std::numeric_limits<double>::quiet_NaN();
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = hessian_det(tau, mid);
    if (flo * fm <= 0.0) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

double hessian_split_omega() {
  // The split curve increases with tau and exits the admissible strip at
  // c_max; the threshold is the largest tau for which the zero still exists.
  double lo = 1e-4, hi = kPi / 2.0 - 1e-4;
  for (int it = 0; it < 100; ++it) {
    double mid = 0.5 * (lo + hi);
    if (!std::isnan(hessian_zero_split(mid)))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

namespace {
// (k+1)^{(k+1)/2} / k^{k/2}: volume factor of a regular k-simplex inscribed
// in the unit sphere of R^k, up to the global 1/d!.
double simplex_factor(int k) {
  return std::pow(k + 1, 0.5 * (k + 1)) / std::pow(k, 0.5 * k);
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}
}  // namespace

double v_d_plus2(int d) {
  if (d < 3) throw std::invalid_argument("v_d_plus2 needs d >= 3");
  int k1 = d / 2, k2 = d - k1;
  return simplex_factor(k1) * simplex_factor(k2) / factorial(d);
}

double v_d_plus3(int d) {
  if (d < 3) throw std::invalid_argument("v_d_plus3 needs d >= 3");
  int k1 = d / 3;
  int k3 = (d + 2) / 3;
  int k2 = d - k1 - k3;
  return simplex_factor(k1) * simplex_factor(k2) * simplex_factor(k3) / factorial(d);
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

double inner_symmetricity(int n) {
  if (n < 1) throw std::invalid_argument("inner_symmetricity needs n >= 1");
  double sum = 0.0;
  for (int nu = 0; 2 * nu <= n + 1; ++nu)
    sum += (nu % 2 == 0 ? 1.0 : -1.0) * binomial(n + 1, nu) *
           std::pow(n + 1 - 2 * nu, n);
  return sum / std::pow(n + 1, n);
}

double outer_symmetricity(int n) {
  if (n < 1) throw std::invalid_argument("outer_symmetricity needs n >= 1");
  int n0 = (n % 2 == 0) ? n / 2 : (n - 1) / 2;
  return 1.0 / binomial(n, n0);
}

double unit_ball_volume(int d) {
  if (d < 0) throw std::invalid_argument("negative dimension");
  if (d == 0) return 1.0;
  if (d == 1) return 2.0;
  return unit_ball_volume(d - 2) * 2.0 * kPi / d;
}

double rs_lower(int d) {
  if (d < 2) throw std::invalid_argument("rs_lower needs d >= 2");
  return 1.0 + 2.0 * unit_ball_volume(d - 1) / unit_ball_volume(d);
}

}  // namespace insc::forms
