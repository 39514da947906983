#include "dlfv/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dlfv {

namespace {

bool is_nonpositive_integer(double a, int* n_out = nullptr) {
  if (a > 1e-12) return false;
  const double r = std::round(a);
  if (std::abs(a - r) > 1e-12) return false;
  if (n_out) *n_out = static_cast<int>(-r);
  return true;
}

}  // namespace

double hermite(int n, double x) {
  if (n < 0) throw std::invalid_argument("hermite: n must be non-negative");
  if (n == 0) return 1.0;
  double hm = 1.0;        // H_0
  double h = 2.0 * x;     // H_1
  for (int k = 1; k < n; ++k) {
    const double hn = 2.0 * x * h - 2.0 * k * hm;
    hm = h;
    h = hn;
  }
  return h;
}

double kummer_m(double a, double b, double z) {
  int terms = -1;
  const bool terminating = is_nonpositive_integer(a, &terms);
  int b_index = -1;
  if (is_nonpositive_integer(b, &b_index)) {
    // (b)_k vanishes at k = |b|+1; only a series terminating strictly first
    // is defined.
    if (!terminating || terms > b_index) {
      throw std::invalid_argument(
          "kummer_m: b is a non-positive integer and the series does not terminate first");
    }
  }

  double term = 1.0;
  double sum = 1.0;
  const int kmax = terminating ? terms : 2000;
  for (int k = 0; k < kmax; ++k) {
    term *= (a + k) / (b + k) * z / (k + 1);
    sum += term;
    if (!terminating && std::abs(term) <= 1e-12 * (1.0 + std::abs(sum)) && k > 2) {
      return sum;
    }
  }
  if (!terminating) {
    throw std::runtime_error("kummer_m: series did not reach the target tolerance");
  }
  return sum;
}

double whittaker_m(double k, double m, double z) {
  return std::pow(z, m + 0.5) * std::exp(-0.5 * z) * kummer_m(m - k + 0.5, 2.0 * m + 1.0, z);
}

std::vector<QuantizedLevel> solve_quantization(const QuantizationInput& in, int n_max) {
  if (1.0 + 4.0 * in.r < 0.0) {
    throw std::invalid_argument("solve_quantization: requires 1 + 4r >= 0");
  }
  std::vector<QuantizedLevel> out;
  if (in.q >= 0.0) return out;  // no bound states
  const double root = std::sqrt(1.0 + 4.0 * in.r);
  for (int n = 0; n < n_max; ++n) {
    out.push_back({n, -in.q / (2.0 * n + 1.0 + root)});
  }
  return out;
}

std::vector<AnalyticLevel> free_particle_levels(double a, double omega0, const SystemParams& s,
                                                int n_max) {
  if (a == 0.0) throw std::invalid_argument("free_particle_levels: a must be nonzero");
  validate(s);
  const double amp = std::sqrt(2.0 * std::abs(a) / std::numbers::pi);
  std::vector<AnalyticLevel> out;
  for (int n = 1; n <= n_max; ++n) {
    AnalyticLevel lvl;
    lvl.n = n;
    lvl.eps = a * a * n * n + omega0 * omega0;
    const double k = a * n;
    if (n % 2 == 0) {
      lvl.eigenfunction = [amp, k](double y) { return amp * std::sin(k * y); };
    } else {
      lvl.eigenfunction = [amp, k](double y) { return amp * std::cos(k * y); };
    }
    out.push_back(std::move(lvl));
  }
  return out;
}

std::vector<HalfOscillatorLevel> half_oscillator_levels(double omega, const SystemParams& s,
                                                        Component component, int n_max) {
  if (!(omega > 0.0)) throw std::invalid_argument("half_oscillator_levels: omega must be positive");
  validate(s);
  const double sign = component == Component::plus ? 1.0 : -1.0;
  // Potential (omega^2/2) y^2 +- omega/sqrt(2): curvature c = omega/sqrt(2),
  // so levels sit at (2n+1)c and the length scale is y0 = 1/sqrt(c).
  const double c = omega / std::sqrt(2.0);
  const double y0 = 1.0 / std::sqrt(c);
  std::vector<HalfOscillatorLevel> out;
  for (int j = 0; j < n_max; ++j) {
    const int n = 2 * j + 1;  // Dirichlet at y = 0 keeps odd states only
    HalfOscillatorLevel lvl;
    lvl.n = n;
    lvl.component = component;
    lvl.eps_quoted = omega * (n + 0.5) + sign * 0.5 * omega * omega;
    lvl.eps_derived = std::sqrt(2.0) * omega * (n + 0.5) + sign * omega / std::sqrt(2.0);
    lvl.differs = std::abs(lvl.eps_quoted - lvl.eps_derived) >
                  1e-9 * (1.0 + std::abs(lvl.eps_derived));
    lvl.eigenfunction = [y0, n](double y) {
      return std::exp(-y * y / (2.0 * y0 * y0)) * hermite(n, y / y0);
    };
    out.push_back(std::move(lvl));
  }
  return out;
}

std::vector<AnalyticLevel> coulomb_levels(double l, const SystemParams& s, Component component,
                                          int n_max) {
  if (!(l > 0.5)) throw std::invalid_argument("coulomb_levels: requires l > 1/2");
  validate(s);
  const bool plus = component == Component::plus;
  std::vector<AnalyticLevel> out;
  for (int n = 0; n < n_max; ++n) {
    AnalyticLevel lvl;
    lvl.n = n;
    lvl.component = component;
    const double shift = plus ? l : l + 1.0;
    lvl.eps = 1.0 / (4.0 * l * l) - 1.0 / (4.0 * (n + shift) * (n + shift));
    const double p = 1.0 / (2.0 * (n + shift));
    const double power = plus ? l : l + 1.0;
    const double bpar = plus ? 2.0 * l : 2.0 * l + 2.0;
    lvl.eigenfunction = [power, p, n, bpar](double y) {
      return std::pow(y, power) * std::exp(-p * y) * kummer_m(-n, bpar, 2.0 * p * y);
    };
    if (!plus && lvl.eps > 0.0) {
      // damping-factor convergence window -1/(2 tau) < l < 1/(2 tau)
      const double tau = std::sqrt(lvl.eps);
      lvl.damping_window_ok = l < 1.0 / (2.0 * tau);
    }
    out.push_back(std::move(lvl));
  }
  return out;
}

std::vector<AnalyticLevel> cprs_levels(int n_max) {
  std::vector<AnalyticLevel> out;
  int produced = 0;
  for (int n = 0; produced < n_max; ++n) {
    if (n == 1 || n == 2) continue;  // absent from the spectrum
    AnalyticLevel lvl;
    lvl.n = n;
    lvl.component = Component::minus;
    lvl.eps = 2.0 * n - 3.0;
    lvl.eigenfunction = [n](double x) {
      double p = 0.0;
      if (n == 0) {
        p = 1.0;
      } else {
        p = hermite(n, x) + 4.0 * n * hermite(n - 2, x);
        if (n >= 4) p += 4.0 * n * (n - 3.0) * hermite(n - 4, x);
      }
      return p * std::exp(-0.5 * x * x) / (2.0 * x * x + 1.0);
    };
    out.push_back(std::move(lvl));
    ++produced;
  }
  return out;
}

}  // namespace dlfv
