#pragma once

#include <functional>
#include <vector>

#include "dlfv/core.hpp"

namespace dlfv {

/// Physicists' Hermite polynomial H_n(x) by the three-term recurrence.
double hermite(int n, double x);

/// Kummer confluent hypergeometric M(a, b, z). Terminates exactly when a is
/// a non-positive integer (the only case the quantization condition
/// produces); otherwise sums the series to relative tolerance 1e-12.
/// Rejects non-terminating series with b a non-positive integer.
double kummer_m(double a, double b, double z);

/// Whittaker M(k, m; z) = z^{m+1/2} e^{-z/2} M(m-k+1/2, 2m+1, z).
double whittaker_m(double k, double m, double z);

/// Model radial ODE -L'' + (p^2 + q/s + r/s^2) L = 0. Bound solutions
/// require q < 0 and a real root exponent, i.e. 1 + 4r >= 0.
struct QuantizationInput {
  double p = 0.0;
  double q = 0.0;
  double r = 0.0;
};

struct QuantizedLevel {
  int n = 0;
  double p = 0.0;  // allowed decay rate, -q / (2n + 1 + sqrt(1+4r))
};

/// Levels n = 0..n_max-1 from q/(2p) + (1 + sqrt(1+4r))/2 = -n. Empty when
/// q >= 0 (no bound states).
std::vector<QuantizedLevel> solve_quantization(const QuantizationInput& in, int n_max = 16);

struct AnalyticLevel {
  int n = 0;
  double eps = 0.0;  // E^2 - m0^2 v0^4
  Component component = Component::plus;
  std::function<double(double)> eigenfunction;  // natural coordinate
  bool damping_window_ok = true;  // lower-component convergence window check
};

/// eps_n = a^2 n^2 + omega0^2 for n = 1..n_max with box eigenfunctions
/// Phi_n(y) = sqrt(2a/pi) sin(a n y) (even n) or cos(a n y) (odd n).
std::vector<AnalyticLevel> free_particle_levels(double a, double omega0, const SystemParams& s,
                                                int n_max);

/// Half-line oscillator levels carry both the commonly quoted closed form
/// and the value re-derived from the potential (omega^2/2) y^2 +- omega/sqrt(2)
/// with a Dirichlet wall at y = 0 (odd n only). The quoted form
/// omega(n+1/2) +- omega^2/2 is dimensionally inconsistent with that
/// potential; the derived form sqrt(2) omega (n+1/2) +- omega/sqrt(2) is what
/// the numerics reproduce, and `differs` records the mismatch.
struct HalfOscillatorLevel {
  int n = 1;  // odd
  Component component = Component::plus;
  double eps_quoted = 0.0;
  double eps_derived = 0.0;
  bool differs = false;
  std::function<double(double)> eigenfunction;  // derived-consistent shape
};

std::vector<HalfOscillatorLevel> half_oscillator_levels(double omega, const SystemParams& s,
                                                        Component component, int n_max);

/// eps_{+,n} = 1/(4l^2) - 1/(4(n+l)^2) and eps_{-,n} = 1/(4l^2) - 1/(4(n+l+1)^2),
/// eigenfunctions y^l e^{-p y} M(-n, 2l, 2py) resp. y^{l+1} e^{-p y} M(-n, 2l+2, 2py).
std::vector<AnalyticLevel> coulomb_levels(double l, const SystemParams& s, Component component,
                                          int n_max);

/// Constant-mass spectrum of the CPRS potential: eps = 2n - 3 over the index
/// set n in {0, 3, 4, 5, ...} (n = 1, 2 are absent), with eigenfunctions
/// P_n(x) e^{-x^2/2} / (2x^2+1), P_0 = 1 and
/// P_n = H_n + 4n H_{n-2} + 4n(n-3) H_{n-4} for n >= 3.
std::vector<AnalyticLevel> cprs_levels(int n_max);

}  // namespace dlfv
