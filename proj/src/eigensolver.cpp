#include "dlfv/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace dlfv {

namespace {

std::string fmt(double x) {
  char b[40];
  std::snprintf(b, sizeof(b), "%.12g", x);
  return b;
}

// xorshift64* generator; deterministic start vectors for inverse iteration.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9E3779B97F4A7C15ULL) {}
  double uniform() {
    state ^= state >> 12;
    state ^= state << 25;
    state ^= state >> 27;
    const std::uint64_t u = state * 0x2545F4914F6CDD1DULL;
    return 2.0 * (static_cast<double>(u >> 11) * (1.0 / 9007199254740992.0)) - 1.0;
  }
};

// Number of eigenvalues strictly below lambda, by the Sturm/LDL^T sign count.
int count_below(const std::vector<double>& d, const std::vector<double>& e, double lambda) {
  constexpr double pivmin = 1e-290;
  int count = 0;
  double q = d[0] - lambda;
  if (std::abs(q) < pivmin) q = -pivmin;
  if (q < 0.0) ++count;
  for (size_t i = 1; i < d.size(); ++i) {
    q = d[i] - lambda - e[i - 1] * e[i - 1] / q;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

void gershgorin(const std::vector<double>& d, const std::vector<double>& e, double& lo,
                double& hi) {
  lo = std::numeric_limits<double>::infinity();
  hi = -lo;
  const size_t m = d.size();
  for (size_t i = 0; i < m; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(e[i - 1]);
    if (i + 1 < m) r += std::abs(e[i]);
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }
  const double pad = 1e-10 * (1.0 + std::max(std::abs(lo), std::abs(hi)));
  lo -= pad;
  hi += pad;
}

// j-th smallest eigenvalue (0-based) by bisection on the sign count.
double bisect_eigenvalue(const std::vector<double>& d, const std::vector<double>& e, int j,
                         double glo, double ghi) {
  double a = glo, b = ghi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (a + b);
    if (!(mid > a && mid < b)) break;  // interval exhausted at machine precision
    if (count_below(d, e, mid) >= j + 1) {
      b = mid;
    } else {
      a = mid;
    }
    if (b - a <= 1e-12 * std::max(1.0, 0.5 * (std::abs(a) + std::abs(b)))) break;
  }
  return 0.5 * (a + b);
}

// LU factorization of (T - lambda I) with partial pivoting; the fill-in adds
// one extra superdiagonal.
struct TriLU {
  std::vector<double> mult;  // multipliers
  std::vector<double> d;     // pivots
  std::vector<double> du;    // first superdiagonal
  std::vector<double> du2;   // second superdiagonal (fill-in)
  std::vector<char> swapped;
};

TriLU factor_shifted(const std::vector<double>& diag, const std::vector<double>& off,
                     double lambda, double pivmin) {
  const size_t m = diag.size();
  TriLU f;
  f.d.resize(m);
  for (size_t i = 0; i < m; ++i) f.d[i] = diag[i] - lambda;
  std::vector<double> dl(m > 1 ? m - 1 : 0);
  f.du.assign(m > 1 ? m - 1 : 0, 0.0);
  for (size_t i = 0; i + 1 < m; ++i) {
    dl[i] = off[i];
    f.du[i] = off[i];
  }
  f.du2.assign(m > 2 ? m - 2 : 0, 0.0);
  f.mult.assign(m > 1 ? m - 1 : 0, 0.0);
  f.swapped.assign(m > 1 ? m - 1 : 0, 0);

  for (size_t i = 0; i + 1 < m; ++i) {
    if (std::abs(f.d[i]) >= std::abs(dl[i])) {
      if (std::abs(f.d[i]) < pivmin) f.d[i] = f.d[i] < 0.0 ? -pivmin : pivmin;
      const double fact = dl[i] / f.d[i];
      f.mult[i] = fact;
      f.d[i + 1] -= fact * f.du[i];
      f.swapped[i] = 0;
    } else {
      const double fact = f.d[i] / dl[i];
      f.mult[i] = fact;
      f.d[i] = dl[i];
      const double tmp = f.du[i];
      f.du[i] = f.d[i + 1];
      f.d[i + 1] = tmp - fact * f.d[i + 1];
      if (i + 2 < m) {
        f.du2[i] = f.du[i + 1];
        f.du[i + 1] = -fact * f.du[i + 1];
      }
      f.swapped[i] = 1;
    }
  }
  if (std::abs(f.d[m - 1]) < pivmin) f.d[m - 1] = f.d[m - 1] < 0.0 ? -pivmin : pivmin;
  return f;
}

void solve_inplace(const TriLU& f, std::vector<double>& b) {
  const size_t m = f.d.size();
  for (size_t i = 0; i + 1 < m; ++i) {
    if (!f.swapped[i]) {
      b[i + 1] -= f.mult[i] * b[i];
    } else {
      const double tmp = b[i];
      b[i] = b[i + 1];
      b[i + 1] = tmp - f.mult[i] * b[i + 1];
    }
  }
  b[m - 1] /= f.d[m - 1];
  if (m > 1) b[m - 2] = (b[m - 2] - f.du[m - 2] * b[m - 1]) / f.d[m - 2];
  for (size_t ii = m; ii-- > 2;) {
    const size_t i = ii - 2;
    b[i] = (b[i] - f.du[i] * b[i + 1] - (i < f.du2.size() ? f.du2[i] * b[i + 2] : 0.0)) / f.d[i];
  }
}

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double tridiag_norm_inf(const std::vector<double>& d, const std::vector<double>& e) {
  double n = 0.0;
  const size_t m = d.size();
  for (size_t i = 0; i < m; ++i) {
    double r = std::abs(d[i]);
    if (i > 0) r += std::abs(e[i - 1]);
    if (i + 1 < m) r += std::abs(e[i]);
    n = std::max(n, r);
  }
  return n;
}

double residual_inf(const std::vector<double>& d, const std::vector<double>& e,
                    const std::vector<double>& u, double lambda) {
  const size_t m = d.size();
  double r = 0.0;
  for (size_t i = 0; i < m; ++i) {
    double t = (d[i] - lambda) * u[i];
    if (i > 0) t += e[i - 1] * u[i - 1];
    if (i + 1 < m) t += e[i] * u[i + 1];
    r = std::max(r, std::abs(t));
  }
  return r;
}

}  // namespace

DiscretizedOperator discretize_y(const ScalarField& v, const Grid1D& grid) {
  const double h = grid.spacing();
  const double inv_h2 = 1.0 / (h * h);
  const int m = grid.n() - 2;
  DiscretizedOperator op;
  op.grid = grid;
  op.form = DiscretizedOperator::Form::constant_mass_y;
  op.diag.resize(static_cast<size_t>(m));
  op.offdiag.assign(static_cast<size_t>(m - 1), -inv_h2);
  for (int i = 1; i <= m; ++i) {
    const double y = grid.node(i);
    const double val = v(y);
    if (!std::isfinite(val)) {
      throw std::runtime_error("discretize_y: potential not finite at y = " + fmt(y));
    }
    op.diag[static_cast<size_t>(i - 1)] = 2.0 * inv_h2 + val;
  }
  return op;
}

DiscretizedOperator discretize_x_pdm(const ScalarField& v, const MassFunction& m,
                                     const Grid1D& grid) {
  const double h = grid.spacing();
  const double inv_h2 = 1.0 / (h * h);
  const int mi = grid.n() - 2;

  // 1/M at the midpoints between consecutive nodes
  std::vector<double> w(static_cast<size_t>(grid.n() - 1));
  for (int i = 0; i + 1 < grid.n(); ++i) {
    const double xm = grid.node(i) + 0.5 * h;
    const double mv = m(xm);
    if (!(mv > 0.0) || !std::isfinite(mv)) {
      throw std::runtime_error("discretize_x_pdm: non-positive mass at x = " + fmt(xm));
    }
    w[static_cast<size_t>(i)] = 1.0 / mv;
  }

  DiscretizedOperator op;
  op.grid = grid;
  op.form = DiscretizedOperator::Form::pdm_flux_x;
  op.diag.resize(static_cast<size_t>(mi));
  op.offdiag.resize(static_cast<size_t>(mi - 1));
  for (int i = 1; i <= mi; ++i) {
    const double x = grid.node(i);
    const double val = v(x);
    if (!std::isfinite(val)) {
      throw std::runtime_error("discretize_x_pdm: potential not finite at x = " + fmt(x));
    }
    op.diag[static_cast<size_t>(i - 1)] =
        (w[static_cast<size_t>(i - 1)] + w[static_cast<size_t>(i)]) * inv_h2 + val;
    if (i < mi) op.offdiag[static_cast<size_t>(i - 1)] = -w[static_cast<size_t>(i)] * inv_h2;
  }
  return op;
}

std::uint64_t default_seed() {
  static const std::uint64_t seed = [] {
    if (const char* env = std::getenv("DIRAC_LFV_SEED")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0') return static_cast<std::uint64_t>(v);
    }
    return static_cast<std::uint64_t>(20240917ULL);
  }();
  return seed;
}

Spectrum lowest_eigenpairs(const DiscretizedOperator& op, int k, std::uint64_t seed) {
  const size_t m = op.diag.size();
  if (k < 1) throw std::invalid_argument("lowest_eigenpairs: k must be at least 1");
  if (static_cast<size_t>(k) > m) {
    throw std::invalid_argument("lowest_eigenpairs: k exceeds the operator dimension");
  }

  double glo = 0.0, ghi = 0.0;
  gershgorin(op.diag, op.offdiag, glo, ghi);

  Spectrum spec;
  spec.grid = op.grid;
  spec.coordinate = op.form == DiscretizedOperator::Form::constant_mass_y ? Coordinate::y_space
                                                                          : Coordinate::x_space;
  spec.eps.resize(static_cast<size_t>(k));
  double lower = glo;
  for (int j = 0; j < k; ++j) {
    spec.eps[static_cast<size_t>(j)] = bisect_eigenvalue(op.diag, op.offdiag, j, lower, ghi);
    lower = std::max(glo, spec.eps[static_cast<size_t>(j)] - 1e-6 * (1.0 + std::abs(spec.eps[static_cast<size_t>(j)])));
  }

  const double norm_inf = tridiag_norm_inf(op.diag, op.offdiag);
  const double pivmin = 1e-30 * std::max(1.0, norm_inf) + 1e-300;
  const double h = op.grid.spacing();
  std::vector<std::vector<double>> vecs;
  vecs.reserve(static_cast<size_t>(k));

  for (int j = 0; j < k; ++j) {
    const double lambda = spec.eps[static_cast<size_t>(j)];
    const TriLU lu = factor_shifted(op.diag, op.offdiag, lambda, pivmin);
    Rng rng(seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(j + 1)));
    std::vector<double> u(m);
    for (auto& x : u) x = rng.uniform();

    bool ok = false;
    for (int iter = 0; iter < 6; ++iter) {
      solve_inplace(lu, u);
      for (const auto& prev : vecs) {
        double dot = 0.0;
        for (size_t i = 0; i < m; ++i) dot += u[i] * prev[i];
        for (size_t i = 0; i < m; ++i) u[i] -= dot * prev[i];
      }
      const double nrm = norm2(u);
      if (!(nrm > 0.0) || !std::isfinite(nrm)) {
        for (auto& x : u) x = rng.uniform();
        continue;
      }
      for (auto& x : u) x /= nrm;
      if (iter >= 1 &&
          residual_inf(op.diag, op.offdiag, u, lambda) <= 1e-11 * std::max(1.0, norm_inf)) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      throw std::runtime_error("lowest_eigenpairs: inverse iteration stagnated for eigenvalue " +
                               std::to_string(j) + " (eps = " + fmt(lambda) + ")");
    }
    vecs.push_back(u);
  }

  spec.states.assign(static_cast<size_t>(k), std::vector<double>(static_cast<size_t>(op.grid.n()), 0.0));
  spec.norms.assign(static_cast<size_t>(k), 0.0);
  const double scale = 1.0 / std::sqrt(h);
  for (int j = 0; j < k; ++j) {
    auto& full = spec.states[static_cast<size_t>(j)];
    const auto& u = vecs[static_cast<size_t>(j)];
    size_t imax = 0;
    for (size_t i = 1; i < m; ++i) {
      if (std::abs(u[i]) > std::abs(u[imax])) imax = i;
    }
    const double sign = u[imax] < 0.0 ? -1.0 : 1.0;
    double nsq = 0.0;
    for (size_t i = 0; i < m; ++i) {
      full[i + 1] = sign * u[i] * scale;
      nsq += full[i + 1] * full[i + 1];
    }
    spec.norms[static_cast<size_t>(j)] = std::sqrt(h * nsq);
  }
  return spec;
}

Spectrum refine(const OperatorBuilder& build, const Grid1D& initial, int k, double target_tol,
                int max_nodes, std::uint64_t seed) {
  Spectrum coarse = lowest_eigenpairs(build(initial), k, seed);
  int n = initial.n();
  Spectrum result = coarse;
  result.eps_err.assign(static_cast<size_t>(k), std::numeric_limits<double>::infinity());
  result.converged = false;

  while (true) {
    const int n_next = 2 * n - 1;
    if (n_next > max_nodes) break;  // cap reached, return best with warning flag
    Grid1D finer(initial.lo(), initial.hi(), n_next);
    Spectrum fine = lowest_eigenpairs(build(finer), k, seed);

    result = fine;
    result.eps_err.resize(static_cast<size_t>(k));
    double worst = 0.0;
    for (int j = 0; j < k; ++j) {
      const double dj = fine.eps[static_cast<size_t>(j)] - coarse.eps[static_cast<size_t>(j)];
      result.eps[static_cast<size_t>(j)] = fine.eps[static_cast<size_t>(j)] + dj / 3.0;
      result.eps_err[static_cast<size_t>(j)] = std::abs(dj) / 3.0;
      worst = std::max(worst, result.eps_err[static_cast<size_t>(j)]);
    }
    coarse = fine;
    n = n_next;
    if (worst < target_tol) {
      result.converged = true;
      break;
    }
    result.converged = false;
  }
  return result;
}

std::string to_string(Extremum::Kind k) {
  switch (k) {
    case Extremum::Kind::minimum: return "min";
    case Extremum::Kind::maximum: return "max";
    default: return "inflection";
  }
}

std::vector<Extremum> find_extrema(const ScalarField& v, Interval domain) {
  if (!domain.finite() || !(domain.lo < domain.hi)) {
    throw std::invalid_argument("find_extrema: finite scan window required");
  }
  std::function<double(double)> dv;
  if (v.has_d1()) {
    dv = [&v](double x) { return v.d1(x); };
  } else {
    dv = [&v](double x) {
      const double h = 1e-5 * std::max(1.0, std::abs(x));
      return (-v(x + 2.0 * h) + 8.0 * v(x + h) - 8.0 * v(x - h) + v(x - 2.0 * h)) / (12.0 * h);
    };
  }

  constexpr int kSubintervals = 10000;
  const double step = domain.width() / kSubintervals;
  std::vector<double> roots;

  double xa = domain.lo;
  double ga = dv(xa);
  double g_prev = std::numeric_limits<double>::quiet_NaN();
  for (int i = 1; i <= kSubintervals; ++i) {
    const double xb = i == kSubintervals ? domain.hi : domain.lo + i * step;
    const double gb = dv(xb);
    if (ga == 0.0) {
      // isolated zero of v' at a scan node; zero runs (flat stretches) are skipped
      if (g_prev != 0.0 && gb != 0.0) roots.push_back(xa);
    } else if (ga * gb < 0.0) {
      double lo = xa, hi = xb, glo = ga;
      while (hi - lo > 1e-8) {
        const double mid = 0.5 * (lo + hi);
        const double gm = dv(mid);
        if (gm == 0.0) {
          lo = hi = mid;
          break;
        }
        if (glo * gm < 0.0) {
          hi = mid;
        } else {
          lo = mid;
          glo = gm;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    g_prev = ga;
    xa = xb;
    ga = gb;
  }

  std::sort(roots.begin(), roots.end());
  std::vector<Extremum> out;
  for (double r : roots) {
    if (!out.empty() && std::abs(r - out.back().x) < 1e-7 * (1.0 + std::abs(r))) continue;
    Extremum e;
    e.x = r;
    e.value = v(r);
    const double delta = 1e-4 * std::max(1.0, std::abs(r));
    const double curv = (dv(r + delta) - dv(r - delta)) / (2.0 * delta);
    const double thr = 1e-8 * std::max(1.0, std::abs(e.value));
    e.kind = curv > thr ? Extremum::Kind::minimum
                        : (curv < -thr ? Extremum::Kind::maximum : Extremum::Kind::inflection);
    out.push_back(e);
  }
  return out;
}

}  // namespace dlfv
