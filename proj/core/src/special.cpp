#include "bergman/special.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "bergman/errors.hpp"

namespace bergman {

namespace {

constexpr int kMaxTerms = 1'000'000;
constexpr double kTermTol = 1e-16;
constexpr double kSeriesSwitch = 0.85;  // connection formulas above this x
constexpr double kPi = 3.14159265358979323846;

bool is_nonpositive_integer(double x) {
  return x < 0.5 && std::abs(x - std::round(x)) < 1e-12;
}

bool is_integer(double x) { return std::abs(x - std::round(x)) < 1e-12; }

// Sign of Gamma(x) for non-pole x.
double gamma_sign(double x) {
  if (x > 0.0) return 1.0;
  const long long f = static_cast<long long>(std::floor(x));
  return (((-f) % 2) == 1) ? -1.0 : 1.0;
}

[[noreturn]] void series_failure(double a, double b, double c, double x,
                                 double partial, double term) {
  std::ostringstream os;
  os << "gauss_2f1: series did not converge within " << kMaxTerms
     << " terms for (a=" << a << ", b=" << b << ", c=" << c << ", x=" << x
     << "); partial sum " << partial << ", last term " << term;
  throw NumericError(os.str());
}

// Plain power series sum_k (a)_k (b)_k / ((c)_k k!) x^k.
double series_2f1(double a, double b, double c, double x) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < kMaxTerms; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
    sum += term;
    if (std::abs(term) <= kTermTol * std::abs(sum)) return sum;
  }
  series_failure(a, b, c, x, sum, term);
}

// 2F1(a, b; a+b; x) via the logarithmic connection formula at 1-x.
double near_one_log_case(double a, double b, double x) {
  const double y = 1.0 - x;
  const double lny = std::log(y);
  const std::array<double, 1> num{a + b};
  const std::array<double, 2> den{a, b};
  const double pref = gamma_quotient(num, den);
  double coef = 1.0;  // (a)_k (b)_k / (k!)^2 y^k
  double sum = 0.0;
  for (int k = 0; k < kMaxTerms; ++k) {
    const double bracket =
        2.0 * digamma(k + 1.0) - digamma(a + k) - digamma(b + k) - lny;
    const double term = coef * bracket;
    sum += term;
    coef *= (a + k) * (b + k) / ((k + 1.0) * (k + 1.0)) * y;
    if (std::abs(term) <= kTermTol * std::abs(sum) && k > 0) return pref * sum;
  }
  series_failure(a, b, a + b, x, pref * sum, coef);
}

// 2F1(a, b; a+b+m; x), m >= 1 integer, via the 1-x connection formula.
double near_one_integer_case(double a, double b, int m, double x) {
  const double c = a + b + m;
  const double y = 1.0 - x;
  const double lny = std::log(y);

  const std::array<double, 2> num1{static_cast<double>(m), c};
  const std::array<double, 2> den1{a + m, b + m};
  const double pref1 = gamma_quotient(num1, den1);
  double finite = 0.0;
  double t = 1.0;
  for (int k = 0; k < m; ++k) {
    finite += t;
    if (k + 1 < m) t *= (a + k) * (b + k) / ((k + 1.0) * (1.0 - m + k)) * y;
  }

  const std::array<double, 1> num2{c};
  const std::array<double, 2> den2{a, b};
  // (z-1)^m factor written out as (-1)^m (1-z)^m
  const double pref2 = ((m % 2 == 0) ? 1.0 : -1.0) * gamma_quotient(num2, den2);
  double coef = std::pow(y, m) / std::tgamma(m + 1.0);  // (a+m)_k(b+m)_k/(k!(k+m)!) y^{k+m}
  double sum = 0.0;
  for (int k = 0; k < kMaxTerms; ++k) {
    const double bracket = lny - digamma(k + 1.0) - digamma(k + m + 1.0) +
                           digamma(a + k + m) + digamma(b + k + m);
    const double term = coef * bracket;
    sum += term;
    coef *= (a + m + k) * (b + m + k) / ((k + 1.0) * (k + m + 1.0)) * y;
    if (std::abs(term) <= kTermTol * (std::abs(sum) + std::abs(finite)) && k > 0) {
      return pref1 * finite - pref2 * sum;
    }
  }
  series_failure(a, b, c, x, pref1 * finite - pref2 * sum, coef);
}

// 2F1(a, b; c; x) with d = c-a-b > 0 non-integer, via the two-series
// connection formula at 1-x.
double near_one_generic_case(double a, double b, double c, double x) {
  const double d = c - a - b;
  const double y = 1.0 - x;
  const std::array<double, 2> num1{c, d};
  const std::array<double, 2> den1{c - a, c - b};
  const std::array<double, 2> num2{c, -d};
  const std::array<double, 2> den2{a, b};
  const double coef1 = gamma_quotient(num1, den1);
  const double coef2 = gamma_quotient(num2, den2);
  double sum = 0.0;
  if (coef1 != 0.0) sum += coef1 * series_2f1(a, b, 1.0 - d, y);
  if (coef2 != 0.0) sum += coef2 * std::pow(y, d) * series_2f1(c - a, c - b, 1.0 + d, y);
  return sum;
}

// Dispatch for x near 1 with d = c-a-b >= 0.
double near_one(double a, double b, double c, double x) {
  const double d = c - a - b;
  if (is_integer(d)) {
    const int m = static_cast<int>(std::llround(d));
    return m == 0 ? near_one_log_case(a, b, x) : near_one_integer_case(a, b, m, x);
  }
  return near_one_generic_case(a, b, c, x);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("log_gamma: argument must be positive");
  }
  return std::lgamma(x);
}

double digamma(double x) {
  if (is_nonpositive_integer(x)) {
    throw std::domain_error("digamma: pole at nonpositive integer");
  }
  if (x < 0.0) {
    return digamma(1.0 - x) - kPi / std::tan(kPi * x);
  }
  double result = 0.0;
  while (x < 10.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  result += std::log(x) - 0.5 * inv -
            inv2 * (1.0 / 12 -
                    inv2 * (1.0 / 120 -
                            inv2 * (1.0 / 252 - inv2 * (1.0 / 240 - inv2 / 132))));
  return result;
}

double gamma_quotient(std::span<const double> num, std::span<const double> den) {
  double log_abs = 0.0;
  double sign = 1.0;
  for (double x : num) {
    if (is_nonpositive_integer(x)) {
      throw DivergenceError("gamma_quotient: Gamma pole in numerator");
    }
    log_abs += std::lgamma(x);
    sign *= gamma_sign(x);
  }
  for (double x : den) {
    if (is_nonpositive_integer(x)) return 0.0;
    log_abs -= std::lgamma(x);
    sign *= gamma_sign(x);
  }
  return sign * std::exp(log_abs);
}

double gauss_2f1(const HypergeometricInput& h) {
  return gauss_2f1(h.a, h.b, h.c, h.x);
}

double gauss_2f1(double a, double b, double c, double x) {
  if (!(x >= 0.0 && x < 1.0)) {
    throw std::domain_error("gauss_2f1: argument must lie in [0, 1)");
  }
  if (is_nonpositive_integer(c)) {
    throw std::domain_error("gauss_2f1: c is a nonpositive integer");
  }
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) {
    return series_2f1(a, b, c, x);  // terminating polynomial
  }
  if (x <= kSeriesSwitch) {
    return series_2f1(a, b, c, x);
  }
  const double d = c - a - b;
  if (d < 0.0 && !is_integer(d)) {
    // Euler transformation; the transformed series has c-a'-b' = -d > 0.
    if (is_nonpositive_integer(c - a) || is_nonpositive_integer(c - b)) {
      return std::pow(1.0 - x, d) * series_2f1(c - a, c - b, c, x);
    }
    return std::pow(1.0 - x, d) * near_one(c - a, c - b, c, x);
  }
  if (d < -0.5) {
    const int m = static_cast<int>(std::llround(-d));
    if (is_nonpositive_integer(c - a) || is_nonpositive_integer(c - b)) {
      return std::pow(1.0 - x, d) * series_2f1(c - a, c - b, c, x);
    }
    return std::pow(1.0 - x, d) * near_one_integer_case(c - a, c - b, m, x);
  }
  return near_one(a, b, c, x);
}

double gauss_2f1_at_one(double a, double b, double c) {
  if (!(c - a - b > 0.0)) {
    throw DivergenceError("gauss_2f1_at_one: requires c - a - b > 0");
  }
  const std::array<double, 2> num{c, c - a - b};
  const std::array<double, 2> den{c - a, c - b};
  return gamma_quotient(num, den);
}

JIntegralSpec::JIntegralSpec(int n_, double c_, double t_, double r_)
    : n(n_), c(c_), t(t_), r(r_) {
  if (n < 1) throw std::invalid_argument("JIntegralSpec: n must be >= 1");
  if (!(t > -1.0)) throw std::domain_error("JIntegralSpec: requires t > -1");
  if (!(r >= 0.0 && r < 1.0)) {
    throw std::domain_error("JIntegralSpec: requires |z| in [0, 1)");
  }
  lambda_ = 0.5 * (n + 1 + t + c);
}

double j_closed_form(const JIntegralSpec& spec) {
  const double lam = spec.lambda();
  const double cc = spec.n + 1 + spec.t;
  const std::array<double, 2> num{spec.n + 1.0, spec.t + 1.0};
  const std::array<double, 1> den{cc};
  return gamma_quotient(num, den) * gauss_2f1(lam, lam, cc, spec.r * spec.r);
}

double j_boundary(double c, double t, int n) {
  if (!(c < 0.0)) {
    throw DivergenceError("j_boundary: J_{c,t} is unbounded for c >= 0");
  }
  if (!(t > -1.0)) throw std::domain_error("j_boundary: requires t > -1");
  const double h = 0.5 * (n + 1 + t - c);
  const std::array<double, 3> num{n + 1.0, t + 1.0, -c};
  const std::array<double, 2> den{h, h};
  return gamma_quotient(num, den);
}

double limit_extrapolate(std::span<const std::pair<double, double>> samples) {
  if (samples.empty()) {
    throw std::invalid_argument("limit_extrapolate: no samples");
  }
  std::vector<std::pair<double, double>> pts(samples.begin(), samples.end());
  std::sort(pts.begin(), pts.end());  // ascending u; keep the smallest
  const int m = std::min<int>(5, static_cast<int>(pts.size()));
  pts.resize(m);

  // Basis 1, u, u ln u, u^2, u^2 ln u, truncated to m functions;
  // u rescaled by the smallest sample for conditioning.
  const double u0 = pts.front().first;
  auto basis = [&](double u, int j) -> double {
    const double s = u / u0;
    switch (j) {
      case 0: return 1.0;
      case 1: return s;
      case 2: return s * std::log(u);
      case 3: return s * s;
      default: return s * s * std::log(u);
    }
  };

  std::vector<std::vector<double>> a(m, std::vector<double>(m + 1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) a[i][j] = basis(pts[i].first, j);
    a[i][m] = pts[i].second;
  }
  // Gaussian elimination with partial pivoting.
  for (int col = 0; col < m; ++col) {
    int piv = col;
    for (int i = col + 1; i < m; ++i) {
      if (std::abs(a[i][col]) > std::abs(a[piv][col])) piv = i;
    }
    std::swap(a[col], a[piv]);
    if (a[col][col] == 0.0) {
      throw NumericError("limit_extrapolate: singular system");
    }
    for (int i = 0; i < m; ++i) {
      if (i == col) continue;
      const double f = a[i][col] / a[col][col];
      for (int j = col; j <= m; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return a[0][m] / a[0][0];
}

}  // namespace bergman
