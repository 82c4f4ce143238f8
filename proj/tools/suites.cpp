#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <vector>

#include "bergman/certify.hpp"
#include "bergman/errors.hpp"
#include "reports.hpp"

namespace bergman::cli {

namespace {

// Small deterministic generator for suite inputs.
class SuiteRng {
 public:
  explicit SuiteRng(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ULL) {}

  double uniform() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * 0x1.0p-53;
  }

  // Uniform direction, radius capped at max_r.
  BallPoint point(int n, double max_r) {
    std::vector<Complex> c(static_cast<std::size_t>(n));
    double nsq = 0.0;
    for (int k = 0; k < n; ++k) {
      c[k] = Complex(2.0 * uniform() - 1.0, 2.0 * uniform() - 1.0);
      nsq += std::norm(c[k]);
    }
    const double r = max_r * std::pow(uniform(), 1.0 / (2.0 * n));
    const double s = r / std::sqrt(nsq);
    for (Complex& ck : c) ck *= s;
    return BallPoint(std::move(c));
  }

 private:
  std::uint64_t state_;
};

// Mean, outer standard error and mean inner error of a nested pairing.
struct PairingAccum {
  Complex sum{0.0, 0.0};
  double sq_re = 0.0, sq_im = 0.0;
  double inner_se = 0.0;
  std::int64_t count = 0;

  void add(const Complex& v, double inner_err) {
    sum += v;
    sq_re += v.real() * v.real();
    sq_im += v.imag() * v.imag();
    inner_se += inner_err;
    ++count;
  }

  Complex mean() const { return sum / static_cast<double>(count); }

  double combined_error() const {
    const double nd = static_cast<double>(count);
    const double var_re = std::max(0.0, (sq_re - sum.real() * sum.real() / nd) / (nd - 1.0));
    const double var_im = std::max(0.0, (sq_im - sum.imag() * sum.imag() / nd) / (nd - 1.0));
    return std::hypot(std::sqrt(var_re / nd), std::sqrt(var_im / nd)) + inner_se / nd;
  }
};

class SuiteReport {
 public:
  void check(bool ok, const std::string& what) {
    std::cout << (ok ? "[pass] " : "[FAIL] ") << what << "\n";
    ++total_;
    if (ok) ++passed_;
  }

  int finish() const {
    std::cout << passed_ << "/" << total_ << " assertions passed\n";
    return passed_ == total_ ? kExitPass : kExitFail;
  }

 private:
  int total_ = 0;
  int passed_ = 0;
};

int suite_identities(const RunConfig& rc) {
  SuiteReport report;
  SuiteRng rng(rc.seed);
  const int pairs = static_cast<int>(std::min<std::int64_t>(rc.samples, 10'000));
  for (int n : {1, 2, 3}) {
    double max_residual = 0.0;
    double max_involution = 0.0;
    double max_self = 0.0;
    bool inside = true;
    for (int i = 0; i < pairs; ++i) {
      const BallPoint z = rng.point(n, 0.99);
      const BallPoint w = rng.point(n, 0.99);
      max_residual = std::max(max_residual, identity_residual(z, w));
      const BallPoint image = moebius_map(z, w);
      inside = inside && image.norm() < 1.0;
      const BallPoint back = moebius_map(z, image);
      for (int k = 0; k < n; ++k) {
        max_involution = std::max(max_involution, std::abs(back[k] - w[k]));
      }
      const BallPoint self = moebius_map(z, z);
      max_self = std::max(max_self, self.norm());
    }
    report.check(max_residual < 1e-12, "kernel identity residual < 1e-12, n=" + std::to_string(n));
    report.check(max_involution < 1e-12, "Moebius involution < 1e-12, n=" + std::to_string(n));
    report.check(inside, "Moebius image stays inside the ball, n=" + std::to_string(n));
    report.check(max_self < 1e-12, "phi_z(z) = 0, n=" + std::to_string(n));
  }
  return report.finish();
}

int suite_lemma_trans(const RunConfig& rc) {
  SuiteReport report;
  SuiteRng rng(rc.seed + 1);
  QuadratureConfig cfg;
  cfg.sample_count = rc.samples;
  cfg.seed = rc.seed;
  int in_band = 0, cells = 0;
  for (int n : {1, 2}) {
    for (int rep = 0; rep < 3; ++rep) {
      const BallPoint z = rng.point(n, 0.8);
      const double zsq = z.norm_sq();
      for (double a : {-2.0, -1.0, 0.0, 1.0, static_cast<double>(n)}) {
        auto lhs_f = [&](const BallPoint& w) {
          return Complex(std::pow(1.0 - zsq, a) *
                             std::pow(std::abs(1.0 - inner_product(z, w)), -(n + 1 + a)),
                         0.0);
        };
        auto rhs_f = [&](const BallPoint& w) {
          return Complex(std::pow(std::abs(1.0 - inner_product(z, w)), -(n + 1 - a)), 0.0);
        };
        auto pull_f = [&](const BallPoint& w) {
          return lhs_f(moebius_map(z, w)) * real_jacobian(z, w);
        };
        QuadratureConfig c2 = cfg;
        c2.seed = cfg.seed + 1;
        QuadratureConfig c3 = cfg;
        c3.seed = cfg.seed + 2;
        const IntegralEstimate lhs = integrate_v(lhs_f, n, cfg);
        const IntegralEstimate rhs = integrate_v(rhs_f, n, c2);
        const IntegralEstimate pull = integrate_v(pull_f, n, c3);
        const bool ok_lr = std::abs(lhs.real() - rhs.real()) <=
                           3.0 * (lhs.std_error() + rhs.std_error());
        const bool ok_lp = std::abs(lhs.real() - pull.real()) <=
                           3.0 * (lhs.std_error() + pull.std_error());
        cells += 2;
        in_band += ok_lr + ok_lp;
      }
    }
  }
  report.check(in_band >= static_cast<int>(0.95 * cells),
               "change-of-variables identity holds in >= 95% of sampled cells (" +
                   std::to_string(in_band) + "/" + std::to_string(cells) + ")");
  return report.finish();
}

int suite_hypergeometric(const RunConfig& rc) {
  SuiteReport report;
  report.check(std::abs(gauss_2f1(1.0, 1.0, 2.0, 0.5) - 2.0 * std::log(2.0)) < 1e-10,
               "2F1(1,1;2;1/2) = 2 ln 2");
  report.check(std::abs(gauss_2f1_at_one(0.5, 0.5, 2.0) - 4.0 / M_PI) < 1e-10,
               "2F1(1/2,1/2;2;1) = 4/pi");
  // Gauss summation against the J boundary value.
  bool gauss_ok = true;
  for (int n : {1, 2}) {
    for (double c : {-3.0, -2.0, -1.0, -0.5}) {
      for (double t : {0.0, 0.5}) {
        const double lam = 0.5 * (n + 1 + t + c);
        const std::vector<double> num{n + 1.0, t + 1.0};
        const std::vector<double> den{n + 1.0 + t};
        const double via_2f1 =
            gauss_2f1_at_one(lam, lam, n + 1 + t) * gamma_quotient(num, den);
        const double via_gamma = j_boundary(c, t, n);
        gauss_ok = gauss_ok && std::abs(via_2f1 - via_gamma) <= 1e-10 * via_gamma;
      }
    }
  }
  report.check(gauss_ok, "Gauss summation matches the J boundary Gamma formula");
  // Radial monotonicity.
  bool monotone = true;
  for (double c : {-3.0, -1.0, 1.0}) {
    double prev = -1.0;
    for (int i = 0; i < 100; ++i) {
      const double r = i / 100.0;
      const double v = j_closed_form(JIntegralSpec(1, c, 0.5, r));
      monotone = monotone && v >= prev - 1e-12;
      prev = v;
    }
  }
  report.check(monotone, "J is nondecreasing along the radius");
  // Series values approach the boundary limit under extrapolation.
  bool limits_ok = true;
  for (int n : {1, 2}) {
    for (double c : {-3.0, -2.0, -1.0}) {
      std::vector<std::pair<double, double>> samples;
      for (int k = 10; k <= 20; ++k) {
        const double x = 1.0 - std::ldexp(1.0, -k);
        const double lam = 0.5 * (n + 1 + c);
        samples.emplace_back(1.0 - x, gauss_2f1(lam, lam, n + 1.0, x));
      }
      const double extrapolated = limit_extrapolate(samples);
      const double exact = gauss_2f1_at_one(0.5 * (n + 1 + c), 0.5 * (n + 1 + c), n + 1.0);
      limits_ok = limits_ok && std::abs(extrapolated - exact) < 1e-6;
    }
  }
  report.check(limits_ok, "2F1 values extrapolate to the Gauss summation limit");
  return report.finish();
}

int suite_adjoint(const RunConfig& rc) {
  SuiteReport report;
  const std::int64_t outer_n = std::max<std::int64_t>(64, rc.samples / 1000);
  const std::int64_t inner_n = std::max<std::int64_t>(512, rc.samples / 100);
  for (double sigma : {0.0, 1.0}) {
    const ProjectionParams p{1, sigma};
    const MultiIndex alpha{{2}};
    const auto fs = admissible_test_family(1);
    const auto gs = bounded_test_family(1);
    for (std::size_t fi = 0; fi < 2; ++fi) {
      for (std::size_t gi = 0; gi < 2; ++gi) {
        const Integrand& f = fs[fi].fn;
        const Integrand& g = gs[gi].fn;
        // <Qf, g>_v : outer over z, inner over w.
        QuadratureConfig outer;
        outer.sample_count = outer_n;
        outer.seed = rc.seed;
        QuadratureConfig inner;
        inner.sample_count = inner_n;
        inner.seed = rc.seed + 7;
        PairingAccum lhs_acc;
        std::int64_t i = 0;
        sample_ball(1, outer, [&](const BallPoint& z, double weight) {
          QuadratureConfig ci = inner;
          ci.seed = mix_seed(inner.seed, static_cast<std::uint64_t>(i));
          const IntegralEstimate q = q_op(p, alpha, f, z, ci);
          lhs_acc.add(weight * q.value * std::conj(g(z)), weight * q.std_error());
          ++i;
        });
        // <f, Q*g>_lambda : outer over w with the dlambda weight.
        QuadratureConfig outer2 = outer;
        outer2.seed = rc.seed + 13;
        PairingAccum rhs_acc;
        std::int64_t j = 0;
        sample_ball(1, outer2, [&](const BallPoint& w, double weight) {
          QuadratureConfig cj = inner;
          cj.seed = mix_seed(inner.seed + 1, static_cast<std::uint64_t>(j));
          const IntegralEstimate q = q_conj(p, alpha, g, w, cj);
          const double lam_w = std::pow(1.0 - w.norm_sq(), -2.0);
          rhs_acc.add(weight * f(w) * std::conj(q.value) * lam_w,
                      weight * q.std_error() * std::abs(f(w)) * lam_w);
          ++j;
        });
        const Complex lhs = lhs_acc.mean();
        const Complex rhs = rhs_acc.mean();
        const double band = 3.0 * (lhs_acc.combined_error() + rhs_acc.combined_error());
        report.check(std::abs(lhs - rhs) <= band,
                     "duality <Qf,g>_v = <f,Q*g>_lambda for f=" + fs[fi].name +
                         ", g=" + gs[gi].name + ", sigma=" + format_sig(sigma, 3));
      }
    }
  }
  // Derivative identity: q_op matches finite differences of project.
  {
    const ProjectionParams p{1, 0.0};
    const MultiIndex alpha{{2}};
    auto f = [](const BallPoint& w) { return Complex(1.0 - w.norm_sq(), 0.0); };
    QuadratureConfig cfg;
    cfg.sample_count = std::max<std::int64_t>(rc.samples, 100'000);
    cfg.seed = rc.seed;
    const double h = 1e-3;
    const double z0 = 0.3;
    auto pr = [&](double zr) {
      return project(p, f, BallPoint::radial(1, zr), cfg).value;
    };
    const Complex fd = (pr(z0 + h) - 2.0 * pr(z0) + pr(z0 - h)) / (h * h);
    const Complex q = q_op(p, alpha, f, BallPoint::radial(1, z0), cfg).value;
    report.check(std::abs(fd - q) <= 1e-3 * std::abs(q),
                 "q_op equals the second finite difference of project (common random numbers)");
  }
  return report.finish();
}

int suite_inequality(const RunConfig& rc) {
  SuiteReport report;
  const ProjectionParams p{1, 0.0};
  QuadratureConfig outer;
  outer.sample_count = std::max<std::int64_t>(200, rc.samples / 500);
  outer.seed = rc.seed;
  QuadratureConfig inner;
  inner.sample_count = std::max<std::int64_t>(2'000, rc.samples / 50);
  inner.seed = rc.seed + 3;
  for (const SpotCheck& sc : inequality_spotcheck(p, outer, inner)) {
    report.check(sc.ok, "besov_seminorm <= C * l1_lambda_norm for f = " + sc.name +
                            " (margin " + format_sig(sc.margin, 4) + ")");
  }
  return report.finish();
}

}  // namespace

int cmd_check(const RunConfig& rc) {
  if (rc.suite == "identities") return suite_identities(rc);
  if (rc.suite == "lemma-trans") return suite_lemma_trans(rc);
  if (rc.suite == "hypergeometric") return suite_hypergeometric(rc);
  if (rc.suite == "adjoint") return suite_adjoint(rc);
  if (rc.suite == "inequality") return suite_inequality(rc);
  std::cerr << "unknown suite: " << rc.suite
            << " (expected identities, lemma-trans, hypergeometric, adjoint, inequality)\n";
  return kExitUsage;
}

}  // namespace bergman::cli
