#include "bergman/certify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bergman/errors.hpp"

namespace bergman {

namespace {

void require_bounded(const ProjectionParams& p, const char* who) {
  if (!p.bounded()) {
    throw DivergenceError(std::string(who) +
                          ": operator is unbounded for sigma <= -(n+1)");
  }
}

MultiIndex witness_alpha(int n) {
  // z = eps e1 annihilates z^alpha for every alpha except (n+1, 0, ..., 0).
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e[0] = n + 1;
  return MultiIndex{std::move(e)};
}

}  // namespace

double closed_constant(const ProjectionParams& p) {
  require_bounded(p, "closed_constant");
  const double mu = p.mu();
  return std::exp(log_gamma(p.n + 1.0) + log_gamma(p.n + 1 + mu) -
                  2.0 * log_gamma(0.5 * (p.n + 1 + mu)));
}

std::vector<std::pair<double, double>> upper_bound_profile(
    const ProjectionParams& p, std::span<const double> radius_grid) {
  require_bounded(p, "upper_bound_profile");
  const double pref = q_prefactor(p);
  std::vector<std::pair<double, double>> out;
  out.reserve(radius_grid.size());
  for (double r : radius_grid) {
    const JIntegralSpec spec(p.n, -p.mu(), 0.0, r);
    out.emplace_back(r, pref * j_closed_form(spec));
  }
  return out;
}

double upper_bound_limit(const ProjectionParams& p) {
  require_bounded(p, "upper_bound_limit");
  return q_prefactor(p) * j_boundary(-p.mu(), 0.0, p.n);
}

std::vector<LowerBoundPoint> lower_bound_sweep(const ProjectionParams& p,
                                               std::span<const double> eps_list,
                                               const QuadratureConfig& cfg) {
  require_bounded(p, "lower_bound_sweep");
  const double pref = q_prefactor(p);
  const MultiIndex alpha = witness_alpha(p.n);
  std::vector<LowerBoundPoint> out;
  out.reserve(eps_list.size());
  for (double eps : eps_list) {
    const ExtremalFunction g = extremal_g(p, eps);
    const BallPoint z = BallPoint::radial(p.n, eps);
    const IntegralEstimate est = q_conj(p, alpha, g.as_integrand(), z, cfg);
    LowerBoundPoint pt;
    pt.eps = eps;
    pt.numeric = std::abs(est.value);
    pt.std_error = est.std_error();
    pt.closed = pref * std::pow(eps, p.n + 1) *
                j_closed_form(JIntegralSpec(p.n, -p.mu(), 0.0, eps));
    out.push_back(pt);
  }
  return out;
}

std::vector<std::pair<double, double>> divergence_probe(
    const ProjectionParams& p, std::span<const double> eps_list) {
  if (p.bounded()) {
    throw std::domain_error("divergence_probe: requires sigma <= -(n+1)");
  }
  std::vector<std::pair<double, double>> out;
  out.reserve(eps_list.size());
  for (double eps : eps_list) {
    out.emplace_back(eps, j_closed_form(JIntegralSpec(p.n, -p.mu(), 0.0, eps)));
  }
  return out;
}

std::vector<double> default_eps_schedule(int k_max) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) out.push_back(1.0 - std::ldexp(1.0, -k));
  return out;
}

std::vector<double> default_radius_grid() {
  std::vector<double> out;
  for (int i = 0; i <= 9; ++i) out.push_back(0.1 * i);
  out.push_back(0.99);
  return out;
}

std::string NormCertificate::verdict() const {
  if (unbounded) return pass ? "unbounded" : "fail";
  return pass ? "pass" : "fail";
}

NormCertificate certify(const ProjectionParams& p, const QuadratureConfig& cfg,
                        std::span<const double> eps_list,
                        std::span<const double> radius_grid) {
  NormCertificate cert;
  cert.params = p;
  cert.config = cfg;
  cert.eps_list.assign(eps_list.begin(), eps_list.end());
  cert.radius_grid.assign(radius_grid.begin(), radius_grid.end());
  cert.unbounded = !p.bounded();
  auto fail = [&cert](const std::string& msg) { cert.failures.push_back(msg); };

  try {
    if (cert.unbounded) {
      cert.divergence_evidence = divergence_probe(p, eps_list);
      const auto& d = cert.divergence_evidence;
      for (std::size_t i = 1; i < d.size(); ++i) {
        if (!(d[i].second > d[i - 1].second)) {
          std::ostringstream os;
          os << "divergence evidence not strictly increasing at eps=" << d[i].first;
          fail(os.str());
          break;
        }
      }
      // Growth against the eps = 0.5 baseline (the first schedule point).
      if (d.size() >= 2) {
        const double baseline = d.front().second;
        if (!(d.back().second > 10.0 * baseline)) {
          fail("divergence evidence did not exceed 10x its baseline");
        }
      } else {
        fail("divergence probe needs at least two epsilon values");
      }
    } else {
      cert.closed_form = closed_constant(p);
      cert.upper_evidence = upper_bound_profile(p, radius_grid);
      cert.boundary_limit = upper_bound_limit(p);
      cert.lower_evidence = lower_bound_sweep(p, eps_list, cfg);

      const double c = cert.closed_form;
      double sup = 0.0;
      for (const auto& [r, bound] : cert.upper_evidence) sup = std::max(sup, bound);
      if (!(sup <= c * (1.0 + cert.gamma_rel_tol))) {
        fail("upper-bound profile exceeds the closed-form constant");
      }
      for (std::size_t i = 1; i < cert.upper_evidence.size(); ++i) {
        if (cert.upper_evidence[i].second <
            cert.upper_evidence[i - 1].second * (1.0 - cert.gamma_rel_tol)) {
          fail("upper-bound profile is not nondecreasing");
          break;
        }
      }
      if (std::abs(cert.boundary_limit - c) > cert.gamma_rel_tol * c) {
        fail("boundary limit of the bound profile does not match the constant");
      }
      for (std::size_t i = 0; i < cert.lower_evidence.size(); ++i) {
        const LowerBoundPoint& pt = cert.lower_evidence[i];
        if (std::abs(pt.numeric - pt.closed) > cert.mc_band * pt.std_error) {
          std::ostringstream os;
          os << "lower-bound numeric at eps=" << pt.eps
             << " misses its closed form beyond " << cert.mc_band << " std errors";
          fail(os.str());
        }
        if (!(pt.closed <= c * (1.0 + cert.gamma_rel_tol))) {
          std::ostringstream os;
          os << "lower-bound closed value at eps=" << pt.eps
             << " exceeds the constant";
          fail(os.str());
        }
        if (i > 0 && pt.closed <
                         cert.lower_evidence[i - 1].closed * (1.0 - cert.gamma_rel_tol)) {
          fail("lower-bound closed values are not nondecreasing in eps");
        }
      }
    }
  } catch (const std::exception& e) {
    fail(std::string("sub-operation failed: ") + e.what());
  }

  cert.pass = cert.failures.empty();
  return cert;
}

std::vector<SpotCheck> inequality_spotcheck(const ProjectionParams& p,
                                            const QuadratureConfig& cfg_outer,
                                            const QuadratureConfig& cfg_inner) {
  if (!(p.sigma > -1.0)) {
    throw std::domain_error(
        "inequality_spotcheck: shipped family requires sigma > -1");
  }
  const double c = closed_constant(p);
  std::vector<SpotCheck> out;
  for (const NamedIntegrand& f : admissible_test_family(p.n)) {
    SpotCheck sc;
    sc.name = f.name;
    const SeminormEstimate lhs = besov_seminorm(p, f.fn, cfg_outer, cfg_inner);
    const IntegralEstimate rhs = l1_lambda_norm(f.fn, p.n, cfg_outer);
    sc.lhs = lhs.value;
    sc.lhs_err = lhs.std_error;
    sc.rhs = c * rhs.real();
    sc.rhs_err = c * rhs.std_error();
    const double band = 3.0 * (sc.lhs_err + sc.rhs_err);
    sc.margin = sc.rhs + band - sc.lhs;
    sc.ok = sc.margin >= 0.0;
    out.push_back(std::move(sc));
  }
  return out;
}

}  // namespace bergman
