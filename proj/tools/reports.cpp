#include "reports.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "bergman/errors.hpp"

namespace bergman::cli {

namespace {

std::string csv_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

int write_output(const RunConfig& rc, const std::string& text) {
  if (rc.output == "-" || rc.output.empty()) {
    std::cout << text;
    return kExitPass;
  }
  std::ofstream out(rc.output);
  if (!out) {
    std::cerr << "error: cannot open output file " << rc.output << "\n";
    return kExitIo;
  }
  out << text;
  if (!out.good()) {
    std::cerr << "error: write failed for " << rc.output << "\n";
    return kExitIo;
  }
  return kExitPass;
}

void resolve_schedules(RunConfig& rc, bool bounded) {
  if (rc.eps_list.empty()) {
    rc.eps_list = default_eps_schedule(bounded ? 12 : 20);
  }
  if (rc.radius_grid.empty()) {
    rc.radius_grid = default_radius_grid();
  }
}

}  // namespace

std::string format_sig(double x, int digits) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return buf;
}

nlohmann::json config_json(const RunConfig& rc) {
  return nlohmann::json{{"command", rc.command},
                        {"n", rc.n},
                        {"sigma", rc.sigma},
                        {"samples", rc.samples},
                        {"seed", rc.seed},
                        {"chunk_size", rc.chunk_size},
                        {"eps", rc.eps_list},
                        {"radii", rc.radius_grid},
                        {"format", rc.format},
                        {"output", rc.output}};
}

QuadratureConfig quadrature_config(const RunConfig& rc) {
  QuadratureConfig cfg;
  cfg.sample_count = rc.samples;
  cfg.seed = rc.seed;
  cfg.chunk_size = rc.chunk_size;
  return cfg;
}

nlohmann::json certificate_json(const NormCertificate& cert, const RunConfig& rc) {
  nlohmann::json upper = nlohmann::json::array();
  for (const auto& [r, bound] : cert.upper_evidence) {
    upper.push_back({{"r", r}, {"bound", bound}});
  }
  nlohmann::json lower = nlohmann::json::array();
  for (const LowerBoundPoint& pt : cert.lower_evidence) {
    lower.push_back({{"eps", pt.eps},
                     {"numeric", pt.numeric},
                     {"std_error", pt.std_error},
                     {"closed", pt.closed}});
  }
  nlohmann::json divergence = nlohmann::json::array();
  for (const auto& [eps, j] : cert.divergence_evidence) {
    divergence.push_back({{"eps", eps}, {"J", j}});
  }
  const auto now = std::chrono::system_clock::now();
  return nlohmann::json{
      {"schema", "bergman-cert/1"},
      {"timestamp",
       std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count()},
      {"config", config_json(rc)},
      {"closed_form", cert.closed_form},
      {"boundary_limit", cert.boundary_limit},
      {"upper", upper},
      {"lower", lower},
      {"divergence", divergence},
      {"verdict", cert.verdict()},
      {"failures", cert.failures},
      {"tolerances", {{"gamma_rel", cert.gamma_rel_tol}, {"mc_band", cert.mc_band}}}};
}

int cmd_constant(const RunConfig& rc) {
  const ProjectionParams p{rc.n, rc.sigma};
  if (!p.bounded()) {
    if (!rc.allow_unbounded) {
      std::cerr << "unbounded: sigma <= -(n+1)\n";
      return kExitUsage;
    }
    std::cout << "n=" << rc.n << " sigma=" << format_sig(rc.sigma, 12)
              << " mu=" << format_sig(p.mu(), 12) << " C=unbounded\n";
    return kExitPass;
  }
  const double c = closed_constant(p);
  if (rc.format == "csv") {
    std::string text = "n,sigma,mu,C\n";
    text += std::to_string(rc.n) + "," + csv_number(rc.sigma) + "," +
            csv_number(p.mu()) + "," + format_sig(c, 12) + "\n";
    return write_output(rc, text);
  }
  std::cout << "n=" << rc.n << " sigma=" << format_sig(rc.sigma, 12)
            << " mu=" << format_sig(p.mu(), 12) << " C=" << format_sig(c, 12) << "\n";
  return kExitPass;
}

int cmd_certify(RunConfig rc) {
  const ProjectionParams p{rc.n, rc.sigma};
  resolve_schedules(rc, p.bounded());
  const NormCertificate cert =
      certify(p, quadrature_config(rc), rc.eps_list, rc.radius_grid);
  const nlohmann::json doc = certificate_json(cert, rc);
  const int io = write_output(rc, doc.dump(2) + "\n");
  if (io != kExitPass) return io;
  if (cert.pass) return kExitPass;
  return kExitFail;
}

int cmd_sweep(RunConfig rc) {
  const ProjectionParams p{rc.n, rc.sigma};
  if (!p.bounded()) {
    std::cerr << "unbounded: sigma <= -(n+1); use certify for the divergence probe\n";
    return kExitUsage;
  }
  resolve_schedules(rc, true);
  const auto sweep = lower_bound_sweep(p, rc.eps_list, quadrature_config(rc));
  if (rc.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const LowerBoundPoint& pt : sweep) {
      rows.push_back({{"eps", pt.eps},
                      {"numeric", pt.numeric},
                      {"std_error", pt.std_error},
                      {"closed", pt.closed}});
    }
    nlohmann::json doc{{"config", config_json(rc)}, {"sweep", rows}};
    return write_output(rc, doc.dump(2) + "\n");
  }
  std::string text = "eps,numeric,std_error,closed\n";
  for (const LowerBoundPoint& pt : sweep) {
    text += csv_number(pt.eps) + "," + csv_number(pt.numeric) + "," +
            csv_number(pt.std_error) + "," + csv_number(pt.closed) + "\n";
  }
  return write_output(rc, text);
}

int cmd_table(const RunConfig& rc) {
  if (rc.sigma_list.empty()) {
    std::cerr << "usage: table requires at least one --sigma value\n";
    return kExitUsage;
  }
  const int n_hi = rc.n_max >= rc.n ? rc.n_max : rc.n;
  std::string text = "n,sigma,mu,C_closed,C_sigma0_factorial_check\n";
  for (int n = rc.n; n <= n_hi; ++n) {
    for (double sigma : rc.sigma_list) {
      const ProjectionParams p{n, sigma};
      text += std::to_string(n) + "," + csv_number(sigma) + "," + csv_number(p.mu()) + ",";
      if (!p.bounded()) {
        text += "unbounded,\n";
        continue;
      }
      text += format_sig(closed_constant(p), 12) + ",";
      if (sigma == 0.0) {
        // (2n+1)!/n! by exact factorial arithmetic
        double check = 1.0;
        for (int k = n + 1; k <= 2 * n + 1; ++k) check *= k;
        text += format_sig(check, 12);
      }
      text += "\n";
    }
  }
  return write_output(rc, text);
}

}  // namespace bergman::cli
