#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bergman/certify.hpp"
#include "json.hpp"

namespace bergman::cli {

// Exit-code vocabulary, fixed for CI integration.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

struct RunConfig {
  std::string command;
  int n = 1;
  int n_max = -1;  // table: inclusive upper end of the n range
  double sigma = 0.0;
  std::vector<double> sigma_list;
  std::int64_t samples = 100'000;
  std::uint64_t seed = 42;
  std::int64_t chunk_size = 16'384;
  std::vector<double> eps_list;    // empty: default schedule
  std::vector<double> radius_grid; // empty: default grid
  std::string output = "-";
  std::string format = "text";     // text | csv | json
  bool allow_unbounded = false;
  std::string suite;
};

// Fully resolved config (no defaults omitted), embedded in every report.
nlohmann::json config_json(const RunConfig& rc);

nlohmann::json certificate_json(const NormCertificate& cert, const RunConfig& rc);

// Value with a fixed number of significant digits, locale-independent.
std::string format_sig(double x, int digits);

QuadratureConfig quadrature_config(const RunConfig& rc);

int cmd_constant(const RunConfig& rc);
int cmd_certify(RunConfig rc);
int cmd_sweep(RunConfig rc);
int cmd_table(const RunConfig& rc);
int cmd_check(const RunConfig& rc);

}  // namespace bergman::cli
