#include "bergman/quadrature.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "bergman/errors.hpp"

namespace bergman {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based stream: one instance per (seed, chunk).
class ChunkRng {
 public:
  ChunkRng(std::uint64_t seed, std::uint64_t chunk) {
    state_ = seed;
    splitmix64(state_);
    state_ ^= (chunk + 1) * 0xd1342543de82ef95ULL;
    splitmix64(state_);
  }

  double uniform() {  // (0, 1]
    return static_cast<double>((splitmix64(state_) >> 11) + 1) * 0x1.0p-53;
  }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    has_spare_ = true;
    return r * std::cos(2.0 * kPi * u2);
  }

  // Marsaglia-Tsang, with the shape boost for shape < 1.
  double gamma(double shape) {
    if (shape < 1.0) {
      return gamma(shape + 1.0) * std::pow(uniform(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  double beta(double a, double b) {
    const double x = gamma(a);
    const double y = gamma(b);
    return x / (x + y);
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

struct SamplePlan {
  int n;
  double t_imp;
  double weight_scale;  // n * B(n, t_imp + 1); exactly 1 normalization
};

SamplePlan make_plan(int n, const QuadratureConfig& cfg) {
  if (n < 1) throw std::invalid_argument("quadrature: n must be >= 1");
  if (cfg.sample_count < 1 || cfg.chunk_size < 1) {
    throw std::invalid_argument("quadrature: sample_count and chunk_size must be >= 1");
  }
  if (!(cfg.radial_bias > -1.0)) {
    throw std::domain_error("quadrature: radial_bias must exceed -1");
  }
  SamplePlan plan{n, cfg.radial_bias, 1.0};
  if (cfg.radial_bias != 0.0) {
    const std::array<double, 2> num{static_cast<double>(n), cfg.radial_bias + 1.0};
    const std::array<double, 1> den{n + cfg.radial_bias + 1.0};
    plan.weight_scale = n * gamma_quotient(num, den);
  }
  return plan;
}

BallPoint draw_point(const SamplePlan& plan, ChunkRng& rng, double& weight) {
  const int n = plan.n;
  std::vector<Complex> coords(static_cast<std::size_t>(n));
  double norm_sq = 0.0;
  do {
    norm_sq = 0.0;
    for (int k = 0; k < n; ++k) {
      coords[k] = Complex(rng.normal(), rng.normal());
      norm_sq += std::norm(coords[k]);
    }
  } while (norm_sq == 0.0);
  const double u = rng.beta(static_cast<double>(n), plan.t_imp + 1.0);
  const double scale = std::sqrt(u / norm_sq);
  for (Complex& ck : coords) ck *= scale;
  weight = (plan.t_imp == 0.0)
               ? 1.0
               : plan.weight_scale * std::pow(1.0 - u, -plan.t_imp);
  return BallPoint(std::move(coords));
}

int worker_count(std::int64_t chunks) {
  int workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (const char* env = std::getenv("BERGMAN_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) workers = cap;
  }
  if (static_cast<std::int64_t>(workers) > chunks) workers = static_cast<int>(chunks);
  return workers;
}

struct ChunkAccum {
  double sum_re = 0.0, sum_im = 0.0;
  double sq_re = 0.0, sq_im = 0.0;
  double abs_sum = 0.0, abs_max = 0.0;
};

[[noreturn]] void bad_sample(const BallPoint& p, const Complex& v) {
  std::ostringstream os;
  os << "integrate: non-finite integrand value (" << v.real() << ", " << v.imag()
     << ") at point (";
  for (int k = 0; k < p.dim(); ++k) {
    os << "(" << p[k].real() << "," << p[k].imag() << ")";
    if (k + 1 < p.dim()) os << ", ";
  }
  os << ")";
  throw NumericError(os.str());
}

IntegralEstimate integrate_impl(const Integrand& f, int n, const QuadratureConfig& cfg,
                                bool tail_check) {
  const SamplePlan plan = make_plan(n, cfg);
  const std::int64_t N = cfg.sample_count;
  const std::int64_t chunks = (N + cfg.chunk_size - 1) / cfg.chunk_size;
  std::vector<ChunkAccum> acc(static_cast<std::size_t>(chunks));

  std::atomic<std::int64_t> next_chunk{0};
  std::mutex err_mutex;
  std::exception_ptr first_error;

  auto work = [&]() {
    try {
      for (;;) {
        const std::int64_t c = next_chunk.fetch_add(1);
        if (c >= chunks) break;
        ChunkRng rng(cfg.seed, static_cast<std::uint64_t>(c));
        const std::int64_t count = std::min(cfg.chunk_size, N - c * cfg.chunk_size);
        ChunkAccum a;
        for (std::int64_t i = 0; i < count; ++i) {
          double weight = 0.0;
          const BallPoint p = draw_point(plan, rng, weight);
          const Complex v = f(p) * weight;
          if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) bad_sample(p, v);
          a.sum_re += v.real();
          a.sum_im += v.imag();
          a.sq_re += v.real() * v.real();
          a.sq_im += v.imag() * v.imag();
          const double av = std::abs(v);
          a.abs_sum += av;
          if (av > a.abs_max) a.abs_max = av;
        }
        acc[static_cast<std::size_t>(c)] = a;
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(err_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  const int workers = worker_count(chunks);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  ChunkAccum total;
  for (const ChunkAccum& a : acc) {
    total.sum_re += a.sum_re;
    total.sum_im += a.sum_im;
    total.sq_re += a.sq_re;
    total.sq_im += a.sq_im;
    total.abs_sum += a.abs_sum;
    if (a.abs_max > total.abs_max) total.abs_max = a.abs_max;
  }

  if (tail_check && N >= 1000 && total.abs_max > 0.5 * total.abs_sum) {
    throw NumericError(
        "integrate_lambda: a single sample dominates the sum; the integrand "
        "is not admissible against dlambda at this sampling bias");
  }

  IntegralEstimate est;
  est.n_samples = N;
  const double nd = static_cast<double>(N);
  est.value = Complex(total.sum_re / nd, total.sum_im / nd);
  if (N > 1) {
    const double var_re =
        std::max(0.0, (total.sq_re - total.sum_re * total.sum_re / nd) / (nd - 1.0));
    const double var_im =
        std::max(0.0, (total.sq_im - total.sum_im * total.sum_im / nd) / (nd - 1.0));
    est.std_error_re = std::sqrt(var_re / nd);
    est.std_error_im = std::sqrt(var_im / nd);
  }
  return est;
}

}  // namespace

double IntegralEstimate::std_error() const {
  return std::hypot(std_error_re, std_error_im);
}

void sample_ball(int n, const QuadratureConfig& cfg,
                 const std::function<void(const BallPoint&, double)>& visit) {
  const SamplePlan plan = make_plan(n, cfg);
  const std::int64_t N = cfg.sample_count;
  const std::int64_t chunks = (N + cfg.chunk_size - 1) / cfg.chunk_size;
  for (std::int64_t c = 0; c < chunks; ++c) {
    ChunkRng rng(cfg.seed, static_cast<std::uint64_t>(c));
    const std::int64_t count = std::min(cfg.chunk_size, N - c * cfg.chunk_size);
    for (std::int64_t i = 0; i < count; ++i) {
      double weight = 0.0;
      const BallPoint p = draw_point(plan, rng, weight);
      visit(p, weight);
    }
  }
}

IntegralEstimate integrate_v(const Integrand& f, int n, const QuadratureConfig& cfg) {
  return integrate_impl(f, n, cfg, /*tail_check=*/false);
}

IntegralEstimate integrate_lambda(const Integrand& f, int n, const QuadratureConfig& cfg) {
  const double expo = -(n + 1.0);
  auto g = [&f, expo](const BallPoint& w) {
    return f(w) * std::pow(1.0 - w.norm_sq(), expo);
  };
  return integrate_impl(g, n, cfg, /*tail_check=*/true);
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[static_cast<std::size_t>(i)] = -x;
    nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[static_cast<std::size_t>(i)] = w;
    weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
}

double integrate_radial(const std::function<double(double)>& g, int n, int node_count) {
  if (n < 1) throw std::invalid_argument("integrate_radial: n must be >= 1");
  std::vector<double> nodes, weights;
  gauss_legendre(node_count, nodes, weights);
  double sum = 0.0;
  for (int i = 0; i < node_count; ++i) {
    const double u = 0.5 * (nodes[static_cast<std::size_t>(i)] + 1.0);
    const double gu = g(u);
    if (!std::isfinite(gu)) {
      std::ostringstream os;
      os << "integrate_radial: non-finite value at node u=" << u;
      throw NumericError(os.str());
    }
    sum += weights[static_cast<std::size_t>(i)] * std::pow(u, n - 1) * gu;
  }
  return 0.5 * n * sum;
}

IntegralEstimate j_numeric(const JIntegralSpec& spec, QuadratureConfig cfg) {
  return j_numeric_at(BallPoint::radial(spec.n, spec.r), spec.c, spec.t, cfg);
}

IntegralEstimate j_numeric_at(const BallPoint& z, double c, double t, QuadratureConfig cfg) {
  if (!(t > -1.0)) throw std::domain_error("j_numeric: requires t > -1");
  if (z.norm_sq() >= 1.0) throw std::domain_error("j_numeric: requires |z| < 1");
  const int n = z.dim();
  const double expo = -(n + 1 + t + c);
  cfg.radial_bias = std::min(t, 0.0);
  auto f = [&z, t, expo](const BallPoint& w) {
    const double d = std::abs(1.0 - inner_product(z, w));
    return Complex(std::pow(1.0 - w.norm_sq(), t) * std::pow(d, expo), 0.0);
  };
  return integrate_v(f, n, cfg);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t s = seed ^ (0x6a09e667f3bcc909ULL + stream * 0x9e3779b97f4a7c15ULL);
  splitmix64(s);
  return splitmix64(s);
}

}  // namespace bergman
