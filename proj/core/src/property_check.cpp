#include "conejsr/property_check.hpp"

#include <cmath>
#include <sstream>

namespace conejsr {

std::uint64_t split_next(std::uint64_t& state) {
  // splitmix64
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform01(std::uint64_t& state) {
  return static_cast<double>(split_next(state) >> 11) * 0x1.0p-53;
}

namespace {

double log_uniform(std::uint64_t& state, double lo, double hi) {
  const double t = uniform01(state);
  return std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)));
}

std::string brief(std::span<const double> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ')';
  return os.str();
}

// a <= b coordinatewise within relative slack; returns offending index or -1.
std::ptrdiff_t leq_violation(std::span<const double> a, std::span<const double> b,
                             double rel) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double tol = rel * std::max({std::abs(a[i]), std::abs(b[i]), 1.0});
    if (a[i] > b[i] + tol) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

}  // namespace

PointVec sample_cone_point(std::size_t dim, std::uint64_t& state, const CheckConfig& cfg) {
  std::vector<double> c(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (uniform01(state) < cfg.boundary_prob) {
      c[i] = 0.0;
    } else {
      c[i] = log_uniform(state, cfg.mag_lo, cfg.mag_hi);
    }
  }
  return PointVec(std::move(c));
}

PropertyReport check_properties(const MapExpr& f, std::size_t samples, std::uint64_t seed) {
  CheckConfig cfg;
  cfg.samples = samples;
  cfg.seed = seed;
  return check_properties(f, cfg);
}

PropertyReport check_properties(const MapExpr& f, const CheckConfig& cfg) {
  PropertyReport report;
  std::uint64_t state = cfg.seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL;
  const std::size_t dim = f.in_dim();

  for (std::size_t s = 0; s < cfg.samples; ++s) {
    ++report.samples_run;
    const PointVec x = sample_cone_point(dim, state, cfg);

    // y dominates x coordinatewise.
    std::vector<double> yc(x.coords());
    for (double& v : yc) v += log_uniform(state, cfg.mag_lo, cfg.mag_hi) * uniform01(state);
    const PointVec y{std::move(yc)};

    const auto fx = f.eval_raw(x.span());
    const auto fy = f.eval_raw(y.span());

    for (std::size_t i = 0; i < fx.size(); ++i) {
      if (fx[i] < 0.0 || fy[i] < 0.0) {
        report.violations.push_back(
            {"cone-membership", "f" + brief(x.span()) + " = " + brief(fx)});
        break;
      }
    }

    if (auto i = leq_violation(fx, fy, cfg.rel_slack); i >= 0) {
      report.violations.push_back(
          {"order-preservation", "x = " + brief(x.span()) + ", y = " + brief(y.span()) +
                                     ": f(x)[" + std::to_string(i) + "] = " +
                                     std::to_string(fx[i]) + " > f(y)[" +
                                     std::to_string(i) + "] = " + std::to_string(fy[i])});
    }

    const double lambda = log_uniform(state, 1.0, cfg.mag_hi);
    std::vector<double> lx(x.coords());
    for (double& v : lx) v *= lambda;
    const auto flx = f.eval_raw(lx);

    if (f.subhomogeneous()) {
      std::vector<double> bound(fx);
      for (double& v : bound) v *= lambda;
      if (auto i = leq_violation(flx, bound, cfg.rel_slack); i >= 0) {
        report.violations.push_back(
            {"subhomogeneity", "x = " + brief(x.span()) + ", lambda = " +
                                   std::to_string(lambda) + ", coordinate " +
                                   std::to_string(i)});
      }
    }

    if (f.degree()) {
      const double factor = std::pow(lambda, *f.degree());
      for (std::size_t i = 0; i < flx.size(); ++i) {
        const double expect = factor * fx[i];
        const double tol = cfg.rel_slack * std::max({std::abs(flx[i]), std::abs(expect), 1.0});
        if (std::abs(flx[i] - expect) > tol) {
          report.violations.push_back(
              {"homogeneity-degree", "x = " + brief(x.span()) + ", lambda = " +
                                         std::to_string(lambda) + ", coordinate " +
                                         std::to_string(i)});
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace conejsr
