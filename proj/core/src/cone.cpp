#include "conejsr/cone.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

namespace conejsr {

namespace {

std::string shortest_repr(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void require_same_dim(const PointVec& x, const PointVec& y, const char* op) {
  if (x.dim() != y.dim()) {
    throw DimensionMismatch(std::string(op) + ": dimensions " +
                            std::to_string(x.dim()) + " and " +
                            std::to_string(y.dim()) + " differ");
  }
}

bool same_support(const PointVec& x, const PointVec& y) {
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if ((x[i] > 0.0) != (y[i] > 0.0)) return false;
  }
  return true;
}

}  // namespace

ExtendedRatio ExtendedRatio::finite(double v) {
  if (!(v >= 0.0)) {
    throw InvalidValue("ExtendedRatio must be nonnegative, got " + shortest_repr(v));
  }
  if (std::isinf(v)) return infinity();
  ExtendedRatio r;
  r.value_ = v;
  return r;
}

ExtendedRatio ExtendedRatio::infinity() {
  ExtendedRatio r;
  r.infinite_ = true;
  return r;
}

double ExtendedRatio::value() const {
  if (infinite_) throw InvalidValue("ExtendedRatio is infinite");
  return value_;
}

std::string ExtendedRatio::str() const {
  return infinite_ ? std::string("inf") : shortest_repr(value_);
}

PointVec::PointVec(std::vector<double> coords) : coords_(std::move(coords)) {
  for (double c : coords_) {
    if (std::isnan(c) || c < 0.0) {
      throw InvalidValue("PointVec coordinate outside the cone: " + shortest_repr(c));
    }
  }
}

PointVec PointVec::zero(std::size_t dim) { return PointVec(std::vector<double>(dim, 0.0)); }

PointVec PointVec::ones(std::size_t dim) { return PointVec(std::vector<double>(dim, 1.0)); }

bool PointVec::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](double c) { return c == 0.0; });
}

bool PointVec::interior() const noexcept {
  return !coords_.empty() &&
         std::all_of(coords_.begin(), coords_.end(), [](double c) { return c > 0.0; });
}

double PointVec::min_coord() const {
  if (coords_.empty()) throw InvalidValue("min_coord of empty vector");
  return *std::min_element(coords_.begin(), coords_.end());
}

double PointVec::max_coord() const {
  if (coords_.empty()) throw InvalidValue("max_coord of empty vector");
  return *std::max_element(coords_.begin(), coords_.end());
}

PointVec add(const PointVec& a, const PointVec& b) {
  require_same_dim(a, b, "add");
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] + b[i];
  return PointVec(std::move(out));
}

PointVec scale(double c, const PointVec& a) {
  if (c < 0.0) throw InvalidValue("scale factor must be nonnegative");
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = c * a[i];
  return PointVec(std::move(out));
}

bool cone_leq(const PointVec& x, const PointVec& y, double rel_slack, double abs_slack) {
  require_same_dim(x, y, "cone_leq");
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const double tol = rel_slack * std::max(std::abs(x[i]), std::abs(y[i])) + abs_slack;
    if (x[i] > y[i] + tol) return false;
  }
  return true;
}

ConeContext ConeContext::standard(std::size_t dim) {
  ConeContext ctx;
  ctx.dim = dim;
  ctx.psi_weights.assign(dim, 1.0);
  ctx.unit_u = PointVec::ones(dim);
  ctx.validate();
  return ctx;
}

ConeContext ConeContext::with_weights(std::vector<double> weights, PointVec unit) {
  ConeContext ctx;
  ctx.dim = weights.size();
  ctx.psi_weights = std::move(weights);
  ctx.unit_u = std::move(unit);
  ctx.validate();
  return ctx;
}

double ConeContext::psi(const PointVec& x) const {
  if (x.dim() != dim) throw DimensionMismatch("psi: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < dim; ++i) s += psi_weights[i] * x[i];
  return s;
}

void ConeContext::validate() const {
  if (dim == 0) throw InvalidValue("ConeContext dimension must be positive");
  if (psi_weights.size() != dim || unit_u.dim() != dim) {
    throw DimensionMismatch("ConeContext fields disagree on dimension");
  }
  for (double w : psi_weights) {
    if (!(w > 0.0)) throw InvalidValue("psi weights must be strictly positive");
  }
  if (!unit_u.interior()) throw InvalidValue("unit u must be interior");
  if (!(psi(unit_u) > 0.0)) throw InvalidValue("psi(u) must be positive");
}

ExtendedRatio dominance_upper(const PointVec& x, const PointVec& y) {
  require_same_dim(x, y, "dominance_upper");
  double best = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (y[i] == 0.0) {
      if (x[i] > 0.0) return ExtendedRatio::infinity();
      continue;  // 0/0 carries no constraint
    }
    const double q = x[i] / y[i];
    if (!std::isfinite(q)) return ExtendedRatio::infinity();
    best = std::max(best, q);
  }
  return ExtendedRatio::finite(best);
}

ExtendedRatio dominance_lower(const PointVec& x, const PointVec& y) {
  require_same_dim(x, y, "dominance_lower");
  double best = std::numeric_limits<double>::max();
  bool constrained = false;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (y[i] == 0.0) continue;  // alpha * 0 <= x_i always holds
    constrained = true;
    const double q = x[i] / y[i];
    if (!std::isfinite(q)) return ExtendedRatio::infinity();
    best = std::min(best, q);
  }
  if (!constrained) return ExtendedRatio::infinity();
  return ExtendedRatio::finite(best);
}

ExtendedRatio thompson_distance(const PointVec& x, const PointVec& y) {
  require_same_dim(x, y, "thompson_distance");
  if (x.is_zero() && y.is_zero()) return ExtendedRatio::finite(0.0);  // the face {0}
  if (!same_support(x, y)) return ExtendedRatio::infinity();
  const double up = dominance_upper(x, y).value();
  const double down = dominance_upper(y, x).value();
  return ExtendedRatio::finite(std::log(std::max(up, down)));
}

ExtendedRatio hilbert_distance(const PointVec& x, const PointVec& y) {
  require_same_dim(x, y, "hilbert_distance");
  if (x.is_zero() && y.is_zero()) return ExtendedRatio::finite(0.0);
  if (!same_support(x, y)) return ExtendedRatio::infinity();
  const double up = dominance_upper(x, y).value();
  const double down = dominance_lower(x, y).value();
  return ExtendedRatio::finite(std::log(up / down));
}

double order_unit_norm(const PointVec& y, const PointVec& base) {
  require_same_dim(y, base, "order_unit_norm");
  if (!base.interior()) {
    throw InvalidValue("order_unit_norm requires an interior base point");
  }
  return dominance_upper(y, base).value();
}

PointVec slice_normalize(const PointVec& x, double c, const ConeContext& ctx) {
  if (!(c > 0.0)) throw InvalidValue("slice level c must be positive");
  const double p = ctx.psi(x);
  if (p == 0.0) throw InvalidValue("slice_normalize: psi(x) = 0 (zero vector)");
  return scale(c / p, x);
}

}  // namespace conejsr
