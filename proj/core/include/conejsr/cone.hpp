#pragma once

// Order primitives on the nonnegative orthant: dominance ratios M(x/y) and
// m(x/y), the Thompson and Hilbert projective metrics, order-unit norms and
// slice normalization.  All functions are pure; values are immutable and safe
// to share across threads.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "conejsr/errors.hpp"

namespace conejsr {

/// A nonnegative real extended with a distinguished +inf value.  The infinity
/// is a flag, not an IEEE infinity, so it never leaks into arithmetic or
/// serialized output by accident.
class ExtendedRatio {
 public:
  ExtendedRatio() = default;

  static ExtendedRatio finite(double v);
  static ExtendedRatio infinity();

  [[nodiscard]] bool is_infinite() const noexcept { return infinite_; }
  [[nodiscard]] bool is_finite() const noexcept { return !infinite_; }

  /// Finite value; throws InvalidValue when infinite.
  [[nodiscard]] double value() const;
  [[nodiscard]] double value_or(double fallback) const noexcept {
    return infinite_ ? fallback : value_;
  }

  /// Shortest decimal round trip, or the string "inf".
  [[nodiscard]] std::string str() const;

  friend bool operator==(const ExtendedRatio& a, const ExtendedRatio& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend bool operator<(const ExtendedRatio& a, const ExtendedRatio& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const ExtendedRatio& a, const ExtendedRatio& b) {
    return a == b || a < b;
  }
  friend bool operator>(const ExtendedRatio& a, const ExtendedRatio& b) { return b < a; }
  friend bool operator>=(const ExtendedRatio& a, const ExtendedRatio& b) { return b <= a; }

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

/// A point of the cone: finitely many coordinates, all >= 0.  Immutable.
/// Boundary semantics are exact: coordinates are never snapped to zero.
class PointVec {
 public:
  PointVec() = default;
  explicit PointVec(std::vector<double> coords);

  static PointVec zero(std::size_t dim);
  static PointVec ones(std::size_t dim);

  [[nodiscard]] std::size_t dim() const noexcept { return coords_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const noexcept { return coords_[i]; }
  [[nodiscard]] const std::vector<double>& coords() const noexcept { return coords_; }
  [[nodiscard]] std::span<const double> span() const noexcept { return coords_; }

  [[nodiscard]] bool is_zero() const noexcept;
  /// True when every coordinate is strictly positive.
  [[nodiscard]] bool interior() const noexcept;

  [[nodiscard]] double min_coord() const;
  [[nodiscard]] double max_coord() const;
  [[nodiscard]] double sup_norm() const { return max_coord(); }

  friend bool operator==(const PointVec& a, const PointVec& b) {
    return a.coords_ == b.coords_;
  }

 private:
  std::vector<double> coords_;
};

PointVec add(const PointVec& a, const PointVec& b);
PointVec scale(double c, const PointVec& a);

/// x <= y in the cone order, with optional relative/absolute slack.
bool cone_leq(const PointVec& x, const PointVec& y, double rel_slack = 0.0,
              double abs_slack = 0.0);

/// Geometry context: the dual functional psi (a weighted sum with strictly
/// positive weights), the interior unit u and the orthant normality constant.
struct ConeContext {
  std::size_t dim = 0;
  std::vector<double> psi_weights;  // strictly positive
  PointVec unit_u;                  // interior
  double normality_delta = 1.0;     // monotone norms on the orthant

  /// psi = plain sum, u = all ones.
  static ConeContext standard(std::size_t dim);
  static ConeContext with_weights(std::vector<double> weights, PointVec unit);

  [[nodiscard]] double psi(const PointVec& x) const;
  void validate() const;
};

/// M(x/y): the least beta with x <= beta y.  Conventions: a coordinate with
/// y_i = 0 < x_i forces +inf; coordinates with x_i = y_i = 0 are ignored;
/// M(0/y) = 0.
ExtendedRatio dominance_upper(const PointVec& x, const PointVec& y);

/// m(x/y): the largest alpha with alpha y <= x.  m(x/0) = +inf.
ExtendedRatio dominance_lower(const PointVec& x, const PointVec& y);

/// Thompson metric log max(M(x/y), M(y/x)); +inf across faces, 0 for x=y=0.
ExtendedRatio thompson_distance(const PointVec& x, const PointVec& y);

/// Hilbert projective metric log(M(x/y)/m(x/y)); scale invariant.
ExtendedRatio hilbert_distance(const PointVec& x, const PointVec& y);

/// Order-unit norm M(y/base) for an interior base point; finite on the cone.
double order_unit_norm(const PointVec& y, const PointVec& base);

/// Projects x onto the slice {z : psi(z) = c}: returns c * x / psi(x).
PointVec slice_normalize(const PointVec& x, double c, const ConeContext& ctx);

}  // namespace conejsr
