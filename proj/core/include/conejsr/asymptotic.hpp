#pragma once

// Symbolic asymptotic maps f_0(x) = lim_{c->0} f(cx)/c and
// f_inf(x) = lim_{c->inf} f(cx)/c for subhomogeneous expressions.  The limits
// are computed on a closed catalog of shapes; anything outside it raises
// NoClosedForm rather than falling back to a numeric limit.

#include <optional>

#include "conejsr/map_expr.hpp"

namespace conejsr {

/// Result of a zero-limit: either a map, or the flag that f_0 is identically
/// infinite (a constant term survives the c -> 0 scaling).
struct AsymptoticMap {
  bool divergent = false;
  std::optional<MapExpr> map;

  static AsymptoticMap of(MapExpr m) { return AsymptoticMap{false, std::move(m)}; }
  static AsymptoticMap divergent_flag() { return AsymptoticMap{true, std::nullopt}; }
};

/// f_0; requires f structurally subhomogeneous.  Degree-1 homogeneous
/// expressions are their own limit.  An affine layer A x + phi(B x) + b has
/// f_0 = (A + phi'(0) B) x when b = 0 and phi(0) = 0, and is divergent
/// otherwise.
AsymptoticMap asymptotic_zero(const MapExpr& f);

/// f_inf; requires f structurally subhomogeneous.  Always a genuine map
/// (the scaled family decreases in c and is bounded below by zero).
MapExpr asymptotic_infinity(const MapExpr& f);

/// Collapses pure-linear subtrees (compositions, sums, scalings, coordinate
/// selections) into single Linear nodes; other nodes are left untouched.
MapExpr simplify_linear(const MapExpr& f);

}  // namespace conejsr
