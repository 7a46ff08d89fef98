#include "conejsr/asymptotic.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace conejsr {

namespace {

using Kind = MapExpr::Kind;

bool is_zero_vector(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

// Selection matrix for CoordSelect, identity for Power(1).
std::optional<Matrix> as_linearizable(const MapExpr& f) {
  switch (f.kind()) {
    case Kind::Linear:
      return f.node().matrix;
    case Kind::CoordSelect: {
      Matrix m(f.out_dim(), f.in_dim());
      for (std::size_t r = 0; r < f.node().coords.size(); ++r)
        m.at(r, f.node().coords[r]) = 1.0;
      return m;
    }
    case Kind::Power:
      if (f.node().alpha == 1.0) return Matrix::identity(f.in_dim());
      return std::nullopt;
    case Kind::ConstShift:
      if (is_zero_vector(f.node().shift)) return Matrix::identity(f.in_dim());
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

enum class LimitSide { Zero, Infinity };

// Recursive symbolic limit.  Divergence is signalled by an empty optional;
// shapes outside the catalog raise NoClosedForm.
std::optional<MapExpr> limit_map(const MapExpr& f, LimitSide side) {
  // A degree-1 homogeneous expression equals its own scaled limits.  For a
  // homogeneous degree d < 1, f(cx)/c = c^(d-1) f(x) diverges as c -> 0 and
  // vanishes as c -> inf.
  if (f.degree()) {
    if (*f.degree() == 1.0) return f;
    if (side == LimitSide::Zero) return std::nullopt;
    return MapExpr::linear(Matrix::zero(f.out_dim(), f.in_dim()));
  }

  switch (f.kind()) {
    case Kind::Power: {
      const double a = f.node().alpha;
      if (a > 1.0) throw NoClosedForm("entrywise power with exponent > 1 is not subhomogeneous");
      // a < 1: t^a / c^(1-a) diverges as c -> 0 and vanishes as c -> inf.
      if (side == LimitSide::Zero) return std::nullopt;
      return MapExpr::linear(Matrix::zero(f.out_dim(), f.in_dim()));
    }
    case Kind::Activation: {
      const ActivationSpec& a = *f.node().act;
      if (side == LimitSide::Zero) {
        if (a.value_at_zero > 0.0) return std::nullopt;
        return MapExpr::linear(a.deriv_at_zero * Matrix::identity(f.in_dim()));
      }
      return MapExpr::linear(a.deriv_at_infinity * Matrix::identity(f.in_dim()));
    }
    case Kind::ConstShift: {
      // x + b: the shift dominates c -> 0 and washes out as c -> inf.
      if (side == LimitSide::Zero) return std::nullopt;  // b != 0 here (else degree 1)
      return MapExpr::identity(f.in_dim());
    }
    case Kind::Sum: {
      std::vector<MapExpr> limits;
      limits.reserve(f.node().children.size());
      for (const auto& t : f.node().children) {
        auto lt = limit_map(t, side);
        if (!lt) return std::nullopt;  // one divergent term dominates the sum
        limits.push_back(std::move(*lt));
      }
      return MapExpr::sum(std::move(limits));
    }
    case Kind::Scale: {
      if (f.node().scale_c == 0.0)
        return MapExpr::linear(Matrix::zero(f.out_dim(), f.in_dim()));
      auto li = limit_map(f.node().children.front(), side);
      if (!li) return std::nullopt;
      return MapExpr::scale(f.node().scale_c, std::move(*li));
    }
    case Kind::Compose: {
      auto inner = limit_map(f.node().children[1], side);
      if (!inner) {
        throw NoClosedForm(
            "no closed form: inner factor of a composition has a divergent limit");
      }
      auto outer = limit_map(f.node().children[0], side);
      if (!outer) return std::nullopt;
      return MapExpr::compose(std::move(*outer), std::move(*inner));
    }
    default:
      // Linear / MinAugment / HarmonicMean / CoordSelect are degree 1 and
      // handled by the shortcut above.
      throw NoClosedForm("no closed form for this expression shape");
  }
}

}  // namespace

AsymptoticMap asymptotic_zero(const MapExpr& f) {
  if (!f.subhomogeneous())
    throw InvalidValue("asymptotic_zero requires a structurally subhomogeneous map");
  auto lim = limit_map(f, LimitSide::Zero);
  if (!lim) return AsymptoticMap::divergent_flag();
  return AsymptoticMap::of(simplify_linear(*lim));
}

MapExpr asymptotic_infinity(const MapExpr& f) {
  if (!f.subhomogeneous())
    throw InvalidValue("asymptotic_infinity requires a structurally subhomogeneous map");
  auto lim = limit_map(f, LimitSide::Infinity);
  if (!lim) throw NoClosedForm("infinity limit unexpectedly divergent");
  return simplify_linear(*lim);
}

MapExpr simplify_linear(const MapExpr& f) {
  switch (f.kind()) {
    case Kind::Sum: {
      std::vector<MapExpr> terms;
      terms.reserve(f.node().children.size());
      bool all_linear = true;
      for (const auto& t : f.node().children) {
        terms.push_back(simplify_linear(t));
        all_linear = all_linear && as_linearizable(terms.back()).has_value();
      }
      if (all_linear) {
        Matrix acc = *as_linearizable(terms.front());
        for (std::size_t i = 1; i < terms.size(); ++i)
          acc = acc + *as_linearizable(terms[i]);
        return MapExpr::linear(std::move(acc));
      }
      return MapExpr::sum(std::move(terms));
    }
    case Kind::Scale: {
      MapExpr inner = simplify_linear(f.node().children.front());
      if (auto m = as_linearizable(inner)) return MapExpr::linear(f.node().scale_c * *m);
      return MapExpr::scale(f.node().scale_c, std::move(inner));
    }
    case Kind::Compose: {
      MapExpr outer = simplify_linear(f.node().children[0]);
      MapExpr inner = simplify_linear(f.node().children[1]);
      auto mo = as_linearizable(outer);
      auto mi = as_linearizable(inner);
      if (mo && mi) return MapExpr::linear(*mo * *mi);
      return MapExpr::compose(std::move(outer), std::move(inner));
    }
    case Kind::CoordSelect:
      return MapExpr::linear(*as_linearizable(f));
    case Kind::Power:
      if (f.node().alpha == 1.0) return MapExpr::identity(f.in_dim());
      return f;
    default:
      return f;
  }
}

}  // namespace conejsr
