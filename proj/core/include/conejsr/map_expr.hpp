#pragma once

// Expression algebra for continuous order-preserving maps on the orthant.
// A MapExpr is an immutable tree of primitive nodes (linear maps, entrywise
// powers, activations, shifts, sums, compositions, min/harmonic-mean
// combinators, coordinate selections).  Structural homogeneity degrees and a
// subhomogeneity flag are computed bottom-up at construction time.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "conejsr/cone.hpp"
#include "conejsr/errors.hpp"

namespace conejsr {

/// Dense row-major matrix, just large enough for the expression algebra.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;  // rows * cols, row-major

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t r, std::size_t c) { return Matrix(r, c); }
  /// Rank-one u * w^T (outer product).
  static Matrix outer(std::span<const double> u, std::span<const double> w);

  double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  [[nodiscard]] double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  [[nodiscard]] bool nonnegative() const;
  void apply(std::span<const double> x, std::vector<double>& out) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator*(double c, const Matrix& a);
};

/// Entrywise activation with the data the asymptotic limits need.
struct ActivationSpec {
  std::string_view name;
  double (*fn)(double);
  double value_at_zero;       // phi(0)
  double deriv_at_zero;       // phi'(0+)
  double deriv_at_infinity;   // phi'(inf)
};

/// Catalog: relu, tanh, sigmoid, softplus, identity.
std::span<const ActivationSpec> activation_catalog();
const ActivationSpec& find_activation(std::string_view name);

class MapExpr;

namespace detail {
struct Node;
}

/// Immutable expression describing a continuous order-preserving map on the
/// orthant.  Copies are cheap (shared subtrees); evaluation is pure and
/// reentrant, so expressions may be shared freely across threads.
class MapExpr {
 public:
  enum class Kind {
    Linear,
    Power,
    Activation,
    ConstShift,
    Sum,
    Scale,
    Compose,
    MinAugment,
    HarmonicMean,
    CoordSelect,
  };

  MapExpr() = default;

  // Constructors.  Linear entries are not sign-checked here; family loading
  // rejects negative entries, and check_properties() exists to detect maps
  // that fail order preservation.
  static MapExpr linear(Matrix a);
  static MapExpr entrywise_power(double alpha, std::size_t dim);
  static MapExpr activation(std::string_view name, std::size_t dim);
  static MapExpr const_shift(std::vector<double> b);
  static MapExpr sum(std::vector<MapExpr> terms);
  static MapExpr scale(double c, MapExpr inner);
  static MapExpr compose(MapExpr outer, MapExpr inner);
  /// Appends min over the given coordinate subset as an extra output coordinate.
  static MapExpr min_augment(std::vector<std::size_t> subset, std::size_t dim);
  /// The one-output harmonic mean (x_i^-1 + x_j^-1)^-1, zero when either
  /// coordinate vanishes.
  static MapExpr harmonic_mean(std::size_t i, std::size_t j, std::size_t dim);
  static MapExpr coord_select(std::vector<std::size_t> indices, std::size_t in_dim);
  static MapExpr identity(std::size_t dim);

  [[nodiscard]] bool valid() const noexcept { return node_ != nullptr; }
  [[nodiscard]] std::size_t in_dim() const;
  [[nodiscard]] std::size_t out_dim() const;
  [[nodiscard]] Kind kind() const;

  /// Structural homogeneity degree, when one is derivable bottom-up.
  [[nodiscard]] std::optional<double> degree() const;
  /// True when the structure certifies f(lambda x) <= lambda f(x) for
  /// lambda >= 1.  Conservative: false does not prove the opposite.
  [[nodiscard]] bool subhomogeneous() const;
  [[nodiscard]] bool homogeneous_degree_one() const;

  /// Evaluates without cone validation of the output (used by property
  /// checks, which must observe violations rather than throw).
  void eval_raw(std::span<const double> x, std::vector<double>& out) const;
  [[nodiscard]] std::vector<double> eval_raw(std::span<const double> x) const;

  [[nodiscard]] const detail::Node& node() const { return *node_; }

 private:
  explicit MapExpr(std::shared_ptr<const detail::Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::Node> node_;
};

/// Exact recursive evaluation; validates the output lies in the cone.
PointVec evaluate(const MapExpr& f, const PointVec& x);

namespace detail {
struct Node {
  MapExpr::Kind kind;
  std::size_t in_dim = 0;
  std::size_t out_dim = 0;

  Matrix matrix;                       // Linear
  double alpha = 0.0;                  // Power
  const ActivationSpec* act = nullptr; // Activation
  std::vector<double> shift;           // ConstShift
  std::vector<MapExpr> children;       // Sum terms, Scale inner, Compose {outer, inner}
  double scale_c = 1.0;                // Scale
  std::vector<std::size_t> coords;     // MinAugment subset / CoordSelect indices
  std::size_t hm_i = 0, hm_j = 0;      // HarmonicMean

  std::optional<double> degree;
  bool subhom = false;
};
}  // namespace detail

/// A finite family {f_i} sharing input and output dimension.
struct Family {
  std::vector<MapExpr> maps;
  std::vector<std::string> labels;

  Family() = default;
  Family(std::vector<MapExpr> maps_, std::vector<std::string> labels_ = {});

  [[nodiscard]] std::size_t size() const noexcept { return maps.size(); }
  [[nodiscard]] std::size_t dim() const { return maps.at(0).in_dim(); }
  [[nodiscard]] bool all_homogeneous() const;
  [[nodiscard]] bool all_subhomogeneous() const;
};

/// A word [i1, ..., ik] denotes f_{i1} o ... o f_{ik}: the RIGHTMOST index is
/// applied first.  Indices are 0-based in code (1-based in files and CLI).
struct Word {
  std::vector<std::size_t> indices;

  Word() = default;
  explicit Word(std::vector<std::size_t> idx) : indices(std::move(idx)) {}

  [[nodiscard]] std::size_t length() const noexcept { return indices.size(); }
  [[nodiscard]] std::string str() const;  // dash separated, 1-based

  friend bool operator==(const Word& a, const Word& b) { return a.indices == b.indices; }
};

void validate_word(const Family& family, const Word& word);

/// Applies the word right to left.
PointVec evaluate_word(const Family& family, const Word& word, const PointVec& x);

/// The composed expression f_{i1} o ... o f_{ik}; shares subtrees with the
/// family members.
MapExpr word_map(const Family& family, const Word& word);

}  // namespace conejsr
