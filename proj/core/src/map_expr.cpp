#include "conejsr/map_expr.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

namespace conejsr {

namespace {

double relu_fn(double t) { return t > 0.0 ? t : 0.0; }
double tanh_fn(double t) { return std::tanh(t); }
double sigmoid_fn(double t) { return 1.0 / (1.0 + std::exp(-t)); }
double softplus_fn(double t) {
  return t > 0.0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t));
}
double identity_fn(double t) { return t; }

// On the orthant relu acts as the identity, hence phi'(0+) = 1.
constexpr std::array<ActivationSpec, 5> kActivations{{
    {"relu", relu_fn, 0.0, 1.0, 1.0},
    {"tanh", tanh_fn, 0.0, 1.0, 0.0},
    {"sigmoid", sigmoid_fn, 0.5, 0.25, 0.0},
    {"softplus", softplus_fn, 0.6931471805599453, 0.5, 1.0},
    {"identity", identity_fn, 0.0, 1.0, 1.0},
}};

using detail::Node;

std::shared_ptr<const Node> make_node(Node&& n) {
  return std::make_shared<const Node>(std::move(n));
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

Matrix Matrix::outer(std::span<const double> u, std::span<const double> w) {
  Matrix m(u.size(), w.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) m.at(i, j) = u[i] * w[j];
  return m;
}

bool Matrix::nonnegative() const {
  return std::all_of(data.begin(), data.end(), [](double v) { return v >= 0.0; });
}

void Matrix::apply(std::span<const double> x, std::vector<double>& out) const {
  if (x.size() != cols) throw DimensionMismatch("matrix apply: dimension mismatch");
  out.assign(rows, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    double s = 0.0;
    const double* row = data.data() + i * cols;
    for (std::size_t j = 0; j < cols; ++j) s += row[j] * x[j];
    out[i] = s;
  }
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw DimensionMismatch("matrix product: dimension mismatch");
  Matrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const double aik = a.at(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw DimensionMismatch("matrix sum: dimension mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data.size(); ++i) c.data[i] += b.data[i];
  return c;
}

Matrix operator*(double c, const Matrix& a) {
  Matrix out = a;
  for (double& v : out.data) v *= c;
  return out;
}

std::span<const ActivationSpec> activation_catalog() { return kActivations; }

const ActivationSpec& find_activation(std::string_view name) {
  for (const auto& a : kActivations) {
    if (a.name == name) return a;
  }
  throw InvalidValue("unknown activation '" + std::string(name) + "'");
}

MapExpr MapExpr::linear(Matrix a) {
  if (a.rows == 0 || a.cols == 0) throw InvalidValue("linear map must be nonempty");
  Node n;
  n.kind = Kind::Linear;
  n.in_dim = a.cols;
  n.out_dim = a.rows;
  n.matrix = std::move(a);
  n.degree = 1.0;
  n.subhom = true;
  return MapExpr(make_node(std::move(n)));
}

MapExpr MapExpr::entrywise_power(double alpha, std::size_t dim) {
  if (!(alpha > 0.0)) throw InvalidValue("entrywise power exponent must be positive");
  if (dim == 0) throw InvalidValue("entrywise power needs a positive dimension");
  Node n;
  n.kind = Kind::Power;
  n.in_dim = n.out_dim = dim;
  n.alpha = alpha;
  n.degree = alpha;
  n.subhom = alpha <= 1.0;
  return MapExpr(make_node(std::move(n)));
}

MapExpr MapExpr::activation(std::string_view name, std::size_t dim) {
  if (dim == 0) throw InvalidValue("activation needs a positive dimension");
  const ActivationSpec& spec = find_activation(name);
  Node n;
  n.kind = Kind::Activation;
  n.in_dim = n.out_dim = dim;
  n.act = &spec;
  const bool linear_on_orthant =
      spec.name == "identity" || spec.name == "relu";
  if (linear_on_orthant) n.degree = 1.0;
  n.subhom = true;  // catalog members satisfy phi(lambda t) <= lambda phi(t), lambda >= 1
  return MapExpr(make_node(std::move(n)));
}

MapExpr MapExpr::const_shift(std::vector<double> b) {
  if (b.empty()) throw InvalidValue("const shift needs a positive dimension");
  for (double v : b) {
    if (!(v >= 0.0)) throw InvalidValue("const shift entries must be nonnegative");
  }
  Node n;
  n.kind = Kind::ConstShift;
  n.in_dim = n.out_dim = b.size();
  const bool zero = std::all_of(b.begin(), b.end(), [](double v) { return v == 0.0; });
  n.shift = std::move(b);
  if (zero) n.degree = 1.0;  // degenerate shift is the identity
  n.subhom = true;
  return MapExpr(make_node(std::move(n)));
}

MapExpr MapExpr::sum(std::vector<MapExpr> terms) {
  if (terms.empty()) throw InvalidValue("sum needs at least one term");
  const std::size_t in = terms.front().in_dim();
  const std::size_t out = terms.front().out_dim();
  for (const auto& t : terms) {
    if (t.in_dim() != in || t.out_dim() != out)
      throw DimensionMismatch("sum terms disagree on dimensions");
  }
  Node n;
  n.kind = Kind::Sum;
  n.in_dim = in;
  n.out_dim = out;
  std::optional<double> deg = terms.front().degree();
  bool subhom = true;
  for (const auto& t : terms) {
    if (deg && (!t.degree() || *t.degree() != *deg)) deg.reset();
    subhom = subhom && t.subhomogeneous();
  }
  n.degree = deg;
  n.subhom = deg ? (*deg <= 1.0) : subhom;
  n.children = std::move(terms);
  return MapExpr(make_node(std::move(n)));
}

MapExpr MapExpr::scale(double c, MapExpr inner) {
  if (!(c >= 0.0)) throw InvalidValue("scale factor must be nonnegative");
  Node n;
  n.kind = Kind::Scale;
  n.in_dim = inner.in_dim();
  n.out_dim = inner.out_dim();
  n.scale_c = c;
  n.degree = inner.degree();
  n.subhom = inner.subhomogeneous();
  n.children.push_back(std::move(inner));
  return MapExpr(make_node(std::move(n)));
}

MapExpr MapExpr::compose(MapExpr outer, MapExpr inner) {
  if (inner.out_dim() != outer.in_dim())
    throw DimensionMismatch("compose: inner output dimension " +
                            std::to_string(inner.out_dim()) +
                            " does not match outer input dimension " +
                            std::to_string(outer.in_dim()));
  Node n;
  n.kind = Kind::Compose;
  n.in_dim = inner.in_dim();
  n.out_dim = outer.out_dim();
  if (outer.degree() && inner.degree()) n.degree = *outer.degree() * *inner.degree();
  // With a known degree, subhomogeneity is exactly degree <= 1; otherwise the
  // composition of subhomogeneous order-preserving maps is subhomogeneous.
  n.subhom = n.degree ? (*n.degree <= 1.0)
                      : (outer.subhomogeneous() && inner.subhomogeneous());
  n.children.push_back(std::move(outer));
  n.children.push_back(std::move(inner));
  return MapExpr(make_node(std::move(n)));
}

MapExpr MapExpr::min_augment(std::vector<std::size_t> subset, std::size_t dim) {
  if (subset.empty()) throw InvalidValue("min_augment needs a nonempty subset");
  for (std::size_t i : subset) {
    if (i >= dim) throw InvalidValue("min_augment subset index out of range");
  }
  Node n;
  n.kind = Kind::MinAugment;
  n.in_dim = dim;
  n.out_dim = dim + 1;
  n.coords = std::move(subset);
  n.degree = 1.0;
  n.subhom = true;
  return MapExpr(make_node(std::move(n)));
}

MapExpr MapExpr::harmonic_mean(std::size_t i, std::size_t j, std::size_t dim) {
  if (i >= dim || j >= dim || i == j)
    throw InvalidValue("harmonic_mean needs two distinct in-range coordinates");
  Node n;
  n.kind = Kind::HarmonicMean;
  n.in_dim = dim;
  n.out_dim = 1;
  n.hm_i = i;
  n.hm_j = j;
  n.degree = 1.0;
  n.subhom = true;
  return MapExpr(make_node(std::move(n)));
}

MapExpr MapExpr::coord_select(std::vector<std::size_t> indices, std::size_t in_dim) {
  if (indices.empty()) throw InvalidValue("coord_select needs at least one index");
  for (std::size_t i : indices) {
    if (i >= in_dim) throw InvalidValue("coord_select index out of range");
  }
  Node n;
  n.kind = Kind::CoordSelect;
  n.in_dim = in_dim;
  n.out_dim = indices.size();
  n.coords = std::move(indices);
  n.degree = 1.0;
  n.subhom = true;
  return MapExpr(make_node(std::move(n)));
}

MapExpr MapExpr::identity(std::size_t dim) { return linear(Matrix::identity(dim)); }

std::size_t MapExpr::in_dim() const { return node_->in_dim; }
std::size_t MapExpr::out_dim() const { return node_->out_dim; }
MapExpr::Kind MapExpr::kind() const { return node_->kind; }
std::optional<double> MapExpr::degree() const { return node_->degree; }
bool MapExpr::subhomogeneous() const { return node_->subhom; }

bool MapExpr::homogeneous_degree_one() const {
  return node_->degree && *node_->degree == 1.0;
}

void MapExpr::eval_raw(std::span<const double> x, std::vector<double>& out) const {
  const Node& n = *node_;
  if (x.size() != n.in_dim) throw DimensionMismatch("evaluate: dimension mismatch");
  switch (n.kind) {
    case Kind::Linear:
      n.matrix.apply(x, out);
      return;
    case Kind::Power:
      out.resize(n.out_dim);
      for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::pow(x[i], n.alpha);
      return;
    case Kind::Activation:
      out.resize(n.out_dim);
      for (std::size_t i = 0; i < x.size(); ++i) out[i] = n.act->fn(x[i]);
      return;
    case Kind::ConstShift:
      out.resize(n.out_dim);
      for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + n.shift[i];
      return;
    case Kind::Sum: {
      std::vector<double> term;
      n.children.front().eval_raw(x, out);
      for (std::size_t t = 1; t < n.children.size(); ++t) {
        n.children[t].eval_raw(x, term);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += term[i];
      }
      return;
    }
    case Kind::Scale:
      n.children.front().eval_raw(x, out);
      for (double& v : out) v *= n.scale_c;
      return;
    case Kind::Compose: {
      std::vector<double> mid;
      n.children[1].eval_raw(x, mid);
      n.children[0].eval_raw(mid, out);
      return;
    }
    case Kind::MinAugment: {
      out.assign(x.begin(), x.end());
      double m = x[n.coords.front()];
      for (std::size_t i : n.coords) m = std::min(m, x[i]);
      out.push_back(m);
      return;
    }
    case Kind::HarmonicMean: {
      const double a = x[n.hm_i];
      const double b = x[n.hm_j];
      out.assign(1, (a > 0.0 && b > 0.0) ? 1.0 / (1.0 / a + 1.0 / b) : 0.0);
      return;
    }
    case Kind::CoordSelect: {
      out.resize(n.out_dim);
      for (std::size_t i = 0; i < n.coords.size(); ++i) out[i] = x[n.coords[i]];
      return;
    }
  }
  throw Error("unreachable map kind");
}

std::vector<double> MapExpr::eval_raw(std::span<const double> x) const {
  std::vector<double> out;
  eval_raw(x, out);
  return out;
}

PointVec evaluate(const MapExpr& f, const PointVec& x) {
  return PointVec(f.eval_raw(x.span()));
}

Family::Family(std::vector<MapExpr> maps_, std::vector<std::string> labels_)
    : maps(std::move(maps_)), labels(std::move(labels_)) {
  if (maps.empty()) throw InvalidValue("family must contain at least one map");
  const std::size_t in = maps.front().in_dim();
  const std::size_t out = maps.front().out_dim();
  if (in != out) throw InvalidValue("family members must map a space to itself");
  for (const auto& m : maps) {
    if (m.in_dim() != in || m.out_dim() != out)
      throw DimensionMismatch("family members disagree on dimension");
  }
  if (labels.empty()) {
    for (std::size_t i = 0; i < maps.size(); ++i) labels.push_back("f" + std::to_string(i + 1));
  }
  if (labels.size() != maps.size())
    throw InvalidValue("family labels do not match the number of maps");
}

bool Family::all_homogeneous() const {
  return std::all_of(maps.begin(), maps.end(),
                     [](const MapExpr& m) { return m.homogeneous_degree_one(); });
}

bool Family::all_subhomogeneous() const {
  return std::all_of(maps.begin(), maps.end(),
                     [](const MapExpr& m) { return m.subhomogeneous(); });
}

std::string Word::str() const {
  std::string s;
  for (std::size_t r = 0; r < indices.size(); ++r) {
    if (r) s += '-';
    s += std::to_string(indices[r] + 1);
  }
  return s;
}

void validate_word(const Family& family, const Word& word) {
  if (word.indices.empty()) throw InvalidValue("word must have length >= 1");
  for (std::size_t i : word.indices) {
    if (i >= family.size()) throw InvalidValue("word index out of range for family");
  }
}

PointVec evaluate_word(const Family& family, const Word& word, const PointVec& x) {
  validate_word(family, word);
  PointVec cur = x;
  for (std::size_t r = word.indices.size(); r-- > 0;) {
    cur = evaluate(family.maps[word.indices[r]], cur);
  }
  return cur;
}

MapExpr word_map(const Family& family, const Word& word) {
  validate_word(family, word);
  MapExpr m = family.maps[word.indices.back()];
  for (std::size_t r = word.indices.size() - 1; r-- > 0;) {
    m = MapExpr::compose(family.maps[word.indices[r]], m);
  }
  return m;
}

}  // namespace conejsr
