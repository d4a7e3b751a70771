#include "gradsym/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace gradsym {

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& p : problems) os << p << "; ";
  if (!grading_failures.empty()) {
    const auto& t = grading_failures.front();
    os << grading_failures.size() << " grading violation(s), first (i,j,k)=(" << t[0] << "," << t[1] << "," << t[2]
       << "); ";
  }
  if (!associativity_failures.empty()) {
    const auto& t = associativity_failures.front();
    os << associativity_failures.size() << " associativity failure(s), first (i,j,l)=(" << t[0] << "," << t[1]
       << "," << t[2] << "); ";
  }
  if (!unit_failures.empty()) os << "unit law fails at basis index " << unit_failures.front() << "; ";
  if (unit_inhomogeneous) os << "unit is not homogeneous of degree e; ";
  std::string s = os.str();
  if (s.size() >= 2) s.resize(s.size() - 2);
  return s.empty() ? "ok" : s;
}

namespace {

// Sparse accumulator over a dense scratch buffer.
class Accumulator {
 public:
  Accumulator(const Field& f, std::size_t n) : buf_(n, f.zero()), touched_(n, false) {}

  void add(std::uint32_t k, const Scalar& c) {
    if (c.is_zero()) return;
    if (!touched_[k]) {
      touched_[k] = true;
      list_.push_back(k);
      buf_[k] = c;
    } else {
      buf_[k] += c;
    }
  }

  void add_product(const std::vector<StructureTerm>& terms, const Scalar& c) {
    for (const auto& t : terms) add(t.index, c * t.coeff);
  }

  bool equals(const Accumulator& o) const {
    for (auto k : list_)
      if (!(o.touched_[k] ? buf_[k] == o.buf_[k] : buf_[k].is_zero())) return false;
    for (auto k : o.list_)
      if (!touched_[k] && !o.buf_[k].is_zero()) return false;
    return true;
  }

  void clear() {
    for (auto k : list_) touched_[k] = false;
    list_.clear();
  }

 private:
  std::vector<Scalar> buf_;
  std::vector<bool> touched_;
  std::vector<std::uint32_t> list_;
};

}  // namespace

ValidationReport validate_data(const AlgebraData& data, ValidationDepth depth) {
  ValidationReport rep;
  const std::size_t d = data.dim;
  const bool first_only = depth == ValidationDepth::FirstFailure;
  if (!data.field.valid()) rep.problems.push_back("missing field");
  if (!data.group.valid()) rep.problems.push_back("missing group");
  if (d == 0) rep.problems.push_back("zero-dimensional algebra (a unit is required)");
  if (d > kMaxAlgebraDim) rep.problems.push_back("dimension " + std::to_string(d) + " exceeds 64");
  if (data.degrees.size() != d) rep.problems.push_back("degree list length differs from dimension");
  if (data.products.size() != d * d) rep.problems.push_back("structure table size differs from dim^2");
  if (data.unit.size() != d) rep.problems.push_back("unit length differs from dimension");
  if (!data.labels.empty() && data.labels.size() != d) rep.problems.push_back("label count differs from dimension");
  if (!rep.problems.empty()) return rep;
  for (auto g : data.degrees)
    if (g >= data.group.order()) {
      rep.problems.push_back("degree index out of range");
      return rep;
    }
  for (const auto& s : data.unit)
    if (s.field() != data.field) {
      rep.problems.push_back("unit scalar over a different field");
      return rep;
    }
  for (std::size_t p = 0; p < d * d; ++p) {
    std::uint32_t prev = 0;
    bool first = true;
    for (const auto& t : data.products[p]) {
      if (t.index >= d || t.coeff.field() != data.field || t.coeff.is_zero() || (!first && t.index <= prev)) {
        rep.problems.push_back("malformed structure term at pair " + std::to_string(p / d) + "," +
                               std::to_string(p % d));
        return rep;
      }
      prev = t.index;
      first = false;
    }
  }
  const Group& G = data.group;
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t j = 0; j < d; ++j)
      for (const auto& t : data.products[i * d + j])
        if (data.degrees[t.index] != G.mul(data.degrees[i], data.degrees[j])) {
          rep.grading_failures.push_back({i, j, t.index});
          if (first_only) return rep;
        }
  for (std::size_t i = 0; i < d; ++i)
    if (!data.unit[i].is_zero() && data.degrees[i] != Group::identity()) {
      rep.unit_inhomogeneous = true;
      if (first_only) return rep;
      break;
    }
  Accumulator lhs(data.field, d), rhs(data.field, d);
  for (std::uint32_t i = 0; i < d; ++i) {
    // 1 * e_i and e_i * 1
    for (std::size_t u = 0; u < d; ++u)
      if (!data.unit[u].is_zero()) {
        lhs.add_product(data.products[u * d + i], data.unit[u]);
        rhs.add_product(data.products[i * d + u], data.unit[u]);
      }
    Accumulator ei(data.field, d);
    ei.add(i, data.field.one());
    if (!lhs.equals(ei) || !rhs.equals(ei)) {
      rep.unit_failures.push_back(i);
      if (first_only) return rep;
    }
    lhs.clear();
    rhs.clear();
  }
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t j = 0; j < d; ++j) {
      const auto& ij = data.products[i * d + j];
      for (std::uint32_t l = 0; l < d; ++l) {
        for (const auto& t : ij) lhs.add_product(data.products[t.index * d + l], t.coeff);
        for (const auto& t : data.products[j * d + l]) rhs.add_product(data.products[i * d + t.index], t.coeff);
        bool ok = lhs.equals(rhs);
        lhs.clear();
        rhs.clear();
        if (!ok) {
          rep.associativity_failures.push_back({i, j, l});
          if (first_only) return rep;
        }
      }
    }
  return rep;
}

GradedAlgebra GradedAlgebra::make(AlgebraData data) {
  auto rep = validate_data(data);
  if (!rep.ok()) throw Error(ErrorKind::ValidationError, rep.summary());
  return make_unchecked(std::move(data));
}

GradedAlgebra GradedAlgebra::make_unchecked(AlgebraData data) {
  GradedAlgebra a;
  if (data.labels.empty())
    for (std::size_t i = 0; i < data.dim; ++i) data.labels.push_back("e" + std::to_string(i));
  a.d_ = std::make_shared<const AlgebraData>(std::move(data));
  return a;
}

std::string GradedAlgebra::label(std::size_t i) const { return d_->labels.at(i); }

Vector GradedAlgebra::multiply(const Vector& x, const Vector& y) const {
  const std::size_t d = dim();
  if (x.size() != d || y.size() != d) throw Error(ErrorKind::AmbientMismatch, "element length differs from dimension");
  Vector out = zero();
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      const auto& terms = product(i, j);
      if (terms.empty()) continue;
      Scalar c = x[i] * y[j];
      for (const auto& t : terms) out[t.index] += c * t.coeff;
    }
  }
  return out;
}

Vector GradedAlgebra::commutator(const Vector& x, const Vector& y) const {
  return sub(multiply(x, y), multiply(y, x));
}

Matrix GradedAlgebra::left_multiplication(const Vector& x) const {
  const std::size_t d = dim();
  Matrix m(field(), d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& t : product(i, j)) m(t.index, j) += x[i] * t.coeff;
  }
  return m;
}

std::vector<std::size_t> GradedAlgebra::component_indices(GroupElem g) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (degree(i) == g) out.push_back(i);
  return out;
}

std::optional<GroupElem> GradedAlgebra::homogeneous_degree(const Vector& x) const {
  std::optional<GroupElem> deg;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    if (!deg) deg = degree(i);
    else if (*deg != degree(i)) return std::nullopt;
  }
  return deg;
}

bool GradedAlgebra::operator==(const GradedAlgebra& o) const {
  if (d_ == o.d_) return true;
  if (!d_ || !o.d_) return false;
  const auto& a = *d_;
  const auto& b = *o.d_;
  return a.field == b.field && a.group == b.group && a.dim == b.dim && a.degrees == b.degrees &&
         a.products == b.products && a.unit == b.unit && a.labels == b.labels;
}

Element multiply(const Element& x, const Element& y) {
  if (!x.owner.same_object(y.owner)) throw Error(ErrorKind::OwnerMismatch, "elements belong to different algebras");
  return Element{x.owner, x.owner.multiply(x.coords, y.coords)};
}

ValidationReport algebra_validate(const GradedAlgebra& a, ValidationDepth depth) {
  return validate_data(a.data(), depth);
}

std::optional<Vector> inverse(const GradedAlgebra& a, const Vector& x) {
  Matrix lx = a.left_multiplication(x);
  if (rank(lx) != a.dim()) return std::nullopt;
  return solve(lx, a.unit());
}

std::optional<Vector> solve_unit(const AlgebraData& data) {
  // Unknown u: u e_i = e_i and e_i u = e_i for every i.
  const std::size_t d = data.dim;
  Matrix sys(data.field, 2 * d * d, d);
  Vector rhs = zero_vector(data.field, 2 * d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t u = 0; u < d; ++u) {
      for (const auto& t : data.products[u * d + i]) sys(i * d + t.index, u) += t.coeff;
      for (const auto& t : data.products[i * d + u]) sys(d * d + i * d + t.index, u) += t.coeff;
    }
    rhs[i * d + i] = data.field.one();
    rhs[d * d + i * d + i] = data.field.one();
  }
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  if (rank(sys) != d) return std::nullopt;
  return sol;
}

StructureBuilder::StructureBuilder(Field f, std::size_t dim) : field_(std::move(f)), dim_(dim), acc_(dim * dim) {}

void StructureBuilder::add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  if (c.is_zero()) return;
  auto& terms = acc_[i * dim_ + j];
  auto it = std::lower_bound(terms.begin(), terms.end(), k,
                             [](const StructureTerm& t, std::size_t key) { return t.index < key; });
  if (it != terms.end() && it->index == k) {
    it->coeff += c;
    if (it->coeff.is_zero()) terms.erase(it);
  } else {
    terms.insert(it, StructureTerm{static_cast<std::uint32_t>(k), c});
  }
}

std::vector<std::vector<StructureTerm>> StructureBuilder::finish() const { return acc_; }

}  // namespace gradsym
