#include "gradsym/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace gradsym {

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da > db;
  return a > b;
}

MultiPoly MultiPoly::constant(const Field& f, std::size_t num_vars, const Scalar& c) {
  MultiPoly p(f, num_vars);
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const Field& f, std::size_t num_vars, std::size_t i) {
  if (i >= num_vars) throw Error(ErrorKind::IndexOutOfRange, "variable index");
  MultiPoly p(f, num_vars);
  Exponent e(num_vars, 0);
  e[i] = 1;
  p.add_term(e, f.one());
  return p;
}

MultiPoly MultiPoly::linear(const Field& f, const Vector& coeffs) {
  MultiPoly p(f, coeffs.size());
  for (std::size_t r = 0; r < coeffs.size(); ++r) {
    Exponent e(coeffs.size(), 0);
    e[r] = 1;
    p.add_term(e, coeffs[r]);
  }
  return p;
}

unsigned MultiPoly::total_degree() const {
  if (terms_.empty()) return 0;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0u);
}

void MultiPoly::add_term(const Exponent& e, const Scalar& c) {
  if (e.size() != num_vars_) throw Error(ErrorKind::AmbientMismatch, "exponent length");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (num_vars_ != o.num_vars_) throw Error(ErrorKind::AmbientMismatch, "polynomials in different variable sets");
  if (field_.valid() && o.field_.valid() && field_ != o.field_)
    throw Error(ErrorKind::FieldMismatch, field_.name() + " vs " + o.field_.name());
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(field_, num_vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly out(field_, num_vars_);
  Exponent e(num_vars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < num_vars_; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
  MultiPoly out(field_, num_vars_);
  if (c.is_zero()) return out;
  for (const auto& [e, x] : terms_) out.terms_.emplace(e, x * c);
  return out;
}

Scalar MultiPoly::evaluate(const Vector& point) const {
  if (point.size() != num_vars_) throw Error(ErrorKind::AmbientMismatch, "point has wrong number of coordinates");
  const Field& f = point.empty() ? field_ : point[0].field();
  if (terms_.empty()) return f.zero();
  unsigned maxdeg = total_degree();
  std::vector<std::vector<Scalar>> powers(num_vars_);
  for (std::size_t i = 0; i < num_vars_; ++i) {
    powers[i].push_back(f.one());
    for (unsigned k = 1; k <= maxdeg; ++k) powers[i].push_back(powers[i].back() * point[i]);
  }
  Scalar acc = f.zero();
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (std::size_t i = 0; i < num_vars_ && !term.is_zero(); ++i)
      if (e[i]) term *= powers[i][e[i]];
    acc += term;
  }
  return acc;
}

MultiPoly MultiPoly::mapped(const FieldEmbedding& emb) const {
  MultiPoly out(emb.target(), num_vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, emb(c));
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, raw] : terms_) {
    Scalar c = raw;
    const bool negative = !c.field().is_finite() && sgn(c.rational()) < 0;
    if (negative) c = -c;
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    first = false;
    bool constant = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    std::string cs = c.to_string();
    if (c.field().degree() > 1 && !c.is_one()) cs = "(" + cs + ")";
    if (constant) {
      os << cs;
      continue;
    }
    bool need_star = false;
    if (!c.is_one()) {
      os << cs;
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      os << (need_star ? "*" : "") << 't' << (i + 1) << '^' << e[i];
      need_star = true;
    }
  }
  return os.str();
}

Matrix GramPencil::evaluate(const Vector& point) const {
  const Field& f = point.empty() ? field : point[0].field();
  Matrix m(f, dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = at(i, j).evaluate(point);
  return m;
}

// ---- determinants ----

bool FactoredDeterminant::identically_zero() const {
  if (constant.is_zero()) return true;
  return std::any_of(factors.begin(), factors.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

unsigned FactoredDeterminant::total_degree() const {
  unsigned d = 0;
  for (const auto& f : factors) d += f.total_degree();
  return d;
}

MultiPoly FactoredDeterminant::expand() const {
  MultiPoly acc = MultiPoly::constant(constant.field(), num_vars, constant);
  for (const auto& f : factors) acc = acc * f;
  return acc;
}

namespace {

int permutation_sign(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Every nonzero entry is c * m for one shared monomial m.
std::optional<Exponent> shared_monomial(const std::vector<const MultiPoly*>& entries) {
  std::optional<Exponent> mono;
  for (const auto* p : entries) {
    if (p->is_zero()) continue;
    if (p->num_terms() != 1) return std::nullopt;
    const auto& e = p->terms().begin()->first;
    if (!mono) mono = e;
    else if (*mono != e) return std::nullopt;
  }
  return mono;
}

class CofactorExpansion {
 public:
  CofactorExpansion(const std::vector<const MultiPoly*>& block, std::size_t n, const Field& f, std::size_t m)
      : block_(block), n_(n), field_(f), m_(m) {}

  MultiPoly run() { return det(0, (std::uint32_t{1} << n_) - 1); }

 private:
  MultiPoly det(std::size_t row, std::uint32_t mask) {
    if (row == n_) return MultiPoly::constant(field_, m_, field_.one());
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    MultiPoly acc(field_, m_);
    int position = 0;
    for (std::size_t c = 0; c < n_; ++c) {
      if (!(mask >> c & 1)) continue;
      const MultiPoly& entry = *block_[row * n_ + c];
      if (!entry.is_zero()) {
        MultiPoly minor = det(row + 1, mask & ~(std::uint32_t{1} << c));
        if (!minor.is_zero()) {
          MultiPoly term = entry * minor;
          acc = (position % 2 == 0) ? acc + term : acc - term;
        }
      }
      ++position;
    }
    memo_.emplace(mask, acc);
    return acc;
  }

  const std::vector<const MultiPoly*>& block_;
  std::size_t n_;
  Field field_;
  std::size_t m_;
  std::unordered_map<std::uint32_t, MultiPoly> memo_;
};

MultiPoly block_determinant(const std::vector<const MultiPoly*>& block, std::size_t n, const Field& f,
                            std::size_t m) {
  if (n == 1) return *block[0];
  if (auto mono = shared_monomial(block)) {
    Matrix numeric(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const MultiPoly& p = *block[i * n + j];
        if (!p.is_zero()) numeric(i, j) = p.terms().begin()->second;
      }
    Scalar d = determinant(std::move(numeric));
    MultiPoly out(f, m);
    Exponent e(m, 0);
    for (std::size_t i = 0; i < m; ++i) e[i] = static_cast<std::uint16_t>((*mono)[i] * n);
    out.add_term(e, d);
    return out;
  }
  if (n > kMaxCofactorDim)
    throw Error(ErrorKind::DimensionTooLarge,
                "irreducible block of size " + std::to_string(n) + " exceeds " + std::to_string(kMaxCofactorDim));
  return CofactorExpansion(block, n, f, m).run();
}

}  // namespace

FactoredDeterminant pencil_det_factored(const GramPencil& p) {
  const std::size_t d = p.dim;
  FactoredDeterminant out;
  out.num_vars = p.num_vars;
  out.constant = p.field.one();
  if (d == 0) return out;
  UnionFind uf(2 * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (!p.at(i, j).is_zero()) uf.unite(i, d + j);
  std::map<std::size_t, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> comps;
  for (std::size_t i = 0; i < d; ++i) comps[uf.find(i)].first.push_back(i);
  for (std::size_t j = 0; j < d; ++j) comps[uf.find(d + j)].second.push_back(j);
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> blocks;
  for (auto& [root, rc] : comps) {
    if (rc.first.size() != rc.second.size()) {
      out.constant = p.field.zero();
      out.factors.clear();
      return out;
    }
    blocks.push_back(std::move(rc));
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.first.front() < b.first.front(); });
  std::vector<std::size_t> row_order, col_order;
  for (const auto& [rows, cols] : blocks) {
    row_order.insert(row_order.end(), rows.begin(), rows.end());
    col_order.insert(col_order.end(), cols.begin(), cols.end());
  }
  if (permutation_sign(row_order) * permutation_sign(col_order) < 0) out.constant = -out.constant;
  for (const auto& [rows, cols] : blocks) {
    const std::size_t n = rows.size();
    std::vector<const MultiPoly*> block(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) block[a * n + b] = &p.at(rows[a], cols[b]);
    MultiPoly det = block_determinant(block, n, p.field, p.num_vars);
    if (det.is_zero()) {
      out.constant = p.field.zero();
      out.factors.clear();
      return out;
    }
    // Fold constant factors into the leading scalar.
    if (det.total_degree() == 0) out.constant *= det.terms().begin()->second;
    else out.factors.push_back(std::move(det));
  }
  return out;
}

MultiPoly pencil_det(const GramPencil& p) {
  auto f = pencil_det_factored(p);
  if (f.identically_zero()) return MultiPoly(p.field, p.num_vars);
  return f.expand();
}

// ---- non-vanishing points ----

namespace {

std::uint64_t checked_power(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > kMaxExhaustivePoints / base) return kMaxExhaustivePoints + 1;
    out *= base;
  }
  return out;
}

// Lexicographic scan (first coordinate most significant) over values^m.
std::optional<Vector> scan(const std::vector<MultiPoly>& factors, std::size_t m, const std::vector<Scalar>& values) {
  const std::size_t k = values.size();
  if (checked_power(k, m) > kMaxExhaustivePoints)
    throw Error(ErrorKind::SearchSpaceTooLarge,
                std::to_string(k) + "^" + std::to_string(m) + " points exceed the search bound");
  std::vector<std::size_t> idx(m, 0);
  Vector point(m);
  while (true) {
    for (std::size_t i = 0; i < m; ++i) point[i] = values[idx[i]];
    bool ok = true;
    for (const auto& f : factors)
      if (f.evaluate(point).is_zero()) {
        ok = false;
        break;
      }
    if (ok) return point;
    std::size_t pos = m;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < k) break;
      idx[pos] = 0;
      if (pos == 0) return std::nullopt;
    }
    if (m == 0) return std::nullopt;
  }
}

std::vector<Scalar> candidate_values(const Field& f, unsigned degree) {
  std::vector<Scalar> out;
  if (!f.is_finite()) {
    for (unsigned i = 0; i <= degree; ++i) out.push_back(f.from_int(i));
    return out;
  }
  std::uint64_t count = f.order() > degree ? degree + 1 : f.order();
  for (std::uint64_t c = 0; c < count; ++c) out.push_back(f.element(static_cast<std::uint32_t>(c)));
  return out;
}

// t_var := c, keeping the variable count.
MultiPoly substitute(const MultiPoly& p, std::size_t var, const Scalar& c) {
  MultiPoly out(p.field(), p.num_vars());
  for (const auto& [e, coeff] : p.terms()) {
    Exponent f = e;
    Scalar v = coeff;
    for (std::uint16_t k = 0; k < e[var]; ++k) v *= c;
    f[var] = 0;
    out.add_term(f, v);
  }
  return out;
}

// Valid when values has more than deg entries: choosing the smallest value
// that keeps every factor nonzero, one coordinate at a time, reproduces the
// lexicographically first grid point without walking the grid.
Vector greedy_point(std::vector<MultiPoly> factors, std::size_t m, const std::vector<Scalar>& values) {
  Vector point;
  for (std::size_t i = 0; i < m; ++i) {
    bool chosen = false;
    for (const auto& c : values) {
      std::vector<MultiPoly> next;
      bool ok = true;
      for (const auto& f : factors) {
        next.push_back(substitute(f, i, c));
        if (next.back().is_zero()) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      factors = std::move(next);
      point.push_back(c);
      chosen = true;
      break;
    }
    if (!chosen) throw Error(ErrorKind::InvalidArgument, "grid smaller than the degree bound");
  }
  return point;
}

std::optional<Vector> find_point(const std::vector<MultiPoly>& factors, std::size_t m, const Field& f, unsigned deg) {
  const auto values = candidate_values(f, deg);
  auto pt = values.size() > deg ? std::optional<Vector>(greedy_point(factors, m, values)) : scan(factors, m, values);
  if (pt)
    for (const auto& p : factors)
      if (p.evaluate(*pt).is_zero()) throw Error(ErrorKind::InvalidArgument, "search returned a zero of the polynomial");
  return pt;
}

std::vector<MultiPoly> lift_factors(const std::vector<MultiPoly>& factors, const Field& target) {
  std::vector<MultiPoly> out;
  for (const auto& p : factors) {
    if (p.field() == target) {
      out.push_back(p);
      continue;
    }
    out.push_back(p.mapped(FieldEmbedding(p.field(), target)));
  }
  return out;
}

}  // namespace

NonvanishingPoint nonvanishing_point(const FactoredDeterminant& d, const Field& f) {
  NonvanishingPoint res;
  if (d.identically_zero()) return res;
  const std::size_t m = d.num_vars;
  const unsigned deg = d.total_degree();
  auto factors = lift_factors(d.factors, f);
  // More than deg values per coordinate: a nonzero polynomial cannot vanish on the whole grid.
  if (auto pt = find_point(factors, m, f, deg)) {
    res.status = NonvanishingPoint::Status::Found;
    res.point = std::move(*pt);
    res.point_field = f;
    res.extension_degree = 1;
    return res;
  }
  if (!f.is_finite()) throw Error(ErrorKind::InvalidArgument, "grid search failed over an infinite field");
  res.status = NonvanishingPoint::Status::NoneOverField;
  res.extension_degree = 0;
  for (std::uint32_t r = 2; r <= 3; ++r) {
    Field ext = Field::standard_extension(f.characteristic(), f.degree() * r);
    auto lifted = lift_factors(factors, ext);
    if (auto pt = find_point(lifted, m, ext, deg)) {
      res.point = std::move(*pt);
      res.point_field = ext;
      res.extension_degree = r;
      return res;
    }
  }
  return res;
}

NonvanishingPoint nonvanishing_point(const MultiPoly& p, const Field& f) {
  FactoredDeterminant d;
  d.num_vars = p.num_vars();
  d.constant = f.one();
  if (p.is_zero()) d.constant = f.zero();
  else d.factors.push_back(p);
  return nonvanishing_point(d, f);
}

}  // namespace gradsym
