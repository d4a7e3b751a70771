#include "gradsym/field.hpp"

#include <algorithm>
#include <sstream>

namespace gradsym {

namespace detail {

struct FieldData {
  std::uint32_t p = 0;  // 0 for Q
  std::uint32_t n = 1;
  std::uint64_t q = 0;
  std::vector<std::uint32_t> modulus;
  std::vector<std::uint32_t> pw;  // p^0..p^n
  bool tables = false;
  std::vector<std::uint32_t> log;
  std::vector<std::uint32_t> exp;
};

}  // namespace detail

using detail::FieldData;

namespace {

constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;
constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    std::int64_t tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

poly_fp::Poly decode(const FieldData& f, std::uint32_t code) {
  poly_fp::Poly out(f.n, 0);
  for (std::uint32_t i = 0; i < f.n; ++i) {
    out[i] = code % f.p;
    code /= f.p;
  }
  return out;
}

std::uint32_t encode(const FieldData& f, const poly_fp::Poly& a) {
  std::uint32_t code = 0;
  for (std::size_t i = std::min<std::size_t>(a.size(), f.n); i-- > 0;) code = code * f.p + a[i];
  return code;
}

std::uint32_t poly_mul_code(const FieldData& f, std::uint32_t a, std::uint32_t b) {
  auto prod = poly_fp::mul(decode(f, a), decode(f, b), f.p);
  return encode(f, poly_fp::mod(std::move(prod), f.modulus, f.p));
}

std::uint32_t add_code(const FieldData& f, std::uint32_t a, std::uint32_t b) {
  if (f.n == 1) return static_cast<std::uint32_t>((std::uint64_t{a} + b) % f.p);
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < f.n; ++i) {
    std::uint32_t d = (a % f.p + b % f.p) % f.p;
    out += d * f.pw[i];
    a /= f.p;
    b /= f.p;
  }
  return out;
}

std::uint32_t neg_code(const FieldData& f, std::uint32_t a) {
  if (f.n == 1) return a == 0 ? 0 : f.p - a;
  std::uint32_t out = 0;
  for (std::uint32_t i = 0; i < f.n; ++i) {
    std::uint32_t d = a % f.p;
    out += (d == 0 ? 0 : f.p - d) * f.pw[i];
    a /= f.p;
  }
  return out;
}

std::uint32_t mul_code(const FieldData& f, std::uint32_t a, std::uint32_t b) {
  if (a == 0 || b == 0) return 0;
  if (f.n == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % f.p);
  if (f.tables) {
    std::uint64_t e = (std::uint64_t{f.log[a]} + f.log[b]) % (f.q - 1);
    return f.exp[e];
  }
  return poly_mul_code(f, a, b);
}

std::uint32_t pow_code(const FieldData& f, std::uint32_t a, std::uint64_t e) {
  std::uint32_t result = 1;
  while (e > 0) {
    if (e & 1) result = mul_code(f, result, a);
    a = mul_code(f, a, a);
    e >>= 1;
  }
  return result;
}

std::uint32_t inv_code(const FieldData& f, std::uint32_t a) {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (f.n == 1) return mod_inverse(a, f.p);
  if (f.tables) return f.exp[(f.q - 1 - f.log[a]) % (f.q - 1)];
  return pow_code(f, a, f.q - 2);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void build_tables(FieldData& f) {
  const std::uint64_t group = f.q - 1;
  auto factors = prime_factors(group);
  std::uint32_t g = 0;
  for (std::uint32_t cand = 2; cand < f.q; ++cand) {
    bool primitive = true;
    for (auto r : factors) {
      if (pow_code(f, cand, group / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }
  f.exp.assign(group, 0);
  f.log.assign(f.q, 0);
  std::uint32_t x = 1;
  for (std::uint64_t i = 0; i < group; ++i) {
    f.exp[i] = x;
    f.log[x] = static_cast<std::uint32_t>(i);
    x = poly_mul_code(f, x, g);
  }
  f.tables = true;
}

std::string poly_to_string(const std::vector<std::uint32_t>& c) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c[i];
    } else {
      if (c[i] != 1) os << c[i] << '*';
      os << 't';
      if (i > 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace poly_fp {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  Poly mm = m;
  trim(mm);
  if (mm.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial modulus is zero");
  const std::size_t dm = mm.size() - 1;
  const std::uint32_t lead_inv = mod_inverse(mm.back(), p);
  while (a.size() > dm) {
    std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      std::uint64_t sub = factor * mm[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  Poly out(acc.begin(), acc.end());
  trim(out);
  return out;
}

Poly sub(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint32_t x = i < a.size() ? a[i] : 0;
    std::uint32_t y = i < b.size() ? b[i] : 0;
    out[i] = (x + p - y) % p;
  }
  trim(out);
  return out;
}

Poly gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::uint64_t li = mod_inverse(a.back(), p);
    for (auto& c : a) c = static_cast<std::uint32_t>(c * li % p);
  }
  return a;
}

std::optional<Poly> find_factor(const Poly& f_in, std::uint32_t p) {
  Poly f = f_in;
  trim(f);
  const std::size_t n = f.size() - 1;
  if (n <= 1) return std::nullopt;
  if (n <= 6) {
    // Exhaustive search over monic candidates of degree 1..n/2.
    for (std::size_t d = 1; d <= n / 2; ++d) {
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < d; ++i) count *= p;
      for (std::uint64_t code = 0; code < count; ++code) {
        Poly h(d + 1, 0);
        std::uint64_t c = code;
        for (std::size_t i = 0; i < d; ++i) {
          h[i] = static_cast<std::uint32_t>(c % p);
          c /= p;
        }
        h[d] = 1;
        if (mod(f, h, p).empty()) return h;
      }
    }
    return std::nullopt;
  }
  // gcd(x^(p^i) - x, f) for i <= n/2 exposes every factor of degree <= n/2.
  Poly x{0, 1};
  Poly power = x;
  for (std::size_t i = 1; i <= n / 2; ++i) {
    Poly acc{1};
    Poly base = power;
    for (std::uint32_t e = p; e > 0; e >>= 1) {
      if (e & 1) acc = mod(mul(acc, base, p), f, p);
      base = mod(mul(base, base, p), f, p);
    }
    power = acc;
    Poly g = gcd(f, sub(power, x, p), p);
    if (g.size() > 1) return g;
  }
  return std::nullopt;
}

}  // namespace poly_fp

// ---- Field ----

Field Field::rationals() {
  static const Field q = [] {
    auto d = std::make_shared<FieldData>();
    d->p = 0;
    d->n = 1;
    d->q = 0;
    return Field(std::move(d));
  }();
  return q;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  if (p >= kMaxOrder) throw Error(ErrorKind::InvalidArgument, "characteristic too large");
  auto d = std::make_shared<FieldData>();
  d->p = p;
  d->n = 1;
  d->q = p;
  d->pw = {1, p};
  return Field(std::move(d));
}

Field Field::extension(std::uint32_t p, const std::vector<std::int64_t>& modulus) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  poly_fp::Poly m;
  for (auto c : modulus) {
    std::int64_t r = c % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    m.push_back(static_cast<std::uint32_t>(r));
  }
  poly_fp::trim(m);
  if (m.size() < 2) throw Error(ErrorKind::InvalidArgument, "modulus must have degree >= 1");
  if (m.back() != 1) throw Error(ErrorKind::InvalidArgument, "modulus must be monic");
  const std::uint32_t n = static_cast<std::uint32_t>(m.size() - 1);
  if (n == 1) return prime(p);
  if (auto factor = poly_fp::find_factor(m, p)) {
    throw Error(ErrorKind::ReducibleModulus,
                "modulus " + poly_to_string(m) + " has factor " + poly_to_string(*factor) + " over F_" +
                    std::to_string(p));
  }
  auto d = std::make_shared<FieldData>();
  d->p = p;
  d->n = n;
  std::uint64_t q = 1;
  d->pw.push_back(1);
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q >= kMaxOrder) throw Error(ErrorKind::InvalidArgument, "field order exceeds 2^31");
    d->pw.push_back(static_cast<std::uint32_t>(q));
  }
  d->q = q;
  d->modulus = m;
  if (q <= kTableLimit) build_tables(*d);
  return Field(std::move(d));
}

Field Field::standard_extension(std::uint32_t p, std::uint32_t n) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be positive");
  if (n == 1) return prime(p);
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < n; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    poly_fp::Poly m(n + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < n; ++i) {
      m[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    m[n] = 1;
    if (m[0] == 0) continue;
    if (!poly_fp::find_factor(m, p)) return extension(p, std::vector<std::int64_t>(m.begin(), m.end()));
  }
  throw Error(ErrorKind::InvalidArgument, "no irreducible polynomial found");
}

Field Field::make(std::uint32_t characteristic, const std::optional<std::vector<std::int64_t>>& modulus) {
  if (characteristic == 0) {
    if (modulus && modulus->size() > 2)
      throw Error(ErrorKind::InvalidArgument, "extensions of Q are not supported");
    return rationals();
  }
  if (!modulus) return prime(characteristic);
  return extension(characteristic, *modulus);
}

std::uint32_t Field::characteristic() const { return data_->p; }
std::uint32_t Field::degree() const { return data_->n; }
const std::vector<std::uint32_t>& Field::modulus() const { return data_->modulus; }
bool Field::is_finite() const { return data_->p != 0; }
std::uint64_t Field::order() const { return data_->q; }

Field Field::prime_field() const {
  if (!is_finite()) return *this;
  if (data_->n == 1) return *this;
  return prime(data_->p);
}

Scalar Field::zero() const {
  if (is_finite()) return Scalar(*this, std::uint32_t{0});
  return Scalar(*this, mpq_class(0));
}

Scalar Field::one() const {
  if (is_finite()) return Scalar(*this, std::uint32_t{1});
  return Scalar(*this, mpq_class(1));
}

Scalar Field::from_int(std::int64_t v) const {
  if (!is_finite()) return Scalar(*this, mpq_class(static_cast<long>(v)));
  std::int64_t r = v % static_cast<std::int64_t>(data_->p);
  if (r < 0) r += data_->p;
  return Scalar(*this, static_cast<std::uint32_t>(r));
}

Scalar Field::from_rational(const mpq_class& v) const {
  if (!is_finite()) {
    mpq_class c = v;
    c.canonicalize();
    return Scalar(*this, std::move(c));
  }
  mpz_class p = data_->p;
  mpz_class num = v.get_num() % p;
  mpz_class den = v.get_den() % p;
  if (num < 0) num += p;
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "denominator divisible by characteristic");
  return from_int(num.get_si()) / from_int(den.get_si());
}

Scalar Field::element(std::uint32_t code) const {
  if (!is_finite()) throw Error(ErrorKind::InvalidArgument, "element codes exist only for finite fields");
  if (code >= data_->q) throw Error(ErrorKind::IndexOutOfRange, "element code out of range");
  return Scalar(*this, code);
}

Scalar Field::from_coeffs(const std::vector<std::int64_t>& coeffs) const {
  if (!is_finite()) throw Error(ErrorKind::InvalidArgument, "coefficient lists are for finite fields");
  poly_fp::Poly a;
  for (auto c : coeffs) {
    std::int64_t r = c % static_cast<std::int64_t>(data_->p);
    if (r < 0) r += data_->p;
    a.push_back(static_cast<std::uint32_t>(r));
  }
  poly_fp::trim(a);
  if (data_->n > 1) a = poly_fp::mod(std::move(a), data_->modulus, data_->p);
  else if (a.size() > 1)
    throw Error(ErrorKind::InvalidArgument, "prime field elements take a single coefficient");
  return Scalar(*this, encode(*data_, a));
}

Scalar Field::generator() const {
  if (!is_finite()) throw Error(ErrorKind::InvalidArgument, "Q has no generator");
  if (data_->n == 1) return one();
  return Scalar(*this, data_->p);
}

Scalar Field::parse(const std::string& text) const {
  if (!is_finite()) {
    try {
      mpq_class v(text, 10);
      if (v.get_den() == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
      v.canonicalize();
      return Scalar(*this, std::move(v));
    } catch (const std::invalid_argument&) {
      throw Error(ErrorKind::ParseError, "not a rational number: '" + text + "'");
    }
  }
  try {
    std::size_t pos = 0;
    long long v = std::stoll(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return from_int(v);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::ParseError, "not an integer: '" + text + "'");
  }
}

std::string Field::name() const {
  if (!data_) return "<null>";
  if (!is_finite()) return "Q";
  return "F_" + std::to_string(data_->q);
}

bool Field::operator==(const Field& other) const {
  if (data_ == other.data_) return true;
  if (!data_ || !other.data_) return false;
  return data_->p == other.data_->p && data_->n == other.data_->n && data_->modulus == other.data_->modulus;
}

// ---- Scalar ----

void Scalar::require_same(const Scalar& o) const {
  if (field_.data_ == o.field_.data_ && field_.data_) return;
  if (!field_.data_ || !o.field_.data_ || !(field_ == o.field_))
    throw Error(ErrorKind::FieldMismatch, field_.name() + " vs " + o.field_.name());
}

bool Scalar::is_zero() const {
  if (auto c = std::get_if<std::uint32_t>(&v_)) return *c == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const {
  if (auto c = std::get_if<std::uint32_t>(&v_)) return *c == 1;
  return std::get<mpq_class>(v_) == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same(o);
  if (field_.is_finite()) return Scalar(field_, add_code(*field_.data_, std::get<0>(v_), std::get<0>(o.v_)));
  return Scalar(field_, mpq_class(std::get<1>(v_) + std::get<1>(o.v_)));
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same(o);
  if (field_.is_finite()) {
    const auto& f = *field_.data_;
    return Scalar(field_, add_code(f, std::get<0>(v_), neg_code(f, std::get<0>(o.v_))));
  }
  return Scalar(field_, mpq_class(std::get<1>(v_) - std::get<1>(o.v_)));
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same(o);
  if (field_.is_finite()) return Scalar(field_, mul_code(*field_.data_, std::get<0>(v_), std::get<0>(o.v_)));
  return Scalar(field_, mpq_class(std::get<1>(v_) * std::get<1>(o.v_)));
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same(o);
  return *this * o.inv();
}

Scalar Scalar::operator-() const {
  if (field_.is_finite()) return Scalar(field_, neg_code(*field_.data_, std::get<0>(v_)));
  return Scalar(field_, mpq_class(-std::get<1>(v_)));
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (field_.is_finite()) return Scalar(field_, inv_code(*field_.data_, std::get<0>(v_)));
  return Scalar(field_, mpq_class(1 / std::get<1>(v_)));
}

Scalar Scalar::pow(std::uint64_t e) const {
  if (field_.is_finite()) return Scalar(field_, pow_code(*field_.data_, std::get<0>(v_), e));
  Scalar result = field_.one();
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Scalar::operator==(const Scalar& o) const {
  require_same(o);
  return v_ == o.v_;
}

std::uint32_t Scalar::code() const {
  if (!field_.is_finite()) throw Error(ErrorKind::InvalidArgument, "rationals have no element code");
  return std::get<0>(v_);
}

const mpq_class& Scalar::rational() const {
  if (field_.is_finite()) throw Error(ErrorKind::InvalidArgument, "not a rational scalar");
  return std::get<1>(v_);
}

std::vector<std::uint32_t> Scalar::coeffs() const { return decode(*field_.data_, code()); }

std::string Scalar::to_string() const {
  if (!field_.valid()) return "<null>";
  if (!field_.is_finite()) return std::get<1>(v_).get_str();
  if (field_.degree() == 1) return std::to_string(std::get<0>(v_));
  return poly_to_string(coeffs());
}

Scalar frobenius(const Scalar& x) {
  if (!x.field().is_finite()) throw Error(ErrorKind::CharacteristicZero, "Frobenius needs prime characteristic");
  return x.pow(x.field().characteristic());
}

// ---- FieldEmbedding ----

FieldEmbedding::FieldEmbedding(const Field& source, const Field& target) : source_(source), target_(target) {
  if (source.characteristic() != target.characteristic())
    throw Error(ErrorKind::FieldMismatch, "cannot embed " + source.name() + " into " + target.name());
  if (!source.is_finite() || source.degree() == 1 || source == target) return;
  if (target.degree() % source.degree() != 0)
    throw Error(ErrorKind::FieldMismatch, "cannot embed " + source.name() + " into " + target.name());
  const auto& m = source.modulus();
  for (std::uint32_t code = 0; code < target.order(); ++code) {
    Scalar x = target.element(code);
    Scalar acc = target.zero();
    for (std::size_t i = m.size(); i-- > 0;) acc = acc * x + target.from_int(m[i]);
    if (acc.is_zero()) {
      generator_image_ = x;
      return;
    }
  }
  throw Error(ErrorKind::FieldMismatch, "no root of the source modulus in " + target.name());
}

Scalar FieldEmbedding::operator()(const Scalar& x) const {
  if (x.field() != source_) throw Error(ErrorKind::FieldMismatch, "embedding applied to foreign scalar");
  if (!source_.is_finite()) return target_.from_rational(x.rational());
  if (source_ == target_) return x;
  if (source_.degree() == 1) return target_.from_int(x.code());
  auto c = x.coeffs();
  Scalar acc = target_.zero();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * *generator_image_ + target_.from_int(c[i]);
  return acc;
}

}  // namespace gradsym
