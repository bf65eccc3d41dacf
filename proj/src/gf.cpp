#include "chainprod/gf.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <mutex>
#include <stdexcept>

namespace chainprod {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace poly {

Coeffs from_code(unsigned code, unsigned p, unsigned m) {
  Coeffs c(m, 0);
  for (unsigned i = 0; i < m; ++i) {
    c[i] = code % p;
    code /= p;
  }
  return c;
}

unsigned to_code(const Coeffs& c, unsigned p) {
  unsigned code = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) code = code * p + *it;
  return code;
}

Coeffs add(const Coeffs& a, const Coeffs& b, unsigned p) {
  Coeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    unsigned x = i < a.size() ? a[i] : 0;
    unsigned y = i < b.size() ? b[i] : 0;
    r[i] = (x + y) % p;
  }
  return r;
}

namespace {

// Remainder of `num` divided by the monic polynomial `den`.
Coeffs rem(Coeffs num, const Coeffs& den, unsigned p) {
  const std::size_t dd = den.size() - 1;
  while (num.size() > dd) {
    unsigned lead = num.back();
    if (lead != 0) {
      const std::size_t shift = num.size() - 1 - dd;
      for (std::size_t i = 0; i <= dd; ++i)
        num[shift + i] = (num[shift + i] + (p - lead) * den[i]) % p;
    }
    num.pop_back();
  }
  return num;
}

}  // namespace

Coeffs mul_mod(const Coeffs& a, const Coeffs& b, const Coeffs& modulus, unsigned p) {
  const std::size_t m = modulus.size() - 1;
  Coeffs prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  Coeffs r = rem(std::move(prod), modulus, p);
  r.resize(m, 0);
  return r;
}

bool is_irreducible(const Coeffs& monic, unsigned p) {
  const unsigned m = static_cast<unsigned>(monic.size()) - 1;
  if (m <= 1) return m == 1;
  for (unsigned deg = 1; deg <= m / 2; ++deg) {
    unsigned count = 1;
    for (unsigned i = 0; i < deg; ++i) count *= p;
    for (unsigned low = 0; low < count; ++low) {
      Coeffs f = from_code(low, p, deg);
      f.push_back(1);
      Coeffs r = rem(monic, f, p);
      if (std::all_of(r.begin(), r.end(), [](unsigned c) { return c == 0; })) return false;
    }
  }
  return true;
}

}  // namespace poly

namespace {

// Conway polynomials, lowest degree first.
const std::map<std::pair<unsigned, unsigned>, poly::Coeffs>& conway_table() {
  static const std::map<std::pair<unsigned, unsigned>, poly::Coeffs> table = {
      {{2, 1}, {1, 1}},    {{3, 1}, {1, 1}},       {{5, 1}, {3, 1}},    {{7, 1}, {4, 1}},
      {{11, 1}, {9, 1}},   {{2, 2}, {1, 1, 1}},    {{2, 3}, {1, 1, 0, 1}},
      {{3, 2}, {2, 2, 1}},
  };
  return table;
}

poly::Coeffs search_modulus(unsigned p, unsigned m) {
  unsigned count = 1;
  for (unsigned i = 0; i < m; ++i) count *= p;
  for (unsigned low = 0; low < count; ++low) {
    poly::Coeffs f = poly::from_code(low, p, m);
    f.push_back(1);
    if (poly::is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

std::shared_ptr<const detail::FieldTables> build_tables(unsigned p, unsigned m, poly::Coeffs modulus) {
  auto t = std::make_shared<detail::FieldTables>();
  t->p = p;
  t->m = m;
  t->q = 1;
  for (unsigned i = 0; i < m; ++i) t->q *= p;
  t->modulus = std::move(modulus);
  const unsigned q = t->q;
  t->add.resize(q * q);
  t->mul.resize(q * q);
  t->neg.resize(q);
  t->inv.assign(q, 0);
  std::vector<poly::Coeffs> elems(q);
  for (unsigned a = 0; a < q; ++a) elems[a] = poly::from_code(a, p, m);
  for (unsigned a = 0; a < q; ++a) {
    poly::Coeffs n(m);
    for (unsigned i = 0; i < m; ++i) n[i] = (p - elems[a][i]) % p;
    t->neg[a] = static_cast<std::uint8_t>(poly::to_code(n, p));
    for (unsigned b = 0; b < q; ++b) {
      t->add[a * q + b] = static_cast<std::uint8_t>(poly::to_code(poly::add(elems[a], elems[b], p), p));
      t->mul[a * q + b] =
          static_cast<std::uint8_t>(poly::to_code(poly::mul_mod(elems[a], elems[b], t->modulus, p), p));
    }
  }
  for (unsigned a = 1; a < q; ++a)
    for (unsigned b = 1; b < q; ++b)
      if (t->mul[a * q + b] == 1) t->inv[a] = static_cast<std::uint8_t>(b);
  if (q <= 16) {
    t->mul16.assign(q * 16, 0);
    for (unsigned c = 0; c < q; ++c)
      for (unsigned x = 0; x < q; ++x) t->mul16[c * 16 + x] = t->mul[c * q + x];
  }
  return t;
}

}  // namespace

Field Field::make(unsigned p, unsigned m, ModulusPolicy policy) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
  if (m == 0) throw std::invalid_argument("field extension degree must be >= 1");
  unsigned long long q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > 256) throw std::invalid_argument("field order above 256 is not supported");
  }
  const bool tabulated = conway_table().count({p, m}) > 0;
  if (!tabulated && m > 1 && policy == ModulusPolicy::table_only)
    throw std::invalid_argument("no tabulated modulus for GF(" + std::to_string(p) + "^" + std::to_string(m) +
                                "); use ModulusPolicy::search");
  // Tables are shared between all Field values of the same (p, m).
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const detail::FieldTables>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find({p, m}); it != cache.end()) return Field(it->second);
  poly::Coeffs modulus;
  if (auto it = conway_table().find({p, m}); it != conway_table().end()) {
    modulus = it->second;
  } else if (m == 1) {
    modulus = {0, 1};
  } else {
    modulus = search_modulus(p, m);
  }
  auto t = build_tables(p, m, std::move(modulus));
  cache.emplace(std::pair{p, m}, t);
  return Field(t);
}

Field Field::of_order(unsigned q) {
  if (q < 2) throw std::invalid_argument("field order must be >= 2");
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned m = 0;
  unsigned rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) throw std::invalid_argument("field order " + std::to_string(q) + " is not a prime power");
  return make(p, m, ModulusPolicy::search);
}

Field Field::parse(std::string_view tag) {
  auto to_uint = [&](std::string_view s) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw std::invalid_argument("bad field tag '" + std::string(tag) + "'");
    return v;
  };
  if (auto caret = tag.find('^'); caret != std::string_view::npos)
    return make(to_uint(tag.substr(0, caret)), to_uint(tag.substr(caret + 1)), ModulusPolicy::search);
  return of_order(to_uint(tag));
}

unsigned Field::p() const { return t_->p; }
unsigned Field::m() const { return t_->m; }
unsigned Field::q() const { return t_->q; }
const poly::Coeffs& Field::modulus() const { return t_->modulus; }

std::string Field::tag() const {
  if (m() == 1) return std::to_string(p());
  return std::to_string(p()) + "^" + std::to_string(m());
}

std::uint8_t Field::add(std::uint8_t a, std::uint8_t b) const { return t_->add[a * t_->q + b]; }
std::uint8_t Field::sub(std::uint8_t a, std::uint8_t b) const { return t_->add[a * t_->q + t_->neg[b]]; }
std::uint8_t Field::neg(std::uint8_t a) const { return t_->neg[a]; }
std::uint8_t Field::mul(std::uint8_t a, std::uint8_t b) const { return t_->mul[a * t_->q + b]; }

std::uint8_t Field::inv(std::uint8_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return t_->inv[a];
}

std::uint8_t Field::div(std::uint8_t a, std::uint8_t b) const {
  if (b == 0) throw std::domain_error("division by zero");
  return mul(a, t_->inv[b]);
}

std::uint8_t Field::pow(std::uint8_t a, std::uint64_t e) const {
  std::uint8_t result = 1;
  std::uint8_t base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint8_t Field::trace(std::uint8_t a) const {
  std::uint8_t sum = 0;
  std::uint8_t term = a;
  for (unsigned i = 0; i < m(); ++i) {
    sum = add(sum, term);
    term = pow(term, p());
  }
  return sum;
}

unsigned Field::order(std::uint8_t a) const {
  if (a == 0) throw std::domain_error("order of zero");
  unsigned k = 1;
  for (std::uint8_t x = a; x != 1; x = mul(x, a)) ++k;
  return k;
}

std::uint8_t Field::primitive_code() const {
  for (unsigned a = 1; a < q(); ++a)
    if (order(static_cast<std::uint8_t>(a)) == q() - 1) return static_cast<std::uint8_t>(a);
  throw std::logic_error("field without primitive element");
}

std::uint8_t Field::from_int(long long n) const {
  long long r = n % static_cast<long long>(p());
  if (r < 0) r += p();
  return static_cast<std::uint8_t>(r);
}

bool operator==(const Field& a, const Field& b) {
  return a.t_ == b.t_ || (a.p() == b.p() && a.m() == b.m() && a.modulus() == b.modulus());
}

Felt::Felt(Field f, unsigned code) : f_(std::move(f)), v_(0) {
  if (code >= f_.q())
    throw std::invalid_argument("element code " + std::to_string(code) + " out of range for GF(" + f_.tag() + ")");
  v_ = static_cast<std::uint8_t>(code);
}

poly::Coeffs Felt::coeffs() const { return poly::from_code(v_, f_.p(), f_.m()); }

namespace {
void require_same(const Felt& a, const Felt& b) {
  if (!(a.field() == b.field()))
    throw std::invalid_argument("field mismatch: GF(" + a.field().tag() + ") vs GF(" + b.field().tag() + ")");
}
}  // namespace

Felt operator+(const Felt& a, const Felt& b) {
  require_same(a, b);
  return Felt(a.f_, a.f_.add(a.v_, b.v_));
}
Felt operator-(const Felt& a, const Felt& b) {
  require_same(a, b);
  return Felt(a.f_, a.f_.sub(a.v_, b.v_));
}
Felt operator*(const Felt& a, const Felt& b) {
  require_same(a, b);
  return Felt(a.f_, a.f_.mul(a.v_, b.v_));
}
Felt operator/(const Felt& a, const Felt& b) {
  require_same(a, b);
  return Felt(a.f_, a.f_.div(a.v_, b.v_));
}

Felt arith(const Felt& a, const Felt& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::add: return a + b;
    case ArithKind::sub: return a - b;
    case ArithKind::mul: return a * b;
    case ArithKind::div: return a / b;
  }
  throw std::invalid_argument("unknown arithmetic kind");
}

Felt trace(const Felt& a) { return Felt(a.field(), a.field().trace(a.code())); }

Felt primitive_element(const Field& f) { return Felt(f, f.primitive_code()); }

}  // namespace chainprod
