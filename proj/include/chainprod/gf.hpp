#pragma once

// Finite fields GF(p^m) with q = p^m <= 256.
//
// Elements are stored as integer codes 0..q-1: the code of the polynomial
// c_0 + c_1 x + ... + c_{m-1} x^{m-1} is c_0 + c_1 p + ... + c_{m-1} p^{m-1}.
// All arithmetic goes through precomputed tables that are built from the
// polynomial-basis reference implementation in `poly`.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chainprod {

namespace poly {

/// Coefficient vector over GF(p), lowest degree first.
using Coeffs = std::vector<unsigned>;

Coeffs from_code(unsigned code, unsigned p, unsigned m);
unsigned to_code(const Coeffs& c, unsigned p);

/// Reference product of two residues modulo a monic `modulus` of degree m.
Coeffs mul_mod(const Coeffs& a, const Coeffs& b, const Coeffs& modulus, unsigned p);
Coeffs add(const Coeffs& a, const Coeffs& b, unsigned p);

/// Brute-force irreducibility: no monic factor of degree 1..m/2 divides f.
bool is_irreducible(const Coeffs& monic, unsigned p);

}  // namespace poly

enum class ModulusPolicy {
  table_only,  ///< only (p, m) pairs from the built-in table
  search,      ///< fall back to the smallest irreducible modulus
};

namespace detail {
struct FieldTables;
}

/// A finite field; cheap to copy (shares immutable tables).
class Field {
 public:
  /// GF(p^m). Throws std::invalid_argument for non-prime p, m == 0, q > 256,
  /// or (p, m) outside the modulus table under ModulusPolicy::table_only.
  static Field make(unsigned p, unsigned m, ModulusPolicy policy = ModulusPolicy::table_only);

  /// Field from a text tag: "p^m" or a plain prime power "q".
  static Field parse(std::string_view tag);

  /// Field of the given order q (prime power).
  static Field of_order(unsigned q);

  unsigned p() const;
  unsigned m() const;
  unsigned q() const;
  const poly::Coeffs& modulus() const;

  /// "p^m" for extension fields, plain "p" for prime fields.
  std::string tag() const;

  bool is_char2() const { return p() == 2; }

  std::uint8_t add(std::uint8_t a, std::uint8_t b) const;
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const;
  std::uint8_t neg(std::uint8_t a) const;
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const;
  /// Throws std::domain_error when b == 0.
  std::uint8_t div(std::uint8_t a, std::uint8_t b) const;
  /// Throws std::domain_error when a == 0.
  std::uint8_t inv(std::uint8_t a) const;
  std::uint8_t pow(std::uint8_t a, std::uint64_t e) const;

  /// Absolute trace a + a^p + ... + a^{p^{m-1}}; always a prime-subfield code.
  std::uint8_t trace(std::uint8_t a) const;

  /// Smallest code of multiplicative order q - 1.
  std::uint8_t primitive_code() const;

  /// Multiplicative order of a nonzero element.
  unsigned order(std::uint8_t a) const;

  /// Image of the integer n under Z -> GF(p).
  std::uint8_t from_int(long long n) const;

  const detail::FieldTables& tables() const { return *t_; }

  friend bool operator==(const Field& a, const Field& b);

 private:
  explicit Field(std::shared_ptr<const detail::FieldTables> t) : t_(std::move(t)) {}
  std::shared_ptr<const detail::FieldTables> t_;
};

/// Field element bound to its field. Mixed-field arithmetic throws.
class Felt {
 public:
  Felt(Field f, unsigned code);

  const Field& field() const { return f_; }
  std::uint8_t code() const { return v_; }
  poly::Coeffs coeffs() const;
  bool is_zero() const { return v_ == 0; }

  friend Felt operator+(const Felt& a, const Felt& b);
  friend Felt operator-(const Felt& a, const Felt& b);
  friend Felt operator*(const Felt& a, const Felt& b);
  friend Felt operator/(const Felt& a, const Felt& b);
  Felt operator-() const { return Felt(f_, f_.neg(v_)); }
  Felt pow(std::uint64_t e) const { return Felt(f_, f_.pow(v_, e)); }
  Felt inverse() const { return Felt(f_, f_.inv(v_)); }

  friend bool operator==(const Felt& a, const Felt& b) { return a.f_ == b.f_ && a.v_ == b.v_; }

 private:
  Field f_;
  std::uint8_t v_;
};

enum class ArithKind { add, sub, mul, div };

Felt arith(const Felt& a, const Felt& b, ArithKind kind);
Felt trace(const Felt& a);
Felt primitive_element(const Field& f);

bool is_prime(unsigned n);

namespace detail {

struct FieldTables {
  unsigned p = 0;
  unsigned m = 0;
  unsigned q = 0;
  poly::Coeffs modulus;
  std::vector<std::uint8_t> add;  // q*q
  std::vector<std::uint8_t> mul;  // q*q
  std::vector<std::uint8_t> neg;  // q
  std::vector<std::uint8_t> inv;  // q, inv[0] unused
  /// Rows of 16 bytes: mul16[c*16 + x] = c*x for x < q (q <= 16 only).
  std::vector<std::uint8_t> mul16;
};

}  // namespace detail

}  // namespace chainprod
