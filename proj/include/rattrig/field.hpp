#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rattrig/errors.hpp"

namespace rattrig {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { rational, prime_field };

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// The active coefficient field: the rationals, or F_p for an odd prime p.
// Fields of characteristic two are rejected at construction; the laws divide
// by 2 and 4 throughout.
struct FieldSpec {
  FieldKind kind = FieldKind::rational;
  std::uint64_t modulus = 0;  // prime_field only

  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec prime(std::uint64_t p);
  // Accepts "rational" or "fp:<p>".
  static FieldSpec parse(std::string_view text);

  std::string to_string() const;
  bool operator==(const FieldSpec&) const = default;
};

// An immutable exact scalar in its field. Rationals are kept reduced with a
// positive denominator; residues are canonical in [0, p-1]. Mixing elements
// of different fields throws FieldMismatch.
class FieldElement {
public:
  FieldElement() : value_(Rational(0)) {}

  static FieldElement from_rational(Rational v) { return FieldElement(std::move(v)); }
  static FieldElement from_int(long long v) { return FieldElement(Rational(v)); }
  // Reduces v into the canonical residue range. p must be an odd prime.
  static FieldElement residue(const Integer& v, std::uint64_t p);

  static FieldElement zero(const FieldSpec& f) { return of(f, 0); }
  static FieldElement one(const FieldSpec& f) { return of(f, 1); }
  // The image of the integer n in the field f.
  static FieldElement of(const FieldSpec& f, const Integer& n);
  static FieldElement ratio_of(const FieldSpec& f, const Integer& num, const Integer& den);
  // Accepts the serialization grammar: "num", "num/den" or "r mod p".
  // A leading U+2212 minus is treated like '-'.
  static FieldElement parse(const FieldSpec& f, std::string_view text);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  const Rational& rational_value() const;
  std::uint64_t residue_value() const;

  std::string to_string() const;
  double to_double() const;  // rational elements only

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

  bool operator==(const FieldElement& other) const;
  bool operator!=(const FieldElement& other) const { return !(*this == other); }

  // Total order within one field (numeric over the rationals, canonical
  // residue order over F_p); used for reproducible output ordering.
  static bool less(const FieldElement& a, const FieldElement& b);

private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
  };

  explicit FieldElement(Rational v) : value_(std::move(v)) {}
  explicit FieldElement(Residue r) : value_(r) {}

  static void require_same_field(const FieldElement& a, const FieldElement& b);

  std::variant<Rational, Residue> value_;
};

// All x in the field with x * x == a, sorted ascending: empty when a is a
// non-square, {0} for a == 0, otherwise a pair {r, -r}.
std::vector<FieldElement> sqrt_in_field(const FieldElement& a);

}  // namespace rattrig
