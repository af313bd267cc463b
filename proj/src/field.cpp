#include "rattrig/field.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

namespace rattrig {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 add_mod(u64 a, u64 b, u64 p) {
  u128 s = u128(a) + b;
  return u64(s >= p ? s - p : s);
}

u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

u64 mul_mod(u64 a, u64 b, u64 p) { return u64(u128(a) * b % p); }

u64 pow_mod(u64 base, u64 exp, u64 p) {
  u64 result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 p) {
  if (a == 0) throw DivisionByZero("division by zero in F_" + std::to_string(p));
  return pow_mod(a, p - 2, p);  // Fermat; p is prime
}

// Smaller-root-first square root in F_p via Tonelli-Shanks, with the p = 3
// (mod 4) shortcut. Deterministic: the non-residue search takes the smallest
// witness. Returns p as the "no root" sentinel.
u64 sqrt_mod(u64 a, u64 p) {
  if (a == 0) return 0;
  if (pow_mod(a, (p - 1) / 2, p) != 1) return p;  // Euler criterion: non-residue
  u64 r;
  if (p % 4 == 3) {
    r = pow_mod(a, (p + 1) / 4, p);
  } else {
    u64 q = p - 1, s = 0;
    while (q % 2 == 0) {
      q /= 2;
      ++s;
    }
    u64 z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
    u64 m = s;
    u64 c = pow_mod(z, q, p);
    u64 t = pow_mod(a, q, p);
    r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
      u64 i = 0, t2 = t;
      while (t2 != 1) {
        t2 = mul_mod(t2, t2, p);
        ++i;
      }
      u64 b = pow_mod(c, u64(1) << (m - i - 1), p);
      m = i;
      c = mul_mod(b, b, p);
      t = mul_mod(t, c, p);
      r = mul_mod(r, b, p);
    }
  }
  return std::min(r, p - r);
}

Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);  // reduces and keeps den > 0
}

// Replace U+2212 (minus sign) with '-' so both spellings parse.
std::string normalize_minus(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

Integer parse_integer(std::string_view text) {
  if (text.empty()) throw ParseError("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw ParseError("sign without digits: '" + std::string(text) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw ParseError("bad integer literal: '" + std::string(text) + "'");
  }
  return Integer(std::string(text));
}

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1, s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // This witness set decides primality for every n < 2^64.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (u64 i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(u64 p) {
  if (p == 2)
    throw InvalidField("fields of characteristic two are not supported");
  if (p < 3 || !is_prime_u64(p))
    throw InvalidField("modulus " + std::to_string(p) + " is not an odd prime");
  FieldSpec f;
  f.kind = FieldKind::prime_field;
  f.modulus = p;
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string s = trim(text);
  if (s == "rational") return rationals();
  if (s.rfind("fp:", 0) == 0) {
    u64 p = 0;
    const char* begin = s.data() + 3;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, p);
    if (ec != std::errc() || ptr != end)
      throw ParseError("bad field modulus in '" + s + "'");
    return prime(p);
  }
  throw ParseError("unknown field '" + s + "' (expected 'rational' or 'fp:<p>')");
}

std::string FieldSpec::to_string() const {
  return kind == FieldKind::rational ? "rational" : "fp:" + std::to_string(modulus);
}

FieldElement FieldElement::residue(const Integer& v, u64 p) {
  if (p < 3 || p % 2 == 0)
    throw InvalidField("modulus " + std::to_string(p) + " is not an odd prime");
  Integer m = v % Integer(p);
  if (m < 0) m += Integer(p);
  return FieldElement(Residue{m.convert_to<u64>(), p});
}

FieldElement FieldElement::of(const FieldSpec& f, const Integer& n) {
  if (f.kind == FieldKind::rational) return FieldElement(Rational(n));
  return residue(n, f.modulus);
}

FieldElement FieldElement::ratio_of(const FieldSpec& f, const Integer& num, const Integer& den) {
  return of(f, num) / of(f, den);
}

FieldSpec FieldElement::field() const {
  if (is_rational()) return FieldSpec::rationals();
  FieldSpec f;
  f.kind = FieldKind::prime_field;
  f.modulus = std::get<Residue>(value_).modulus;
  return f;
}

bool FieldElement::is_zero() const {
  if (is_rational()) return std::get<Rational>(value_) == 0;
  return std::get<Residue>(value_).value == 0;
}

const Rational& FieldElement::rational_value() const {
  if (!is_rational()) throw FieldMismatch("element is not rational");
  return std::get<Rational>(value_);
}

u64 FieldElement::residue_value() const {
  if (is_rational()) throw FieldMismatch("element is not a prime-field residue");
  return std::get<Residue>(value_).value;
}

std::string FieldElement::to_string() const {
  if (is_rational()) {
    const Rational& q = std::get<Rational>(value_);
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
  }
  const Residue& r = std::get<Residue>(value_);
  return std::to_string(r.value) + " mod " + std::to_string(r.modulus);
}

double FieldElement::to_double() const { return rational_value().convert_to<double>(); }

void FieldElement::require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field())
    throw FieldMismatch("operands from different fields: " + a.field().to_string() + " vs " +
                        b.field().to_string());
}

FieldElement FieldElement::operator-() const {
  if (is_rational()) return FieldElement(Rational(-std::get<Rational>(value_)));
  const Residue& r = std::get<Residue>(value_);
  return FieldElement(Residue{r.value == 0 ? 0 : r.modulus - r.value, r.modulus});
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  FieldElement::require_same_field(a, b);
  if (a.is_rational())
    return FieldElement(Rational(std::get<Rational>(a.value_) + std::get<Rational>(b.value_)));
  const auto& x = std::get<FieldElement::Residue>(a.value_);
  const auto& y = std::get<FieldElement::Residue>(b.value_);
  return FieldElement(FieldElement::Residue{add_mod(x.value, y.value, x.modulus), x.modulus});
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  FieldElement::require_same_field(a, b);
  if (a.is_rational())
    return FieldElement(Rational(std::get<Rational>(a.value_) - std::get<Rational>(b.value_)));
  const auto& x = std::get<FieldElement::Residue>(a.value_);
  const auto& y = std::get<FieldElement::Residue>(b.value_);
  return FieldElement(FieldElement::Residue{sub_mod(x.value, y.value, x.modulus), x.modulus});
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  FieldElement::require_same_field(a, b);
  if (a.is_rational())
    return FieldElement(Rational(std::get<Rational>(a.value_) * std::get<Rational>(b.value_)));
  const auto& x = std::get<FieldElement::Residue>(a.value_);
  const auto& y = std::get<FieldElement::Residue>(b.value_);
  return FieldElement(FieldElement::Residue{mul_mod(x.value, y.value, x.modulus), x.modulus});
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  FieldElement::require_same_field(a, b);
  if (a.is_rational()) {
    const Rational& num = std::get<Rational>(a.value_);
    const Rational& den = std::get<Rational>(b.value_);
    if (den == 0) throw DivisionByZero("rational division by zero");
    return FieldElement(Rational(num / den));
  }
  const auto& x = std::get<FieldElement::Residue>(a.value_);
  const auto& y = std::get<FieldElement::Residue>(b.value_);
  u64 inv = inv_mod(y.value, x.modulus);
  return FieldElement(FieldElement::Residue{mul_mod(x.value, inv, x.modulus), x.modulus});
}

bool FieldElement::operator==(const FieldElement& other) const {
  require_same_field(*this, other);
  if (is_rational()) return std::get<Rational>(value_) == std::get<Rational>(other.value_);
  return std::get<Residue>(value_).value == std::get<Residue>(other.value_).value;
}

bool FieldElement::less(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  if (a.is_rational()) return std::get<Rational>(a.value_) < std::get<Rational>(b.value_);
  return std::get<Residue>(a.value_).value < std::get<Residue>(b.value_).value;
}

FieldElement FieldElement::parse(const FieldSpec& f, std::string_view text) {
  std::string s = trim(normalize_minus(text));
  if (s.empty()) throw ParseError("empty field element");

  if (auto pos = s.find(" mod "); pos != std::string::npos) {
    if (f.kind != FieldKind::prime_field)
      throw FieldMismatch("residue literal '" + s + "' in a rational context");
    Integer r = parse_integer(trim(std::string_view(s).substr(0, pos)));
    Integer p = parse_integer(trim(std::string_view(s).substr(pos + 5)));
    if (p != Integer(f.modulus))
      throw FieldMismatch("residue modulus " + p.str() + " does not match field " +
                          f.to_string());
    return residue(r, f.modulus);
  }

  Integer num, den = 1;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = parse_integer(std::string_view(s).substr(0, slash));
    den = parse_integer(std::string_view(s).substr(slash + 1));
  } else {
    num = parse_integer(s);
  }
  if (f.kind == FieldKind::rational) return FieldElement(make_rational(num, den));
  return ratio_of(f, num, den);
}

std::vector<FieldElement> sqrt_in_field(const FieldElement& a) {
  if (a.is_zero()) return {a.field().kind == FieldKind::rational
                               ? FieldElement::from_int(0)
                               : FieldElement::of(a.field(), 0)};
  if (a.is_rational()) {
    const Rational& q = a.rational_value();
    if (q < 0) return {};
    Integer num = numerator(q), den = denominator(q);
    Integer rn = sqrt(num), rd = sqrt(den);
    if (rn * rn != num || rd * rd != den) return {};
    Rational root(rn, rd);
    return {FieldElement::from_rational(-root), FieldElement::from_rational(root)};
  }
  u64 p = a.field().modulus;
  u64 r = sqrt_mod(a.residue_value(), p);
  if (r == p) return {};
  return {FieldElement::residue(Integer(r), p), FieldElement::residue(Integer(p - r), p)};
}

}  // namespace rattrig
