#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace hopfgal {

enum class DomainKind : std::uint8_t { Rational, Prime, Integer };

// Coefficient ring: ℚ, 𝔽p or ℤ.
class Domain {
 public:
  static Domain rationals() { return Domain(DomainKind::Rational, 0); }
  static Domain integers() { return Domain(DomainKind::Integer, 0); }
  // Throws FormatError unless p is prime.
  static Domain prime(std::uint32_t p);

  DomainKind kind() const { return kind_; }
  std::uint32_t modulus() const { return p_; }
  bool is_field() const { return kind_ != DomainKind::Integer; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  Domain(DomainKind k, std::uint32_t p) : kind_(k), p_(p) {}
  DomainKind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

// An exact element of a Domain. Fractions are kept in lowest terms with
// positive denominator (GMP canonical form); residues live in [0, p).
class Scalar {
 public:
  explicit Scalar(Domain d) : dom_(d) {}
  Scalar(Domain d, long v);
  // Maps a rational into the domain. For ℤ the value must be integral; for
  // 𝔽p the denominator must be invertible mod p.
  Scalar(Domain d, const mpq_class& v);

  // Accepts "3", "-1/2", " 7 ".
  static Scalar parse(Domain d, std::string_view text);

  const Domain& domain() const { return dom_; }
  bool is_zero() const;
  bool is_one() const;

  // Value as a rational (residue representative for 𝔽p).
  mpq_class to_rational() const;
  std::uint64_t residue() const { return r_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  // Field division; over ℤ only exact quotients are allowed.
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  bool operator==(const Scalar& o) const;
  std::string to_string() const;

 private:
  void check(const Scalar& o) const;
  Domain dom_;
  mpq_class q_;          // ℚ and ℤ
  std::uint64_t r_ = 0;  // 𝔽p
};

}  // namespace hopfgal
