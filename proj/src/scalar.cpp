#include "hopfgal/scalar.hpp"

#include <cctype>

#include "hopfgal/errors.hpp"

namespace hopfgal {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Domain Domain::prime(std::uint32_t p) {
  if (!is_prime(p)) throw FormatError("modulus " + std::to_string(p) + " is not prime");
  return Domain(DomainKind::Prime, p);
}

std::string Domain::name() const {
  switch (kind_) {
    case DomainKind::Rational: return "Q";
    case DomainKind::Integer: return "Z";
    case DomainKind::Prime: return "F" + std::to_string(p_);
  }
  return "?";
}

namespace {

std::uint64_t mod_reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

Scalar::Scalar(Domain d, long v) : dom_(d) {
  if (d.kind() == DomainKind::Prime) {
    r_ = mod_reduce(mpz_class(v), d.modulus());
  } else {
    q_ = v;
  }
}

Scalar::Scalar(Domain d, const mpq_class& v) : dom_(d) {
  switch (d.kind()) {
    case DomainKind::Rational:
      q_ = v;
      break;
    case DomainKind::Integer:
      if (v.get_den() != 1) throw FormatError("non-integral value " + v.get_str() + " in Z");
      q_ = v;
      break;
    case DomainKind::Prime: {
      std::uint64_t den = mod_reduce(v.get_den(), d.modulus());
      if (den == 0)
        throw FormatError("denominator of " + v.get_str() + " vanishes mod " +
                          std::to_string(d.modulus()));
      std::uint64_t num = mod_reduce(v.get_num(), d.modulus());
      r_ = num * mod_pow(den, d.modulus() - 2, d.modulus()) % d.modulus();
      break;
    }
  }
}

Scalar Scalar::parse(Domain d, std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw FormatError("empty scalar string");
  if (s.front() == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw FormatError("bad scalar \"" + std::string(text) + "\"");
  if (q.get_den() == 0) throw FormatError("zero denominator in \"" + std::string(text) + "\"");
  q.canonicalize();
  return Scalar(d, q);
}

bool Scalar::is_zero() const {
  return dom_.kind() == DomainKind::Prime ? r_ == 0 : sgn(q_) == 0;
}

bool Scalar::is_one() const {
  return dom_.kind() == DomainKind::Prime ? r_ == 1 : q_ == 1;
}

mpq_class Scalar::to_rational() const {
  if (dom_.kind() == DomainKind::Prime) return mpq_class(mpz_class(static_cast<unsigned long>(r_)));
  return q_;
}

void Scalar::check(const Scalar& o) const {
  if (!(dom_ == o.dom_))
    throw DomainMismatch("scalar domains differ: " + dom_.name() + " vs " + o.dom_.name());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check(o);
  Scalar r(dom_);
  if (dom_.kind() == DomainKind::Prime) {
    r.r_ = (r_ + o.r_) % dom_.modulus();
  } else {
    r.q_ = q_ + o.q_;
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check(o);
  Scalar r(dom_);
  if (dom_.kind() == DomainKind::Prime) {
    r.r_ = (r_ + dom_.modulus() - o.r_) % dom_.modulus();
  } else {
    r.q_ = q_ - o.q_;
  }
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check(o);
  Scalar r(dom_);
  if (dom_.kind() == DomainKind::Prime) {
    r.r_ = r_ * o.r_ % dom_.modulus();
  } else {
    r.q_ = q_ * o.q_;
  }
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r(dom_);
  if (dom_.kind() == DomainKind::Prime) {
    r.r_ = (dom_.modulus() - r_) % dom_.modulus();
  } else {
    r.q_ = -q_;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar r(dom_);
  switch (dom_.kind()) {
    case DomainKind::Prime:
      r.r_ = mod_pow(r_, dom_.modulus() - 2, dom_.modulus());
      break;
    case DomainKind::Rational:
      r.q_ = 1 / q_;
      break;
    case DomainKind::Integer:
      if (abs(q_) != 1) throw UnsupportedDomain("non-unit " + q_.get_str() + " has no inverse in Z");
      r.q_ = q_;
      break;
  }
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check(o);
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (dom_.kind() == DomainKind::Integer) {
    mpz_class a = q_.get_num(), b = o.q_.get_num();
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
      throw UnsupportedDomain("inexact division " + a.get_str() + " / " + b.get_str() + " in Z");
    Scalar r(dom_);
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    r.q_ = c;
    return r;
  }
  return *this * o.inverse();
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar r(dom_, 1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(dom_ == o.dom_)) return false;
  return dom_.kind() == DomainKind::Prime ? r_ == o.r_ : q_ == o.q_;
}

std::string Scalar::to_string() const {
  if (dom_.kind() == DomainKind::Prime) return std::to_string(r_);
  return q_.get_str();
}

}  // namespace hopfgal
