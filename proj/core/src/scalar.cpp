#include "idealgraph/scalar.hpp"

#include <charconv>

#include "idealgraph/error.hpp"

namespace idealgraph {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d <= p / d; ++d)
    if (p % d == 0) return false;
  return true;
}

mpz_class parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(Errc::parse_error, "empty number");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw Error(Errc::parse_error, "bad number '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') throw Error(Errc::parse_error, "bad number '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

}  // namespace

Field Field::gf(std::uint64_t p) {
  if (!is_prime(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "rational" || text == "Q") return rational();
  if (text.substr(0, 3) == "gf:") {
    auto digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
      throw Error(Errc::parse_error, "bad field '" + std::string(text) + "'");
    return gf(p);
  }
  throw Error(Errc::parse_error, "unknown field '" + std::string(text) + "' (expected rational or gf:P)");
}

std::string Field::describe() const {
  return is_rational() ? "rational" : "gf:" + std::to_string(modulus_);
}

Scalar::Scalar(const Field& field, long value) : value_(value), modulus_(field.modulus()) { canonicalize(); }

Scalar::Scalar(const Field& field, const mpq_class& value) : value_(value), modulus_(field.modulus()) {
  canonicalize();
}

Scalar Scalar::parse(const Field& field, std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Scalar(field, mpq_class(parse_integer(text)));
  mpz_class num = parse_integer(text.substr(0, slash));
  mpz_class den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(Errc::division_by_zero, "zero denominator in '" + std::string(text) + "'");
  if (!field.is_rational()) {
    Scalar n(field, mpq_class(num));
    return n * Scalar(field, mpq_class(den)).inverse();
  }
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(field, q);
}

Field Scalar::field() const { return modulus_ == 0 ? Field::rational() : Field::gf(modulus_); }

bool Scalar::is_minus_one() const {
  if (modulus_ == 0) return value_ == -1;
  return value_ == mpq_class(mpz_class(static_cast<unsigned long>(modulus_ - 1)));
}

void Scalar::canonicalize() {
  if (modulus_ == 0) {
    value_.canonicalize();
    return;
  }
  mpz_class p(static_cast<unsigned long>(modulus_));
  value_.canonicalize();
  mpz_class num = value_.get_num();
  mpz_class den = value_.get_den();
  mpz_class r;
  if (den != 1) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw Error(Errc::division_by_zero, "denominator divisible by " + std::to_string(modulus_));
    num *= inv;
  }
  mpz_mod(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  value_ = mpq_class(r);
}

void Scalar::check(const Scalar& o) const {
  if (modulus_ != o.modulus_) throw Error(Errc::field_mismatch, "scalars from different fields");
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.value_ = -out.value_;
  if (modulus_ != 0) out.canonicalize();
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check(o);
  value_ += o.value_;
  if (modulus_ != 0) canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check(o);
  value_ -= o.value_;
  if (modulus_ != 0) canonicalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check(o);
  value_ *= o.value_;
  if (modulus_ != 0) canonicalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
  Scalar out = *this;
  if (modulus_ == 0) {
    out.value_ = 1 / value_;
    return out;
  }
  mpz_class p(static_cast<unsigned long>(modulus_));
  mpz_class inv;
  mpz_class num = value_.get_num();
  mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  out.value_ = mpq_class(inv);
  return out;
}

std::string Scalar::to_string() const { return value_.get_str(); }

}  // namespace idealgraph
