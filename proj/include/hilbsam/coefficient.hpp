#pragma once

// Exact coefficient fields: arbitrary-precision rationals (GMP) and prime
// fields F_p with p below 2^32.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>

#include "hilbsam/errors.hpp"

namespace hilbsam {

using Integer = mpz_class;
using Rational = mpq_class;

/// Runtime description of the coefficient field of a ring.
struct FieldDescriptor {
  enum class Kind { rational, prime };

  Kind kind = Kind::rational;
  std::uint64_t characteristic = 0;

  static FieldDescriptor rationals() { return {}; }
  static FieldDescriptor prime(std::uint64_t p);

  bool operator==(const FieldDescriptor&) const = default;

  std::string to_string() const {
    return kind == Kind::rational ? "q" : "fp:" + std::to_string(characteristic);
  }
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline FieldDescriptor FieldDescriptor::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p))
    throw PreconditionError("field characteristic " + std::to_string(p) +
                            " is not a prime below 2^32");
  return {Kind::prime, p};
}

/// Element of F_p. Carries its modulus so elements combine without a context.
class ModP {
 public:
  ModP(std::int64_t value, std::uint64_t p) : p_(p) {
    std::int64_t r = value % static_cast<std::int64_t>(p);
    v_ = static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  ModP operator+(const ModP& o) const { return raw((v_ + o.v_) % p_); }
  ModP operator-(const ModP& o) const { return raw((v_ + p_ - o.v_) % p_); }
  ModP operator*(const ModP& o) const { return raw((v_ * o.v_) % p_); }
  ModP operator-() const { return raw((p_ - v_) % p_); }
  ModP operator/(const ModP& o) const { return *this * o.inverse(); }
  ModP& operator+=(const ModP& o) { return *this = *this + o; }
  ModP& operator-=(const ModP& o) { return *this = *this - o; }
  ModP& operator*=(const ModP& o) { return *this = *this * o; }
  ModP& operator/=(const ModP& o) { return *this = *this / o; }
  bool operator==(const ModP& o) const { return v_ == o.v_ && p_ == o.p_; }

  ModP inverse() const {
    if (v_ == 0) throw PreconditionError("division by zero in F_p");
    std::int64_t a = static_cast<std::int64_t>(v_), m = static_cast<std::int64_t>(p_);
    std::int64_t x0 = 1, x1 = 0;
    while (m != 0) {
      std::int64_t q = a / m;
      std::int64_t t = a - q * m;
      a = m;
      m = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    return ModP(x0, p_);
  }

 private:
  ModP() = default;
  ModP raw(std::uint64_t v) const {
    ModP r;
    r.v_ = v;
    r.p_ = p_;
    return r;
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static Rational from_rational(const Rational& q, const FieldDescriptor&) { return q; }
  static Rational from_int(long n, const FieldDescriptor&) { return Rational(n); }
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static bool is_one(const Rational& a) { return a == 1; }
  static bool is_negative(const Rational& a) { return sgn(a) < 0; }
  static std::string to_string(const Rational& a) { return a.get_str(); }
  static FieldDescriptor::Kind kind() { return FieldDescriptor::Kind::rational; }
};

template <>
struct FieldTraits<ModP> {
  static ModP from_rational(const Rational& q, const FieldDescriptor& f) {
    auto reduce = [&](const mpz_class& z) {
      mpz_class r = z % static_cast<unsigned long>(f.characteristic);
      if (r < 0) r += static_cast<unsigned long>(f.characteristic);
      return ModP(static_cast<std::int64_t>(r.get_ui()), f.characteristic);
    };
    ModP den = reduce(q.get_den());
    if (den.value() == 0)
      throw PreconditionError("denominator " + q.get_den().get_str() +
                              " vanishes in " + f.to_string());
    return reduce(q.get_num()) / den;
  }
  static ModP from_int(long n, const FieldDescriptor& f) {
    return ModP(n, f.characteristic);
  }
  static bool is_zero(const ModP& a) { return a.value() == 0; }
  static bool is_one(const ModP& a) { return a.value() == 1; }
  static bool is_negative(const ModP&) { return false; }
  static std::string to_string(const ModP& a) { return std::to_string(a.value()); }
  static FieldDescriptor::Kind kind() { return FieldDescriptor::Kind::prime; }
};

template <class K>
concept Field = std::copyable<K> && requires(K a, K b, const Rational& q,
                                             const FieldDescriptor& f) {
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a == b } -> std::convertible_to<bool>;
  { FieldTraits<K>::from_rational(q, f) } -> std::same_as<K>;
  { FieldTraits<K>::is_zero(a) } -> std::same_as<bool>;
  { FieldTraits<K>::to_string(a) } -> std::same_as<std::string>;
};

/// Binomial coefficient C(n, k) for integer n (possibly negative), k >= 0.
inline Integer binomial(const Integer& n, long k) {
  if (k < 0) return 0;
  Integer num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

}  // namespace hilbsam
