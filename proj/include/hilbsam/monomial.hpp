#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hilbsam/errors.hpp"

namespace hilbsam {

inline constexpr std::size_t kMaxVariables = 8;

/// Exponent vector with a cached total degree. Fixed capacity keeps it
/// trivially copyable, which matters inside the Buchberger loop.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;

  explicit Monomial(std::size_t arity) : arity_(static_cast<std::uint8_t>(arity)) {
    if (arity > kMaxVariables)
      throw PreconditionError("at most " + std::to_string(kMaxVariables) +
                              " variables are supported");
  }

  Monomial(std::initializer_list<unsigned> exps) : Monomial(exps.size()) {
    std::size_t i = 0;
    for (unsigned e : exps) set(i++, e);
  }

  static Monomial from_exponents(std::span<const unsigned> exps) {
    Monomial m(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
    return m;
  }

  /// x_i^e in a ring of the given arity.
  static Monomial variable_power(std::size_t arity, std::size_t i, unsigned e) {
    Monomial m(arity);
    m.set(i, e);
    return m;
  }

  std::size_t arity() const { return arity_; }
  unsigned total_degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, unsigned e) {
    if (e > 0xFFFF) throw ResourceLimit("exponent exceeds 65535");
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = static_cast<Exponent>(e);
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < arity_; ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  /// Requires divides(o); returns o / *this.
  Monomial quotient_of(const Monomial& o) const {
    Monomial r(arity_);
    for (std::size_t i = 0; i < arity_; ++i) r.exps_[i] = o.exps_[i] - exps_[i];
    r.degree_ = o.degree_ - degree_;
    return r;
  }

  Monomial operator*(const Monomial& o) const {
    check_arity(o);
    Monomial r(arity_);
    for (std::size_t i = 0; i < arity_; ++i) {
      unsigned e = unsigned{exps_[i]} + o.exps_[i];
      if (e > 0xFFFF) throw ResourceLimit("exponent exceeds 65535");
      r.exps_[i] = static_cast<Exponent>(e);
    }
    r.degree_ = degree_ + o.degree_;
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    check_arity(o);
    Monomial r(arity_);
    for (std::size_t i = 0; i < arity_; ++i) r.set(i, std::max(exps_[i], o.exps_[i]));
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < arity_; ++i)
      if (exps_[i] != 0 && o.exps_[i] != 0) return false;
    return true;
  }

  /// Bitmask filter: if (a.mask() & ~b.mask()) != 0 then a does not divide b.
  std::uint64_t divisibility_mask() const {
    if (arity_ == 0) return 0;
    const unsigned bits = 64 / arity_;
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < arity_; ++i) {
      unsigned fill = std::min<unsigned>(exps_[i], bits);
      if (fill == 0) continue;
      std::uint64_t run = fill == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << fill) - 1);
      mask |= run << (i * bits);
    }
    return mask;
  }

  bool operator==(const Monomial& o) const {
    return arity_ == o.arity_ && degree_ == o.degree_ && exps_ == o.exps_;
  }

  void check_arity(const Monomial& o) const {
    if (arity_ != o.arity_) throw PreconditionError("monomial arity mismatch");
  }

 private:
  std::array<Exponent, kMaxVariables> exps_{};
  std::uint8_t arity_ = 0;
  unsigned degree_ = 0;
};

enum class OrderKind { lex, deglex, degrevlex };

inline std::string to_string(OrderKind k) {
  switch (k) {
    case OrderKind::lex: return "lex";
    case OrderKind::deglex: return "deglex";
    case OrderKind::degrevlex: return "degrevlex";
  }
  return "?";
}

/// Total multiplicative order on monomials; the first declared variable is
/// the largest.
struct MonomialOrder {
  OrderKind kind = OrderKind::degrevlex;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    a.check_arity(b);
    const std::size_t n = a.arity();
    if (kind != OrderKind::lex && a.total_degree() != b.total_degree())
      return a.total_degree() <=> b.total_degree();
    if (kind == OrderKind::degrevlex) {
      for (std::size_t i = n; i-- > 0;)
        if (a[i] != b[i]) return b[i] <=> a[i];
      return std::strong_ordering::equal;
    }
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  bool operator==(const MonomialOrder&) const = default;
};

inline std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                              const MonomialOrder& order) {
  return order.compare(a, b);
}

/// All monomials of total degree k in `arity` variables, descending in lex.
inline std::vector<Monomial> monomials_of_degree(std::size_t arity, unsigned k) {
  std::vector<Monomial> out;
  if (arity == 0) {
    if (k == 0) out.emplace_back(0);
    return out;
  }
  std::vector<unsigned> e(arity, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == arity) {
      e[i] = left;
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (unsigned v = left + 1; v-- > 0;) {
      e[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, k);
  return out;
}

}  // namespace hilbsam
