#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hilbsam/coefficient.hpp"
#include "hilbsam/monomial.hpp"

namespace hilbsam {

/// Ambient polynomial ring: coefficient field and ordered variable names.
struct PolyRing {
  FieldDescriptor field;
  std::vector<std::string> variables;

  std::size_t arity() const { return variables.size(); }

  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = std::find(variables.begin(), variables.end(), name);
    if (it == variables.end()) return std::nullopt;
    return static_cast<std::size_t>(it - variables.begin());
  }

  bool operator==(const PolyRing&) const = default;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

inline PolyRingPtr make_poly_ring(std::vector<std::string> variables,
                                  FieldDescriptor field = FieldDescriptor::rationals()) {
  if (variables.size() > kMaxVariables)
    throw PreconditionError("at most " + std::to_string(kMaxVariables) +
                            " variables are supported");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty()) throw PreconditionError("empty variable name");
    if (!seen.insert(v).second) throw PreconditionError("duplicate variable '" + v + "'");
  }
  return std::make_shared<const PolyRing>(PolyRing{field, std::move(variables)});
}

inline bool same_ring(const PolyRingPtr& a, const PolyRingPtr& b) {
  return a == b || (a && b && *a == *b);
}

template <Field K>
struct Term {
  Monomial monomial;
  K coeff;

  bool operator==(const Term&) const = default;
};

/// Sparse polynomial. Terms are kept sorted descending in degrevlex with no
/// zero coefficients, so equal polynomials have identical term vectors.
template <Field K>
class Polynomial {
 public:
  using Traits = FieldTraits<K>;

  explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial from_terms(PolyRingPtr ring, std::vector<Term<K>> terms) {
    Polynomial p(std::move(ring));
    for (const auto& t : terms)
      if (t.monomial.arity() != p.ring_->arity())
        throw PreconditionError("monomial arity does not match ring");
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  static Polynomial constant(PolyRingPtr ring, const K& c) {
    Monomial one(ring->arity());
    return from_terms(ring, {{one, c}});
  }

  static Polynomial constant(PolyRingPtr ring, long c) {
    K k = Traits::from_int(c, ring->field);
    return constant(std::move(ring), k);
  }

  static Polynomial monomial(PolyRingPtr ring, const Monomial& m, long c = 1) {
    K k = Traits::from_int(c, ring->field);
    return from_terms(std::move(ring), {{m, k}});
  }

  static Polynomial variable(PolyRingPtr ring, std::size_t i) {
    return monomial(ring, Monomial::variable_power(ring->arity(), i, 1));
  }

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<Term<K>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  K one() const { return Traits::from_int(1, ring_->field); }

  /// Highest term under `order`. Requires a nonzero polynomial.
  const Term<K>& leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
    if (order.kind == OrderKind::degrevlex) return terms_.front();
    const Term<K>* best = &terms_.front();
    for (const auto& t : terms_)
      if (order.greater(t.monomial, best->monomial)) best = &t;
    return *best;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.total_degree());
    return d;
  }

  /// Coefficient of m, zero if absent.
  K coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.monomial == m) return t.coeff;
    return Traits::from_int(0, ring_->field);
  }

  Polynomial operator+(const Polynomial& o) const { return combine(o, false); }
  Polynomial operator-(const Polynomial& o) const { return combine(o, true); }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    require_same_ring(o);
    std::vector<Term<K>> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
      for (const auto& b : o.terms_) prod.push_back({a.monomial * b.monomial, a.coeff * b.coeff});
    Polynomial r(ring_);
    r.terms_ = std::move(prod);
    r.canonicalize();
    return r;
  }

  Polynomial scaled(const K& c, const Monomial& m) const {
    Polynomial r(ring_);
    if (Traits::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coeff * c});
    return r;  // multiplication by a monomial preserves the order
  }

  Polynomial pow(unsigned k) const {
    Polynomial r = constant(ring_, 1);
    Polynomial base = *this;
    while (k > 0) {
      if (k & 1u) r = r * base;
      k >>= 1;
      if (k > 0) base = base * base;
    }
    return r;
  }

  /// Divide by the leading coefficient under `order`.
  Polynomial monic(const MonomialOrder& order) const {
    if (is_zero()) return *this;
    K inv = one() / leading_term(order).coeff;
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = t.coeff * inv;
    return r;
  }

  bool operator==(const Polynomial& o) const {
    return same_ring(ring_, o.ring_) && terms_ == o.terms_;
  }

  void require_same_ring(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) throw RingMismatch();
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      bool neg = Traits::is_negative(t.coeff);
      K mag = neg ? -t.coeff : t.coeff;
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      first = false;
      bool unit = Traits::is_one(mag);
      if (!unit || t.monomial.is_one()) {
        os << Traits::to_string(mag);
        if (!t.monomial.is_one()) os << '*';
      }
      bool first_factor = true;
      for (std::size_t i = 0; i < t.monomial.arity(); ++i) {
        unsigned e = t.monomial[i];
        if (e == 0) continue;
        if (!first_factor) os << '*';
        first_factor = false;
        os << ring_->variables[i];
        if (e > 1) os << '^' << e;
      }
    }
    return os.str();
  }

 private:
  static constexpr MonomialOrder kStorage{OrderKind::degrevlex};

  Polynomial combine(const Polynomial& o, bool subtract) const {
    require_same_ring(o);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      int c;
      if (i == terms_.size())
        c = -1;
      else if (j == o.terms_.size())
        c = 1;
      else {
        auto cmp = kStorage.compare(terms_[i].monomial, o.terms_[j].monomial);
        c = cmp > 0 ? 1 : (cmp < 0 ? -1 : 0);
      }
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        const auto& t = o.terms_[j++];
        r.terms_.push_back({t.monomial, subtract ? -t.coeff : t.coeff});
      } else {
        K sum = terms_[i].coeff;
        if (subtract) sum -= o.terms_[j].coeff;
        else sum += o.terms_[j].coeff;
        if (!Traits::is_zero(sum)) r.terms_.push_back({terms_[i].monomial, sum});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term<K>& a, const Term<K>& b) {
      return kStorage.greater(a.monomial, b.monomial);
    });
    std::vector<Term<K>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().monomial == t.monomial)
        out.back().coeff = out.back().coeff + t.coeff;
      else
        out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term<K>& t) { return Traits::is_zero(t.coeff); });
    terms_ = std::move(out);
  }

  PolyRingPtr ring_;
  std::vector<Term<K>> terms_;
};

template <Field K>
Polynomial<K> poly_arith(const Polynomial<K>& p, const Polynomial<K>& q, char op) {
  switch (op) {
    case '+': return p + q;
    case '-': return p - q;
    case '*': return p * q;
  }
  throw PreconditionError(std::string("unknown polynomial operation '") + op + "'");
}

/// p(x + point): moves `point` to the origin.
template <Field K>
Polynomial<K> translate(const Polynomial<K>& p, const std::vector<K>& point) {
  const auto& ring = p.ring();
  const std::size_t n = ring->arity();
  if (point.size() != n) throw PreconditionError("translation point has wrong length");
  // shifted[i][e] = (x_i + a_i)^e, built on demand
  std::vector<std::vector<Polynomial<K>>> shifted(n);
  for (std::size_t i = 0; i < n; ++i) {
    shifted[i].push_back(Polynomial<K>::constant(ring, 1));
  }
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial<K>& {
    while (shifted[i].size() <= e) {
      Polynomial<K> lin = Polynomial<K>::variable(ring, i) + Polynomial<K>::constant(ring, point[i]);
      shifted[i].push_back(shifted[i].back() * lin);
    }
    return shifted[i][e];
  };
  Polynomial<K> result(ring);
  for (const auto& t : p.terms()) {
    Polynomial<K> term = Polynomial<K>::constant(ring, t.coeff);
    for (std::size_t i = 0; i < n; ++i)
      if (t.monomial[i] > 0) term = term * power(i, t.monomial[i]);
    result = result + term;
  }
  return result;
}

/// Partial derivative with respect to variable i.
template <Field K>
Polynomial<K> derivative(const Polynomial<K>& p, std::size_t i) {
  std::vector<Term<K>> out;
  for (const auto& t : p.terms()) {
    unsigned e = t.monomial[i];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(i, e - 1);
    out.push_back({m, t.coeff * FieldTraits<K>::from_int(static_cast<long>(e), p.ring()->field)});
  }
  return Polynomial<K>::from_terms(p.ring(), std::move(out));
}

/// Multiplicity at the origin: least total degree of a term.
template <Field K>
unsigned order_of_vanishing(const Polynomial<K>& p) {
  if (p.is_zero()) throw PreconditionError("order of vanishing of the zero polynomial");
  unsigned d = p.terms().front().monomial.total_degree();
  for (const auto& t : p.terms()) d = std::min(d, t.monomial.total_degree());
  return d;
}

}  // namespace hilbsam
