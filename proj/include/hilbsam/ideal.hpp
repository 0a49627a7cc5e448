#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hilbsam/groebner.hpp"

namespace hilbsam {

/// Finitely generated ideal of a ring context. Generators are nonzero,
/// monic, sorted and free of duplicates.
template <Field K>
class Ideal {
 public:
  Ideal(RingPtr<K> ring, std::vector<Polynomial<K>> gens) : ring_(std::move(ring)) {
    const MonomialOrder order{};
    for (auto& g : gens) {
      if (!same_ring(g.ring(), ring_->base)) throw RingMismatch();
      if (!g.is_zero()) gens_.push_back(g.monic(order));
    }
    std::sort(gens_.begin(), gens_.end(), [](const auto& a, const auto& b) { return less(a, b); });
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  }

  /// The maximal ideal (x_1, ..., x_v) of the origin.
  static Ideal maximal(RingPtr<K> ring) {
    std::vector<Polynomial<K>> gens;
    for (std::size_t i = 0; i < ring->arity(); ++i)
      gens.push_back(Polynomial<K>::variable(ring->base, i));
    return Ideal(ring, std::move(gens));
  }

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<Polynomial<K>>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  /// Generators together with the ring's modulus.
  std::vector<Polynomial<K>> lifted_generators() const { return with_modulus(gens_, *ring_); }

  Colength colength(const ComputeBudget& budget = {}) const {
    return hilbsam::colength(gens_, *ring_, ring_->order, budget);
  }

  bool is_m_primary(const ComputeBudget& budget = {}) const {
    return supported_only_at_origin(gens_, *ring_, budget);
  }

  /// Finite colength of an m-primary ideal; throws otherwise.
  std::uint64_t finite_colength(const ComputeBudget& budget = {}) const {
    auto c = colength(budget);
    if (!c) throw PreconditionError("quotient is infinite-dimensional");
    return *c;
  }

  bool operator==(const Ideal& o) const { return gens_ == o.gens_; }

 private:
  static bool less(const Polynomial<K>& a, const Polynomial<K>& b) {
    const MonomialOrder order{};
    const auto& x = a.terms();
    const auto& y = b.terms();
    for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
      auto c = order.compare(x[i].monomial, y[i].monomial);
      if (c != 0) return c < 0;
    }
    if (x.size() != y.size()) return x.size() < y.size();
    return a.to_string() < b.to_string();
  }

  RingPtr<K> ring_;
  std::vector<Polynomial<K>> gens_;
};

template <Field K>
void require_same_ring(const Ideal<K>& a, const Ideal<K>& b) {
  if (a.ring() != b.ring() && !same_ring(a.ring()->base, b.ring()->base)) throw RingMismatch();
}

template <Field K>
Ideal<K> ideal_sum(const Ideal<K>& a, const Ideal<K>& b) {
  require_same_ring(a, b);
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal<K>(a.ring(), std::move(gens));
}

namespace detail {

/// Products a_i * b_j, skipping any whose normal form against the products
/// accepted so far (plus the modulus) is already zero.
template <Field K>
std::vector<Polynomial<K>> pruned_products(const Ideal<K>& a, const Ideal<K>& b,
                                           const ComputeBudget& budget) {
  const auto& ring = *a.ring();
  const MonomialOrder order = ring.order;
  std::vector<OrderedPoly<K>> accepted;
  std::vector<Polynomial<K>> out;
  // reserve so reducer pointers stay valid
  accepted.reserve(a.generators().size() * b.generators().size() + 1);
  std::vector<Reducer<K>> reducers;
  if (ring.modulus) {
    accepted.push_back(to_ordered(*ring.modulus, order));
    reducers.push_back(make_reducer(accepted.back()));
  }
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) {
      Polynomial<K> prod = f * g;
      auto nf = reduce(to_ordered(prod, order), std::span<const Reducer<K>>(reducers), order, budget);
      if (nf.empty()) continue;
      accepted.push_back(to_ordered(prod, order));
      reducers.push_back(make_reducer(accepted.back()));
      out.push_back(std::move(prod));
    }
  }
  return out;
}

}  // namespace detail

template <Field K>
Ideal<K> ideal_product(const Ideal<K>& a, const Ideal<K>& b, const ComputeBudget& budget = {}) {
  require_same_ring(a, b);
  return Ideal<K>(a.ring(), detail::pruned_products(a, b, budget));
}

/// I^k, built as I^{j+1} = I^j * I with pruning of redundant products.
template <Field K>
Ideal<K> ideal_power(const Ideal<K>& ideal, unsigned k, const ComputeBudget& budget = {}) {
  if (k == 0) throw PreconditionError("ideal power exponent must be positive");
  Ideal<K> acc = ideal;
  for (unsigned j = 1; j < k; ++j) {
    budget.check();
    acc = ideal_product(acc, ideal, budget);
  }
  return acc;
}

/// I, I^2, ..., I^k in one pass.
template <Field K>
std::vector<Ideal<K>> ideal_powers(const Ideal<K>& ideal, unsigned k, const ComputeBudget& budget = {}) {
  std::vector<Ideal<K>> out;
  if (k == 0) return out;
  out.push_back(ideal);
  for (unsigned j = 1; j < k; ++j) {
    budget.check();
    out.push_back(ideal_product(out.back(), ideal, budget));
  }
  return out;
}

template <Field K>
void require_m_primary(const Ideal<K>& ideal, const ComputeBudget& budget = {}) {
  if (!ideal.is_m_primary(budget))
    throw PreconditionError("ideal is not primary to the maximal ideal of the origin");
}

/// mu(I) = length(I / mI) = colength(mI) - colength(I).
template <Field K>
std::uint64_t minimal_generator_count(const Ideal<K>& ideal, const ComputeBudget& budget = {}) {
  require_m_primary(ideal, budget);
  auto m_times_i = ideal_product(Ideal<K>::maximal(ideal.ring()), ideal, budget);
  return m_times_i.finite_colength(budget) - ideal.finite_colength(budget);
}

/// length(I / I^2) = colength(I^2) - colength(I).
template <Field K>
std::uint64_t length_I_mod_I2(const Ideal<K>& ideal, const ComputeBudget& budget = {}) {
  require_m_primary(ideal, budget);
  return ideal_power(ideal, 2, budget).finite_colength(budget) - ideal.finite_colength(budget);
}

}  // namespace hilbsam
