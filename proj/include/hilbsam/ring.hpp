#pragma once

#include <chrono>
#include <memory>
#include <optional>

#include "hilbsam/polynomial.hpp"

namespace hilbsam {

/// Polynomial ring, optionally modulo one hypersurface equation f, together
/// with the Krull dimension d of the local ring at the origin.
template <Field K>
struct RingContext {
  PolyRingPtr base;
  std::optional<Polynomial<K>> modulus;
  unsigned dimension = 0;
  MonomialOrder order{};  // used for every Groebner computation in this ring

  std::size_t arity() const { return base->arity(); }
  const FieldDescriptor& field() const { return base->field; }
};

template <Field K>
using RingPtr = std::shared_ptr<const RingContext<K>>;

/// Builds a ring context. Without a declared dimension, d = v for a
/// polynomial ring and d = v - 1 for a hypersurface.
template <Field K>
RingPtr<K> make_ring(PolyRingPtr base, std::optional<Polynomial<K>> modulus = std::nullopt,
                     std::optional<unsigned> declared_dim = std::nullopt) {
  if (modulus) {
    if (!same_ring(modulus->ring(), base)) throw RingMismatch();
    if (modulus->is_zero()) throw PreconditionError("quotient modulus must be nonzero");
    if (order_of_vanishing(*modulus) == 0)
      throw PreconditionError("quotient modulus must vanish at the origin");
  }
  unsigned d = declared_dim.value_or(static_cast<unsigned>(base->arity()) - (modulus ? 1u : 0u));
  return std::make_shared<const RingContext<K>>(RingContext<K>{std::move(base), std::move(modulus), d, {}});
}

/// Same ring, different monomial order.
template <Field K>
RingPtr<K> with_order(const RingPtr<K>& ring, MonomialOrder order) {
  auto copy = *ring;
  copy.order = order;
  return std::make_shared<const RingContext<K>>(std::move(copy));
}

/// Cooperative wall-clock limit checked by long-running loops.
struct ComputeBudget {
  std::optional<std::chrono::steady_clock::time_point> deadline;

  static ComputeBudget unlimited() { return {}; }
  static ComputeBudget seconds(double s) {
    return {std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(s))};
  }

  void check() const {
    if (deadline && std::chrono::steady_clock::now() > *deadline)
      throw ResourceLimit("time limit exceeded");
  }
};

}  // namespace hilbsam
