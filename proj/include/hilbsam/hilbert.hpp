#pragma once

// Hilbert-Samuel function h(n) = length(R / I^{n+1}), its polynomial in the
// binomial basis, and the numerator of the Poincare series.
//
// Conventions: p(n) = sum_i (-1)^i e_i C(n+d-i, d-i), and since h has degree
// d the series sum_n h(n) Z^n has a pole of order d+1 at Z = 1; the
// numerator entries a_j are therefore (d+1)-th differences of h. This is the
// same numerator as the Hilbert series of gr_I(R) over (1-Z)^d.

#include <algorithm>
#include <cstdint>
#include <future>
#include <optional>
#include <thread>
#include <vector>

#include "hilbsam/ideal.hpp"

namespace hilbsam {

struct HilbertFit {
  unsigned d = 0;
  std::size_t n0 = 0;
  std::vector<Integer> e;
};

struct HilbertSamuelData {
  std::vector<std::uint64_t> values;  // h(0..N)
  unsigned d = 0;
  std::size_t n0 = 0;                 // h(n) = p(n) for all computed n >= n0
  std::vector<Integer> e;             // e_0..e_d
  std::vector<Integer> a;             // a_0..a_s, a_s != 0

  std::size_t s() const { return a.size() - 1; }
};

struct HilbertOptions {
  unsigned max_power = 64;  // cap on nMax during escalation
  ComputeBudget budget;
  bool parallel = true;
};

/// p(n) = sum_i (-1)^i e_i C(n+d-i, d-i).
inline Integer hilbert_polynomial_value(const std::vector<Integer>& e, long n) {
  const long d = static_cast<long>(e.size()) - 1;
  Integer v = 0;
  for (long i = 0; i <= d; ++i) {
    Integer term = e[i] * binomial(Integer(n + d - i), d - i);
    if (i % 2) v -= term;
    else v += term;
  }
  return v;
}

inline std::vector<Integer> to_integers(const std::vector<std::uint64_t>& v) {
  std::vector<Integer> out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<unsigned long>(x));
  return out;
}

namespace detail {

inline std::vector<Integer> forward_difference(const std::vector<Integer>& v) {
  std::vector<Integer> out;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) out.push_back(v[i + 1] - v[i]);
  return out;
}

inline bool tail_is_zero(const std::vector<Integer>& v, std::size_t width) {
  if (v.size() < width) return false;
  return std::all_of(v.end() - static_cast<long>(width), v.end(), [](const Integer& x) { return x == 0; });
}

inline std::size_t window_for(unsigned d) { return std::max<std::size_t>(3, d + 2); }

/// e-vector of the degree-d polynomial through the last d+1 values, via
/// Newton interpolation and backward differences at n = -1.
inline std::vector<Integer> binomial_basis_coefficients(const std::vector<Integer>& values, unsigned d) {
  const long N = static_cast<long>(values.size()) - 1;
  const long base = N - static_cast<long>(d);
  std::vector<Integer> row(values.begin() + base, values.end());
  std::vector<Integer> newton;  // Delta^k h(base)
  for (unsigned k = 0; k <= d; ++k) {
    newton.push_back(row.front());
    row = forward_difference(row);
  }
  auto p = [&](long n) {
    Integer v = 0;
    for (unsigned k = 0; k <= d; ++k) v += newton[k] * binomial(Integer(n - base), k);
    return v;
  };
  std::vector<Integer> e(d + 1);
  for (unsigned j = 0; j <= d; ++j) {
    Integer nabla = 0;
    for (unsigned k = 0; k <= j; ++k) {
      Integer t = binomial(Integer(j), k) * p(-1 - static_cast<long>(k));
      if (k % 2) nabla -= t;
      else nabla += t;
    }
    unsigned i = d - j;
    e[i] = (i % 2) ? Integer(-nabla) : nabla;
  }
  return e;
}

}  // namespace detail

/// Infers d from the first difference row that vanishes over the trailing
/// window W = max(3, d+2), then solves for e in the binomial basis. With a
/// declared dimension, a lower inferred degree is an error and a higher one
/// means the function has not settled yet.
inline HilbertFit fit_hilbert_polynomial(const std::vector<Integer>& values,
                                         std::optional<unsigned> declared_dim = std::nullopt) {
  std::vector<Integer> row = values;
  std::optional<unsigned> inferred;
  for (unsigned k = 1;; ++k) {
    // degree k-1 above the declared dimension: not polynomial yet
    if (declared_dim && k > *declared_dim + 1) break;
    row = detail::forward_difference(row);
    const std::size_t w = detail::window_for(k - 1);
    if (row.size() < w) break;
    if (detail::tail_is_zero(row, w)) {
      inferred = k - 1;
      break;
    }
  }
  if (!inferred)
    throw NotStabilized("Hilbert-Samuel function not polynomial over the trailing window of " +
                        std::to_string(values.size()) + " values");
  const unsigned d = *inferred;
  if (declared_dim && d < *declared_dim)
    throw PreconditionError("Hilbert-Samuel polynomial has degree " + std::to_string(d) +
                            " but the ring declares dimension " + std::to_string(*declared_dim));
  if (values.size() < d + detail::window_for(d) + 1)
    throw NotStabilized("too few values to fit a degree-" + std::to_string(d) + " polynomial");

  HilbertFit fit;
  fit.d = d;
  fit.e = detail::binomial_basis_coefficients(values, d);
  const long N = static_cast<long>(values.size()) - 1;
  for (long n = N; n > N - static_cast<long>(detail::window_for(d)); --n)
    if (hilbert_polynomial_value(fit.e, n) != values[n])
      throw NotStabilized("fitted polynomial does not reproduce the trailing window");
  long n0 = N;
  while (n0 > 0 && hilbert_polynomial_value(fit.e, n0 - 1) == values[n0 - 1]) --n0;
  fit.n0 = static_cast<std::size_t>(n0);
  return fit;
}

/// a_j = sum_{k=0}^{d+1} (-1)^k C(d+1, k) h(j-k) with h(negative) = 0,
/// truncated after the last nonzero entry. Requires d+2 computed zeros past s.
inline std::vector<Integer> numerator_vector(const std::vector<Integer>& values, unsigned d) {
  std::vector<Integer> a;
  for (std::size_t j = 0; j < values.size(); ++j) {
    Integer v = 0;
    for (unsigned k = 0; k <= d + 1 && k <= j; ++k) {
      Integer t = binomial(Integer(d + 1), k) * values[j - k];
      if (k % 2) v -= t;
      else v += t;
    }
    a.push_back(v);
  }
  std::size_t len = a.size();
  while (len > 0 && a[len - 1] == 0) --len;
  if (len == 0) throw PreconditionError("Hilbert-Samuel function is identically zero");
  if (a.size() - len < d + 2)
    throw NotStabilized("numerator has fewer than d+2 trailing zeros");
  a.resize(len);
  return a;
}

/// e_i = sum_{j >= i} C(j, i) a_j for i = 0..d.
inline std::vector<Integer> ev91_e_from_a(const std::vector<Integer>& a, unsigned d) {
  std::vector<Integer> e(d + 1, 0);
  for (unsigned i = 0; i <= d; ++i)
    for (std::size_t j = i; j < a.size(); ++j) e[i] += binomial(Integer(static_cast<unsigned long>(j)), i) * a[j];
  return e;
}

/// Same sum for any index i, including i > d.
inline Integer ev91_coefficient(const std::vector<Integer>& a, std::size_t i) {
  Integer v = 0;
  for (std::size_t j = i; j < a.size(); ++j)
    v += binomial(Integer(static_cast<unsigned long>(j)), static_cast<long>(i)) * a[j];
  return v;
}

namespace detail {

/// Incrementally extends h(0..N) for one ideal, reusing earlier powers.
template <Field K>
class HilbertFunctionTable {
 public:
  HilbertFunctionTable(Ideal<K> ideal, const HilbertOptions& opts)
      : ideal_(std::move(ideal)), opts_(opts) {}

  const std::vector<std::uint64_t>& extend_to(unsigned n_max) {
    const std::size_t first = values_.size();
    if (first > n_max) return values_;
    while (powers_.size() < n_max + 1) {
      opts_.budget.check();
      if (powers_.empty())
        powers_.push_back(ideal_);
      else
        powers_.push_back(ideal_product(powers_.back(), ideal_, opts_.budget));
    }
    const std::size_t count = n_max + 1 - first;
    std::vector<std::uint64_t> fresh(count);
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (opts_.parallel && hw > 1 && count > 1) {
      for (std::size_t start = 0; start < count; start += hw) {
        std::vector<std::future<std::uint64_t>> jobs;
        for (std::size_t k = start; k < std::min(count, start + hw); ++k)
          jobs.push_back(std::async(std::launch::async, [this, first, k] {
            return powers_[first + k].finite_colength(opts_.budget);
          }));
        for (std::size_t k = start; k < std::min(count, start + hw); ++k)
          fresh[k] = jobs[k - start].get();
      }
    } else {
      for (std::size_t k = 0; k < count; ++k) fresh[k] = powers_[first + k].finite_colength(opts_.budget);
    }
    values_.insert(values_.end(), fresh.begin(), fresh.end());
    return values_;
  }

 private:
  Ideal<K> ideal_;
  const HilbertOptions& opts_;
  std::vector<Ideal<K>> powers_;
  std::vector<std::uint64_t> values_;
};

}  // namespace detail

/// h(n) = colength(I^{n+1}) for n = 0..n_max.
template <Field K>
std::vector<std::uint64_t> hs_values(const Ideal<K>& ideal, unsigned n_max,
                                     const HilbertOptions& opts = {}) {
  require_m_primary(ideal, opts.budget);
  detail::HilbertFunctionTable<K> table(ideal, opts);
  return table.extend_to(n_max);
}

/// Checks every HilbertSamuelData invariant; throws InvariantViolation.
inline void verify_hilbert_data(const HilbertSamuelData& h) {
  auto fail = [](const std::string& what) { throw InvariantViolation("Hilbert-Samuel data: " + what); };
  if (h.e.size() != h.d + 1) fail("e-vector length differs from d+1");
  if (h.e[0] < 1) fail("multiplicity e_0 < 1");
  for (std::size_t n = h.n0; n < h.values.size(); ++n)
    if (hilbert_polynomial_value(h.e, static_cast<long>(n)) != static_cast<unsigned long>(h.values[n]))
      fail("polynomial disagrees with h(" + std::to_string(n) + ")");
  if (h.a.empty() || h.a.back() == 0) fail("a_s is zero");
  if (h.a[0] != static_cast<unsigned long>(h.values[0])) fail("a_0 differs from length(R/I)");
  if (ev91_e_from_a(h.a, h.d) != h.e) fail("binomial-basis fit and numerator identity disagree");
  Integer at_minus_one = hilbert_polynomial_value(h.e, -1);
  Integer ed = (h.d % 2) ? Integer(-at_minus_one) : at_minus_one;
  if (ed != h.e[h.d]) fail("e_d differs from (-1)^d p(-1)");
}

/// Escalates nMax from 2d+3 by doubling until the fit settles, then fills
/// every field and checks the invariants.
template <Field K>
HilbertSamuelData e_coefficients(const Ideal<K>& ideal, const HilbertOptions& opts = {}) {
  require_m_primary(ideal, opts.budget);
  const unsigned d = ideal.ring()->dimension;
  detail::HilbertFunctionTable<K> table(ideal, opts);
  unsigned n_max = std::min(2 * d + 3, opts.max_power);
  for (;;) {
    const auto& raw = table.extend_to(n_max);
    auto values = to_integers(raw);
    try {
      HilbertFit fit = fit_hilbert_polynomial(values, d);
      HilbertSamuelData data;
      data.values = raw;
      data.d = fit.d;
      data.n0 = fit.n0;
      data.e = std::move(fit.e);
      data.a = numerator_vector(values, fit.d);
      verify_hilbert_data(data);
      return data;
    } catch (const NotStabilized&) {
      if (n_max >= opts.max_power) throw;
      n_max = std::min(2 * n_max, opts.max_power);
    }
  }
}

}  // namespace hilbsam
