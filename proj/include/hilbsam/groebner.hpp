#pragma once

// Buchberger's algorithm with the normal selection strategy and the
// Gebauer-Moeller criteria. The output is the reduced basis, so it does not
// depend on generator order or pair scheduling.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <tuple>
#include <vector>

#include "hilbsam/ring.hpp"

namespace hilbsam {

namespace detail {

/// Terms sorted descending under a fixed order; the working representation
/// inside the engine.
template <Field K>
struct OrderedPoly {
  std::vector<Term<K>> terms;

  bool empty() const { return terms.empty(); }
  const Monomial& lm() const { return terms.front().monomial; }
  const K& lc() const { return terms.front().coeff; }
};

template <Field K>
OrderedPoly<K> to_ordered(const Polynomial<K>& p, const MonomialOrder& order) {
  OrderedPoly<K> r{p.terms()};
  if (order.kind != OrderKind::degrevlex)
    std::sort(r.terms.begin(), r.terms.end(), [&](const Term<K>& a, const Term<K>& b) {
      return order.greater(a.monomial, b.monomial);
    });
  return r;
}

template <Field K>
Polynomial<K> from_ordered(const PolyRingPtr& ring, OrderedPoly<K> p) {
  return Polynomial<K>::from_terms(ring, std::move(p.terms));
}

/// out = a + c * m * b, where a and b are descending under `order`.
template <Field K>
std::vector<Term<K>> add_scaled(std::span<const Term<K>> a, const K& c, const Monomial& m,
                                std::span<const Term<K>> b, const MonomialOrder& order) {
  std::vector<Term<K>> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial mb = b[j].monomial * m;
    if (i == a.size()) {
      out.push_back({mb, c * b[j++].coeff});
      continue;
    }
    auto cmp = order.compare(a[i].monomial, mb);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({mb, c * b[j++].coeff});
    } else {
      K s = a[i].coeff + c * b[j].coeff;
      if (!FieldTraits<K>::is_zero(s)) out.push_back({mb, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

template <Field K>
struct Reducer {
  Monomial lm;
  std::uint64_t mask;
  const OrderedPoly<K>* poly;
};

template <Field K>
Reducer<K> make_reducer(const OrderedPoly<K>& p) {
  return {p.lm(), p.lm().divisibility_mask(), &p};
}

template <Field K>
const Reducer<K>* find_reducer(const Monomial& m, std::span<const Reducer<K>> reducers) {
  const std::uint64_t mask = m.divisibility_mask();
  for (const auto& r : reducers)
    if ((r.mask & ~mask) == 0 && r.lm.divides(m)) return &r;
  return nullptr;
}

/// Full reduction: repeatedly cancel the largest reducible term using the
/// first listed reducer whose leading monomial divides it.
template <Field K>
OrderedPoly<K> reduce(OrderedPoly<K> p, std::span<const Reducer<K>> reducers,
                      const MonomialOrder& order, const ComputeBudget& budget) {
  std::vector<Term<K>> done;
  std::vector<Term<K>> cur = std::move(p.terms);
  std::size_t pos = 0;
  std::size_t steps = 0;
  while (pos < cur.size()) {
    const Reducer<K>* r = find_reducer(cur[pos].monomial, reducers);
    if (!r) {
      done.push_back(std::move(cur[pos++]));
      continue;
    }
    if ((++steps & 0xFF) == 0) budget.check();
    const auto& g = r->poly->terms;
    Monomial q = r->lm.quotient_of(cur[pos].monomial);
    K c = -(cur[pos].coeff / g.front().coeff);
    std::span<const Term<K>> rest(cur.data() + pos + 1, cur.size() - pos - 1);
    std::span<const Term<K>> tail(g.data() + 1, g.size() - 1);
    cur = add_scaled(rest, c, q, tail, order);
    pos = 0;
  }
  return {std::move(done)};
}

}  // namespace detail

/// Reduced Groebner basis: monic, interreduced, sorted by leading monomial
/// ascending.
template <Field K>
class GroebnerBasis {
 public:
  GroebnerBasis(PolyRingPtr ring, MonomialOrder order,
                std::vector<detail::OrderedPoly<K>> elements)
      : ring_(std::move(ring)), order_(order), ordered_(std::move(elements)) {
    std::sort(ordered_.begin(), ordered_.end(),
              [&](const auto& a, const auto& b) { return order_.less(a.lm(), b.lm()); });
    for (const auto& e : ordered_) {
      elements_.push_back(detail::from_ordered(ring_, e));
      reducers_.push_back(detail::make_reducer(e));
    }
  }

  GroebnerBasis(const GroebnerBasis& o) : GroebnerBasis(o.ring_, o.order_, o.ordered_) {}
  GroebnerBasis& operator=(const GroebnerBasis& o) {
    if (this != &o) *this = GroebnerBasis(o);
    return *this;
  }
  GroebnerBasis(GroebnerBasis&&) = default;
  GroebnerBasis& operator=(GroebnerBasis&&) = default;

  const PolyRingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial<K>>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& e : ordered_) out.push_back(e.lm());
    return out;
  }

  bool is_unit() const { return ordered_.size() == 1 && ordered_.front().lm().is_one(); }

  Polynomial<K> reduce(const Polynomial<K>& p, const ComputeBudget& budget = {}) const {
    if (!same_ring(p.ring(), ring_)) throw RingMismatch();
    auto r = detail::reduce(detail::to_ordered(p, order_),
                            std::span<const detail::Reducer<K>>(reducers_), order_, budget);
    return detail::from_ordered(ring_, std::move(r));
  }

  bool operator==(const GroebnerBasis& o) const {
    return order_ == o.order_ && elements_ == o.elements_;
  }

 private:
  PolyRingPtr ring_;
  MonomialOrder order_;
  std::vector<detail::OrderedPoly<K>> ordered_;
  std::vector<Polynomial<K>> elements_;
  std::vector<detail::Reducer<K>> reducers_;
};

/// Normal form of p against an arbitrary list (not necessarily a Groebner
/// basis). Largest reducible term first; first listed reducer wins.
template <Field K>
Polynomial<K> normal_form(const Polynomial<K>& p, const std::vector<Polynomial<K>>& basis,
                          const MonomialOrder& order = {}, const ComputeBudget& budget = {}) {
  std::vector<detail::OrderedPoly<K>> ordered;
  ordered.reserve(basis.size());
  for (const auto& b : basis) {
    p.require_same_ring(b);
    if (!b.is_zero()) ordered.push_back(detail::to_ordered(b, order));
  }
  std::vector<detail::Reducer<K>> reducers;
  for (const auto& o : ordered) reducers.push_back(detail::make_reducer(o));
  auto r = detail::reduce(detail::to_ordered(p, order),
                          std::span<const detail::Reducer<K>>(reducers), order, budget);
  return detail::from_ordered(p.ring(), std::move(r));
}

namespace detail {

template <Field K>
class BuchbergerEngine {
 public:
  BuchbergerEngine(const MonomialOrder& order, const ComputeBudget& budget)
      : order_(order), budget_(budget), pairs_(PairLess{&order_}) {}

  void add_generator(OrderedPoly<K> g) {
    rebuild_reducers();
    g = reduce(std::move(g), std::span<const Reducer<K>>(reducers_), order_, budget_);
    if (g.empty()) return;
    monic(g);
    insert(std::move(g));
  }

  void run() {
    while (!pairs_.empty()) {
      budget_.check();
      Pair pr = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      OrderedPoly<K> s = s_polynomial(polys_[pr.i], polys_[pr.j], pr.lcm);
      if (s.empty()) continue;
      rebuild_reducers();
      s = reduce(std::move(s), std::span<const Reducer<K>>(reducers_), order_, budget_);
      if (s.empty()) continue;
      monic(s);
      insert(std::move(s));
    }
  }

  std::vector<OrderedPoly<K>> reduced_basis() {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) idx.push_back(i);
    std::vector<OrderedPoly<K>> basis;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      std::vector<Reducer<K>> others;
      for (std::size_t l = 0; l < idx.size(); ++l)
        if (l != k) others.push_back(make_reducer(polys_[idx[l]]));
      OrderedPoly<K>& g = polys_[idx[k]];
      OrderedPoly<K> tail{std::vector<Term<K>>(g.terms.begin() + 1, g.terms.end())};
      tail = reduce(std::move(tail), std::span<const Reducer<K>>(others), order_, budget_);
      OrderedPoly<K> out;
      out.terms.push_back(g.terms.front());
      for (auto& t : tail.terms) out.terms.push_back(std::move(t));
      basis.push_back(std::move(out));
    }
    return basis;
  }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };

  struct PairLess {
    const MonomialOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.lcm.total_degree() != b.lcm.total_degree())
        return a.lcm.total_degree() < b.lcm.total_degree();
      auto c = order->compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    }
  };

  static void monic(OrderedPoly<K>& p) {
    if (FieldTraits<K>::is_one(p.lc())) return;
    K one = p.lc() / p.lc();
    K inv = one / p.lc();
    for (auto& t : p.terms) t.coeff = t.coeff * inv;
  }

  static bool is_monomial(const OrderedPoly<K>& p) { return p.terms.size() == 1; }

  OrderedPoly<K> s_polynomial(const OrderedPoly<K>& f, const OrderedPoly<K>& g,
                              const Monomial& lcm) const {
    Monomial qf = f.lm().quotient_of(lcm);
    Monomial qg = g.lm().quotient_of(lcm);
    std::span<const Term<K>> ft(f.terms.data() + 1, f.terms.size() - 1);
    std::span<const Term<K>> gt(g.terms.data() + 1, g.terms.size() - 1);
    std::vector<Term<K>> fs;
    fs.reserve(ft.size());
    for (const auto& t : ft) fs.push_back({t.monomial * qf, t.coeff});
    K minus_one = -FieldTraits<K>::from_int(1, field_);
    return {add_scaled(std::span<const Term<K>>(fs), minus_one, qg, gt, order_)};
  }

  void rebuild_reducers() {
    if (!reducers_dirty_) return;
    reducers_.clear();
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) reducers_.push_back(make_reducer(polys_[i]));
    reducers_dirty_ = false;
  }

  // Gebauer-Moeller update with h as the newest element.
  void insert(OrderedPoly<K> h) {
    if (polys_.empty()) field_ = field_of(h);
    const std::size_t hi = polys_.size();
    const Monomial hlm = h.lm();
    const bool h_mono = is_monomial(h);
    polys_.push_back(std::move(h));
    active_.push_back(true);
    reducers_dirty_ = true;

    // candidate pairs (g, h); both-monomial pairs have S = 0.
    std::vector<Pair> cand;
    std::vector<char> coprime;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      if (h_mono && is_monomial(polys_[g])) continue;
      cand.push_back({g, hi, polys_[g].lm().lcm(hlm)});
      coprime.push_back(polys_[g].lm().coprime(hlm));
    }
    std::vector<char> keep(cand.size(), 0);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (coprime[a]) {
        keep[a] = 1;
        continue;
      }
      bool dominated = false;
      for (std::size_t b = 0; b < cand.size() && !dominated; ++b) {
        if (b == a) continue;
        // later candidates still in C, or earlier ones already kept in D
        if ((b > a || keep[b]) && cand[b].lcm.divides(cand[a].lcm)) dominated = true;
      }
      keep[a] = !dominated;
    }

    // chain criterion on old pairs
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& p = *it;
      if (hlm.divides(p.lcm) && !(polys_[p.i].lm().lcm(hlm) == p.lcm) &&
          !(polys_[p.j].lm().lcm(hlm) == p.lcm))
        it = pairs_.erase(it);
      else
        ++it;
    }
    // product criterion on new pairs
    for (std::size_t a = 0; a < cand.size(); ++a)
      if (keep[a] && !coprime[a]) pairs_.insert(cand[a]);

    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && hlm.divides(polys_[g].lm())) active_[g] = false;
  }

  static FieldDescriptor field_of(const OrderedPoly<K>& p) {
    if constexpr (std::is_same_v<K, ModP>)
      return {FieldDescriptor::Kind::prime, p.lc().modulus()};
    else
      return FieldDescriptor::rationals();
  }

  MonomialOrder order_;
  const ComputeBudget& budget_;
  FieldDescriptor field_;
  std::vector<OrderedPoly<K>> polys_;
  std::vector<char> active_;
  std::set<Pair, PairLess> pairs_;
  std::vector<Reducer<K>> reducers_;
  bool reducers_dirty_ = true;
};

}  // namespace detail

template <Field K>
GroebnerBasis<K> buchberger(const std::vector<Polynomial<K>>& gens,
                            const MonomialOrder& order = {},
                            const ComputeBudget& budget = {}) {
  if (gens.empty()) throw PreconditionError("empty generator list");
  budget.check();
  const PolyRingPtr& ring = gens.front().ring();
  std::vector<detail::OrderedPoly<K>> input;
  for (const auto& g : gens) {
    if (!same_ring(g.ring(), ring)) throw RingMismatch();
    if (!g.is_zero()) input.push_back(detail::to_ordered(g, order));
  }
  if (input.empty()) throw PreconditionError("zero ideal requires explicit handling");
  // smallest leading monomials first: fewer reductions downstream
  std::stable_sort(input.begin(), input.end(),
                   [&](const auto& a, const auto& b) { return order.less(a.lm(), b.lm()); });
  detail::BuchbergerEngine<K> engine(order, budget);
  for (auto& g : input) engine.add_generator(std::move(g));
  engine.run();
  return GroebnerBasis<K>(ring, order, engine.reduced_basis());
}

template <Field K>
bool ideal_member(const Polynomial<K>& p, const GroebnerBasis<K>& gb) {
  return gb.reduce(p).is_zero();
}

/// Standard monomials of a basis; `finite` is false when the quotient is
/// infinite-dimensional (some variable has no pure power among the leads).
struct StandardMonomialSet {
  bool finite = false;
  std::vector<Monomial> monomials;

  static StandardMonomialSet infinite() { return {}; }
  std::optional<std::size_t> count() const {
    if (!finite) return std::nullopt;
    return monomials.size();
  }
};

namespace detail {

/// Exponent bound per variable from pure-power leads, or nullopt.
inline std::optional<std::vector<unsigned>> pure_power_box(const std::vector<Monomial>& leads,
                                                           std::size_t n) {
  std::vector<unsigned> box(n, 0);
  for (const auto& m : leads) {
    std::size_t nz = 0, which = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] > 0) {
        ++nz;
        which = i;
      }
    if (nz == 0) return std::vector<unsigned>(n, 0);  // unit ideal
    if (nz == 1 && (box[which] == 0 || m[which] < box[which])) box[which] = m[which];
  }
  for (unsigned b : box)
    if (b == 0) return std::nullopt;
  return box;
}

inline bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& leads) {
  for (const auto& l : leads)
    if (l.divides(m)) return true;
  return false;
}

}  // namespace detail

template <Field K>
StandardMonomialSet standard_monomials(const GroebnerBasis<K>& gb) {
  const std::size_t n = gb.ring()->arity();
  auto leads = gb.leading_monomials();
  auto box = detail::pure_power_box(leads, n);
  if (!box) return StandardMonomialSet::infinite();
  StandardMonomialSet out{true, {}};
  if (gb.is_unit()) return out;
  Monomial m(n);
  // order ideal: once a prefix is divisible, every larger exponent is too
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.monomials.push_back(m);
      return;
    }
    for (unsigned e = 0; e < (*box)[i]; ++e) {
      m.set(i, e);
      if (detail::divisible_by_any(m, leads)) break;
      self(self, i + 1);
    }
    m.set(i, 0);
  };
  rec(rec, 0);
  return out;
}

/// Count of standard monomials without materializing them.
using Colength = std::optional<std::uint64_t>;

template <Field K>
Colength count_standard_monomials(const GroebnerBasis<K>& gb) {
  const std::size_t n = gb.ring()->arity();
  auto leads = gb.leading_monomials();
  auto box = detail::pure_power_box(leads, n);
  if (!box) return std::nullopt;
  if (gb.is_unit()) return 0;
  if (n == 0) return 1;
  std::uint64_t total = 0;
  Monomial m(n);
  std::vector<const Monomial*> live;
  live.reserve(leads.size());
  // for a fixed prefix, the admissible last exponents form [0, min L_last)
  // over leads dividing the prefix in the first n-1 coordinates
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i + 1 == n) {
      unsigned bound = (*box)[n - 1];
      for (const auto& l : leads) {
        bool ok = true;
        for (std::size_t k = 0; k + 1 < n && ok; ++k) ok = l[k] <= m[k];
        if (ok) bound = std::min(bound, l[n - 1]);
      }
      total += bound;
      return;
    }
    for (unsigned e = 0; e < (*box)[i]; ++e) {
      m.set(i, e);
      if (detail::divisible_by_any(m, leads)) break;
      self(self, i + 1);
    }
    m.set(i, 0);
  };
  rec(rec, 0);
  return total;
}

/// gens together with the ring's modulus, if any.
template <Field K>
std::vector<Polynomial<K>> with_modulus(std::vector<Polynomial<K>> gens, const RingContext<K>& ring) {
  if (ring.modulus) gens.push_back(*ring.modulus);
  return gens;
}

/// dim_k of (polynomial ring)/(gens + modulus); nullopt means infinite.
template <Field K>
Colength colength(const std::vector<Polynomial<K>>& gens, const RingContext<K>& ring,
                  const MonomialOrder& order = {}, const ComputeBudget& budget = {}) {
  auto all = with_modulus(gens, ring);
  for (const auto& g : all)
    if (!same_ring(g.ring(), ring.base)) throw RingMismatch();
  if (std::all_of(all.begin(), all.end(), [](const auto& g) { return g.is_zero(); }))
    return ring.arity() == 0 ? Colength{1} : std::nullopt;
  return count_standard_monomials(buchberger(all, order, budget));
}

/// True iff the ideal is proper and every variable has a power in it, i.e.
/// the quotient is supported at the origin alone.
template <Field K>
bool supported_only_at_origin(const std::vector<Polynomial<K>>& gens, const RingContext<K>& ring,
                              const ComputeBudget& budget = {}) {
  auto all = with_modulus(gens, ring);
  if (std::all_of(all.begin(), all.end(), [](const auto& g) { return g.is_zero(); }))
    return false;
  auto gb = buchberger(all, ring.order, budget);
  auto len = count_standard_monomials(gb);
  if (!len || *len == 0) return false;
  // x_i nilpotent in an algebra of dimension c implies x_i^c = 0
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    auto x = Polynomial<K>::variable(ring.base, i);
    Polynomial<K> r = gb.reduce(x, budget);
    for (std::uint64_t k = 1; k <= *len && !r.is_zero(); ++k) r = gb.reduce(r * x, budget);
    if (!r.is_zero()) return false;
  }
  return true;
}

}  // namespace hilbsam
