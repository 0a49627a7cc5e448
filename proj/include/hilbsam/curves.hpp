#pragma once

// Plane curve singularities at the origin of Q^2: iterated point blow-ups,
// the tree of infinitely near points, and the delta invariant computed both
// from multiplicities and as a sum of e_1 over the local rings of the tree.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hilbsam/hilbert.hpp"

namespace hilbsam {

namespace univariate {

/// Dense polynomial in one variable over Q, index = degree.
using Poly = std::vector<Rational>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Rational evaluate(const Poly& p, const Rational& t) {
  Rational v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * t + p[i];
  return v;
}

/// p / (t - r), assuming r is a root.
inline Poly divide_linear(const Poly& p, const Rational& r) {
  Poly q(p.size() - 1);
  Rational carry = 0;
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = p[i] + carry * r;
    q[i - 1] = carry;
  }
  return q;
}

inline Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

inline Poly remainder(Poly a, const Poly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

inline std::size_t gcd_degree(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? 0 : a.size() - 1;
}

inline std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  if (n > Integer("1000000000000"))
    throw ResourceLimit("rational root search: coefficient " + n.get_str() + " too large");
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

struct RootSplit {
  std::vector<std::pair<Rational, unsigned>> roots;  // ascending, with multiplicity
  Poly cofactor;                                     // no rational roots left
};

/// Rational roots by the rational root theorem.
inline RootSplit rational_roots(Poly p) {
  trim(p);
  if (p.empty()) throw PreconditionError("rational roots of the zero polynomial");
  RootSplit out;
  unsigned zero_mult = 0;
  while (p.size() > 1 && p.front() == 0) {
    p.erase(p.begin());
    ++zero_mult;
  }
  std::vector<std::pair<Rational, unsigned>> found;
  if (zero_mult) found.emplace_back(Rational(0), zero_mult);
  if (p.size() > 1) {
    Integer den_lcm = 1;
    for (const auto& c : p) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    Integer lead = Integer(p.back() * den_lcm);
    Integer constant = Integer(p.front() * den_lcm);
    std::vector<Rational> candidates;
    for (const auto& num : positive_divisors(constant))
      for (const auto& den : positive_divisors(lead)) {
        Rational q(num, den);
        q.canonicalize();
        candidates.push_back(q);
        candidates.push_back(-q);
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      unsigned mult = 0;
      while (p.size() > 1 && evaluate(p, r) == 0) {
        p = divide_linear(p, r);
        ++mult;
      }
      if (mult) found.emplace_back(r, mult);
    }
  }
  std::sort(found.begin(), found.end());
  out.roots = std::move(found);
  out.cofactor = std::move(p);
  return out;
}

}  // namespace univariate

using QPoly = Polynomial<Rational>;

/// Reduced plane curve f = 0 through the origin, with its coordinate ring
/// Q[x,y]/(f) of dimension one.
struct PlaneCurve {
  QPoly f;
  RingPtr<Rational> ring;
};

inline PlaneCurve make_plane_curve(const QPoly& f) {
  if (f.ring()->arity() != 2) throw PreconditionError("plane curves need exactly two variables");
  if (f.ring()->field.kind != FieldDescriptor::Kind::rational)
    throw PreconditionError("curve computations require rational coefficients");
  if (f.is_zero()) throw PreconditionError("curve equation is zero");
  if (order_of_vanishing(f) == 0) throw PreconditionError("curve does not pass through the origin");
  return {f, make_ring<Rational>(f.ring(), f, 1u)};
}

struct ChartStep {
  char chart;          // 'A': y = x*t, 'B': x = y*s
  Rational coordinate; // t (or s = 0) of the point on the exceptional line

  std::string to_string() const {
    return chart == 'B' ? std::string("B") : "A:" + coordinate.get_str();
  }
};

struct BlowUpPoint {
  ChartStep step;
  QPoly strict_transform;  // translated so the point is at the origin
};

struct BlowUp {
  unsigned multiplicity = 0;
  std::vector<BlowUpPoint> points;
  unsigned irrational_smooth_points = 0;  // simple irrational tangents, smooth after one blow-up
};

/// Blow-up of the origin. Chart A covers every tangent direction except
/// x = 0; chart B contributes exactly that direction when it is tangent.
inline BlowUp blow_up_origin(const QPoly& f) {
  if (f.ring()->arity() != 2) throw PreconditionError("blow-up needs exactly two variables");
  if (f.is_zero()) throw PreconditionError("blow-up of the zero polynomial");
  const unsigned m = order_of_vanishing(f);
  if (m == 0) throw PreconditionError("curve does not pass through the origin");
  const auto& ring = f.ring();

  BlowUp out;
  out.multiplicity = m;
  std::vector<Term<Rational>> chart_a, chart_b;
  univariate::Poly tangent(m + 1, Rational(0));  // f_m(1, t)
  for (const auto& t : f.terms()) {
    unsigned a = t.monomial[0], b = t.monomial[1];
    chart_a.push_back({Monomial{a + b - m, b}, t.coeff});
    chart_b.push_back({Monomial{a, a + b - m}, t.coeff});
    if (a + b == m) tangent[b] += t.coeff;
  }
  QPoly fa = QPoly::from_terms(ring, std::move(chart_a));
  QPoly fb = QPoly::from_terms(ring, std::move(chart_b));
  if (fa.is_zero() || fb.is_zero()) throw NonReducedError("strict transform vanished identically");

  univariate::trim(tangent);
  const std::size_t deg_a = tangent.size() - 1;
  auto split = univariate::rational_roots(tangent);
  if (split.cofactor.size() > 1) {
    if (univariate::gcd_degree(split.cofactor, univariate::derivative(split.cofactor)) > 0)
      throw RationalityError("tangent cone has a repeated irrational direction");
    out.irrational_smooth_points = static_cast<unsigned>(split.cofactor.size() - 1);
  }
  for (const auto& [root, mult] : split.roots) {
    (void)mult;
    QPoly g = translate(fa, std::vector<Rational>{Rational(0), root});
    out.points.push_back({{'A', root}, std::move(g)});
  }
  if (deg_a < m) out.points.push_back({{'B', Rational(0)}, std::move(fb)});
  return out;
}

struct ResolutionNode {
  QPoly local_equation;
  unsigned multiplicity = 0;
  std::vector<ChartStep> chart_path;
  std::vector<ResolutionNode> children;
  unsigned irrational_smooth_points = 0;

  template <class Fn>
  void visit(Fn&& fn) const {
    fn(*this);
    for (const auto& c : children) c.visit(fn);
  }

  std::vector<unsigned> multiplicities() const {
    std::vector<unsigned> out;
    visit([&](const ResolutionNode& n) { out.push_back(n.multiplicity); });
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
  }

  std::size_t depth() const {
    std::size_t d = 0;
    for (const auto& c : children) d = std::max(d, c.depth() + 1);
    return d;
  }
};

inline constexpr unsigned kMaxResolutionDepth = 64;

namespace detail {

/// A reduced plane curve has finitely many singular points, so (f, f_x, f_y)
/// has finite colength exactly when f has no repeated component.
inline void require_reduced(const QPoly& f, const ComputeBudget& budget) {
  auto ring = make_ring<Rational>(f.ring());
  std::vector<QPoly> jac{f, derivative(f, 0), derivative(f, 1)};
  if (!colength(jac, *ring, MonomialOrder{}, budget))
    throw NonReducedError("curve " + f.to_string() + " has a repeated component");
}

inline void resolve_into(ResolutionNode& node, unsigned depth, const ComputeBudget& budget) {
  if (node.multiplicity < 2) return;
  if (depth >= kMaxResolutionDepth)
    throw DepthExceeded("resolution deeper than " + std::to_string(kMaxResolutionDepth));
  budget.check();
  BlowUp bu = blow_up_origin(node.local_equation);
  node.irrational_smooth_points = bu.irrational_smooth_points;
  for (auto& pt : bu.points) {
    const unsigned mult = order_of_vanishing(pt.strict_transform);
    if (mult > node.multiplicity)
      throw InvariantViolation("multiplicity rose from " + std::to_string(node.multiplicity) +
                               " to " + std::to_string(mult) + " after a blow-up");
    ResolutionNode child{std::move(pt.strict_transform), mult, node.chart_path, {}, 0};
    child.chart_path.push_back(pt.step);
    resolve_into(child, depth + 1, budget);
    node.children.push_back(std::move(child));
  }
}

}  // namespace detail

inline ResolutionNode resolve(const QPoly& f, const ComputeBudget& budget = {}) {
  make_plane_curve(f);
  detail::require_reduced(f, budget);
  ResolutionNode root{f, order_of_vanishing(f), {}, {}, 0};
  detail::resolve_into(root, 0, budget);
  return root;
}

/// e_1 of the maximal ideal of Q[x,y]/(g) at the origin.
inline Integer node_e1(const QPoly& g, const HilbertOptions& opts = {}) {
  auto ring = make_ring<Rational>(g.ring(), g, 1u);
  auto data = e_coefficients(Ideal<Rational>::maximal(ring), opts);
  return data.e[1];
}

struct DeltaReport {
  Integer delta_combinatorial;  // sum of m(m-1)/2
  Integer delta_northcott;      // sum of e_1 over singular nodes
  bool agree = false;
  ResolutionNode tree;
};

/// delta by both routes; disagreement throws.
inline DeltaReport delta(const QPoly& f, const HilbertOptions& opts = {}) {
  DeltaReport r{0, 0, false, resolve(f, opts.budget)};
  std::vector<const ResolutionNode*> singular;
  r.tree.visit([&](const ResolutionNode& n) {
    r.delta_combinatorial += Integer(n.multiplicity) * (n.multiplicity - 1) / 2;
    if (n.multiplicity >= 2) singular.push_back(&n);
  });
  for (const auto* n : singular) r.delta_northcott += node_e1(n->local_equation, opts);
  r.agree = r.delta_combinatorial == r.delta_northcott;
  if (!r.agree)
    throw InvariantViolation("delta mismatch for " + f.to_string() + ": multiplicities give " +
                             r.delta_combinatorial.get_str() + ", e_1 sum gives " +
                             r.delta_northcott.get_str());
  return r;
}

inline void require_curve_ideal(const PlaneCurve& curve, const Ideal<Rational>& ideal) {
  const auto& r = *ideal.ring();
  if (!same_ring(r.base, curve.ring->base) || !r.modulus || !(*r.modulus == curve.f))
    throw PreconditionError("ideal does not live in the coordinate ring of the curve");
}

struct CurveCoefficients {
  Integer e0;
  Integer e1;
};

/// (e_0, e_1) of an m-primary ideal of the curve's local ring.
inline CurveCoefficients e1_of_ideal(const PlaneCurve& curve, const Ideal<Rational>& ideal,
                                     const HilbertOptions& opts = {}) {
  require_curve_ideal(curve, ideal);
  auto data = e_coefficients(ideal, opts);
  if (data.d != 1) throw InvariantViolation("curve ideal has Hilbert-Samuel degree " + std::to_string(data.d));
  return {data.e[0], data.e[1]};
}

struct HironakaReport {
  Integer e0;
  Integer e1;
  Integer delta;
  bool hironaka = false;
};

/// hironaka = (e_1(I) = delta). Reports the flag as e_1 = delta, which is
/// how blowing up I is detected to reach the normalization; smoothness of
/// the blow-up is not checked independently.
inline HironakaReport is_hironaka(const PlaneCurve& curve, const Ideal<Rational>& ideal,
                                  const HilbertOptions& opts = {}) {
  auto c = e1_of_ideal(curve, ideal, opts);
  auto dr = delta(curve.f, opts);
  HironakaReport r{c.e0, c.e1, dr.delta_combinatorial, c.e1 == dr.delta_combinatorial};
  if (r.e1 < 0 || r.e1 > r.delta)
    throw InequalityViolation("0 <= e_1 <= delta fails: e_1 = " + r.e1.get_str() +
                              ", delta = " + r.delta.get_str());
  return r;
}

}  // namespace hilbsam
