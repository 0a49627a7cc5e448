#pragma once

// Coefficient inequalities for ideals with Cohen-Macaulay associated graded
// ring, e_d invariance under powers, and the regression table of worked
// examples.

#include <array>
#include <functional>
#include <future>
#include <thread>
#include <sstream>
#include <string>
#include <vector>

#include "hilbsam/curves.hpp"

namespace hilbsam {

/// lhs <= rhs (or lhs == rhs) with the exact integers compared.
struct Relation {
  std::string statement;
  Integer lhs;
  Integer rhs;
  bool equality = false;

  bool holds() const { return equality ? lhs == rhs : lhs <= rhs; }
};

inline Relation at_most(std::string s, Integer lhs, Integer rhs) {
  return {std::move(s), std::move(lhs), std::move(rhs), false};
}
inline Relation equal_to(std::string s, Integer lhs, Integer rhs) {
  return {std::move(s), std::move(lhs), std::move(rhs), true};
}

inline bool all_hold(const std::vector<Relation>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const Relation& r) { return r.holds(); });
}

/// Clause (i) under one reading of the middle term e_0 + d + 1 - L.
struct ClauseOne {
  std::string reading;  // "length(I/I^2)" or "mu(I)"
  Integer subtracted;   // L
  Relation lower;       // s <= e_0 + d + 1 - L
  Relation upper;       // e_0 + d + 1 - L <= e_0

  bool holds() const { return lower.holds() && upper.holds(); }
};

struct HHCReport {
  HilbertSamuelData data;
  Integer length_I_mod_I2;
  Integer mu;
  ClauseOne clause_i_printed;
  ClauseOne clause_i_mu;
  std::vector<Relation> clause_ii;   // e_i = 0, s < i <= d
  std::vector<Relation> clause_iii;  // 0 <= (i+1)e_{i+1} <= (s-i)e_i, 0 <= i <= s
  std::vector<Relation> clause_iv;   // 0 <= e_i <= C(s,i) e_0, 0 <= i <= d
  std::vector<bool> a_positive;

  /// All a_i > 0: the observable consequence of a Cohen-Macaulay gr_I(R).
  bool hypotheses_witnessed() const {
    return std::all_of(a_positive.begin(), a_positive.end(), [](bool b) { return b; });
  }
  bool clauses_ii_to_iv_hold() const {
    return all_hold(clause_ii) && all_hold(clause_iii) && all_hold(clause_iv);
  }
};

namespace detail {

inline ClauseOne clause_one(std::string reading, const Integer& subtracted, const HilbertSamuelData& h) {
  Integer middle = h.e[0] + h.d + 1 - subtracted;
  Integer s(static_cast<unsigned long>(h.s()));
  return {reading, subtracted,
          at_most("s <= e_0 + d + 1 - " + reading, s, middle),
          at_most("e_0 + d + 1 - " + reading + " <= e_0", middle, h.e[0])};
}

}  // namespace detail

/// Evaluates every clause on the computed data. Nothing is asserted here:
/// the Cohen-Macaulay hypothesis cannot be decided, only witnessed.
template <Field K>
HHCReport check_hhc(const Ideal<K>& ideal, const HilbertOptions& opts = {}) {
  HHCReport r{e_coefficients(ideal, opts), 0, 0, {}, {}, {}, {}, {}, {}};
  r.length_I_mod_I2 = static_cast<unsigned long>(length_I_mod_I2(ideal, opts.budget));
  r.mu = static_cast<unsigned long>(minimal_generator_count(ideal, opts.budget));
  const auto& h = r.data;
  const std::size_t s = h.s();
  const unsigned d = h.d;
  r.clause_i_printed = detail::clause_one("length(I/I^2)", r.length_I_mod_I2, h);
  r.clause_i_mu = detail::clause_one("mu(I)", r.mu, h);

  for (std::size_t i = s + 1; i <= d; ++i)
    r.clause_ii.push_back(equal_to("e_" + std::to_string(i) + " = 0", h.e[i], 0));

  // indices past d use the same sum over the numerator
  for (std::size_t i = 0; i <= s; ++i) {
    Integer next = Integer(static_cast<unsigned long>(i + 1)) * ev91_coefficient(h.a, i + 1);
    Integer bound = Integer(static_cast<unsigned long>(s - i)) * ev91_coefficient(h.a, i);
    std::string ix = std::to_string(i);
    r.clause_iii.push_back(at_most("0 <= (" + ix + "+1) e_" + std::to_string(i + 1), 0, next));
    r.clause_iii.push_back(at_most("(" + ix + "+1) e_" + std::to_string(i + 1) + " <= (s-" + ix + ") e_" + ix,
                                   next, bound));
  }
  for (unsigned i = 0; i <= d; ++i) {
    std::string ix = std::to_string(i);
    r.clause_iv.push_back(at_most("0 <= e_" + ix, 0, h.e[i]));
    r.clause_iv.push_back(at_most("e_" + ix + " <= C(s," + ix + ") e_0", h.e[i],
                                  binomial(Integer(static_cast<unsigned long>(s)), i) * h.e[0]));
  }
  for (const auto& ai : h.a) r.a_positive.push_back(ai > 0);
  return r;
}

/// The six links 10e_0 >= 2e_1 >= e_2 >= e_3 >= 2e_4 >= 10e_5 >= 0 for s = 5,
/// each written as rhs <= lhs.
inline std::vector<Relation> check_s5_chain(const std::array<Integer, 6>& e) {
  const std::array<Integer, 7> chain{10 * e[0], 2 * e[1], e[2], e[3], 2 * e[4], 10 * e[5], Integer(0)};
  static const std::array<const char*, 7> names{"10e_0", "2e_1", "e_2", "e_3", "2e_4", "10e_5", "0"};
  std::vector<Relation> out;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k)
    out.push_back(at_most(std::string(names[k + 1]) + " <= " + names[k], chain[k + 1], chain[k]));
  return out;
}

struct PowerRow {
  unsigned n;
  std::vector<Integer> e;
};

struct PowerReport {
  unsigned d = 0;
  std::vector<PowerRow> rows;  // n = 1..nMax
  bool e_d_constant = false;
  std::vector<int> growth_degree;  // degree in n of e_i(I^n), i < d; -1 if undetermined
};

namespace detail {

template <Field K>
PowerReport power_table(const Ideal<K>& ideal, unsigned n_max, const HilbertOptions& opts) {
  PowerReport r;
  auto powers = ideal_powers(ideal, n_max, opts.budget);
  for (unsigned n = 1; n <= n_max; ++n) {
    auto data = e_coefficients(powers[n - 1], opts);
    r.d = data.d;
    r.rows.push_back({n, std::move(data.e)});
  }
  r.e_d_constant = true;
  for (const auto& row : r.rows)
    if (row.e.back() != r.rows.front().e.back()) r.e_d_constant = false;
  return r;
}

/// Degree of the sequence as a polynomial in n via finite differences.
inline int sequence_degree(std::vector<Integer> seq) {
  for (int k = 0; !seq.empty(); ++k) {
    if (std::all_of(seq.begin(), seq.end(), [](const Integer& x) { return x == 0; })) return k - 1;
    if (seq.size() == 1) break;
    seq = forward_difference(seq);
  }
  return -2;  // undetermined with this many samples
}

}  // namespace detail

/// e_d(I^n) for n = 1..nMax; a change is a theorem violation and throws.
template <Field K>
PowerReport check_power_invariance(const Ideal<K>& ideal, unsigned n_max = 3,
                                   const HilbertOptions& opts = {}) {
  if (n_max < 2) throw PreconditionError("power invariance needs nMax >= 2");
  PowerReport r = detail::power_table(ideal, n_max, opts);
  if (!r.e_d_constant) {
    std::ostringstream os;
    os << "e_d(I^n) not constant:";
    for (const auto& row : r.rows) os << " n=" << row.n << ":" << row.e.back().get_str();
    throw InvariantViolation(os.str());
  }
  return r;
}

/// Fits e_i(I^n) as polynomials in n; each degree must be at most d and
/// e_0(I^n) = n^d e_0(I) exactly.
template <Field K>
PowerReport check_power_polynomial_growth(const Ideal<K>& ideal, unsigned n_max,
                                          const HilbertOptions& opts = {}) {
  const unsigned d = ideal.ring()->dimension;
  if (n_max < d + 2) throw PreconditionError("polynomial growth needs nMax >= d + 2");
  PowerReport r = detail::power_table(ideal, n_max, opts);
  for (const auto& row : r.rows) {
    Integer expect;
    mpz_pow_ui(expect.get_mpz_t(), Integer(row.n).get_mpz_t(), r.d);
    expect *= r.rows.front().e[0];
    if (row.e[0] != expect)
      throw InvariantViolation("e_0(I^" + std::to_string(row.n) + ") = " + row.e[0].get_str() +
                               ", expected n^d e_0(I) = " + expect.get_str());
  }
  for (unsigned i = 0; i < r.d; ++i) {
    std::vector<Integer> seq;
    for (const auto& row : r.rows) seq.push_back(row.e[i]);
    int deg = detail::sequence_degree(seq);
    // with n_max >= d+2 samples a degree <= d is always determined
    if (deg < -1 || deg > static_cast<int>(r.d))
      throw InvariantViolation("e_" + std::to_string(i) + "(I^n) is not a polynomial of degree <= d in n");
    r.growth_degree.push_back(deg);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Regression table of the worked examples.

struct SuiteRow {
  std::string key;
  std::string expected;
  std::string computed;
  bool pass = false;
  bool informational = false;  // reported, never fails the run
};

struct SuiteOptions {
  bool include_three_variable = true;
  bool parallel = true;
  HilbertOptions hilbert;
};

inline std::string join(const std::vector<Integer>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

namespace suite {

inline PolyRingPtr plane() { return make_poly_ring({"x", "y"}); }

/// y^2 - x^n in Q[x,y].
inline QPoly double_point_curve(const PolyRingPtr& r, unsigned n) {
  return QPoly::monomial(r, Monomial{0, 2}) - QPoly::monomial(r, Monomial{n, 0});
}

/// (m^5, X^4, X(Y^3+Z^3), Y(Y^3+Z^3), Z(Y^3+Z^3)) in Q[X,Y,Z].
inline Ideal<Rational> three_variable_ideal() {
  auto base = make_poly_ring({"X", "Y", "Z"});
  auto ring = make_ring<Rational>(base);
  std::vector<QPoly> gens;
  for (const auto& m : monomials_of_degree(3, 5)) gens.push_back(QPoly::monomial(base, m));
  QPoly cubic = QPoly::monomial(base, Monomial{0, 3, 0}) + QPoly::monomial(base, Monomial{0, 0, 3});
  gens.push_back(QPoly::monomial(base, Monomial{4, 0, 0}));
  for (std::size_t i = 0; i < 3; ++i) gens.push_back(QPoly::variable(base, i) * cubic);
  return Ideal<Rational>(ring, std::move(gens));
}

inline Ideal<Rational> curve_ideal(const PlaneCurve& c, std::vector<Monomial> monos) {
  std::vector<QPoly> gens;
  for (const auto& m : monos) gens.push_back(QPoly::monomial(c.ring->base, m));
  return Ideal<Rational>(c.ring, std::move(gens));
}

}  // namespace suite

inline std::vector<SuiteRow> run_paper_suite(const SuiteOptions& opts = {}) {
  using Job = std::function<std::vector<SuiteRow>()>;
  std::vector<Job> jobs;
  const auto& ho = opts.hilbert;

  if (opts.include_three_variable) {
    jobs.push_back([&ho] {
      auto data = e_coefficients(suite::three_variable_ideal(), ho);
      std::vector<Integer> expect{76, 48, 4, 1};
      return std::vector<SuiteRow>{
          {"three_variable/e", join(expect), join(data.e), data.e == expect, false},
          {"three_variable/pg", "p_g = 0 < e_3", "e_3 = " + data.e[3].get_str(), data.e[3] > 0, true}};
    });
  }
  for (unsigned n = 8; n <= 12; ++n) {
    jobs.push_back([&ho, n] {
      auto r = suite::plane();
      auto curve = make_plane_curve(suite::double_point_curve(r, n));
      auto ideal = suite::curve_ideal(curve, {Monomial{6, 0}, Monomial{2, 1}});
      auto hr = is_hironaka(curve, ideal, ho);
      std::string k = "double_point/n=" + std::to_string(n);
      bool want = n == 8 || n == 9;
      Integer delta(n / 2);
      return std::vector<SuiteRow>{
          {k + "/e", "(12,4)", join({hr.e0, hr.e1}), hr.e0 == 12 && hr.e1 == 4, false},
          {k + "/delta", delta.get_str(), hr.delta.get_str(), hr.delta == delta, false},
          {k + "/hironaka", want ? "true" : "false", hr.hironaka ? "true" : "false", hr.hironaka == want, false},
          {k + "/bound", "0 <= e_1 <= delta", hr.e1.get_str() + " <= " + hr.delta.get_str(),
           hr.e1 >= 0 && hr.e1 <= hr.delta, false}};
    });
    jobs.push_back([&ho, n] {
      auto r = suite::plane();
      auto curve = make_plane_curve(suite::double_point_curve(r, n));
      auto ideal = suite::curve_ideal(curve, {Monomial{0, 1}, Monomial{n - 1, 0}});
      auto c = e1_of_ideal(curve, ideal, ho);
      Integer colen(static_cast<unsigned long>(ideal.finite_colength(ho.budget)));
      std::string k = "jacobian/n=" + std::to_string(n);
      return std::vector<SuiteRow>{
          {k + "/e1", "1", c.e1.get_str(), c.e1 == 1, false},
          {k + "/e0-length", "1", Integer(c.e0 - colen).get_str(), c.e0 - colen == 1, false}};
    });
  }

  std::vector<std::vector<SuiteRow>> parts(jobs.size());
  if (opts.parallel && std::thread::hardware_concurrency() > 1) {
    std::vector<std::future<std::vector<SuiteRow>>> fs;
    for (auto& j : jobs) fs.push_back(std::async(std::launch::async, j));
    for (std::size_t i = 0; i < fs.size(); ++i) parts[i] = fs[i].get();
  } else {
    for (std::size_t i = 0; i < jobs.size(); ++i) parts[i] = jobs[i]();
  }
  std::vector<SuiteRow> rows;
  for (auto& p : parts) rows.insert(rows.end(), p.begin(), p.end());
  return rows;
}

inline bool suite_passed(const std::vector<SuiteRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const SuiteRow& r) { return r.informational || r.pass; });
}

}  // namespace hilbsam
