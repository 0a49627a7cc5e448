#pragma once

// Command dispatch for the hilbsam tool. Every command builds one JSON
// document (command, ring, inputs, results); text output is rendered from
// the same document so the two never disagree.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hilbsam/curves.hpp"
#include "hilbsam/parser.hpp"
#include "hilbsam/verify.hpp"

namespace hilbsam::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kParse = 2,
  kPrecondition = 3,
  kNotStabilized = 4,
  kRationality = 5,
  kInvariant = 6,
};

inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return kParse;
    case ErrorKind::precondition: return kPrecondition;
    case ErrorKind::not_stabilized:
    case ErrorKind::resource_limit: return kNotStabilized;
    case ErrorKind::rationality: return kRationality;
    case ErrorKind::invariant: return kInvariant;
  }
  return kInvariant;
}

/// Everything a single command needs, from flags or from a session file.
struct Inputs {
  std::string ring;
  std::string modulus;
  std::string ideal;
  std::string curve;
  std::string field = "q";
  std::string order = "degrevlex";
  std::optional<unsigned> dimension;
  std::optional<unsigned> n_max;
  unsigned powers = 3;
  bool quick = false;
  int line = 1;  // source line for parse errors in session files
};

struct Settings {
  unsigned max_power = 64;
  std::optional<double> timeout_secs;
  bool json = false;
  bool timing = false;
};

namespace detail {

inline std::string str(const Integer& v) { return v.get_str(); }
inline std::string str(std::uint64_t v) { return std::to_string(v); }

template <class Seq>
json strings(const Seq& seq) {
  json out = json::array();
  for (const auto& v : seq) out.push_back(str(v));
  return out;
}

/// Runs `fn`, prefixing any parse error with the input it came from.
template <class Fn>
auto parsing(const std::string& label, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw Error(ErrorKind::parse, label + ": " + e.what());
  }
}

inline void require(const std::string& value, const std::string& flag) {
  if (value.empty()) throw Error(ErrorKind::parse, "missing required input " + flag);
}

template <Field K>
struct Context {
  PolyRingPtr base;
  RingPtr<K> ring;
};

template <Field K>
Context<K> build_ring(const Inputs& in) {
  require(in.ring, "--ring");
  const FieldDescriptor field = parsing("--field", [&] { return parse_field(in.field); });
  const OrderKind order = parsing("--order", [&] { return parse_order(in.order); });
  auto base = parsing("--ring", [&] { return parse_ring(in.ring, field, in.line); });
  std::optional<Polynomial<K>> mod;
  if (!in.modulus.empty())
    mod = parsing("--mod", [&] { return parse_polynomial<K>(in.modulus, base, in.line); });
  auto ring = with_order(make_ring<K>(base, mod, in.dimension), MonomialOrder{order});
  return {base, ring};
}

template <Field K>
json ring_json(const Inputs& in, const RingContext<K>& r) {
  json j;
  j["descriptor"] = in.ring;
  j["variables"] = r.base->variables;
  j["field"] = r.field().to_string();
  j["modulus"] = r.modulus ? json(r.modulus->to_string()) : json(nullptr);
  j["dimension"] = std::to_string(r.dimension);
  j["order"] = to_string(r.order.kind);
  return j;
}

template <Field K>
json generators_json(const Ideal<K>& ideal) {
  json g = json::array();
  for (const auto& p : ideal.generators()) g.push_back(p.to_string());
  return g;
}

inline json relation_json(const Relation& r) {
  json j;
  j["relation"] = r.statement;
  j["lhs"] = str(r.lhs);
  j["rhs"] = str(r.rhs);
  j["holds"] = r.holds();
  return j;
}

inline json relations_json(const std::vector<Relation>& rs) {
  json out = json::array();
  for (const auto& r : rs) out.push_back(relation_json(r));
  return out;
}

inline json clause_one_json(const ClauseOne& c) {
  json j;
  j["reading"] = c.reading;
  j["subtracted"] = str(c.subtracted);
  j["lower"] = relation_json(c.lower);
  j["upper"] = relation_json(c.upper);
  j["holds"] = c.holds();
  return j;
}

template <Field K>
json ideal_command(const std::string& command, const Inputs& in, HilbertOptions ho, json& doc) {
  auto ctx = build_ring<K>(in);
  require(in.ideal, "--ideal");
  auto gens = parsing("--ideal", [&] { return parse_generators<K>(in.ideal, ctx.base, in.line); });
  Ideal<K> ideal(ctx.ring, std::move(gens));
  doc["ring"] = ring_json(in, *ctx.ring);
  doc["inputs"]["ideal"] = generators_json(ideal);

  json res;
  if (command == "coeffs") {
    auto h = e_coefficients(ideal, ho);
    res["d"] = std::to_string(h.d);
    res["e"] = strings(h.e);
    res["n0"] = std::to_string(h.n0);
  } else if (command == "hvector") {
    auto h = e_coefficients(ideal, ho);
    res["d"] = std::to_string(h.d);
    res["s"] = std::to_string(h.s());
    res["a"] = strings(h.a);
  } else if (command == "hilbert-values") {
    std::vector<std::uint64_t> values;
    if (in.n_max) {
      doc["inputs"]["nmax"] = std::to_string(*in.n_max);
      values = hs_values(ideal, *in.n_max, ho);
    } else {
      values = e_coefficients(ideal, ho).values;
    }
    res["values"] = strings(values);
  } else if (command == "check-hhc") {
    auto r = check_hhc(ideal, ho);
    res["d"] = std::to_string(r.data.d);
    res["s"] = std::to_string(r.data.s());
    res["e"] = strings(r.data.e);
    res["a"] = strings(r.data.a);
    res["length_I_mod_I2"] = str(r.length_I_mod_I2);
    res["mu"] = str(r.mu);
    res["clause_i_printed"] = clause_one_json(r.clause_i_printed);
    res["clause_i_mu"] = clause_one_json(r.clause_i_mu);
    res["clause_ii"] = relations_json(r.clause_ii);
    res["clause_iii"] = relations_json(r.clause_iii);
    res["clause_iv"] = relations_json(r.clause_iv);
    res["a_positive"] = r.a_positive;
    res["hypotheses_witnessed"] = r.hypotheses_witnessed();
    res["clauses_ii_to_iv_hold"] = r.clauses_ii_to_iv_hold();
    // with a positive numerator the clauses are consequences, not hypotheses
    if (r.hypotheses_witnessed() && !r.clauses_ii_to_iv_hold())
      throw InequalityViolation("positive numerator but clauses (ii)-(iv) fail");
  } else if (command == "check-powers") {
    doc["inputs"]["powers"] = std::to_string(in.powers);
    const unsigned d = ctx.ring->dimension;
    PowerReport r = in.powers >= d + 2 ? check_power_polynomial_growth(ideal, in.powers, ho)
                                       : check_power_invariance(ideal, in.powers, ho);
    if (!r.e_d_constant) throw InvariantViolation("e_d(I^n) is not constant in n");
    res["d"] = std::to_string(r.d);
    json rows = json::array();
    for (const auto& row : r.rows) {
      json jr;
      jr["n"] = std::to_string(row.n);
      jr["e"] = strings(row.e);
      rows.push_back(jr);
    }
    res["rows"] = rows;
    res["e_d_constant"] = r.e_d_constant;
    json deg = json::array();
    for (int g : r.growth_degree) deg.push_back(std::to_string(g));
    res["growth_degree"] = deg;
  }
  return res;
}

inline json tree_json(const ResolutionNode& n) {
  json j;
  std::string path;
  for (const auto& s : n.chart_path) path += (path.empty() ? "" : "/") + s.to_string();
  j["path"] = path;
  j["equation"] = n.local_equation.to_string();
  j["multiplicity"] = std::to_string(n.multiplicity);
  j["irrational_smooth_points"] = std::to_string(n.irrational_smooth_points);
  json kids = json::array();
  for (const auto& c : n.children) kids.push_back(tree_json(c));
  j["children"] = kids;
  return j;
}

inline json curve_command(const std::string& command, const Inputs& in, const HilbertOptions& ho, json& doc) {
  auto fd = parsing("--field", [&] { return parse_field(in.field); });
  if (fd.kind != FieldDescriptor::Kind::rational) throw PreconditionError("curve commands need --field q");
  require(in.ring, "--ring");
  require(in.curve, "--curve");
  auto base = parsing("--ring", [&] { return parse_ring(in.ring, fd, in.line); });
  QPoly f = parsing("--curve", [&] { return parse_polynomial<Rational>(in.curve, base, in.line); });
  if (!in.modulus.empty()) {
    QPoly m = parsing("--mod", [&] { return parse_polynomial<Rational>(in.modulus, base, in.line); });
    if (!(m == f) && !(m == -f)) throw PreconditionError("--mod differs from --curve");
  }
  PlaneCurve curve = make_plane_curve(f);
  doc["ring"] = ring_json(in, *curve.ring);
  doc["inputs"]["curve"] = f.to_string();

  json res;
  if (command == "curve-resolve") {
    ResolutionNode tree = resolve(f, ho.budget);
    Integer delta = 0;
    for (unsigned m : tree.multiplicities()) delta += Integer(m) * (m - 1) / 2;
    res["tree"] = tree_json(tree);
    const auto ms = tree.multiplicities();
    res["multiplicities"] = strings(std::vector<std::uint64_t>(ms.begin(), ms.end()));
    res["depth"] = std::to_string(tree.depth());
    res["delta"] = str(delta);
  } else if (command == "delta") {
    auto r = delta(f, ho);
    res["delta"] = str(r.delta_combinatorial);
    res["delta_northcott"] = str(r.delta_northcott);
    res["agree"] = r.agree;
  } else if (command == "hironaka") {
    require(in.ideal, "--ideal");
    auto gens = parsing("--ideal", [&] { return parse_generators<Rational>(in.ideal, base, in.line); });
    Ideal<Rational> ideal(curve.ring, std::move(gens));
    doc["inputs"]["ideal"] = generators_json(ideal);
    auto r = is_hironaka(curve, ideal, ho);
    res["e0"] = str(r.e0);
    res["e1"] = str(r.e1);
    res["delta"] = str(r.delta);
    res["hironaka"] = r.hironaka;
  }
  return res;
}

inline json suite_command(const Inputs& in, const HilbertOptions& ho, json& doc) {
  SuiteOptions so;
  so.include_three_variable = !in.quick;
  so.hilbert = ho;
  doc["ring"] = nullptr;
  doc["inputs"]["include_three_variable"] = so.include_three_variable;
  auto rows = run_paper_suite(so);
  json res;
  json jr = json::array();
  for (const auto& r : rows) {
    json j;
    j["key"] = r.key;
    j["expected"] = r.expected;
    j["computed"] = r.computed;
    j["status"] = r.informational ? "info" : (r.pass ? "pass" : "fail");
    jr.push_back(j);
  }
  res["rows"] = jr;
  res["passed"] = suite_passed(rows);
  return res;
}

inline bool is_ideal_command(const std::string& c) {
  return c == "coeffs" || c == "hvector" || c == "hilbert-values" || c == "check-hhc" || c == "check-powers";
}

}  // namespace detail

/// Executes one command and returns its report document.
inline json execute(const std::string& command, const Inputs& in, const Settings& s) {
  HilbertOptions ho;
  ho.max_power = s.max_power;
  if (s.timeout_secs) ho.budget = ComputeBudget::seconds(*s.timeout_secs);
  const auto start = std::chrono::steady_clock::now();

  json doc;
  doc["command"] = command;
  doc["ring"] = nullptr;
  doc["inputs"] = json::object();
  json results;
  if (detail::is_ideal_command(command)) {
    auto fd = detail::parsing("--field", [&] { return parse_field(in.field); });
    results = fd.kind == FieldDescriptor::Kind::rational
                  ? detail::ideal_command<Rational>(command, in, ho, doc)
                  : detail::ideal_command<ModP>(command, in, ho, doc);
  } else if (command == "curve-resolve" || command == "delta" || command == "hironaka") {
    results = detail::curve_command(command, in, ho, doc);
  } else if (command == "verify-paper") {
    results = detail::suite_command(in, ho, doc);
  } else {
    throw Error(ErrorKind::parse, "unknown command '" + command + "'");
  }
  doc["results"] = results;
  if (s.timing) {
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << dt.count();
    doc["timing"] = {{"seconds", os.str()}};
  }
  return doc;
}

// ---------------------------------------------------------------------------
// Text rendering.

namespace detail {

inline std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

inline bool scalar_array(const json& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return !x.is_structured(); });
}

inline void flatten(const std::string& prefix, const json& v, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object() && v.contains("relation")) {
    out.emplace_back(prefix, v["relation"].get<std::string>() + "   [" + v["lhs"].get<std::string>() + " vs " +
                                 v["rhs"].get<std::string>() + "] " + (v["holds"].get<bool>() ? "holds" : "FAILS"));
  } else if (v.is_object()) {
    for (const auto& [k, x] : v.items()) flatten(prefix.empty() ? k : prefix + "." + k, x, out);
  } else if (scalar_array(v)) {
    const std::string sep = prefix == "ideal" ? ", " : " ";
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : sep) + scalar_text(x);
    out.emplace_back(prefix, s.empty() ? "(none)" : s);
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(prefix + "[" + std::to_string(i) + "]", v[i], out);
  } else {
    out.emplace_back(prefix, scalar_text(v));
  }
}

inline void print_aligned(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t w = 0;
  for (const auto& r : rows) w = std::max(w, r.first.size());
  for (const auto& [k, v] : rows) os << std::left << std::setw(static_cast<int>(w + 2)) << k << v << '\n';
}

inline void print_tree(std::ostream& os, const json& node, int indent) {
  std::string path = node["path"].get<std::string>();
  os << std::string(2 * indent, ' ') << (path.empty() ? "origin" : path) << "  m=" << node["multiplicity"].get<std::string>()
     << "  " << node["equation"].get<std::string>();
  if (node["irrational_smooth_points"].get<std::string>() != "0")
    os << "  (+" << node["irrational_smooth_points"].get<std::string>() << " irrational smooth)";
  os << '\n';
  for (const auto& c : node["children"]) print_tree(os, c, indent + 1);
}

}  // namespace detail

inline void render_text(std::ostream& os, const json& doc) {
  std::vector<std::pair<std::string, std::string>> head;
  head.emplace_back("command", doc["command"].get<std::string>());
  if (!doc["ring"].is_null()) {
    const auto& r = doc["ring"];
    std::string ring = r["descriptor"].get<std::string>();
    if (!r["modulus"].is_null()) ring += "/(" + r["modulus"].get<std::string>() + ")";
    head.emplace_back("ring", ring);
    head.emplace_back("field", r["field"].get<std::string>());
    head.emplace_back("order", r["order"].get<std::string>());
    head.emplace_back("dimension", r["dimension"].get<std::string>());
  }
  for (const auto& [k, v] : doc["inputs"].items()) detail::flatten(k, v, head);
  const auto& res = doc["results"];
  const std::string cmd = doc["command"].get<std::string>();
  if (cmd == "verify-paper") {
    detail::print_aligned(os, head);
    os << '\n';
    std::vector<std::array<std::string, 4>> table{{"row", "expected", "computed", "status"}};
    for (const auto& r : res["rows"])
      table.push_back({r["key"].get<std::string>(), r["expected"].get<std::string>(),
                       r["computed"].get<std::string>(), r["status"].get<std::string>()});
    std::array<std::size_t, 4> w{};
    for (const auto& row : table)
      for (std::size_t i = 0; i < 4; ++i) w[i] = std::max(w[i], row[i].size());
    for (const auto& row : table) {
      for (std::size_t i = 0; i < 3; ++i) os << std::left << std::setw(static_cast<int>(w[i] + 2)) << row[i];
      os << row[3] << '\n';
    }
    os << '\n' << (res["passed"].get<bool>() ? "all rows pass" : "MISMATCH") << '\n';
  } else if (cmd == "curve-resolve") {
    std::vector<std::pair<std::string, std::string>> rest = head;
    detail::flatten("multiplicities", res["multiplicities"], rest);
    detail::flatten("depth", res["depth"], rest);
    detail::flatten("delta", res["delta"], rest);
    detail::print_aligned(os, rest);
    os << "tree\n";
    detail::print_tree(os, res["tree"], 1);
  } else {
    detail::flatten("", res, head);
    detail::print_aligned(os, head);
  }
  if (doc.contains("timing")) os << "time " << doc["timing"]["seconds"].get<std::string>() << " s\n";
}

// ---------------------------------------------------------------------------
// Sessions.

inline std::vector<std::pair<std::string, Inputs>> session_jobs(const Session& s) {
  std::vector<std::pair<std::string, Inputs>> jobs;
  for (const auto& cmd : s.commands) {
    Inputs in;
    in.ring = s.ring;
    in.field = s.field;
    in.order = s.order;
    in.modulus = s.modulus.value_or("");
    in.dimension = s.dimension;
    in.line = cmd.line;
    for (const auto& a : cmd.args) {
      if (auto it = s.ideals.find(a); it != s.ideals.end()) {
        if (!in.ideal.empty()) throw ParseError("command takes one ideal", cmd.line, 1);
        in.ideal = it->second.first;
      } else if (auto jt = s.curves.find(a); jt != s.curves.end()) {
        if (!in.curve.empty()) throw ParseError("command takes one curve", cmd.line, 1);
        in.curve = jt->second.first;
      } else {
        unsigned n = static_cast<unsigned>(std::stoul(a));
        if (cmd.name == "check-powers") in.powers = n;
        else in.n_max = n;
      }
    }
    // a curve command runs in the plane ring, not the declared quotient
    if (!in.curve.empty()) in.modulus.clear();
    jobs.emplace_back(cmd.name, std::move(in));
  }
  return jobs;
}

// ---------------------------------------------------------------------------
// Entry point.

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert-Samuel coefficients, plane curve resolution and inequality checks", "hilbsam"};
  app.require_subcommand(1);
  app.fallthrough();

  Inputs in;
  Settings s;
  std::string session_file;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--field", in.field, "Coefficient field: q or fp:<p>")->capture_default_str();
    sub->add_option("--max-power", s.max_power, "Stabilization cap on the power index")->capture_default_str();
    sub->add_option("--timeout-secs", s.timeout_secs, "Wall-clock limit");
    sub->add_flag("--json", s.json, "Emit JSON");
    sub->add_flag("--timing", s.timing, "Include elapsed time in the report");
  };
  auto ring_opts = [&](CLI::App* sub) {
    sub->add_option("--ring", in.ring, "Ring, e.g. Q[x,y]");
    sub->add_option("--mod", in.modulus, "Hypersurface equation of the quotient");
    sub->add_option("--order", in.order, "degrevlex, deglex or lex")->capture_default_str();
    sub->add_option("--dim", in.dimension, "Krull dimension of the local ring");
  };

  std::vector<CLI::App*> subs;
  auto ideal_cmd = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    ring_opts(sub);
    sub->add_option("--ideal", in.ideal, "Generators, comma separated; m^k for the maximal ideal power");
    common(sub);
    subs.push_back(sub);
    return sub;
  };
  ideal_cmd("coeffs", "Hilbert-Samuel coefficients e_0..e_d");
  ideal_cmd("hvector", "Numerator a_0..a_s of the Hilbert-Samuel series");
  ideal_cmd("hilbert-values", "Values h(n) = length(R/I^(n+1))")->add_option("--nmax", in.n_max, "Last n");
  ideal_cmd("check-hhc", "Coefficient inequalities for the ideal");
  ideal_cmd("check-powers", "e-vectors of I^n and their behaviour in n")
      ->add_option("--powers", in.powers, "Largest power n")
      ->capture_default_str();
  for (const auto& [name, help] :
       std::vector<std::pair<std::string, std::string>>{{"curve-resolve", "Resolution tree by point blow-ups"},
                                                        {"delta", "Delta invariant of a plane curve"}}) {
    auto* sub = app.add_subcommand(name, help);
    ring_opts(sub);
    sub->add_option("--curve", in.curve, "Curve equation");
    common(sub);
    subs.push_back(sub);
  }
  {
    auto* sub = app.add_subcommand("hironaka", "Compare e_1 of an ideal with delta");
    ring_opts(sub);
    sub->add_option("--curve", in.curve, "Curve equation");
    sub->add_option("--ideal", in.ideal, "Generators of the ideal");
    common(sub);
    subs.push_back(sub);
  }
  {
    auto* sub = app.add_subcommand("verify-paper", "Regression table of the reference examples");
    sub->add_flag("--quick", in.quick, "Omit the three-variable example");
    common(sub);
    subs.push_back(sub);
  }
  {
    auto* sub = app.add_subcommand("session", "Run the commands of a session file");
    sub->add_option("file", session_file, "Session file")->required();
    common(sub);
    subs.push_back(sub);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  std::string command;
  for (auto* sub : subs)
    if (sub->parsed()) command = sub->get_name();

  try {
    if (command != "session") {
      json doc = execute(command, in, s);
      if (s.json) out << doc.dump(2) << '\n';
      else render_text(out, doc);
      if (command == "verify-paper" && !doc["results"]["passed"].get<bool>()) {
        err << "hilbsam: error: regression table has mismatching rows\n";
        return kInvariant;
      }
      return kOk;
    }
    std::ifstream file(session_file);
    if (!file) throw PreconditionError("cannot open session file '" + session_file + "'");
    std::stringstream buf;
    buf << file.rdbuf();
    Session session = parse_session(buf.str());
    auto jobs = session_jobs(session);
    json docs = json::array();
    for (const auto& [name, job] : jobs) {
      try {
        docs.push_back(execute(name, job, s));
      } catch (const Error& e) {
        // keep the error class, point at the offending command
        throw Error(e.kind(), session_file + ":" + std::to_string(job.line) + ": " + name + ": " + e.what());
      }
    }
    if (s.json) {
      json doc;
      doc["command"] = "session";
      doc["file"] = session_file;
      doc["reports"] = docs;
      out << doc.dump(2) << '\n';
    } else {
      for (std::size_t i = 0; i < docs.size(); ++i) {
        if (i) out << '\n';
        render_text(out, docs[i]);
      }
    }
    return kOk;
  } catch (const Error& e) {
    err << "hilbsam: error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "hilbsam: internal error: " << e.what() << '\n';
    return kInvariant;
  }
}

}  // namespace hilbsam::cli
