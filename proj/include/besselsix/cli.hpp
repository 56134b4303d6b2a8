#pragma once

// Command-line front end: argument parsing, dispatch, and text/JSON/CSV reports.

#include <besselsix/bessel.hpp>
#include <besselsix/certify.hpp>
#include <besselsix/closed_form.hpp>
#include <besselsix/core_integrals.hpp>
#include <besselsix/expansions.hpp>
#include <besselsix/quadrature.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace besselsix {
namespace io {

using nlohmann::json;

inline constexpr int kSchema = 1;

inline Variant parse_variant(const std::string& s) {
  if (s == "0" || s == "I0" || s == "i0") return Variant::I0;
  if (s == "1" || s == "I1" || s == "i1") return Variant::I1;
  throw std::invalid_argument("variant must be 0 or 1, got '" + s + "'");
}

inline json exact_json(const ExactScalar& x) { return {{"exact", x.str()}, {"value", x.to_real<double>()}}; }
inline ExactScalar exact_from(const json& j) { return ExactScalar::parse(j.at("exact").get<std::string>()); }

inline json certified_json(const CertifiedValue<double>& c) { return {{"mid", c.mid}, {"rad", c.rad}}; }
inline CertifiedValue<double> certified_from(const json& j) { return {j.at("mid").get<double>(), j.at("rad").get<double>()}; }

inline json header(const char* record) { return {{"schema", kSchema}, {"record", record}}; }

inline void check_record(const json& j, const char* record) {
  if (j.at("schema").get<int>() != kSchema) throw std::invalid_argument("unsupported schema version");
  if (j.at("record").get<std::string>() != record) throw std::invalid_argument(std::string("expected a ") + record + " record");
}

// ---- Prediction ----

inline json to_json(const Prediction& p) {
  json j = header("prediction");
  j["variant"] = variant_name(p.variant);
  j["m"] = p.m;
  j["n"] = p.n;
  j["main"] = exact_json(p.main);
  j["radius"] = p.radius;
  j["budget"] = json::array();
  for (const auto& item : p.budget) j["budget"].push_back({{"name", item.name}, {"value", item.value}});
  return j;
}

inline Prediction prediction_from(const json& j) {
  check_record(j, "prediction");
  Prediction p;
  p.variant = parse_variant(j.at("variant").get<std::string>());
  p.m = j.at("m").get<int>();
  p.n = j.at("n").get<int>();
  p.main = exact_from(j.at("main"));
  p.radius = j.at("radius").get<double>();
  for (const auto& item : j.at("budget")) p.budget.push_back({item.at("name").get<std::string>(), item.at("value").get<double>()});
  return p;
}

// ---- Integral ----

inline json to_json(const IntegralResult& r, const QuadratureScheme& s) {
  json j = header("integral");
  j["variant"] = variant_name(r.cell.variant);
  j["m"] = r.cell.m;
  j["n"] = r.cell.n;
  j["scheme"] = {{"S", s.S}, {"R", s.R}, {"w_low", s.w_low}, {"w_high", s.w_high}};
  j["low_sum"] = r.low_sum;
  j["high_sum"] = r.high_sum;
  j["tail"] = certified_json(r.tail);
  const ErrorBudget& b = r.budget;
  j["budget"] = {{"quad_low", b.quad_low},   {"quad_high", b.quad_high}, {"tail_main_eval", b.tail_main_eval},
                 {"tail_error_terms", b.tail_error_terms}, {"rounding", b.rounding}, {"total", b.total}};
  j["value"] = certified_json(r.value);
  return j;
}

inline IntegralResult integral_from(const json& j) {
  check_record(j, "integral");
  IntegralResult r;
  r.cell = {parse_variant(j.at("variant").get<std::string>()), j.at("m").get<int>(), j.at("n").get<int>()};
  r.low_sum = j.at("low_sum").get<double>();
  r.high_sum = j.at("high_sum").get<double>();
  r.tail = certified_from(j.at("tail"));
  const json& b = j.at("budget");
  r.budget = {b.at("quad_low").get<double>(),        b.at("quad_high").get<double>(), b.at("tail_main_eval").get<double>(),
              b.at("tail_error_terms").get<double>(), b.at("rounding").get<double>(),  b.at("total").get<double>()};
  r.value = certified_from(j.at("value"));
  return r;
}

// ---- Table ----

inline json to_json(const std::vector<TableEntry>& rows) {
  json j = header("table");
  j["rows"] = json::array();
  for (const auto& e : rows)
    j["rows"].push_back({{"n", e.n}, {"m", e.m}, {"top", e.top}, {"bottom", e.bottom},
                         {"i0", certified_json(e.i0)}, {"i1", certified_json(e.i1)}});
  return j;
}

inline std::vector<TableEntry> table_from(const json& j) {
  check_record(j, "table");
  std::vector<TableEntry> out;
  for (const auto& r : j.at("rows"))
    out.push_back({r.at("n").get<int>(), r.at("m").get<int>(), r.at("top").get<double>(), r.at("bottom").get<double>(),
                   certified_from(r.at("i0")), certified_from(r.at("i1"))});
  return out;
}

// ---- Theorem check ----

struct CheckReport {
  Variant variant = Variant::I0;
  int m = 0;
  int n = 0;
  double constant = 0;
  CertifiedValue<double> measured;
  TheoremCheck result;
};

inline json to_json(const CheckReport& c) {
  json j = header("check");
  j["variant"] = variant_name(c.variant);
  j["m"] = c.m;
  j["n"] = c.n;
  j["constant"] = c.constant;
  j["measured"] = certified_json(c.measured);
  j["pass"] = c.result.pass;
  j["deviation"] = c.result.deviation;
  j["bound"] = c.result.bound;
  j["slack"] = c.result.slack;
  return j;
}

inline CheckReport check_from(const json& j) {
  check_record(j, "check");
  CheckReport c;
  c.variant = parse_variant(j.at("variant").get<std::string>());
  c.m = j.at("m").get<int>();
  c.n = j.at("n").get<int>();
  c.constant = j.at("constant").get<double>();
  c.measured = certified_from(j.at("measured"));
  c.result = {j.at("pass").get<bool>(), j.at("deviation").get<double>(), j.at("bound").get<double>(), j.at("slack").get<double>()};
  return c;
}

// ---- Expansion ----

inline json to_json(const RemainderedExpansion& e, const std::string& which) {
  json j = header("expansion");
  j["which"] = which;
  j["terms"] = json::array();
  for (int k = 0; k < kExpansionTerms; ++k) {
    json mons = json::array();
    for (const auto& [mono, q] : e.terms[k].terms()) mons.push_back({{"c", mono[0]}, {"s", mono[1]}, {"t", mono[2]}, {"coeff", q.str()}});
    j["terms"].push_back({{"degree", k}, {"text", e.terms[k].str()}, {"monomials", mons}});
  }
  j["remainders"] = json::array();
  for (const auto& r : e.remainders) j["remainders"].push_back(r.str());
  return j;
}

inline RemainderedExpansion expansion_from(const json& j) {
  check_record(j, "expansion");
  RemainderedExpansion e;
  for (const auto& term : j.at("terms")) {
    const int k = term.at("degree").get<int>();
    if (k < 0 || k >= kExpansionTerms) throw std::invalid_argument("expansion term degree out of range");
    for (const auto& m : term.at("monomials"))
      e.terms[k].add(m.at("c").get<int>(), m.at("s").get<int>(), m.at("t").get<int>(), Rational(m.at("coeff").get<std::string>()));
  }
  const auto& rem = j.at("remainders");
  if (rem.size() != e.remainders.size()) throw std::invalid_argument("expansion needs seven remainders");
  for (std::size_t i = 0; i < rem.size(); ++i) e.remainders[i] = Rational(rem[i].get<std::string>());
  e.validate();
  return e;
}

}  // namespace io

namespace cli {

using io::json;

enum class Command { eval_bessel, closed_form, expansion, core_bounds, predict, theorem_map, integrate, table, check_theorem, figure1 };
enum class Format { human, json, csv };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Help text requested; not an error.
struct HelpRequest {
  std::string text;
};

struct RunConfig {
  Command command = Command::predict;
  Variant variant = Variant::I0;
  int m = 0;
  int n = 2;
  int k = 1;
  double r = 0;
  int row_lo = 2;
  int row_hi = 19;
  int n_max = 19;
  QuadratureScheme scheme;
  bool refined = false;
  Format format = Format::human;
  int workers = 1;
  bool budget = false;
  std::string output;  // file for CSV output; empty writes to the stream
  std::string which = "j000";
  std::string kind = "ws";
  std::string trig = "cos";
  int samples = 2001;
};

namespace detail {

inline std::pair<int, int> parse_rows(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("--rows must look like 2..19");
  }
}

inline void check_orders(const RunConfig& c) {
  if (c.m < 0 || c.m % 2 != 0) throw UsageError("--m must be even and nonnegative");
  if (c.n < 2) throw UsageError("--n must be at least 2");
  if (c.m > c.n) throw UsageError("--m must not exceed --n");
}

}  // namespace detail

/// Parses arguments (without the program name).
inline RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Certified bounds for integrals of six Bessel functions", "besselsix"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<int> workers;
  app.add_option("--workers", workers, "Worker threads (overrides BESSELSIX_WORKERS)")->check(CLI::PositiveNumber);

  RunConfig c;
  std::string variant = "0", rows = "2..19";
  bool json_out = false;
  std::optional<std::string> csv;

  auto add_variant = [&](CLI::App* s) { s->add_option("--variant", variant, "0 for I0, 1 for I1")->required(); };
  auto add_mn = [&](CLI::App* s) {
    add_variant(s);
    s->add_option("--m", c.m, "Even order m")->required();
    s->add_option("--n", c.n, "Order n")->required();
  };
  auto add_json = [&](CLI::App* s) { s->add_flag("--json", json_out, "JSON output"); };

  auto* eval = app.add_subcommand("eval-bessel", "Evaluate J_n(r)");
  eval->add_option("--n", c.n, "Order")->required();
  eval->add_option("--r", c.r, "Argument")->required();
  add_json(eval);

  auto* closed = app.add_subcommand("closed-form", "Closed-form two-Bessel integrals");
  closed->add_option("--kind", c.kind, "kapteyn, ws, freq2 or descent")->check(CLI::IsMember({"kapteyn", "ws", "freq2", "descent"}));
  closed->add_option("--n", c.n, "Order n")->required();
  closed->add_option("--m", c.m, "Order m")->required();
  closed->add_option("--k", c.k, "Power of 1/r");
  closed->add_option("--trig", c.trig, "cos or sin (freq2)")->check(CLI::IsMember({"cos", "sin"}));
  add_json(closed);

  auto* expansion = app.add_subcommand("expansion", "Remaindered asymptotic expansions");
  expansion->add_option("--which", c.which, "j0, j1, j000 or j110")->check(CLI::IsMember({"j0", "j1", "j000", "j110"}));
  add_json(expansion);

  auto* core = app.add_subcommand("core-bounds", "Main terms and error bounds of the core integrals (n >= 20)");
  add_mn(core);
  add_json(core);

  auto* pred = app.add_subcommand("predict", "Certified prediction for n >= 20");
  add_mn(pred);
  pred->add_flag("--budget", c.budget, "Itemize the error budget");
  add_json(pred);

  auto* map = app.add_subcommand("theorem-map", "Applicability map of the theorem constants");
  map->add_option("--n-max", c.n_max, "Largest n listed")->check(CLI::Range(2, 400));
  add_json(map);

  auto* integ = app.add_subcommand("integrate", "Certified quadrature of I0/I1");
  add_mn(integ);
  integ->add_option("--S", c.scheme.S, "Split point");
  integ->add_option("--R", c.scheme.R, "Upper limit");
  integ->add_option("--w-low", c.scheme.w_low, "Width on [0, S]");
  integ->add_option("--w-high", c.scheme.w_high, "Width on [S, R]");
  integ->add_flag("--refined", c.refined, "Finer scheme used for n >= 20");
  add_json(integ);

  auto* table = app.add_subcommand("table", "Normalized deviations for 2 <= n <= 19");
  table->add_option("--csv", csv, "Write CSV (to the given file, or stdout)")->expected(0, 1);
  table->add_option("--rows", rows, "Row range, e.g. 2..19");
  add_json(table);

  auto* check = app.add_subcommand("check-theorem", "Check the theorem bound against a quadrature enclosure");
  add_mn(check);
  add_json(check);

  auto* fig = app.add_subcommand("figure1", "Samples of J15 J9 J6 J1^2 J0 r on [0, 100]");
  fig->add_option("--csv", csv, "Write CSV (to the given file, or stdout)")->expected(0, 1);
  fig->add_option("--samples", c.samples, "Number of samples")->check(CLI::Range(2, 1000000));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequest{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequest{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  CLI::App* used = app.get_subcommands().front();
  const std::string name = used->get_name();
  if (name == "eval-bessel") c.command = Command::eval_bessel;
  else if (name == "closed-form") c.command = Command::closed_form;
  else if (name == "expansion") c.command = Command::expansion;
  else if (name == "core-bounds") c.command = Command::core_bounds;
  else if (name == "predict") c.command = Command::predict;
  else if (name == "theorem-map") c.command = Command::theorem_map;
  else if (name == "integrate") c.command = Command::integrate;
  else if (name == "table") c.command = Command::table;
  else if (name == "check-theorem") c.command = Command::check_theorem;
  else c.command = Command::figure1;

  try {
    c.variant = io::parse_variant(variant);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (c.command == Command::core_bounds || c.command == Command::predict || c.command == Command::integrate ||
      c.command == Command::check_theorem)
    detail::check_orders(c);
  if (c.command == Command::table) {
    std::tie(c.row_lo, c.row_hi) = detail::parse_rows(rows);
    if (c.row_lo < 2 || c.row_hi > 19 || c.row_lo > c.row_hi) throw UsageError("--rows must lie within 2..19");
  }
  c.format = json_out ? Format::json : Format::human;
  if (csv) {
    c.format = Format::csv;
    c.output = *csv;
  }
  c.workers = workers ? *workers : default_workers();
  return c;
}

namespace detail {

inline std::string fmt(double v, int digits = 17) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

inline void emit(std::ostream& out, const RunConfig& c, const json& j, const std::string& human) {
  if (c.format == Format::json) {
    out << j.dump(2) << '\n';
  } else {
    out << human;
  }
}

inline void write_csv(std::ostream& out, const RunConfig& c, const std::string& text) {
  if (c.output.empty() || c.output == "-") {
    out << text;
    return;
  }
  std::ofstream f(c.output);
  if (!f) throw std::runtime_error("cannot open " + c.output);
  f << text;
}

inline CertifiedValue<double> measure(const RunConfig& c, int workers) {
  const QuadratureScheme s = c.n >= kN0 ? QuadratureScheme::refined() : QuadratureScheme{};
  return integrate_cells({{c.variant, c.m, c.n}}, s, workers).front().value;
}

inline int run_command(const RunConfig& c, std::ostream& out) {
  std::ostringstream h;
  switch (c.command) {
    case Command::eval_bessel: {
      const double v = bessel_j(c.n, c.r);
      json j = io::header("bessel");
      j["n"] = c.n;
      j["r"] = c.r;
      j["value"] = v;
      h << "J_" << c.n << "(" << fmt(c.r) << ") = " << fmt(v) << '\n';
      emit(out, c, j, h.str());
      return 0;
    }
    case Command::closed_form: {
      json j = io::header("closed_form");
      j["kind"] = c.kind;
      j["n"] = c.n;
      j["m"] = c.m;
      if (c.kind == "kapteyn") {
        ExactScalar v = kapteyn(c.n, c.m);
        j["value"] = io::exact_json(v);
        h << "int J_" << c.n << " J_" << c.m << " / r dr = " << v.str() << " = " << fmt(v.to_real<double>()) << '\n';
      } else if (c.kind == "ws") {
        ExactScalar v = weber_schafheitlin(c.n, c.m, c.k);
        j["k"] = c.k;
        j["value"] = io::exact_json(v);
        h << "int J_" << c.n << " J_" << c.m << " r^-" << c.k << " dr = " << v.str() << " = " << fmt(v.to_real<double>()) << '\n';
      } else if (c.kind == "freq2") {
        CoreIntegralKey key{c.n, c.m, c.k, Freq::two, c.trig == "cos" ? Trig::cos : Trig::sin};
        const bool zero = vanishes_freq2(key);
        j["k"] = c.k;
        j["trig"] = c.trig;
        j["vanishes"] = zero;
        h << "int J_" << c.n << " J_" << c.m << " r^-" << c.k << " " << c.trig << "(2r) dr " << (zero ? "vanishes" : "is not forced to vanish") << '\n';
      } else {
        Rational b = descent_bound(c.n, c.m, c.k);
        j["k"] = c.k;
        j["bound"] = b.str();
        j["bound_value"] = to_real<double>(b);
        h << "|int J_" << c.n << " J_" << c.m << " r^-" << c.k << " e^(4ir) dr| <= " << b.str() << " = " << fmt(to_real<double>(b)) << '\n';
      }
      emit(out, c, j, h.str());
      return 0;
    }
    case Command::expansion: {
      RemainderedExpansion e = c.which == "j0"     ? base_expansion(BaseWhich::J0)
                               : c.which == "j1"   ? base_expansion(BaseWhich::J1)
                               : c.which == "j000" ? product_expansion(ProductTag::J000)
                                                   : product_expansion(ProductTag::J110);
      for (int k = 0; k < kExpansionTerms; ++k) h << "a_" << k << " = " << e.terms[k].str() << '\n';
      for (int k = 0; k <= kExpansionTerms; ++k) h << "r_" << k << " = " << e.remainders[k].str() << '\n';
      emit(out, c, io::to_json(e, c.which), h.str());
      return 0;
    }
    case Command::core_bounds: {
      CoreBoundBreakdown b = core_bounds(c.m, c.n, c.variant);
      json j = io::header("core_bounds");
      j["variant"] = variant_name(c.variant);
      j["m"] = c.m;
      j["n"] = c.n;
      j["main_cos"] = io::exact_json(b.main_cos);
      j["main_sin"] = io::exact_json(b.main_sin);
      j["e1_cos"] = b.e1_cos;
      j["e1_sin"] = b.e1_sin;
      j["e2_cos"] = b.e2_cos;
      j["e2_sin"] = b.e2_sin;
      j["estimate_A"] = estimate_A(c.m, c.n, c.variant);
      j["estimate_B"] = estimate_B_certified(c.m, c.n, c.variant);
      h << variant_name(c.variant) << " m=" << c.m << " n=" << c.n << '\n'
        << "  main cos  " << b.main_cos.str() << '\n'
        << "  main sin  " << b.main_sin.str() << '\n'
        << "  E1 cos    " << fmt(b.e1_cos, 6) << "   E1 sin  " << fmt(b.e1_sin, 6) << '\n'
        << "  E2 cos    " << fmt(b.e2_cos, 6) << "   E2 sin  " << fmt(b.e2_sin, 6) << '\n'
        << "  Estimate A " << fmt(estimate_A(c.m, c.n, c.variant), 6) << "   Estimate B " << fmt(estimate_B_certified(c.m, c.n, c.variant), 6) << '\n';
      emit(out, c, j, h.str());
      return 0;
    }
    case Command::predict: {
      Prediction p = predict(c.m, c.n, c.variant);
      h << variant_name(p.variant) << " m=" << p.m << " n=" << p.n << " main=" << p.main.str() << " (" << fmt(p.main.to_real<double>())
        << ") radius=" << fmt(p.radius) << '\n';
      if (c.budget)
        for (const auto& item : p.budget) h << "  " << std::left << std::setw(12) << item.name << fmt(item.value) << '\n';
      emit(out, c, io::to_json(p), h.str());
      return 0;
    }
    case Command::theorem_map: {
      json j = io::header("theorem_map");
      j["rules"] = json::array();
      for (const auto& r : theorem_rules()) {
        json rule = {{"variant", r.variant ? variant_name(*r.variant) : "both"}, {"m_lo", r.m_lo}, {"n_lo", r.n_lo},
                     {"constant", r.constant}, {"label", r.label}};
        rule["m_hi"] = r.m_hi ? json(*r.m_hi) : json(nullptr);
        rule["n_hi"] = r.n_hi ? json(*r.n_hi) : json(nullptr);
        j["rules"].push_back(rule);
      }
      j["exceptional"] = json::array();
      j["cells"] = json::array();
      h << "variant  m   n      constant  rule\n";
      for (auto v : {Variant::I0, Variant::I1})
        for (int n = 2; n <= c.n_max; ++n)
          for (int m = 0; m <= n; m += 2) {
            const TheoremRule* r = theorem_rule(m, n, v);
            if (!r) continue;
            json cell = {{"variant", variant_name(v)}, {"m", m}, {"n", n}, {"constant", r->constant}, {"label", r->label}};
            j["cells"].push_back(cell);
            if (std::string(r->label) == "exception") {
              j["exceptional"].push_back(cell);
              h << std::left << std::setw(9) << variant_name(v) << std::setw(4) << m << std::setw(7) << n << std::setw(10)
                << r->constant << r->label << '\n';
            }
          }
      h << "all other even m <= n: 0.002 for m = 0, 2 and 0.0015 for m >= 4 (" << j["cells"].size() << " cells up to n = " << c.n_max << ")\n";
      emit(out, c, j, h.str());
      return 0;
    }
    case Command::integrate: {
      const QuadratureScheme s = c.refined ? QuadratureScheme::refined() : c.scheme;
      IntegralResult r = integrate_cells({{c.variant, c.m, c.n}}, s, c.workers).front();
      const ErrorBudget& b = r.budget;
      h << variant_name(c.variant) << " m=" << c.m << " n=" << c.n << " I=" << fmt(r.value.mid) << " +- " << fmt(r.value.rad, 4) << '\n'
        << "  quadrature [0,S] " << fmt(r.low_sum) << "  [S,R] " << fmt(r.high_sum) << "  tail " << fmt(r.tail.mid) << '\n'
        << "  budget: quad_low " << fmt(b.quad_low, 4) << "  quad_high " << fmt(b.quad_high, 4) << "  tail_main " << fmt(b.tail_main_eval, 4)
        << "  tail_errors " << fmt(b.tail_error_terms, 4) << "  rounding " << fmt(b.rounding, 4) << '\n';
      emit(out, c, io::to_json(r, s), h.str());
      return 0;
    }
    case Command::table: {
      auto rows = build_table(c.row_lo, c.row_hi, c.workers);
      if (c.format == Format::csv) {
        write_csv(out, c, table_csv(rows));
        return 0;
      }
      h << "  n \\ m";
      for (int m = 0; m <= c.row_hi; m += 2) h << std::setw(11) << m;
      h << '\n';
      for (int n = c.row_lo; n <= c.row_hi; ++n) {
        h << std::setw(7) << n;
        for (const auto& e : rows)
          if (e.n == n) h << std::setw(11) << (table_cell(e.top).substr(1) + "/" + table_cell(e.bottom).substr(1));
        h << '\n';
      }
      emit(out, c, io::to_json(rows), h.str());
      return 0;
    }
    case Command::check_theorem: {
      auto constant = theorem_constants(c.m, c.n, c.variant);
      if (!constant) throw std::domain_error("check-theorem: the theorem gives no constant for this cell");
      io::CheckReport rep{c.variant, c.m, c.n, *constant, measure(c, c.workers), {}};
      rep.result = check_theorem(c.m, c.n, c.variant, rep.measured);
      h << (rep.result.pass ? "PASS " : "FAIL ") << variant_name(c.variant) << " m=" << c.m << " n=" << c.n
        << " deviation=" << fmt(rep.result.deviation, 6) << " bound=" << fmt(rep.result.bound, 6) << " slack=" << fmt(rep.result.slack, 6) << '\n';
      emit(out, c, io::to_json(rep), h.str());
      return rep.result.pass ? 0 : 2;
    }
    case Command::figure1: {
      std::ostringstream csv;
      csv << "r,f\n";
      for (const auto& p : figure1(c.samples)) csv << fmt(p.r) << ',' << fmt(p.f) << '\n';
      write_csv(out, c, csv.str());
      return 0;
    }
  }
  throw std::logic_error("unhandled command");
}

}  // namespace detail

/// Exit codes: 0 ok, 1 usage, 2 check failed, 3 domain error, 4 internal error.
inline int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    return detail::run_command(c, out);
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 4;
  }
}

inline int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  try {
    c = parse_args(args);
  } catch (const HelpRequest& h) {
    out << h.text;
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nRun with --help for usage.\n";
    return 1;
  }
  return run(c, out, err);
}

}  // namespace cli
}  // namespace besselsix
