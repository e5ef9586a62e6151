// motint: command-line front end. Prints one JSON document on stdout.
//
// Exit codes: 0 ok, 1 domain error, 2 parse error, 3 budget exceeded,
// 4 refused under --strict, 5 internal assertion.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "motint/arrangement.hpp"
#include "motint/engine.hpp"
#include "motint/errors.hpp"
#include "motint/forms_io.hpp"
#include "motint/oracle.hpp"
#include "motint/report.hpp"
#include "motint/witt.hpp"

using namespace motint;

namespace {

class StrictRefusal : public Error {
 public:
  using Error::Error;
};

std::vector<std::uint64_t> parse_u64_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  std::size_t offset = 0;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(item, &used);
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("expected a positive integer in '" + text + "'", offset);
    }
    offset += item.size() + 1;
  }
  return out;
}

std::uint64_t residue_characteristic(std::uint64_t q) {
  std::uint64_t p;
  unsigned e;
  if (!split_prime_power(q, p, e)) throw DomainError(std::to_string(q) + " is not a prime power");
  return p;
}

Json forms_json(const FormProduct& fp) {
  Json arr = Json::array();
  for (const auto& f : fp.canonical().forms) arr.push_back(form_to_string(f));
  return arr;
}

bool admitted(const ValidityReport& v, const std::string& setting, std::uint64_t p) {
  return setting == "equalchar" ? v.admits_equal_char(p) : v.admits_mixed_char(p);
}

MotivicResult run_method(const FormProduct& fp, const std::string& method, bool trace) {
  IntegrationOptions options;
  options.collect_trace = trace;
  if (method == "mainmc") return integrate_product(fp, options);
  if (method == "leuven") return integrate_leuven(fp);
  ValidityReport v = classify_validity(fp);
  if (v.mixed_char == MixedVerdict::OutsideBadPrimes) return integrate_leuven(fp);
  return integrate_product(fp, options);
}

void write_trace(const std::string& path, const std::vector<TraceNode>& trace) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw DomainError("cannot open trace file " + path);
  for (const auto& node : trace) out << to_json(node).dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact motivic integrals of products of linear forms"};
  app.require_subcommand(1);

  unsigned vars = 0;
  std::string forms_text, method = "auto", eval_text, setting, trace_file, eq_text, neq_text, poly_text, eval_at_text;
  std::uint64_t q = 0, p = 0, count_at = 0, field_p = 0;
  unsigned depth = 0, witt_k = 0;
  bool strict = false;

  auto* integrate = app.add_subcommand("integrate", "symbolic integral with validity report");
  integrate->add_option("--vars", vars, "ambient dimension n")->required();
  integrate->add_option("--forms", forms_text, "comma-separated linear forms, e.g. \"x1-x2, x2-x3\"")->required();
  integrate->add_option("--method", method, "auto, mainmc or leuven")
      ->check(CLI::IsMember({"auto", "mainmc", "leuven"}));
  integrate->add_option("--eval", eval_text, "comma-separated prime powers q");
  integrate->add_option("--setting", setting, "validity setting for --strict: mixed or equalchar")
      ->check(CLI::IsMember({"mixed", "equalchar"}));
  integrate->add_flag("--strict", strict, "refuse evaluations outside the validity report");
  integrate->add_option("--trace-file", trace_file, "write recursion nodes as JSON lines");

  auto* verify = app.add_subcommand("verify", "bracket the integral by enumeration and compare");
  verify->add_option("--vars", vars, "ambient dimension n")->required();
  verify->add_option("--forms", forms_text, "comma-separated linear forms")->required();
  verify->add_option("--q", q, "residue field size (prime power)")->required();
  verify->add_option("--depth", depth, "truncation depth k")->required();
  verify->add_option("--setting", setting, "zp, wq or equalchar")->check(CLI::IsMember({"zp", "wq", "equalchar"}));
  verify->add_option("--method", method, "auto, mainmc or leuven")
      ->check(CLI::IsMember({"auto", "mainmc", "leuven"}));
  verify->add_flag("--strict", strict, "refuse when q is outside the validity report");
  verify->add_option("--trace-file", trace_file, "write recursion nodes as JSON lines");

  auto* arrangement = app.add_subcommand("arrangement", "class of an arrangement stratum");
  arrangement->add_option("--vars", vars, "ambient dimension n")->required();
  arrangement->add_option("--eq", eq_text, "forms required to vanish");
  arrangement->add_option("--neq", neq_text, "forms required not to vanish");
  arrangement->add_option("--count-at", count_at, "also count F_q-points by enumeration");
  arrangement->add_option("--p", field_p, "work over F_p instead of generically");

  auto* onevar = app.add_subcommand("onevar", "integral of |f| for univariate f");
  onevar->add_option("--poly", poly_text, "integer polynomial in X, e.g. \"X^2 + 1\"")->required();
  onevar->add_option("--p", p, "residue characteristic")->required();
  onevar->add_option("--eval-at", eval_at_text, "comma-separated extension degrees i (q = p^i)");

  auto* witt_dump = app.add_subcommand("witt-dump", "print Witt structure polynomials (plain text)");
  witt_dump->add_option("--p", p, "prime")->required();
  witt_dump->add_option("--k", witt_k, "length")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Json doc;
    if (*integrate) {
      const FormProduct fp = parse_forms(forms_text, vars);
      const auto qs = parse_u64_list(eval_text);
      MotivicResult r = run_method(fp, method, !trace_file.empty());
      if (setting.empty()) setting = "mixed";
      Json evals = Json::array();
      for (auto qq : qs) {
        const std::uint64_t pp = residue_characteristic(qq);
        const bool ok = admitted(r.validity, setting, pp);
        if (strict && !ok)
          throw StrictRefusal("q = " + std::to_string(qq) + " is outside the " + setting + " validity report");
        evals.push_back({{"q", qq}, {"value", to_fraction_string(r.value.evaluate(Rational(Integer(static_cast<unsigned long>(qq)))))},
                         {"admitted", ok}});
      }
      doc["command"] = "integrate";
      doc["input"] = {{"vars", vars}, {"forms", forms_json(fp)}};
      doc["method"] = r.method;
      doc["value"] = to_json(r.value);
      doc["validity"] = to_json(r.validity);
      doc["evaluations"] = evals;
      write_trace(trace_file, r.trace);
    } else if (*verify) {
      const FormProduct fp = parse_forms(forms_text, vars);
      if (setting.empty()) setting = "zp";
      std::uint64_t pp;
      unsigned e;
      if (!split_prime_power(q, pp, e)) throw DomainError(std::to_string(q) + " is not a prime power");
      if (setting == "zp" && e != 1) throw DomainError("the zp setting needs a prime q; use --setting wq");
      MotivicResult r = run_method(fp, method, !trace_file.empty());
      const bool ok = admitted(r.validity, setting == "equalchar" ? "equalchar" : "mixed", pp);
      if (strict && !ok) throw StrictRefusal("q = " + std::to_string(q) + " is outside the validity report");
      Bracket b = setting == "zp"   ? padic_bracket_zp(fp, pp, depth)
                  : setting == "wq" ? padic_bracket_wq(fp, pp, e, depth)
                                    : equalchar_bracket(fp, q, depth);
      const Rational value = r.value.evaluate(Rational(Integer(static_cast<unsigned long>(q))));
      doc["command"] = "verify";
      doc["input"] = {{"vars", vars}, {"forms", forms_json(fp)}, {"q", q}, {"depth", depth}, {"setting", setting}};
      doc["method"] = r.method;
      doc["value"] = to_json(r.value);
      doc["validity"] = to_json(r.validity);
      doc["admitted"] = ok;
      doc["evaluation"] = {{"q", q}, {"value", to_fraction_string(value)}};
      doc["bracket"] = to_json(b);
      doc["verdict"] = b.contains(value) ? "CONTAINED" : "NOT_CONTAINED";
      write_trace(trace_file, r.trace);
    } else if (*arrangement) {
      StratumSpec spec{vars, parse_form_list(eq_text, vars), parse_form_list(neq_text, vars), field_p};
      StratumClass cls = stratum_class(spec);
      RestrictedStratum restricted = kernel_restrict(spec);
      doc["command"] = "arrangement";
      Json eq = Json::array(), neq = Json::array();
      for (const auto& f : spec.eq) eq.push_back(form_to_string(f));
      for (const auto& f : spec.neq) neq.push_back(form_to_string(f));
      doc["input"] = {{"vars", vars}, {"eq", eq}, {"neq", neq}, {"field", field_p ? std::to_string(field_p) : "generic"}};
      doc["kernel_dimension"] = restricted.dim;
      doc["class"] = {{"text", cls.value.to_string()}, {"coeffs", to_json(cls.value)}};
      doc["bad_primes"] = to_json(cls.bad_primes);
      if (count_at) {
        const std::uint64_t count = count_stratum_points(spec, count_at);
        const Rational predicted = cls.value.evaluate(Rational(Integer(static_cast<unsigned long>(count_at))));
        doc["count"] = {{"q", count_at}, {"points", count}, {"matches_class", predicted == Rational(Integer(static_cast<unsigned long>(count)))}};
      }
    } else if (*onevar) {
      const IntegerPolynomial f = parse_univariate(poly_text);
      OneVarResult r = integrate_onevar(f, p);
      doc["command"] = "onevar";
      doc["input"] = {{"poly", univariate_to_string(f)}, {"p", p}};
      doc["class"] = r.cls.to_string();
      doc["formula"] = r.formula();
      if (auto rf = r.as_rational_function()) doc["value"] = to_json(*rf);
      Json evals = Json::array();
      for (auto i : parse_u64_list(eval_at_text)) {
        const auto ii = static_cast<unsigned>(i);
        evals.push_back({{"i", ii}, {"q", ipow(Integer(static_cast<unsigned long>(p)), ii).get_str()}, {"value", to_fraction_string(r.evaluate(ii))}});
      }
      doc["evaluations"] = evals;
    } else if (*witt_dump) {
      WittContext::get(p, witt_k)->dump(std::cout);
      return 0;
    }
    std::cout << doc.dump(2) << std::endl;
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const StrictRefusal& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return 4;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
