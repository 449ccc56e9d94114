// Command-line front end: exact tables, golden binomial expansion, Carlitz
// matrix queries and full identity verification, with pretty, csv and json
// output. Exit codes: 0 on success, 1 when a verified identity fails, 2 for
// usage, input or I/O problems.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "goldfib/goldfib.hpp"

namespace {

using goldfib::Int;
using goldfib::Rat;
using json = nlohmann::json;

enum class Format { pretty, csv, json };

struct CommonOut {
  Format format = Format::pretty;
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOut& common) {
  cmd->add_option("--format", common.format, "output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"pretty", Format::pretty},
                                        {"csv", Format::csv},
                                        {"json", Format::json}},
          CLI::ignore_case))
      ->default_str("pretty");
  cmd->add_option("--out", common.out_path,
                  "write output to this file instead of stdout");
}

// Returns false when the file cannot be written.
bool emit(const CommonOut& common, const std::string& text) {
  if (common.out_path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream f(common.out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open '" << common.out_path
              << "' for writing\n";
    return false;
  }
  f << text;
  f.flush();
  if (!f) {
    std::cerr << "error: failed writing '" << common.out_path << "'\n";
    return false;
  }
  return true;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string join_row(const std::vector<std::string>& cells,
                     const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out += sep;
    out += cells[i];
  }
  return out;
}

// ---------------------------------------------------------------- table --

struct TableArgs {
  std::string kind;
  long long min = 0;
  long long max = 10;
  long long k = 2;
  long long cap = 500;
  CommonOut common;
};

int run_table(const TableArgs& a) {
  if (a.max < a.min) {
    std::cerr << "error: --max must be at least --min\n";
    return 2;
  }
  if (a.max > a.cap || -a.min > a.cap) {
    std::cerr << "error: index range exceeds cap " << a.cap
              << " (raise --cap to override)\n";
    return 2;
  }

  std::string text;
  if (a.kind == "fibonacci") {
    json values = json::array();
    std::vector<std::string> flat;
    std::string csv = "n,fib\n";
    for (long long n = a.min; n <= a.max; ++n) {
      std::string v = goldfib::fib(n).str();
      values.push_back({{"n", n}, {"value", v}});
      flat.push_back(v);
      csv += std::to_string(n) + "," + v + "\n";
    }
    switch (a.common.format) {
      case Format::pretty: text = join_row(flat, " ") + "\n"; break;
      case Format::csv: text = csv; break;
      case Format::json:
        text = dump({{"kind", "fibonacci"},
                     {"min", a.min},
                     {"max", a.max},
                     {"values", values}});
        break;
    }
  } else if (a.kind == "fibonomial") {
    if (a.min < 0) {
      std::cerr << "error: fibonomial rows start at 0\n";
      return 2;
    }
    json rows = json::array();
    std::string pretty, csv = "n,k,value\n";
    for (long long n = a.min; n <= a.max; ++n) {
      std::vector<std::string> row;
      for (long long k = 0; k <= n; ++k) {
        row.push_back(goldfib::fibonomial(n, k).str());
        csv += std::to_string(n) + "," + std::to_string(k) + "," + row.back() +
               "\n";
      }
      rows.push_back({{"n", n}, {"values", row}});
      pretty += join_row(row, " ") + "\n";
    }
    switch (a.common.format) {
      case Format::pretty: text = pretty; break;
      case Format::csv: text = csv; break;
      case Format::json:
        text = dump({{"kind", "fibonomial"},
                     {"min", a.min},
                     {"max", a.max},
                     {"rows", rows}});
        break;
    }
  } else {  // fib-divisor
    if (a.k < 1) {
      std::cerr << "error: fib-divisor needs --k >= 1\n";
      return 2;
    }
    json values = json::array();
    std::vector<std::string> flat;
    std::string csv = "k,n,value\n";
    for (long long n = a.min; n <= a.max; ++n) {
      std::string v = goldfib::fib_divisor(a.k, n).str();
      values.push_back({{"n", n}, {"value", v}});
      flat.push_back(v);
      csv += std::to_string(a.k) + "," + std::to_string(n) + "," + v + "\n";
    }
    switch (a.common.format) {
      case Format::pretty: text = join_row(flat, " ") + "\n"; break;
      case Format::csv: text = csv; break;
      case Format::json:
        text = dump({{"kind", "fib-divisor"},
                     {"k", a.k},
                     {"min", a.min},
                     {"max", a.max},
                     {"values", values}});
        break;
    }
  }
  return emit(a.common, text) ? 0 : 2;
}

// --------------------------------------------------------------- expand --

struct ExpandArgs {
  long long n = 0;
  std::string a = "1";
  std::string form = "expansion";
  bool factors = false;
  long long cap = 200;
  CommonOut common;
};

json poly_json(const goldfib::Poly<Rat>& p) {
  json coeffs = json::array();
  for (const std::string& s : goldfib::poly_coeff_strings(p)) coeffs.push_back(s);
  return coeffs;
}

int run_expand(const ExpandArgs& args) {
  if (args.n < 0) {
    std::cerr << "error: --n must be non-negative\n";
    return 2;
  }
  if (args.n > args.cap) {
    std::cerr << "error: --n exceeds cap " << args.cap
              << " (raise --cap to override)\n";
    return 2;
  }
  const Rat a = goldfib::parse_rational(args.a);
  const int n = static_cast<int>(args.n);

  std::string text;
  if (args.form == "product") {
    goldfib::Poly<goldfib::GoldenRational> prod =
        goldfib::golden_binomial_product_form(n, a);
    goldfib::Poly<Rat> collapsed = goldfib::collapse_to_base(prod);
    json factors = json::array();
    std::vector<std::string> factor_strs;
    for (int j = 0; j < n; ++j) {
      goldfib::GoldenInt root =
          goldfib::phi_pow(j) * conj(goldfib::phi_pow(n - 1 - j));
      goldfib::GoldenRational scaled{root};
      scaled = scaled * goldfib::GoldenRational(a);
      goldfib::Poly<goldfib::GoldenRational> factor{
          -scaled, goldfib::GoldenRational(Rat(1))};
      factor_strs.push_back("(" + goldfib::poly_to_string(factor) + ")");
      factors.push_back({{"unit", scaled.unit_part().str()},
                         {"phi", scaled.phi_part().str()}});
    }
    switch (args.common.format) {
      case Format::pretty: {
        text = "factors: " + (factor_strs.empty()
                                  ? std::string("1")
                                  : join_row(factor_strs, " * ")) +
               "\n";
        text += "collapsed: " + goldfib::poly_to_string(collapsed) + "\n";
        break;
      }
      case Format::csv: {
        text = "degree,coefficient\n";
        for (int i = collapsed.degree(); i >= 0; --i)
          text += std::to_string(i) + "," +
                  goldfib::scalar_to_string(collapsed.coeff(i)) + "\n";
        break;
      }
      case Format::json:
        text = dump({{"form", "product"},
                     {"n", args.n},
                     {"a", goldfib::scalar_to_string(a)},
                     {"roots", factors},
                     {"coefficients", poly_json(collapsed)},
                     {"pretty", goldfib::poly_to_string(collapsed)}});
        break;
    }
  } else if (args.form == "P" && args.factors) {
    goldfib::QuadraticFactorForm form = goldfib::quadratic_factor_form(n, a);
    std::vector<std::string> factor_strs;
    json jfactors = json::array();
    for (const auto& f : form.factors) {
      factor_strs.push_back("(" + goldfib::poly_to_string(f) + ")");
      jfactors.push_back(poly_json(f));
    }
    std::string scale = form.factorial_scale.str();
    switch (args.common.format) {
      case Format::pretty:
        text = "scale: 1/" + scale + "\n";
        text += "factors: " + (factor_strs.empty()
                                   ? std::string("1")
                                   : join_row(factor_strs, " * ")) +
                "\n";
        break;
      case Format::csv: {
        text = "factor,degree,coefficient\n";
        for (size_t fi = 0; fi < form.factors.size(); ++fi) {
          const auto& f = form.factors[fi];
          for (int i = f.degree(); i >= 0; --i)
            text += std::to_string(fi) + "," + std::to_string(i) + "," +
                    goldfib::scalar_to_string(f.coeff(i)) + "\n";
        }
        break;
      }
      case Format::json:
        text = dump({{"form", "P-factors"},
                     {"n", args.n},
                     {"a", goldfib::scalar_to_string(a)},
                     {"scale_denominator", scale},
                     {"factors", jfactors}});
        break;
    }
  } else {
    goldfib::Poly<Rat> p = args.form == "P"
                               ? goldfib::golden_poly_P(n, a)
                               : goldfib::golden_binomial(n, a);
    switch (args.common.format) {
      case Format::pretty:
        text = goldfib::poly_to_string(p) + "\n";
        break;
      case Format::csv:
        text = "degree,coefficient\n";
        for (int i = p.degree(); i >= 0; --i)
          text += std::to_string(i) + "," +
                  goldfib::scalar_to_string(p.coeff(i)) + "\n";
        break;
      case Format::json:
        text = dump({{"form", args.form},
                     {"n", args.n},
                     {"a", goldfib::scalar_to_string(a)},
                     {"coefficients", poly_json(p)},
                     {"pretty", goldfib::poly_to_string(p)}});
        break;
    }
  }
  return emit(args.common, text) ? 0 : 2;
}

// -------------------------------------------------------------- carlitz --

struct CarlitzArgs {
  std::string action;
  long long order = 0;
  long long k = 1;
  long long cap = 16;
  CommonOut common;
};

std::string matrix_pretty(const goldfib::IntMatrix& m) {
  std::string out;
  for (const auto& row : goldfib::matrix_to_strings(m))
    out += "[ " + join_row(row, " ") + " ]\n";
  return out;
}

std::string matrix_csv(const goldfib::IntMatrix& m) {
  std::string out;
  for (const auto& row : goldfib::matrix_to_strings(m))
    out += join_row(row, ",") + "\n";
  return out;
}

json matrix_json(const goldfib::IntMatrix& m) {
  json rows = json::array();
  for (const auto& row : goldfib::matrix_to_strings(m)) rows.push_back(row);
  return rows;
}

int run_carlitz(const CarlitzArgs& a) {
  if (a.order < 1) {
    std::cerr << "error: --order must be >= 1\n";
    return 2;
  }
  if (a.order > a.cap) {
    std::cerr << "error: --order exceeds cap " << a.cap
              << " (raise --cap to override)\n";
    return 2;
  }
  if (a.k < 0) {
    std::cerr << "error: --k must be >= 0\n";
    return 2;
  }
  const int order = static_cast<int>(a.order);

  std::string text;
  if (a.action == "build" || a.action == "power") {
    goldfib::IntMatrix m = goldfib::build_carlitz(order);
    if (a.action == "power")
      m = goldfib::mat_pow(m, static_cast<unsigned long long>(a.k));
    switch (a.common.format) {
      case Format::pretty: text = matrix_pretty(m); break;
      case Format::csv: text = matrix_csv(m); break;
      case Format::json:
        text = dump({{"kind", a.action},
                     {"order", a.order},
                     {"k", a.action == "power" ? json(a.k) : json(nullptr)},
                     {"rows", matrix_json(m)}});
        break;
    }
  } else if (a.action == "charpoly") {
    goldfib::CharPoly q = goldfib::char_poly(goldfib::build_carlitz(order));
    switch (a.common.format) {
      case Format::pretty:
        text = goldfib::poly_to_string(q) + "\n";
        break;
      case Format::csv:
        text = "degree,coefficient\n";
        for (int i = q.degree(); i >= 0; --i)
          text += std::to_string(i) + "," + q.coeff(i).str() + "\n";
        break;
      case Format::json: {
        json coeffs = json::array();
        for (const std::string& s : goldfib::poly_coeff_strings(q))
          coeffs.push_back(s);
        text = dump({{"kind", "charpoly"},
                     {"order", a.order},
                     {"coefficients", coeffs},
                     {"pretty", goldfib::poly_to_string(q)}});
        break;
      }
    }
  } else {  // invariants
    if (a.k < 1) {
      std::cerr << "error: invariants need --k >= 1\n";
      return 2;
    }
    auto [trace, trace_expect] = goldfib::trace_invariant(order, a.k);
    auto [det, det_expect] = goldfib::det_invariant(order, a.k);
    bool match = trace == trace_expect && det == det_expect;
    switch (a.common.format) {
      case Format::pretty:
        text = "trace " + trace.str() + " (fibonacci divisor " +
               trace_expect.str() + ")\n";
        text += "det " + det.str() + " (sign formula " + det_expect.str() +
                ")\n";
        text += std::string("match: ") + (match ? "yes" : "no") + "\n";
        break;
      case Format::csv:
        text = "name,value\n";
        text += "trace," + trace.str() + "\n";
        text += "trace_expected," + trace_expect.str() + "\n";
        text += "det," + det.str() + "\n";
        text += "det_expected," + det_expect.str() + "\n";
        text += std::string("match,") + (match ? "true" : "false") + "\n";
        break;
      case Format::json:
        text = dump({{"kind", "invariants"},
                     {"order", a.order},
                     {"k", a.k},
                     {"trace", trace.str()},
                     {"trace_expected", trace_expect.str()},
                     {"det", det.str()},
                     {"det_expected", det_expect.str()},
                     {"match", match}});
        break;
    }
    if (!emit(a.common, text)) return 2;
    return match ? 0 : 1;
  }
  return emit(a.common, text) ? 0 : 2;
}

// --------------------------------------------------------------- verify --

struct VerifyArgs {
  std::vector<std::string> suites;
  long long max_n = 0;
  long long max_k = 0;
  long long max_degree = 0;
  CommonOut common;
};

int run_verify(const VerifyArgs& a) {
  goldfib::verify::Options opts;
  opts.max_n = a.max_n;
  opts.max_k = a.max_k;
  opts.max_degree = a.max_degree;
  std::vector<std::string> suites =
      a.suites.empty() ? std::vector<std::string>{"all"} : a.suites;
  std::vector<goldfib::verify::SuiteReport> reports =
      goldfib::verify::run_suites(suites, opts);

  std::string text;
  switch (a.common.format) {
    case Format::pretty:
      text = goldfib::verify::reports_to_pretty(reports);
      break;
    case Format::csv:
      text = goldfib::verify::reports_to_csv(reports);
      break;
    case Format::json:
      text = dump(goldfib::verify::reports_to_json(reports));
      break;
  }
  if (!emit(a.common, text)) return 2;
  return goldfib::verify::all_passed(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "goldfib: exact golden (Fibonacci) calculus and Carlitz matrices"};
  app.require_subcommand(1);

  TableArgs table_args;
  CLI::App* table = app.add_subcommand(
      "table", "print fibonacci, fibonomial or fib-divisor tables");
  table
      ->add_option("kind", table_args.kind,
                   "one of: fibonacci, fibonomial, fib-divisor")
      ->required()
      ->check(CLI::IsMember({"fibonacci", "fibonomial", "fib-divisor"}));
  table->add_option("--min", table_args.min, "first index (default 0)");
  table->add_option("--max", table_args.max, "last index (default 10)");
  table->add_option("--k", table_args.k,
                    "divisor step k for fib-divisor (default 2)");
  table->add_option("--cap", table_args.cap,
                    "guard rail on index magnitude (default 500)");
  add_common(table, table_args.common);

  ExpandArgs expand_args;
  CLI::App* expand = app.add_subcommand(
      "expand", "expand golden binomials (x - a)^n_F and P_n polynomials");
  expand->add_option("--n", expand_args.n, "degree")->required();
  expand->add_option("--a", expand_args.a,
                     "offset as p or p/q (default 1)");
  expand
      ->add_option("--form", expand_args.form,
                   "expansion | product | P (default expansion)")
      ->check(CLI::IsMember({"expansion", "product", "P"}));
  expand->add_flag("--factors", expand_args.factors,
                   "with --form P, print the quadratic factor list");
  expand->add_option("--cap", expand_args.cap,
                     "guard rail on n (default 200)");
  add_common(expand, expand_args.common);

  CarlitzArgs carlitz_args;
  CLI::App* carlitz = app.add_subcommand(
      "carlitz", "build, exponentiate and analyze Carlitz matrices");
  carlitz
      ->add_option("action", carlitz_args.action,
                   "one of: build, charpoly, power, invariants")
      ->required()
      ->check(CLI::IsMember({"build", "charpoly", "power", "invariants"}));
  carlitz->add_option("--order", carlitz_args.order, "matrix order")
      ->required();
  carlitz->add_option("--k", carlitz_args.k,
                      "power for power/invariants (default 1)");
  carlitz->add_option("--cap", carlitz_args.cap,
                      "guard rail on order (default 16)");
  add_common(carlitz, carlitz_args.common);

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "sweep the library's identities and report");
  verify
      ->add_option("--suite", verify_args.suites,
                   "ring, pascal, binomial, derivative, carlitz, analytic or "
                   "all (repeatable, default all)")
      ->check(CLI::IsMember({"ring", "pascal", "binomial", "derivative",
                             "carlitz", "analytic", "all"}));
  verify->add_option("--max-n", verify_args.max_n,
                     "override the main index/order sweep bound");
  verify->add_option("--max-k", verify_args.max_k,
                     "override the power/step sweep bound");
  verify->add_option("--max-degree", verify_args.max_degree,
                     "override polynomial degree bounds");
  add_common(verify, verify_args.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*table) return run_table(table_args);
    if (*expand) return run_expand(expand_args);
    if (*carlitz) return run_carlitz(carlitz_args);
    if (*verify) return run_verify(verify_args);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const goldfib::invariant_error& e) {
    std::cerr << "internal invariant breach: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
