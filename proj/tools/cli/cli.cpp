#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "json_io.hpp"
#include "selfcheck/acceptance.hpp"

namespace ivpoly::cli {

namespace {

constexpr const char* kBudgetVariable = "IVPOLY_BUDGET";

struct Common {
  std::string format = "json";
  std::optional<std::uint64_t> budget;
  unsigned jobs = 1;
};

struct Inputs {
  int n = 0;
  std::string poly;
  std::string den = "1";
  std::string oracle = "div";
  bool all_witnesses = false;
  bool split = false;
  std::string file;
  std::string modulus;  // --d
  std::string prime;    // --p
  std::string matrix;
  unsigned long prec_in = 0;
  unsigned long prec_out = 0;
  std::size_t j = 0;
  std::size_t k = 0;
};

/// Thrown for malformed command lines detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

Integer parse_integer(const std::string& text, const std::string& what) {
  try {
    return integer_from_json(Json(trim(text)));
  } catch (const Error&) {
    throw UsageError(what + " must be an integer, got \"" + text + "\"");
  }
}

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParseError, origin + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str(), path);
}

bool looks_like_json(const std::string& text) {
  const std::string t = trim(text);
  return !t.empty() && (t.front() == '{' || t.front() == '[');
}

RationalPoly read_rational(const Inputs& in) {
  const Integer den = parse_integer(in.den, "--den");
  if (looks_like_json(in.poly)) {
    const RationalPoly f = rational_poly_from_json(parse_json_text(in.poly, "--poly"));
    return canonicalize(f.numerator(), f.denominator() * den);
  }
  return canonicalize(parse_poly(in.poly), den);
}

IntMatrix read_matrix(const std::string& text) {
  if (looks_like_json(text)) return matrix_from_json(parse_json_text(text, "--matrix"));
  return parse_matrix(text);
}

std::uint64_t resolve_budget(const Common& common) {
  if (common.budget) return *common.budget;
  if (const char* env = std::getenv(kBudgetVariable); env != nullptr && *env != '\0') {
    const std::string value = trim(env);
    std::uint64_t budget = 0;
    const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), budget);
    if (ec != std::errc() || end != value.data() + value.size() || budget == 0)
      throw UsageError(std::string(kBudgetVariable) + " must be a positive integer, got \"" + env + "\"");
    return budget;
  }
  return EnumerationBudget::kDefaultMaxCases;
}

MembershipOptions membership_options(const Common& common, const Inputs& in) {
  MembershipOptions opts;
  opts.budget.max_cases = resolve_budget(common);
  opts.jobs = common.jobs;
  opts.all_witnesses = in.all_witnesses;
  return opts;
}

// --- text rendering -----------------------------------------------------------

std::string text_value(const Json& v);

bool is_poly(const Json& v) {
  return v.is_object() && v.contains("coeffs") && v.at("coeffs").is_array() &&
         (v.size() == 1 || (v.size() == 2 && v.contains("mod")));
}

std::string text_value(const Json& v) {
  if (v.is_null()) return "none";
  if (v.is_string()) return v.get<std::string>();
  if (is_poly(v)) {
    std::string s = poly_from_json(v).to_string();
    if (v.contains("mod")) s += " mod " + v.at("mod").get<std::string>();
    return s;
  }
  if (v.is_object() && v.contains("num") && v.contains("den") && v.size() == 2 && v.at("num").is_object())
    return rational_poly_from_json(v).to_string();
  if (v.is_object() && v.contains("entries") && v.contains("n")) {
    std::string s;
    for (const auto& row : v.at("entries")) {
      if (!s.empty()) s += " ; ";
      std::string line;
      for (const auto& e : row) line += (line.empty() ? "" : " ") + text_value(e);
      s += line;
    }
    return s;
  }
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : ", ") + text_value(e);
    return "[" + s + "]";
  }
  if (v.is_object()) {
    std::string s;
    for (const auto& [key, e] : v.items()) s += (s.empty() ? "" : ", ") + key + "=" + text_value(e);
    return "{" + s + "}";
  }
  return v.dump();
}

void emit(std::ostream& out, const Common& common, const Json& report) {
  if (common.format == "text") {
    for (const auto& [key, value] : report.items()) out << key << ": " << text_value(value) << '\n';
  } else {
    out << report.dump() << '\n';
  }
}

// --- subcommands ----------------------------------------------------------------

Oracle parse_oracle(const std::string& name) {
  if (name == "div") return Oracle::kDivisibility;
  if (name == "comp") return Oracle::kCompanion;
  return Oracle::kIrreducibleCompanion;
}

int cmd_member(const Common& common, const Inputs& in, std::ostream& out) {
  const RationalPoly f = read_rational(in);
  const MembershipOptions opts = membership_options(common, in);
  Json report;
  bool member = true;
  if (in.oracle == "all") {
    std::vector<MembershipVerdict> verdicts;
    for (Oracle o : {Oracle::kDivisibility, Oracle::kCompanion, Oracle::kIrreducibleCompanion})
      verdicts.push_back(check_membership(f, in.n, o, opts));
    for (const auto& v : verdicts)
      if (v.member != verdicts[0].member || v.witness != verdicts[0].witness)
        throw Error(ErrorCode::kInternalAssertionFailure, "membership oracles disagree");
    member = verdicts[0].member;
    report = to_json(verdicts[0]);
    report["oracle"] = "all";
    Json each = Json::array();
    for (const auto& v : verdicts) each.push_back(to_json(v));
    report["oracles"] = std::move(each);
    if (in.all_witnesses) {
      report["witnesses"] = Json::array();
      for (const auto& w : verdicts[0].witnesses) report["witnesses"].push_back(to_json(w));
    }
  } else {
    const MembershipVerdict v = check_membership(f, in.n, parse_oracle(in.oracle), opts);
    member = v.member;
    report = to_json(v);
    if (in.all_witnesses) {
      report["witnesses"] = Json::array();
      for (const auto& w : v.witnesses) report["witnesses"].push_back(to_json(w));
    }
  }
  if (in.split) {
    Json parts = Json::array();
    for (const auto& part : prime_power_split(f, in.n, opts)) {
      parts.push_back(Json{{"prime", to_json(part.prime)},
                           {"exponent", part.exponent},
                           {"member", part.verdict.member},
                           {"witness", part.verdict.witness ? to_json(*part.verdict.witness) : Json(nullptr)},
                           {"cases", part.verdict.cases}});
    }
    report["parts"] = std::move(parts);
  }
  emit(out, common, report);
  return member ? kExitSuccess : kExitNegative;
}

int cmd_member_matrix(const Common& common, const Inputs& in, std::ostream& out) {
  const MatCoeffPoly f = mat_coeff_poly_from_json(read_json_file(in.file));
  const auto r = member_matrix_poly(f, membership_options(common, in));
  Json report{{"member", r.member},
              {"entry", r.failing_entry ? Json::array({r.failing_entry->first, r.failing_entry->second})
                                        : Json(nullptr)},
              {"witness", r.entry_verdict && r.entry_verdict->witness ? to_json(*r.entry_verdict->witness)
                                                                      : Json(nullptr)},
              {"cases", r.cases}};
  emit(out, common, report);
  return r.member ? kExitSuccess : kExitNegative;
}

int cmd_lift(const Common& common, const Inputs& in, std::ostream& out) {
  const IntPoly h = parse_poly(in.poly);
  if (h.degree() != in.n)
    throw Error(ErrorCode::kDimensionMismatch,
                "polynomial has degree " + std::to_string(h.degree()) + ", expected --n " + std::to_string(in.n));
  const auto lift = irreducible_lift(h, parse_integer(in.modulus, "--d"));
  emit(out, common, Json{{"k", to_json(lift.poly)}, {"p", to_json(lift.prime)}});
  return kExitSuccess;
}

void check_dimension(const IntMatrix& c, int n) {
  if (static_cast<int>(c.size()) != n)
    throw Error(ErrorCode::kDimensionMismatch, "matrix is " + std::to_string(c.size()) + " x " +
                                                   std::to_string(c.size()) + ", expected --n " +
                                                   std::to_string(n));
}

int cmd_image(const Common& common, const Inputs& in, std::ostream& out) {
  const RationalPoly f = read_rational(in);
  const IntMatrix c = read_matrix(in.matrix);
  check_dimension(c, in.n);
  const IntPoly r = reduced_representative(f, c);
  emit(out, common, Json{{"r", to_json(r)}, {"image", to_json(eval_poly_at_matrix(r, c))}});
  return kExitSuccess;
}

int cmd_padic_image(const Common& common, const Inputs& in, std::ostream& out) {
  const RationalPoly f = read_rational(in);
  const Integer p = parse_integer(in.prime, "--p");
  const PadicMatrix c(p, in.prec_in, read_matrix(in.matrix));
  if (in.n != 0) check_dimension(c.lift(), in.n);
  const auto s = padic_image(f, c, in.prec_out);
  Json poly = to_json(IntPoly(s.coeffs));
  poly["mod"] = p.get_str() + "^" + std::to_string(s.precision);
  emit(out, common, Json{{"s", std::move(poly)}});
  return kExitSuccess;
}

int cmd_generate(const Common& common, const Inputs& in, std::ostream& out) {
  EnumerationBudget budget;
  budget.max_cases = resolve_budget(common);
  emit(out, common, to_json(generate_family(parse_integer(in.prime, "--p"), in.n, budget)));
  return kExitSuccess;
}

int cmd_phi(const Common& common, const Inputs& in, std::ostream& out) {
  emit(out, common, to_json(phi(mat_coeff_poly_from_json(read_json_file(in.file)))));
  return kExitSuccess;
}

int cmd_scalarize(const Common& common, const Inputs& in, std::ostream& out) {
  const MatCoeffPoly f = mat_coeff_poly_from_json(read_json_file(in.file));
  emit(out, common, Json{{"j", in.j}, {"k", in.k}, {"entry", to_json(entry_scalarize(f, in.j, in.k))}});
  return kExitSuccess;
}

int cmd_selftest(const Common& common, std::ostream& out) {
  const auto results = selfcheck::run_acceptance(selfcheck::AcceptanceConfig::quick());
  bool passed = true;
  Json criteria = Json::array();
  for (const auto& r : results) {
    passed = passed && r.passed;
    if (common.format == "text") {
      out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.name << ": " << r.detail << '\n';
    }
    criteria.push_back(Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  if (common.format != "text") out << Json{{"passed", passed}, {"criteria", criteria}}.dump() << '\n';
  return passed ? kExitSuccess : kExitNegative;
}

void error_report(std::ostream& err, std::string_view code, const std::string& message, Json extra = {}) {
  Json report{{"code", std::string(code)}, {"message", message}};
  if (extra.is_object())
    for (auto& [key, value] : extra.items()) report[key] = value;
  err << report.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integer-valued polynomials on integer matrices", "ivpoly"};
  app.require_subcommand(1);
  Common common;
  Inputs in;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--budget", common.budget, "Maximum residue cases to enumerate (default: $IVPOLY_BUDGET or 1000000)")
        ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
    sub->add_option("--jobs", common.jobs, "Worker threads for case enumeration")->check(CLI::Range(1u, 256u));
  };
  auto add_n = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--n", in.n, "Matrix dimension")->check(CLI::Range(1, 1 << 20));
    if (required) opt->required();
  };
  auto add_rational = [&](CLI::App* sub) {
    sub->add_option("--poly", in.poly, "Numerator: expression or coefficient JSON")->required();
    sub->add_option("--den", in.den, "Denominator (default 1)");
  };

  CLI::App* member = app.add_subcommand("member", "Decide membership of g/d in Int(M_n(Z))");
  add_common(member);
  add_n(member, true);
  add_rational(member);
  member->add_option("--oracle", in.oracle, "div, comp, irr or all")->check(CLI::IsMember({"div", "comp", "irr", "all"}));
  member->add_flag("--all-witnesses", in.all_witnesses, "Collect every failing residue");
  member->add_flag("--split", in.split, "Also report the verdict per prime power of d");

  CLI::App* member_matrix = app.add_subcommand("member-matrix", "Decide membership of a matrix-coefficient polynomial");
  add_common(member_matrix);
  member_matrix->add_option("--file", in.file, "MatCoeffPoly JSON file")->required();

  CLI::App* lift = app.add_subcommand("lift-irreducible", "Lift a monic residue to an irreducible integer polynomial");
  add_common(lift);
  add_n(lift, true);
  lift->add_option("--d", in.modulus, "Modulus")->required();
  lift->add_option("--poly", in.poly, "Monic polynomial of degree n")->required();

  CLI::App* image = app.add_subcommand("image", "Image f(C) and its reduced representative");
  add_common(image);
  add_n(image, true);
  add_rational(image);
  image->add_option("--matrix", in.matrix, "Integer matrix, \"0 -1 ; 1 0\" or JSON")->required();

  CLI::App* padic = app.add_subcommand("padic-image", "Image of a matrix known modulo p^k");
  add_common(padic);
  add_n(padic, false);
  add_rational(padic);
  padic->add_option("--p", in.prime, "Prime")->required();
  padic->add_option("--prec-in", in.prec_in, "Precision k of the matrix")->required();
  padic->add_option("--prec-out", in.prec_out, "Output precision m")->required()->check(CLI::PositiveNumber);
  padic->add_option("--matrix-mod", in.matrix, "Matrix entries modulo p^k")->required();

  CLI::App* generate = app.add_subcommand("generate", "Product of (x^(p^i) - x) over p, a member for dimension n");
  add_common(generate);
  generate->add_option("--p", in.prime, "Prime")->required();
  in.n = 2;
  add_n(generate, false);

  CLI::App* phi_cmd = app.add_subcommand("phi", "Rewrite M_n(Q)[x] as M_n(Q[x])");
  add_common(phi_cmd);
  phi_cmd->add_option("--file", in.file, "MatCoeffPoly JSON file")->required();

  CLI::App* scalarize = app.add_subcommand("scalarize", "Entry (j, k) of phi(F) via the matrix-unit sandwich");
  add_common(scalarize);
  scalarize->add_option("--file", in.file, "MatCoeffPoly JSON file")->required();
  scalarize->add_option("--j", in.j, "Row, 1-based")->required();
  scalarize->add_option("--k", in.k, "Column, 1-based")->required();

  CLI::App* selftest = app.add_subcommand("selftest", "Run the fast acceptance subset");
  add_common(selftest);

  std::vector<const char*> argv{"ivpoly"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    error_report(err, "UsageError", e.what());
    return kExitError;
  }

  try {
    if (member->parsed()) return cmd_member(common, in, out);
    if (member_matrix->parsed()) return cmd_member_matrix(common, in, out);
    if (lift->parsed()) return cmd_lift(common, in, out);
    if (image->parsed()) return cmd_image(common, in, out);
    if (padic->parsed()) return cmd_padic_image(common, in, out);
    if (generate->parsed()) return cmd_generate(common, in, out);
    if (phi_cmd->parsed()) return cmd_phi(common, in, out);
    if (scalarize->parsed()) return cmd_scalarize(common, in, out);
    return cmd_selftest(common, out);
  } catch (const UsageError& e) {
    error_report(err, "UsageError", e.what());
    return kExitError;
  } catch (const NotIntegerValuedError& e) {
    Json extra{{"matrix", to_json(e.matrix())}, {"remainder", to_json(e.remainder())}};
    if (e.recheck()) extra["recheck"] = to_json(*e.recheck());
    error_report(err, to_string(e.code()), e.what(), std::move(extra));
    return kExitNegative;
  } catch (const Error& e) {
    error_report(err, to_string(e.code()), e.what());
    return e.code() == ErrorCode::kBudgetExceeded ? kExitBudget : kExitError;
  } catch (const std::exception& e) {
    error_report(err, "InternalError", e.what());
    return kExitError;
  }
}

}  // namespace ivpoly::cli
