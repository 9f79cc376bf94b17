#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lexgotz/verify.hpp"

namespace lexgotz::cli {

namespace {

struct Options {
  bool json = false;

  std::string a_text;
  unsigned d = 0;
  bool with_derivative = false;

  std::size_t n = 0;
  std::string u_text;
  std::string v_text;
  bool oracle = false;

  std::string input = "-";
  std::optional<unsigned> from;
  std::optional<unsigned> to;

  std::string suite;
  std::size_t n_max = 4;
  unsigned d_max = 4;
  std::optional<unsigned> d_bound;
  std::optional<std::uint64_t> a_max;
  std::optional<std::uint64_t> c_max;
  unsigned threads = 0;
};

void emit(std::ostream& out, const Json& json) { out << json.dump(2) << '\n'; }

std::string segment_text(const LexSegment& s) {
  return "L(" + format_monomial(s.upper()) + ", " + format_monomial(s.lower()) + ")";
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------------------

int cmd_expand(const Options& o, std::ostream& out) {
  const Natural a = parse_natural(o.a_text);
  const auto expansion = macaulay_expand(a, o.d);
  if (o.json) {
    emit(out, expansion_to_json(a, o.d));
    return kSuccess;
  }
  out << a << " = " << format_expansion(expansion) << "; " << a << "^<" << o.d << "> = " << expansion.upper_shift()
      << "; " << a << "^(" << o.d << ") = " << expansion.derivative() << '\n';
  return kSuccess;
}

int cmd_shift(const Options& o, std::ostream& out) {
  const Natural a = parse_natural(o.a_text);
  const Natural shifted = upper_shift(a, o.d);
  const Natural deriv = derivative(a, o.d);
  if (o.json) {
    Json j{{"a", natural_to_json(a)}, {"d", o.d}, {"upper_shift", natural_to_json(shifted)}};
    if (o.with_derivative) j["derivative"] = natural_to_json(deriv);
    emit(out, j);
    return kSuccess;
  }
  out << a << "^<" << o.d << "> = " << shifted << '\n';
  if (o.with_derivative) out << a << "^(" << o.d << ") = " << deriv << '\n';
  return kSuccess;
}

void require_within_cap(std::size_t n, unsigned d, const Limits& limits) {
  const Natural count = monomial_count(n, d);
  if (count > limits.enumeration_cap) {
    throw InvalidArgument("M_" + std::to_string(d) + " in " + std::to_string(n) + " variables has " + count.str() +
                          " monomials, above the enumeration cap of " + std::to_string(limits.enumeration_cap));
  }
}

int cmd_segment(const Options& o, const Limits& limits, std::ostream& out, std::ostream& err) {
  const Monomial u = parse_monomial(o.u_text, o.n);
  const Monomial v = parse_monomial(o.v_text, o.n);
  if (u.degree() != v.degree()) throw InvalidArgument("u and v have different degrees");
  if (u < v) throw InvalidArgument("u must be lex-greater than or equal to v");
  const LexSegment segment(u, v);
  require_within_cap(o.n, segment.degree() + 1, limits);
  const auto report = classify(segment, limits);
  std::optional<bool> oracle;
  if (o.oracle) oracle = is_gotzmann_oracle(segment_ideal(segment, limits), limits);

  if (o.json) {
    Json j = report_to_json(report);
    if (oracle) j["oracle"] = *oracle;
    emit(out, j);
  } else {
    out << "segment: " << segment_text(segment) << '\n'
        << "n = " << o.n << ", d = " << segment.degree() << ", size = " << report.size << '\n'
        << "initial: " << yes_no(report.initial) << '\n'
        << "completely: " << yes_no(report.completely) << '\n'
        << "gotzmann: " << yes_no(report.gotzmann) << " (" << to_string(report.route) << ")\n"
        << "linear_quotients: " << to_string(report.linear_quotients.verdict) << '\n'
        << "componentwise_lexsegment: " << yes_no(report.componentwise_lexsegment) << '\n'
        << "taylor_minimal: " << yes_no(report.taylor_minimal) << '\n'
        << "a = " << report.a << ", b = " << report.b << ", c = " << report.c << ", j = " << report.j << '\n';
    if (oracle) out << "oracle: " << yes_no(*oracle) << '\n';
  }
  if (oracle && *oracle != report.gotzmann) {
    err << "oracle disagrees with the " << to_string(report.route) << " verdict\n";
    return kCounterexample;
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------

MonomialIdeal read_ideal(const Options& o, std::istream& in) {
  Json json;
  try {
    if (o.input == "-") {
      json = Json::parse(in);
    } else {
      std::ifstream file(o.input);
      if (!file) throw InvalidArgument("cannot open " + o.input);
      json = Json::parse(file);
    }
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(std::string("malformed ideal JSON: ") + e.what());
  }
  return ideal_from_json(json);
}

unsigned default_horizon(const MonomialIdeal& ideal) { return ideal.is_zero() ? 1 : ideal.max_degree() + 1; }

int cmd_hilbert(const Options& o, const Limits& limits, const MonomialIdeal& ideal, std::ostream& out) {
  const unsigned from = o.from.value_or(0);
  const unsigned to = o.to.value_or(default_horizon(ideal));
  if (from > to) throw InvalidArgument("--from exceeds --to");
  require_within_cap(ideal.num_vars(), to, limits);
  const auto table = hilbert_table(ideal, from, to, limits);
  if (o.json) {
    Json quotient = Json::object();
    for (const auto& [q, h] : table.values) quotient[std::to_string(q)] = natural_to_json(table.quotient(q));
    emit(out, Json{{"n", ideal.num_vars()}, {"hilbert", hilbert_to_json(table)}, {"quotient", quotient}});
    return kSuccess;
  }
  out << "q\tH(I,q)\tH(S/I,q)\n";
  for (const auto& [q, h] : table.values) out << q << '\t' << h << '\t' << table.quotient(q) << '\n';
  return kSuccess;
}

int cmd_lexify(const Options& o, const Limits& limits, const MonomialIdeal& ideal, std::ostream& out) {
  const unsigned to = o.to.value_or(default_horizon(ideal));
  require_within_cap(ideal.num_vars(), to, limits);
  const auto lex = lexify(ideal, to, limits);
  if (o.json) {
    emit(out, ideal_to_json(lex));
    return kSuccess;
  }
  for (const auto& g : lex.generators()) out << format_monomial(g) << '\n';
  return kSuccess;
}

int cmd_gotzmann(const Options& o, const Limits& limits, const MonomialIdeal& ideal, std::ostream& out) {
  const auto degree = ideal.generated_in_degree();
  if (!degree) {
    throw InvalidArgument("the Gotzmann test needs a nonzero ideal whose generators share one degree");
  }
  require_within_cap(ideal.num_vars(), *degree + 1, limits);
  const bool verdict = is_gotzmann_oracle(ideal, limits);
  const Natural now = quotient_hilbert(ideal, *degree, limits);
  const Natural next = quotient_hilbert(ideal, *degree + 1, limits);
  if (o.json) {
    emit(out, Json{{"gotzmann", verdict},
                   {"d", *degree},
                   {"quotient_d", natural_to_json(now)},
                   {"quotient_d_plus_1", natural_to_json(next)},
                   {"bound", natural_to_json(upper_shift(now, *degree))}});
    return kSuccess;
  }
  out << "gotzmann: " << yes_no(verdict) << '\n'
      << "H(S/I," << *degree << ") = " << now << ", H(S/I," << *degree + 1 << ") = " << next << ", bound "
      << upper_shift(now, *degree) << '\n';
  return kSuccess;
}

int cmd_componentwise(const Options& o, const Limits& limits, const MonomialIdeal& ideal, std::ostream& out) {
  if (!ideal.is_zero()) require_within_cap(ideal.num_vars(), ideal.max_degree() + 1, limits);
  const auto result = is_componentwise_lexsegment(ideal, limits);
  if (o.json) {
    Json j{{"componentwise_lexsegment", result.holds}};
    if (result.witness) j["witness"] = Json{{"u", format_monomial(result.witness->upper())},
                                            {"v", format_monomial(result.witness->lower())}};
    Json components = Json::array();
    for (const auto& s : result.verified) {
      components.push_back(Json{{"degree", s.degree()}, {"u", format_monomial(s.upper())},
                                {"v", format_monomial(s.lower())}});
    }
    j["components"] = std::move(components);
    if (!result.holds) j["reason"] = result.reason;
    emit(out, j);
    return kSuccess;
  }
  out << "componentwise_lexsegment: " << yes_no(result.holds) << '\n';
  if (result.witness) out << "witness: " << segment_text(*result.witness) << '\n';
  for (const auto& s : result.verified) out << "degree " << s.degree() << ": " << segment_text(s) << '\n';
  if (!result.holds) out << "reason: " << result.reason << '\n';
  return kSuccess;
}

// ---------------------------------------------------------------------------

int cmd_enumerate(const Options& o, const Limits& limits, std::ostream& out) {
  require_within_cap(o.n, o.d, limits);
  std::vector<Monomial> listed;
  if (o.u_text.empty() && o.v_text.empty()) {
    listed = enumerate_degree(o.n, o.d, limits);
  } else {
    const Monomial u = o.u_text.empty() ? Monomial::variable(o.n, 0, o.d) : parse_monomial(o.u_text, o.n);
    const Monomial v = o.v_text.empty() ? Monomial::variable(o.n, o.n - 1, o.d) : parse_monomial(o.v_text, o.n);
    if (u.degree() != o.d || v.degree() != o.d) throw InvalidArgument("segment ends must have degree " + std::to_string(o.d));
    if (u < v) throw InvalidArgument("u must be lex-greater than or equal to v");
    listed = lexsegment_set(LexSegment(u, v), limits);
  }
  if (o.json) {
    Json list = Json::array();
    for (const auto& m : listed) list.push_back(format_monomial(m));
    emit(out, list);
    return kSuccess;
  }
  for (const auto& m : listed) out << format_monomial(m) << '\n';
  return kSuccess;
}

int cmd_verify(const Options& o, const Limits& limits, std::ostream& out, std::ostream& err) {
  SuiteOptions options;
  options.sweep = {o.n_max, o.d_max, o.threads};
  if (o.n_max == 0 || o.d_max == 0) throw InvalidArgument("--n and --d must be positive");
  if (o.a_max) options.a_max = *o.a_max;
  if (o.c_max) options.c_max = *o.c_max;
  if (o.d_bound) {
    if (*o.d_bound == 0) throw InvalidArgument("--d must be positive");
    options.macaulay_d_max = options.same_derivative_d_max = options.vanishing_derivative_d_max = *o.d_bound;
    options.shadow_d_max = *o.d_bound;
  }
  if (o.suite == "shadow-law") options.shadow_n_max = o.n_max;
  require_within_cap(options.sweep.n_max, options.sweep.d_max, limits);
  require_within_cap(options.shadow_n_max, options.shadow_d_max + 1, limits);
  if (options.c_max > limits.enumeration_cap || options.a_max > limits.enumeration_cap) {
    throw InvalidArgument("numeric range exceeds the enumeration cap of " + std::to_string(limits.enumeration_cap));
  }

  std::vector<std::string_view> names;
  if (o.suite == "all") {
    names = suite_names();
  } else {
    names.push_back(o.suite);
  }
  bool all_passed = true;
  Json results = Json::array();
  for (const auto name : names) {
    const Progress progress = [&err, name](std::uint64_t done, std::uint64_t total) {
      err << name << ": " << done << "/" << total << '\n';
    };
    const auto result = run_suite(name, options, progress);
    all_passed = all_passed && result.passed();
    if (o.json) {
      results.push_back(result.to_json());
      continue;
    }
    if (result.passed()) {
      out << name << ": pass (" << result.cases << " cases)\n";
    } else {
      out << name << ": FAIL (" << result.mismatches << " of " << result.cases << " cases)\n"
          << "counterexample: " << result.counterexample->dump() << '\n';
    }
  }
  if (o.json) emit(out, o.suite == "all" ? results : results.front());
  return all_passed ? kSuccess : kCounterexample;
}

std::vector<std::string> suite_choices() {
  std::vector<std::string> choices(suite_names().begin(), suite_names().end());
  choices.emplace_back("all");
  return choices;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Lexsegment ideals: Macaulay calculus, Gotzmann criteria and verification suites", "lexgotz"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Emit JSON instead of text");

  auto* expand = app.add_subcommand("expand", "Macaulay expansion of A in degree D with both operators");
  expand->add_option("A", o.a_text, "Non-negative integer")->required();
  expand->add_option("D", o.d, "Positive degree")->required()->check(CLI::PositiveNumber);

  auto* shift = app.add_subcommand("shift", "The upper shift A^<D>");
  shift->add_option("A", o.a_text, "Non-negative integer")->required();
  shift->add_option("D", o.d, "Positive degree")->required()->check(CLI::PositiveNumber);
  shift->add_flag("--derivative", o.with_derivative, "Also print A^(D)");

  auto* segment = app.add_subcommand("segment", "Classify the lexsegment ideal generated by L(u, v)");
  segment->add_option("-n", o.n, "Number of variables")->required()->check(CLI::PositiveNumber);
  segment->add_option("-u", o.u_text, "Upper end, e.g. x1*x3^2 or [1,0,2]")->required();
  segment->add_option("-v", o.v_text, "Lower end")->required();
  segment->add_flag("--oracle", o.oracle, "Cross-check the verdict with the Hilbert function oracle");

  auto* ideal = app.add_subcommand("ideal", "Operations on an ideal given as JSON (file or stdin)");
  ideal->require_subcommand(1);
  auto add_input = [&](CLI::App* sub) { sub->add_option("FILE", o.input, "Ideal JSON, '-' for stdin"); };
  auto* hilbert_cmd = ideal->add_subcommand("hilbert", "Table of H(I,q) and H(S/I,q)");
  add_input(hilbert_cmd);
  hilbert_cmd->add_option("--from", o.from, "First degree (default 0)");
  hilbert_cmd->add_option("--to", o.to, "Last degree (default: largest generator degree + 1)");
  auto* lexify_cmd = ideal->add_subcommand("lexify", "Minimal generators of the lexification");
  add_input(lexify_cmd);
  lexify_cmd->add_option("--to", o.to, "Degree horizon (default: largest generator degree + 1)");
  auto* gotzmann_cmd = ideal->add_subcommand("gotzmann", "Gotzmann test by Hilbert function persistence");
  add_input(gotzmann_cmd);
  auto* componentwise_cmd = ideal->add_subcommand("componentwise", "Componentwise lexsegment test with witness");
  add_input(componentwise_cmd);

  auto* verify = app.add_subcommand("verify", "Run an exhaustive verification suite");
  verify->add_option("SUITE", o.suite, "Suite name")->required()->check(CLI::IsMember(suite_choices()));
  verify->add_option("--n", o.n_max, "Largest number of variables in segment sweeps");
  verify->add_option("--d", o.d_bound, "Largest degree");
  verify->add_option("--a", o.a_max, "Largest a for the macaulay suite");
  verify->add_option("--c", o.c_max, "Largest c for the lemma31 and lemma32 suites");
  verify->add_option("--threads", o.threads, "Worker threads (0 = hardware concurrency)");

  auto* enumerate = app.add_subcommand("enumerate", "List M_d, or a lexsegment of it, in descending lex order");
  enumerate->add_option("-n", o.n, "Number of variables")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("-d", o.d, "Degree")->required();
  enumerate->add_option("-u", o.u_text, "Upper end (default x1^d)");
  enumerate->add_option("-v", o.v_text, "Lower end (default xn^d)");

  for (auto* sub : {expand, shift, segment, hilbert_cmd, lexify_cmd, gotzmann_cmd, componentwise_cmd, verify, enumerate}) {
    sub->add_flag("--json", o.json, "Emit JSON instead of text");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    const Limits limits = Limits::from_environment();
    if (o.d_bound) o.d_max = *o.d_bound;
    if (*expand) return cmd_expand(o, out);
    if (*shift) return cmd_shift(o, out);
    if (*segment) return cmd_segment(o, limits, out, err);
    if (*enumerate) return cmd_enumerate(o, limits, out);
    if (*verify) return cmd_verify(o, limits, out, err);
    const MonomialIdeal parsed = read_ideal(o, in);
    if (*hilbert_cmd) return cmd_hilbert(o, limits, parsed, out);
    if (*lexify_cmd) return cmd_lexify(o, limits, parsed, out);
    if (*gotzmann_cmd) return cmd_gotzmann(o, limits, parsed, out);
    return cmd_componentwise(o, limits, parsed, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace lexgotz::cli
