#include "lexgotz/serialize.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <vector>

namespace lexgotz {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_count(std::string_view digits, std::string_view context) {
  std::uint64_t value = 0;
  const auto* end = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(digits.data(), end, value);
  if (digits.empty() || ec != std::errc() || ptr != end) {
    throw InvalidArgument("malformed monomial '" + std::string(context) + "'");
  }
  return value;
}

Monomial::Exponent to_exponent(std::uint64_t value, std::string_view context) {
  if (value > std::numeric_limits<Monomial::Exponent>::max()) {
    throw InvalidArgument("exponent too large in '" + std::string(context) + "'");
  }
  return static_cast<Monomial::Exponent>(value);
}

Monomial parse_vector(std::string_view body, std::size_t num_vars, std::string_view context) {
  std::vector<Monomial::Exponent> exps;
  while (true) {
    const auto comma = body.find(',');
    exps.push_back(to_exponent(parse_count(trim(body.substr(0, comma)), context), context));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  if (exps.size() != num_vars) {
    throw InvalidArgument("exponent vector '" + std::string(context) + "' does not have " +
                          std::to_string(num_vars) + " entries");
  }
  return Monomial(std::move(exps));
}

Monomial parse_product(std::string_view text, std::size_t num_vars, std::string_view context) {
  std::vector<Monomial::Exponent> exps(num_vars, 0);
  if (text == "1") return Monomial(std::move(exps));
  while (true) {
    const auto star = text.find('*');
    std::string_view factor = trim(text.substr(0, star));
    if (factor.size() < 2 || factor.front() != 'x') {
      throw InvalidArgument("malformed monomial '" + std::string(context) + "'");
    }
    factor.remove_prefix(1);
    const auto caret = factor.find('^');
    const std::uint64_t index = parse_count(factor.substr(0, caret), context);
    const std::uint64_t power = caret == std::string_view::npos ? 1 : parse_count(factor.substr(caret + 1), context);
    if (index < 1 || index > num_vars) {
      throw InvalidArgument("variable x" + std::to_string(index) + " outside x1..x" + std::to_string(num_vars));
    }
    exps[index - 1] = to_exponent(exps[index - 1] + power, context);
    if (star == std::string_view::npos) break;
    text.remove_prefix(star + 1);
  }
  return Monomial(std::move(exps));
}

}  // namespace

Monomial parse_monomial(std::string_view text, std::size_t num_vars) {
  if (num_vars == 0) throw InvalidArgument("need at least one variable");
  const std::string_view body = trim(text);
  if (body.empty()) throw InvalidArgument("empty monomial");
  if (body.front() == '[') {
    if (body.back() != ']') throw InvalidArgument("malformed monomial '" + std::string(text) + "'");
    return parse_vector(body.substr(1, body.size() - 2), num_vars, text);
  }
  return parse_product(body, num_vars, text);
}

std::string format_monomial(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    const auto e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string format_expansion(const MacaulayExpansion& expansion) {
  if (expansion.empty()) return "(empty)";
  std::string out;
  for (const auto& term : expansion.terms()) {
    if (!out.empty()) out += '+';
    out += "C(" + term.top.str() + "," + std::to_string(term.bottom) + ")";
  }
  return out;
}

MonomialIdeal ideal_from_json(const Json& json) {
  if (!json.is_object() || !json.contains("n") || !json.contains("generators")) {
    throw InvalidArgument("ideal JSON needs keys \"n\" and \"generators\"");
  }
  const auto& n_field = json.at("n");
  if (!n_field.is_number_unsigned() || n_field.get<std::uint64_t>() == 0) {
    throw InvalidArgument("\"n\" must be a positive integer");
  }
  const auto n = n_field.get<std::size_t>();
  const auto& gens = json.at("generators");
  if (!gens.is_array()) throw InvalidArgument("\"generators\" must be an array");
  std::vector<Monomial> monomials;
  for (const auto& g : gens) {
    if (g.is_string()) {
      monomials.push_back(parse_monomial(g.get<std::string>(), n));
    } else if (g.is_array()) {
      std::vector<Monomial::Exponent> exps;
      for (const auto& e : g) {
        if (!e.is_number_unsigned()) throw InvalidArgument("exponents must be non-negative integers");
        exps.push_back(to_exponent(e.get<std::uint64_t>(), g.dump()));
      }
      if (exps.size() != n) throw InvalidArgument("generator " + g.dump() + " does not have n entries");
      monomials.emplace_back(std::move(exps));
    } else {
      throw InvalidArgument("generator must be an exponent array or a monomial string");
    }
  }
  return MonomialIdeal(n, std::move(monomials));
}

Json ideal_to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(std::vector<Monomial::Exponent>(g.exponents().begin(), g.exponents().end()));
  return Json{{"n", ideal.num_vars()}, {"generators", std::move(gens)}};
}

Json natural_to_json(const Natural& value) {
  if (value <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(value);
  return value.str();
}

Json hilbert_to_json(const HilbertTable& table) {
  Json out = Json::object();
  for (const auto& [q, h] : table.values) out[std::to_string(q)] = natural_to_json(h);
  return out;
}

Json expansion_to_json(const Natural& a, unsigned d) {
  const auto expansion = macaulay_expand(a, d);
  Json terms = Json::array();
  for (const auto& term : expansion.terms()) terms.push_back(Json::array({natural_to_json(term.top), term.bottom}));
  return Json{{"a", natural_to_json(a)},
              {"d", d},
              {"terms", std::move(terms)},
              {"upper_shift", natural_to_json(expansion.upper_shift())},
              {"derivative", natural_to_json(expansion.derivative())}};
}

Json report_to_json(const ClassificationReport& report) {
  Json order = Json::array();
  for (const auto& m : report.linear_quotients.order) order.push_back(format_monomial(m));
  return Json{{"n", report.segment.num_vars()},
              {"d", report.segment.degree()},
              {"u", format_monomial(report.segment.upper())},
              {"v", format_monomial(report.segment.lower())},
              {"initial", report.initial},
              {"completely", report.completely},
              {"gotzmann", report.gotzmann},
              {"route", std::string(to_string(report.route))},
              {"linear_quotients", report.linear_quotients.verdict == Verdict::yes},
              {"componentwise_lexsegment", report.componentwise_lexsegment},
              {"taylor_minimal", report.taylor_minimal},
              {"a", natural_to_json(report.a)},
              {"b", natural_to_json(report.b)},
              {"c", natural_to_json(report.c)},
              {"j", report.j},
              {"t", report.leading_variable},
              {"size", natural_to_json(report.size)},
              {"linear_quotients_verdict", std::string(to_string(report.linear_quotients.verdict))},
              {"linear_quotients_order", std::move(order)}};
}

}  // namespace lexgotz
