#include "lexgotz/monomial.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>
#include <utility>

namespace lexgotz {

Monomial::Monomial(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {
  if (exponents_.empty()) throw InvalidArgument("a monomial needs at least one variable");
  std::uint64_t total = 0;
  for (Exponent e : exponents_) total += e;
  if (total > std::numeric_limits<unsigned>::max()) throw InvalidArgument("monomial degree overflow");
  degree_ = static_cast<unsigned>(total);
}

Monomial Monomial::one(std::size_t num_vars) {
  return Monomial(std::vector<Exponent>(num_vars, 0));
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t position, Exponent power) {
  if (position >= num_vars) throw InvalidArgument("variable position out of range");
  std::vector<Exponent> exps(num_vars, 0);
  exps[position] = power;
  return Monomial(std::move(exps));
}

std::size_t Monomial::max_variable() const {
  for (std::size_t i = exponents_.size(); i > 0; --i) {
    if (exponents_[i - 1] > 0) return i;
  }
  return 0;
}

std::size_t Monomial::min_variable() const {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > 0) return i + 1;
  }
  return 0;
}

bool Monomial::divides(const Monomial& other) const {
  if (other.num_vars() != num_vars()) throw InvalidArgument("monomials live in different rings");
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::times_variable(std::size_t position, Exponent power) const {
  if (position >= num_vars()) throw InvalidArgument("variable position out of range");
  auto exps = exponents_;
  exps[position] += power;
  return Monomial(std::move(exps));
}

Monomial Monomial::divided_by(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw InvalidArgument("monomial division is not exact");
  auto exps = exponents_;
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] -= divisor.exponents_[i];
  return Monomial(std::move(exps));
}

Monomial Monomial::colon(const Monomial& other) const {
  if (other.num_vars() != num_vars()) throw InvalidArgument("monomials live in different rings");
  auto exps = exponents_;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    exps[i] = exps[i] > other.exponents_[i] ? exps[i] - other.exponents_[i] : 0;
  }
  return Monomial(std::move(exps));
}

namespace {

void require_same_ring(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) throw InvalidArgument("monomials live in different rings");
}

template <typename Op>
Monomial combine(const Monomial& a, const Monomial& b, Op op) {
  require_same_ring(a, b);
  std::vector<Monomial::Exponent> exps(a.num_vars());
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = op(a.exponent(i), b.exponent(i));
  return Monomial(std::move(exps));
}

}  // namespace

Monomial operator*(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](auto x, auto y) { return x + y; });
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](auto x, auto y) { return std::max(x, y); });
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](auto x, auto y) { return std::min(x, y); });
}

Monomial lcm(std::span<const Monomial> monomials) {
  if (monomials.empty()) throw InvalidArgument("lcm of an empty list");
  Monomial result = monomials.front();
  for (const auto& m : monomials.subspan(1)) result = lcm(result, m);
  return result;
}

Monomial gcd(std::span<const Monomial> monomials) {
  if (monomials.empty()) throw InvalidArgument("gcd of an empty list");
  Monomial result = monomials.front();
  for (const auto& m : monomials.subspan(1)) result = gcd(result, m);
  return result;
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  if (a.degree() != b.degree()) throw InvalidArgument("lex comparison of monomials of different degrees");
  return a <=> b;
}

Natural monomial_count(std::size_t num_vars, unsigned degree) {
  if (num_vars == 0) return 0;
  return binomial(Natural(num_vars + degree - 1), degree);
}

std::optional<Monomial> next_lower(const Monomial& m) {
  const std::size_t n = m.num_vars();
  if (n < 2) return std::nullopt;
  // Last position before x_n holding a positive exponent.
  std::size_t pivot = n - 1;
  for (std::size_t i = n - 1; i > 0; --i) {
    if (m.exponent(i - 1) > 0) {
      pivot = i - 1;
      break;
    }
  }
  if (pivot == n - 1) return std::nullopt;
  std::vector<Monomial::Exponent> exps(m.exponents().begin(), m.exponents().end());
  Monomial::Exponent tail = 1;
  for (std::size_t i = pivot + 1; i < n; ++i) {
    tail += exps[i];
    exps[i] = 0;
  }
  exps[pivot] -= 1;
  exps[pivot + 1] = tail;
  return Monomial(std::move(exps));
}

namespace {

void check_enumeration_size(const Natural& size, const Limits& limits) {
  if (size > limits.enumeration_cap) {
    throw CapExceeded("enumeration of " + size.str() + " monomials exceeds the cap of " +
                      std::to_string(limits.enumeration_cap));
  }
}

}  // namespace

std::vector<Monomial> enumerate_degree(std::size_t num_vars, unsigned degree, const Limits& limits) {
  if (num_vars == 0) throw InvalidArgument("need at least one variable");
  const Natural count = monomial_count(num_vars, degree);
  check_enumeration_size(count, limits);
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(count));
  std::optional<Monomial> cur = Monomial::variable(num_vars, 0, degree);
  while (cur) {
    out.push_back(*cur);
    cur = next_lower(*cur);
  }
  if (out.size() != count) throw InternalError("lex enumeration produced the wrong count");
  return out;
}

MacaulayExpansion rank_expansion(const Monomial& v) {
  // v = x_{l_1} ... x_{l_{d-j}} x_n^j with l_1 <= ... <= l_{d-j} <= n-1 (1-based);
  // the k-th factor contributes C(n - l_k + d - k, d - k + 1).
  const std::size_t n = v.num_vars();
  const unsigned d = v.degree();
  if (d == 0) throw InvalidArgument("rank of a degree-0 monomial");
  std::vector<BinomialTerm> terms;
  unsigned k = 1;
  for (std::size_t pos = 0; pos + 1 < n; ++pos) {
    const std::size_t l = pos + 1;
    for (Monomial::Exponent e = 0; e < v.exponent(pos); ++e, ++k) {
      terms.push_back({Natural(n - l + d - k), d - k + 1});
    }
  }
  return MacaulayExpansion(d, std::move(terms));
}

Natural rank_after(const Monomial& v) { return rank_expansion(v).value(); }

LexSegment::LexSegment(Monomial upper, Monomial lower)
    : upper_(std::move(upper)), lower_(std::move(lower)) {
  if (lex_compare(upper_, lower_) == std::strong_ordering::less) {
    throw InvalidArgument("lexsegment requires u >= v");
  }
}

Natural LexSegment::size() const {
  if (degree() == 0) return 1;
  return rank_after(upper_) - rank_after(lower_) + 1;
}

bool LexSegment::is_initial() const { return upper_.exponent(0) == degree(); }

bool LexSegment::is_final() const { return lower_.exponent(num_vars() - 1) == degree(); }

bool LexSegment::contains(const Monomial& w) const {
  return lex_compare(upper_, w) != std::strong_ordering::less &&
         lex_compare(w, lower_) != std::strong_ordering::less;
}

LexSegment LexSegment::raised(unsigned k) const {
  return LexSegment(upper_.times_variable(0, k), lower_.times_variable(num_vars() - 1, k));
}

std::vector<Monomial> lexsegment_set(const LexSegment& segment, const Limits& limits) {
  check_enumeration_size(segment.size(), limits);
  std::vector<Monomial> out;
  std::optional<Monomial> cur = segment.upper();
  while (cur) {
    out.push_back(*cur);
    if (*cur == segment.lower()) return out;
    cur = next_lower(*cur);
  }
  throw InternalError("lexsegment walk ran past the lower end");
}

std::vector<Monomial> shadow(std::span<const Monomial> monomials) {
  if (monomials.empty()) return {};
  const auto& first = monomials.front();
  std::vector<Monomial> out;
  out.reserve(monomials.size() * first.num_vars());
  for (const auto& m : monomials) {
    require_same_ring(first, m);
    if (m.degree() != first.degree()) throw InvalidArgument("shadow of monomials of mixed degree");
    for (std::size_t i = 0; i < m.num_vars(); ++i) out.push_back(m.times_variable(i));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_completely_lexsegment(const LexSegment& segment, const Limits& limits) {
  const auto members = lexsegment_set(segment, limits);
  return shadow(members) == lexsegment_set(segment.raised(1), limits);
}

namespace {

Monomial drop_leading(const Monomial& m, std::size_t count) {
  return Monomial(std::vector<Monomial::Exponent>(m.exponents().begin() + static_cast<std::ptrdiff_t>(count),
                                                  m.exponents().end()));
}

}  // namespace

Restriction restrict_leading(const LexSegment& segment) {
  const std::size_t first = segment.upper().min_variable();
  // A unit upper end, or x_1 | u, leaves nothing to drop.
  if (first <= 1) return {segment, 0};
  const std::size_t dropped = first - 1;
  return {LexSegment(drop_leading(segment.upper(), dropped), drop_leading(segment.lower(), dropped)),
          dropped};
}

Reduction reduce_segment(const LexSegment& segment) {
  Reduction out{segment, 0, 0};
  for (;;) {
    auto restricted = restrict_leading(out.segment);
    out.dropped_variables += restricted.dropped_variables;
    out.segment = std::move(restricted.segment);
    const auto common = out.segment.lower().exponent(0);
    if (common == 0) return out;
    const auto factor = Monomial::variable(out.segment.num_vars(), 0, common);
    out.segment = LexSegment(out.segment.upper().divided_by(factor), out.segment.lower().divided_by(factor));
    out.stripped_degree += common;
  }
}

}  // namespace lexgotz
