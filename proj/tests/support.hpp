#pragma once

#include <string>
#include <vector>

#include "lexgotz/serialize.hpp"

namespace lexgotz::testing {

inline Monomial mono(std::size_t n, const std::string& text) { return parse_monomial(text, n); }

inline LexSegment seg(std::size_t n, const std::string& u, const std::string& v) {
  return LexSegment(mono(n, u), mono(n, v));
}

inline MonomialIdeal ideal(std::size_t n, const std::vector<std::string>& gens) {
  std::vector<Monomial> ms;
  for (const auto& g : gens) ms.push_back(mono(n, g));
  return MonomialIdeal(n, std::move(ms));
}

inline std::vector<Monomial> monos(std::size_t n, const std::vector<std::string>& texts) {
  std::vector<Monomial> out;
  for (const auto& t : texts) out.push_back(mono(n, t));
  return out;
}

// Every pair u >= v in M_d for 1 <= n <= n_max, 1 <= d <= d_max.
inline std::vector<LexSegment> all_segments(std::size_t n_max, unsigned d_max) {
  std::vector<LexSegment> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (unsigned d = 1; d <= d_max; ++d) {
      const auto all = enumerate_degree(n, d);
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t k = i; k < all.size(); ++k) out.emplace_back(all[i], all[k]);
      }
    }
  }
  return out;
}

}  // namespace lexgotz::testing
