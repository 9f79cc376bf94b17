#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

// Brute-force enumeration of every term list C(t_d,d)+C(t_{d-1},d-1)+...+C(t_j,j)
// with t_d > t_{d-1} > ... > t_j and t_i >= i, tallied by value. Independent of
// the library: binomials come from a saturating Pascal triangle.

namespace lexgotz::testing {

class TermLists {
 public:
  // Tallies all lists of degree d with value <= limit.
  TermLists(unsigned d, std::uint64_t limit) : d_(d), limit_(limit), count_(limit + 1, 0), first_(limit + 1) {
    count_[0] = 1;  // the empty list
    std::vector<std::pair<std::uint64_t, unsigned>> path;
    walk(d, 0, 0, path);
  }

  std::uint64_t count(std::uint64_t value) const { return count_.at(value); }
  // (top, bottom) pairs of the first list found with this value.
  const std::vector<std::pair<std::uint64_t, unsigned>>& first(std::uint64_t value) const { return first_.at(value); }

 private:
  std::uint64_t choose(std::uint64_t n, unsigned k) {
    while (pascal_.size() <= n) {
      // Row `row` keeps columns 0..min(row, d).
      const std::size_t row = pascal_.size();
      std::vector<std::uint64_t> next(std::min<std::size_t>(row, d_) + 1, 1);
      for (std::size_t i = 1; i < next.size(); ++i) {
        const auto& prev = pascal_[row - 1];
        const std::uint64_t s = prev[i - 1] + (i < prev.size() ? prev[i] : 0);
        next[i] = s > limit_ ? limit_ + 1 : s;
      }
      pascal_.push_back(std::move(next));
    }
    return k > n ? 0 : pascal_[n][k];
  }

  // Next term has bottom k and a top strictly below `bound` (0 means unbounded).
  void walk(unsigned k, std::uint64_t bound, std::uint64_t sum, std::vector<std::pair<std::uint64_t, unsigned>>& path) {
    for (std::uint64_t top = k; bound == 0 || top < bound; ++top) {
      const std::uint64_t term = choose(top, k);
      if (sum + term > limit_) break;
      path.emplace_back(top, k);
      const std::uint64_t value = sum + term;
      if (count_[value]++ == 0) first_[value] = path;
      if (k > 1) walk(k - 1, top, value, path);
      path.pop_back();
    }
  }

  unsigned d_;
  std::uint64_t limit_;
  std::vector<std::uint64_t> count_;
  std::vector<std::vector<std::pair<std::uint64_t, unsigned>>> first_;
  std::vector<std::vector<std::uint64_t>> pascal_;
};

}  // namespace lexgotz::testing
