#ifndef QEULER_COMBINATORICS_HPP
#define QEULER_COMBINATORICS_HPP

#include <cstddef>
#include <mutex>
#include <string>
#include <vector>

#include "qeuler/errors.hpp"
#include "qeuler/rational.hpp"

namespace qeuler {

// C(n, k); zero outside 0 <= k <= n.
inline Integer binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

enum class StirlingKind { first, second };

// Triangular table of Stirling numbers, rows 0..n_max.
// The first kind is signed: sum_m S1(n,m) y^m = y(y-1)...(y-n+1).
class StirlingTable {
 public:
  StirlingTable(StirlingKind kind, std::size_t n_max) : kind_(kind) {
    rows_.push_back({Integer(1)});
    extend(n_max);
  }

  StirlingKind kind() const { return kind_; }
  std::size_t n_max() const { return rows_.size() - 1; }

  void extend(std::size_t n_max) {
    while (rows_.size() <= n_max) {
      const std::size_t n = rows_.size() - 1;
      const auto& prev = rows_.back();
      std::vector<Integer> row(n + 2);
      for (std::size_t m = 1; m <= n + 1; ++m) {
        Integer left = prev.size() > m - 1 ? prev[m - 1] : Integer(0);
        Integer same = m <= n ? prev[m] : Integer(0);
        if (kind_ == StirlingKind::first)
          row[m] = left - Integer(static_cast<unsigned long>(n)) * same;
        else
          row[m] = Integer(static_cast<unsigned long>(m)) * same + left;
      }
      rows_.push_back(std::move(row));
    }
  }

  const Integer& at(std::size_t n, std::size_t m) const {
    if (n >= rows_.size() || m > n)
      throw IndexOutOfRange("Stirling index (" + std::to_string(n) + ", " + std::to_string(m) +
                            ") outside the table");
    return rows_[n][m];
  }

  const std::vector<std::vector<Integer>>& rows() const { return rows_; }

 private:
  StirlingKind kind_;
  std::vector<std::vector<Integer>> rows_;
};

namespace detail {

inline Integer cached_stirling(StirlingKind kind, std::size_t n, std::size_t m) {
  static std::mutex mu;
  static StirlingTable first(StirlingKind::first, 16), second(StirlingKind::second, 16);
  if (m > n)
    throw IndexOutOfRange("Stirling index (" + std::to_string(n) + ", " + std::to_string(m) +
                          ") requires m <= n");
  std::lock_guard lock(mu);
  StirlingTable& t = kind == StirlingKind::first ? first : second;
  t.extend(n);
  return t.at(n, m);
}

}  // namespace detail

inline Integer stirling1(std::size_t n, std::size_t m) {
  return detail::cached_stirling(StirlingKind::first, n, m);
}

inline Integer stirling2(std::size_t n, std::size_t m) {
  return detail::cached_stirling(StirlingKind::second, n, m);
}

}  // namespace qeuler

#endif  // QEULER_COMBINATORICS_HPP
