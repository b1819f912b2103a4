#ifndef QEULER_DEGENERATE_HPP
#define QEULER_DEGENERATE_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qeuler/combinatorics.hpp"
#include "qeuler/mpoly.hpp"
#include "qeuler/qeuler_core.hpp"

namespace qeuler {

// Outcome of a symbolic identity check. The identity holds iff the
// residual is the zero polynomial.
struct IdentityReport {
  std::string identity;
  std::size_t n = 0;
  unsigned r = 1;
  bool pass = false;
  MPoly residual;
  std::string note;

  static IdentityReport from_residual(std::string identity, std::size_t n, unsigned r, MPoly residual) {
    IdentityReport rep{std::move(identity), n, r, residual.is_zero(), std::move(residual), {}};
    return rep;
  }
};

namespace detail {

// sum_m w(n,m) lambda^(n-m) polys[m]
template <typename Weight>
MPoly lambda_weighted_sum(std::span<const MPoly> polys, std::size_t n, Weight weight) {
  MPoly r;
  for (std::size_t m = 0; m <= n; ++m) {
    const Integer w = weight(n, m);
    if (w == 0) continue;
    r += polys[m].times_monomial(RatFuncQ(Rational(w)), static_cast<unsigned>(n - m), 0);
  }
  return r;
}

inline std::vector<MPoly> qeuler_poly_list(std::size_t n_max, unsigned r) {
  std::vector<MPoly> out;
  out.reserve(n_max + 1);
  for (std::size_t m = 0; m <= n_max; ++m) out.push_back(r == 1 ? qeuler_poly(m) : qeuler_poly_order(m, r));
  return out;
}

}  // namespace detail

// sum_m lambda^(n-m) S2(n,m) polys[m]. The lambda terms must cancel completely.
inline MPoly s2_transform(std::span<const MPoly> polys, std::size_t n) {
  if (polys.size() <= n)
    throw IndexOutOfRange("s2_transform needs entries 0.." + std::to_string(n));
  MPoly r = detail::lambda_weighted_sum(polys, n, [](std::size_t a, std::size_t b) { return stirling2(a, b); });
  if (r.lambda_degree() > 0)
    throw LambdaResidue("lambda-dependent terms survive the S2 transform at n = " + std::to_string(n) +
                        ": " + r.str());
  return r;
}

// E^(r)_{n,q}(x|lambda) = sum_m S1(n,m) lambda^(n-m) E^(r)_{m,q}(x) for every n <= n_max.
inline std::vector<MPoly> deg_qeuler_order_list(std::size_t n_max, unsigned r) {
  if (r == 0) throw InvalidArgument("order r must be positive");
  const std::vector<MPoly> base = detail::qeuler_poly_list(n_max, r);
  std::vector<MPoly> out;
  out.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n)
    out.push_back(detail::lambda_weighted_sum(base, n, [](std::size_t a, std::size_t b) { return stirling1(a, b); }));
  return out;
}

inline MPoly deg_qeuler_order(std::size_t n, unsigned r) { return deg_qeuler_order_list(n, r).back(); }

// Degenerate q-Euler polynomial E_{n,q}(x|lambda) via the S1 transform of E_{m,q}(x).
inline MPoly deg_qeuler_poly(std::size_t n) { return deg_qeuler_order(n, 1); }

// E_{n,q}(x|lambda) = sum_{k<=n} sum_{l<=k} C(n,k) ([x]_q)_{n-k,lambda} lambda^(k-l) q^(lx) S1(k,l) E_{l,q}.
inline MPoly deg_qeuler_poly_direct(std::size_t n) {
  const MPoly bracket = qbracket_sym();
  std::vector<MPoly> falling{MPoly(1)};
  for (unsigned j = 0; j < n; ++j)
    falling.push_back(falling.back() * (bracket - MPoly::monomial(Rational(j), 1, 0)));

  MPoly r;
  for (std::size_t k = 0; k <= n; ++k) {
    // inner(k) = sum_l lambda^(k-l) X^l S1(k,l) E_{l,q}
    MPoly inner;
    for (std::size_t l = 0; l <= k; ++l) {
      const Integer s = stirling1(k, l);
      if (s == 0) continue;
      inner.add_term(Monomial{static_cast<unsigned>(k - l), static_cast<unsigned>(l)},
                     qeuler_number(l) * Rational(s));
    }
    r += falling[n - k] * inner * RatFuncQ(Rational(binomial(n, static_cast<long>(k))));
  }
  return r;
}

// q E_{n,q}(x+1|lambda) + E_{n,q}(x|lambda) - [2]_q ([x]_q)_{n,lambda}
inline IdentityReport check_thm6(std::size_t n) {
  const MPoly e = deg_qeuler_poly(n);
  MPoly residual = shift_x(e) * RatFuncQ::q() + e - deg_falling(qbracket_sym(), static_cast<unsigned>(n)) * qtwo();
  return IdentityReport::from_residual("thm6", n, 1, std::move(residual));
}

enum class FamilyRoute { thm1_transform, thm5_direct, thm8_transform };

inline const char* route_name(FamilyRoute route) {
  switch (route) {
    case FamilyRoute::thm1_transform: return "thm1_transform";
    case FamilyRoute::thm5_direct: return "thm5_direct";
    case FamilyRoute::thm8_transform: return "thm8_transform";
  }
  return "unknown";
}

// E^(r)_{n,q}(x|lambda) for n = 0..n_max, tagged with the route that built it.
struct DegenerateFamily {
  unsigned order = 1;
  std::vector<MPoly> polys;
  FamilyRoute provenance = FamilyRoute::thm1_transform;

  static DegenerateFamily build(FamilyRoute route, std::size_t n_max, unsigned r = 1) {
    DegenerateFamily f;
    f.order = r;
    f.provenance = route;
    switch (route) {
      case FamilyRoute::thm1_transform:
        if (r != 1) throw InvalidArgument("the S1 route of order 1 was requested with r != 1");
        f.polys = deg_qeuler_order_list(n_max, 1);
        break;
      case FamilyRoute::thm5_direct:
        if (r != 1) throw InvalidArgument("the direct expansion exists only for r = 1");
        for (std::size_t n = 0; n <= n_max; ++n) f.polys.push_back(deg_qeuler_poly_direct(n));
        break;
      case FamilyRoute::thm8_transform:
        f.polys = deg_qeuler_order_list(n_max, r);
        break;
    }
    f.check_invariants();
    return f;
  }

  void check_invariants() const {
    if (polys.empty() || !(polys[0] == MPoly(1)))
      throw std::logic_error("degenerate family must start with the constant 1");
    for (std::size_t n = 1; n < polys.size(); ++n)
      if (polys[n].lambda_degree() > static_cast<int>(n) - 1)
        throw std::logic_error("lambda degree of entry " + std::to_string(n) + " exceeds n - 1");
  }
};

}  // namespace qeuler

#endif  // QEULER_DEGENERATE_HPP
