#ifndef QEULER_TESTS_GENERATORS_HPP
#define QEULER_TESTS_GENERATORS_HPP

#include <random>

#include "qeuler/mpoly.hpp"
#include "qeuler/ratfunc.hpp"

// Small deterministic random generators for property tests.
namespace qeuler::testing {

inline Rational random_rational(std::mt19937& rng, int bound = 5) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  return Rational(Integer(num(rng)), Integer(den(rng)));
}

inline UniPolyQ random_poly(std::mt19937& rng, int max_degree = 4) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& v : c) v = random_rational(rng);
  return UniPolyQ(std::move(c));
}

inline RatFuncQ random_ratfunc(std::mt19937& rng, int max_degree = 4) {
  UniPolyQ den;
  while (den.is_zero()) den = random_poly(rng, max_degree);
  return RatFuncQ::canonical(random_poly(rng, max_degree), den);
}

inline MPoly random_mpoly(std::mt19937& rng, int terms = 4) {
  std::uniform_int_distribution<unsigned> exp(0, 3);
  MPoly p;
  for (int i = 0; i < terms; ++i) p.add_term(Monomial{exp(rng), exp(rng)}, random_ratfunc(rng, 2));
  return p;
}

}  // namespace qeuler::testing

#endif  // QEULER_TESTS_GENERATORS_HPP
