#pragma once

#include <algorithm>

#include "error.hpp"

namespace arbor {

template <typename DivisorFn>
std::vector<Int> integer_roots(const IntPolynomial& p, DivisorFn&& divisors_of) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "integer roots of the zero polynomial");
  std::vector<Int> roots;
  std::size_t low = 0;
  while (p.coeff(low) == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  if (low == p.deg()) return roots;
  for (const Int& d : divisors_of(abs(p.coeff(low)))) {
    if (p.evaluate(d) == 0) roots.push_back(d);
    Int neg = -d;
    if (p.evaluate(neg) == 0) roots.push_back(neg);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace arbor
