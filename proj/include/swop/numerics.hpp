#pragma once

#include "swop/scalar.hpp"

namespace swop {

// Rising factorial a(a+1)...(a+n-1); 1 for n == 0.
Scalar pochhammer(const Scalar& a, unsigned n);

// Binomial coefficient, emitted in the same mode as `like`. Requires k <= m.
Scalar binomial(unsigned m, unsigned k, const Scalar& like);

}  // namespace swop
