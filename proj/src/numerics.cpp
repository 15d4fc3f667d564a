#include "swop/numerics.hpp"

namespace swop {

Scalar pochhammer(const Scalar& a, unsigned n) {
  Scalar r = a.of_int(1);
  Scalar f = a;
  for (unsigned k = 0; k < n; ++k) {
    r *= f;
    if (r.is_zero()) return r;  // a hit a nonpositive integer
    f += a.of_int(1);
  }
  return r;
}

Scalar binomial(unsigned m, unsigned k, const Scalar& like) {
  if (k > m) throw param_error("binomial: k > m");
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), m, k);
  mpq_class q(b);
  if (like.is_exact()) return Scalar::exact(q);
  return Scalar::floating(q, like.precision_bits());
}

}  // namespace swop
