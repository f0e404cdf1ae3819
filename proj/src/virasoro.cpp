#include "qwitt/virasoro.hpp"

#include <stdexcept>

#include "qwitt/qnumbers.hpp"

namespace qwitt {

Scalar witt_constant(const ScalarField& f, long long i, long long j) { return q_integer(f, j + 1) - q_integer(f, i + 1); }

Scalar virasoro_cocycle(const ScalarField& f, long long i) {
  if (!f.is_generic()) throw std::invalid_argument("the Virasoro cocycle is only defined for generic q");
  const Scalar num = q_integer(f, i - 1) * q_integer(f, i) * q_integer(f, i + 1);
  if (num.is_zero()) return num;
  const Scalar den = Scalar::q_power(f, i) * two_at_power(f, i) * q_integer(f, 2) * q_integer(f, 3);
  return num / den;
}

Scalar cocycle(const ScalarField& f, long long i, long long j) {
  return i + j == 0 ? virasoro_cocycle(f, i) : Scalar(f);
}

Scalar cocycle_delta(const ScalarField& f, long long r) {
  return q_integer(f, r + 1) * q_integer(f, r) * q_integer(f, r - 1) / (q_integer(f, 2) * q_integer(f, 3));
}

CheckReport verify_cocycle_recursion(const ScalarField& f, long long r_max) {
  CheckReport rep;
  rep.name = "cocycle recursion";
  if (!f.is_generic()) throw std::invalid_argument("the Virasoro cocycle is only defined for generic q");
  const Scalar one = Scalar::from_int(f, 1);
  const Scalar q = Scalar::q(f);
  rep.record(cocycle_delta(f, 2) == one, "Delta(2) != 1");
  rep.record(Scalar::q_power(f, 2) * two_at_power(f, 2) * virasoro_cocycle(f, 2) == one,
             "q^2 (2)_{q^2} c(2,-2) != 1");
  Scalar delta = one;
  for (long long r = 3; r <= r_max; ++r) {
    const Scalar ratio_q = (q.pow(2) - q.pow(1 - r)) / (q.pow(-1) - q.pow(1 - r));
    const Scalar ratio_int = q_integer(f, r + 1) / q_integer(f, r - 2);
    rep.record(ratio_q == ratio_int, "ratio forms differ at r=" + std::to_string(r));
    delta *= ratio_int;
    rep.record(delta == cocycle_delta(f, r), "recursion differs from closed form at r=" + std::to_string(r));
    rep.record(delta == Scalar::q_power(f, r) * two_at_power(f, r) * virasoro_cocycle(f, r),
               "Delta(r) != q^r (2)_{q^r} c(r,-r) at r=" + std::to_string(r));
  }
  return rep;
}

CheckReport verify_cocycle_antisymmetry(const ScalarField& f, long long i_max) {
  CheckReport rep;
  rep.name = "cocycle antisymmetry";
  for (long long i = 1; i <= i_max; ++i)
    rep.record(virasoro_cocycle(f, -i) == -virasoro_cocycle(f, i), "c(-i,i) != -c(i,-i) at i=" + std::to_string(i));
  return rep;
}

}  // namespace qwitt
