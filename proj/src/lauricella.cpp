#include "ssplab/lauricella.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ssplab {

namespace {

void require_ij(int i, int j) {
  if (i < 1 || i > 2 || j < 1 || j > 2)
    throw std::invalid_argument("(i,j) must lie in {1,2}^2");
}

}  // namespace

BigRational pochhammer(const BigRational& x, unsigned n) {
  BigRational r(1);
  BigRational term = x;
  for (unsigned s = 0; s < n; ++s) {
    r *= term;
    term += 1;
  }
  return r;
}

BigRational coeff_A(int i, int j, int n1, int n2, int n3) {
  require_ij(i, j);
  assert(n1 >= 0 && n2 >= 0 && n3 >= 0);
  const BigRational a_prime = BigRational(5, 2) - j;
  const BigRational b_prime(1, 2);
  const BigRational c_prime(3 - j);
  const unsigned total = static_cast<unsigned>(n1 + n2 + n3);

  BigRational num = pochhammer(a_prime, total);
  BigRational den = pochhammer(c_prime, total);
  for (int n : {n1, n2, n3}) {
    num *= pochhammer(b_prime, static_cast<unsigned>(n));
    den *= pochhammer(BigRational(1), static_cast<unsigned>(n));
  }
  return num / den;
}

SupportSet::SupportSet(PrimeModulus pm, int i, int j)
    : p_(pm.value()), i_(i), j_(j) {
  require_ij(i, j);
  const long e = static_cast<long>((p_ - 1) / 2);
  d_prime_ = 5 * e - static_cast<long>(i) * static_cast<long>(p_) + j;
  const long lo = d_prime_ - e;
  // thin slab: enumerate directly with the sum constraint
  for (long n1 = 0; n1 <= e; ++n1)
    for (long n2 = 0; n2 <= e; ++n2) {
      const long n3_lo = std::max(0L, lo - n1 - n2);
      const long n3_hi = std::min(e, d_prime_ - n1 - n2);
      for (long n3 = n3_lo; n3 <= n3_hi; ++n3)
        members_.push_back(Mono{{static_cast<int>(n1), static_cast<int>(n2),
                                 static_cast<int>(n3)}});
    }
  std::sort(members_.begin(), members_.end(), grevlex_less);
}

bool SupportSet::contains(int n1, int n2, int n3) const {
  const long e = static_cast<long>((p_ - 1) / 2);
  if (n1 < 0 || n2 < 0 || n3 < 0) return false;
  if (n1 > e || n2 > e || n3 > e) return false;
  const long total = n1 + n2 + n3;
  return d_prime_ - e <= total && total <= d_prime_;
}

SupportSet support(PrimeModulus p, int i, int j) { return SupportSet(p, i, j); }

TruncatedSeries truncated_series(PrimeModulus pm, int i, int j) {
  const SupportSet supp(pm, i, j);
  TriPoly poly(pm.value());
  for (const Mono& m : supp.members()) {
    const BigRational a = coeff_A(i, j, m.e[0], m.e[1], m.e[2]);
    poly.add_term(m, reduce_rational_mod_p(a, pm));
  }
  return {pm.value(), i, j, std::move(poly)};
}

Fp normalization_constant(PrimeModulus pm, int i, int j) {
  require_ij(i, j);
  const std::uint64_t p = pm.value();
  Fp value = Fp(static_cast<std::uint64_t>(j), p) *
             Fp(static_cast<std::uint64_t>(i), p).inverse();
  if (((p - 1) / 2) % 2 == 1) value = -value;
  return value;
}

namespace {

BigInt double_factorial(long n) {
  // convention: 0!! = (-1)!! = 1
  BigInt r(1);
  for (long v = n; v >= 2; v -= 2) r *= static_cast<unsigned long>(v);
  return r;
}

}  // namespace

Fp normalization_constant_oracle(PrimeModulus pm, int i, int j) {
  require_ij(i, j);
  const long p = static_cast<long>(pm.value());
  BigRational value(double_factorial((5 - 2 * i) * p - 1),
                    double_factorial((5 - 2 * i) * p - 2));
  value.canonicalize();
  BigRational second(double_factorial(3 - 2 * j), double_factorial(4 - 2 * j));
  second.canonicalize();
  value *= second;
  return reduce_rational_mod_p(value, pm);
}

TriPoly cm_via_hypergeometric(PrimeModulus pm, int i, int j) {
  return truncated_series(pm, i, j).poly.scaled(normalization_constant(pm, i, j));
}

}  // namespace ssplab
