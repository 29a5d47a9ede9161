#ifndef SSPLAB_LAURICELLA_HPP
#define SSPLAB_LAURICELLA_HPP

#include <cstdint>
#include <vector>

#include "ssplab/field.hpp"
#include "ssplab/poly.hpp"

namespace ssplab {

/// Rising factorial x(x+1)...(x+n-1); n = 0 gives 1. Exact.
BigRational pochhammer(const BigRational& x, unsigned n);

/// Exact series coefficient
///   A^(i,j)_n = <a'>_{n1+n2+n3} * prod <b'>_{nk}
///             / (<c'>_{n1+n2+n3} * prod <1>_{nk})
/// with a' = 5/2 - j, b' = 1/2, c' = 3 - j. The value depends only on j;
/// i is kept for interface symmetry with the truncation data.
BigRational coeff_A(int i, int j, int n1, int n2, int n3);

/// Exponent region of the truncation: all nk <= (p-1)/2 and
/// d' - (p-1)/2 <= n1+n2+n3 <= d', where d' = 5(p-1)/2 - ip + j.
class SupportSet {
 public:
  SupportSet(PrimeModulus p, int i, int j);

  std::uint64_t p() const { return p_; }
  int i() const { return i_; }
  int j() const { return j_; }
  long d_prime() const { return d_prime_; }
  std::size_t size() const { return members_.size(); }
  bool contains(int n1, int n2, int n3) const;
  /// Members in grevlex-increasing order.
  const std::vector<Mono>& members() const { return members_; }

 private:
  std::uint64_t p_;
  int i_, j_;
  long d_prime_;
  std::vector<Mono> members_;
};

SupportSet support(PrimeModulus p, int i, int j);

struct TruncatedSeries {
  std::uint64_t p;
  int i, j;
  TriPoly poly;
};

/// Sum of reduce_rational_mod_p(A^(i,j)_n) z^n over the support set.
/// Reduction failures (p dividing a denominator) indicate a support-set
/// bug and propagate as DenominatorDivisibleByP.
TruncatedSeries truncated_series(PrimeModulus p, int i, int j);

/// Fact-of-the-matter constant relating the truncated series to the
/// Cartier-Manin entry: (-1)^((p-1)/2) * j / i in F_p.
Fp normalization_constant(PrimeModulus p, int i, int j);

/// Same constant computed from exact double factorials,
///   ((5-2i)p-1)!! / ((5-2i)p-2)!! * (3-2j)!! / (4-2j)!!
/// with 0!! = (-1)!! = 1, reduced mod p after cancellation.
Fp normalization_constant_oracle(PrimeModulus p, int i, int j);

/// Hypergeometric reconstruction of c_{ip-j}:
/// normalization_constant * truncated series.
TriPoly cm_via_hypergeometric(PrimeModulus p, int i, int j);

}  // namespace ssplab

#endif
