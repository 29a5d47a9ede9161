#ifndef SSPLAB_PDE_HPP
#define SSPLAB_PDE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ssplab/field.hpp"
#include "ssplab/poly.hpp"

namespace ssplab {

/// Parameters of the rank-four system attached to j in {1,2}:
/// a = 5/2 - j, b1 = b2 = b3 = 1/2, c = 3 - j, materialized in F_p.
struct OperatorParams {
  Fp a, b1, b2, b3, c;
  int j;

  static OperatorParams for_j(PrimeModulus p, int j);
  Fp b(int l) const;  // b_l, l in 1..3
};

/// Genus-1 operator parameters; a = b = 1/2, c = 1 for the Legendre family.
struct GaussParams {
  Fp a, b, c;

  static GaussParams legendre(PrimeModulus p);
};

/// D_l w = z_l(1-z_l) d2w/dz_l^2 + sum_{k != l} z_k(1-z_l) d2w/dz_l dz_k
///       + (c - (a+b_l+1) z_l) dw/dz_l - sum_{k != l} b_l z_k dw/dz_k
///       - a b_l w.
TriPoly apply_D(int l, const OperatorParams& params, const TriPoly& w);

/// E_{lm} w = (z_l - z_m) d2w/dz_l dz_m - b_m dw/dz_l + b_l dw/dz_m,
/// for 1 <= l < m <= 3.
TriPoly apply_E(int l, int m, const OperatorParams& params, const TriPoly& w);

/// z(1-z) w'' + (c - (a+b+1) z) w' - a b w.
UniPoly apply_gauss_operator(const GaussParams& params, const UniPoly& w);

struct AnnihilationResidual {
  int i, j;
  std::string op;  // "D1".."D3", "E12", "E13", "E23"
  TriPoly residual;
};

struct AnnihilationReport {
  std::uint64_t p;
  bool pass;
  // the 4 x 6 residuals that failed to vanish, verbatim
  std::vector<AnnihilationResidual> nonzero;
};

/// Applies all six operators (parameters from j) to every entry c_{ip-j};
/// the expected outcome is 24 zero polynomials.
AnnihilationReport verify_annihilation(PrimeModulus p);

/// Left-minus-right residual of the contiguity relations; expected zero.
///   which = 1:  sum (z_k^2 - z_k) d/dz_k c_{ip-1}
///               + 1/2 (z1+z2+z3-2) c_{ip-1} + 1/2 c_{ip-2}
///   which = 2:  sum (1 - z_k) d/dz_k c_{ip-2} - 1/2 (c_{ip-1} + c_{ip-2})
TriPoly contiguity_residual(PrimeModulus p, int i, int which);

/// Left-minus-right residual of the two first-order relations predicted
/// by the contiguity framework; expected zero (the second is checked
/// prime-by-prime, never assumed).
///   which = 1:  -(sum (1-z_k) d/dz_k - 1) c_{ip-2}
///               - (sum z_k(1-z_k) d/dz_k - 1/2 sum z_k + 1/2) c_{ip-1}
///   which = 2:  (sum z_k d/dz_k + 1/2) c_{ip-2}
///               - (sum z_k d/dz_k + 1) c_{ip-1}
TriPoly remark_relation_residual(PrimeModulus p, int i, int which);

}  // namespace ssplab

#endif
