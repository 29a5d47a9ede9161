#ifndef SSPLAB_IDEAL_HPP
#define SSPLAB_IDEAL_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "ssplab/field.hpp"
#include "ssplab/poly.hpp"

namespace ssplab {

enum class OrderKind { grevlex, lex };

/// Total monomial order on F_p[z1,z2,z3] with z1 > z2 > z3.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;

  bool less(const Mono& a, const Mono& b) const {
    return kind == OrderKind::grevlex ? grevlex_less(a, b) : lex_less(a, b);
  }
};

/// Leading monomial of a nonzero polynomial w.r.t. the order.
Mono leading_mono(const TriPoly& f, const MonomialOrder& order);

/// Interreduced Groebner basis: monic generators, no leading monomial
/// divides another, tails fully reduced; sorted by ascending leading
/// monomial. The unit ideal is represented as { 1 }.
struct GroebnerBasis {
  std::uint64_t p;
  MonomialOrder order;
  std::vector<TriPoly> gens;

  bool is_unit_ideal() const;
};

/// Remainder of the division of f by the basis; no remainder term is
/// divisible by any leading monomial. Deterministic: always reduces the
/// highest remaining term, choosing the first matching basis element in
/// sequence order.
TriPoly normal_form(const TriPoly& f, const GroebnerBasis& basis);

/// S-polynomial of monic-normalized f and g.
TriPoly s_polynomial(const TriPoly& f, const TriPoly& g,
                     const MonomialOrder& order);

/// Buchberger with normal pair selection (lowest lcm degree first) and
/// both classical pair-elimination criteria.
GroebnerBasis buchberger(const std::vector<TriPoly>& generators,
                         MonomialOrder order);

/// Monomial basis and multiplication structure of F_p[z1,z2,z3]/I for a
/// zero-dimensional ideal. The unit ideal yields dimension 0.
struct QuotientAlgebra {
  std::uint64_t p;
  MonomialOrder order;
  std::vector<Mono> staircase;  // standard monomials, order-increasing
  std::size_t dim;
  // mult[l][row][col]: multiplication by z_{l+1} in the staircase basis;
  // column c is the normal form of z_{l+1} * staircase[c].
  std::array<std::vector<std::vector<Fp>>, 3> mult;
};

/// Throws NotZeroDimensional when some variable has no pure power among
/// the leading monomials (infinite staircase).
QuotientAlgebra quotient_algebra(const GroebnerBasis& basis);

/// Monic least-degree m with m(M_l) = 0; generates I restricted to the
/// single variable z_l. Computed from the Krylov sequence of the class
/// of 1, which is cyclic for the subalgebra generated by z_l.
UniPoly elimination_min_poly(const QuotientAlgebra& q, int l);

/// Seidenberg criterion: radical iff each elimination minimal polynomial
/// is squarefree. Dimension 0 (unit ideal) is trivially radical.
bool is_radical_zero_dim(const QuotientAlgebra& q);

}  // namespace ssplab

#endif
