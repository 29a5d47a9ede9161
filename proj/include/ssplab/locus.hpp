#ifndef SSPLAB_LOCUS_HPP
#define SSPLAB_LOCUS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "ssplab/field.hpp"
#include "ssplab/ideal.hpp"
#include "ssplab/poly.hpp"

namespace ssplab {

/// A common zero of the four Cartier-Manin entries, with coordinates in
/// F_{p^k}.
struct LocusPoint {
  std::array<Fq, 3> coords;
  unsigned k;
};

/// 3 x 4 Jacobian at a point; rows are d/dz_l for l = 1..3, columns follow
/// (c_{p-1}, c_{2p-1}, c_{p-2}, c_{2p-2}).
struct JacobianAtPoint {
  std::array<std::array<Fq, 4>, 3> m;
  int rank;
};

struct LocusReport {
  std::uint64_t p = 0;
  std::vector<unsigned> schedule;
  std::vector<unsigned> degrees_searched;
  unsigned k_used = 0;

  std::size_t groebner_size = 0;
  std::size_t quotient_dim = 0;
  std::array<int, 3> min_poly_degrees{0, 0, 0};
  bool radical = false;

  std::vector<LocusPoint> points;
  std::vector<JacobianAtPoint> jacobians;

  bool counts_match = false;
  bool incomplete_enumeration = false;
  bool ranks_all_three = true;
  bool branch_points_ok = true;
  bool expectation_ok = true;
};

/// All (l1,l2,l3) in F_{p^k}^3 where the four entries vanish, in
/// ascending canonical-index order (l1 outermost). Enumeration is
/// partitioned over l1 across `threads` workers; the result is
/// deterministic regardless of the worker count.
std::vector<LocusPoint> enumerate_points(PrimeModulus p, unsigned k,
                                         unsigned threads = 1);

/// True iff {0, 1, l1, l2, l3} has five distinct elements.
bool check_branch_points(const LocusPoint& point);

JacobianAtPoint jacobian_at(PrimeModulus p, const LocusPoint& point);

/// Exact rank by Gaussian elimination with first-nonzero pivoting.
int fq_matrix_rank(std::vector<std::vector<Fq>> rows);

/// Rank of the 3 x 2 submatrix of columns (c1, c2), 0-based.
int column_pair_rank(const JacobianAtPoint& jac, int c1, int c2);

/// Full pipeline: Groebner basis, quotient dimension, radical test, then
/// enumeration over the schedule until the point count matches the
/// quotient dimension. Rank, branch-point and determinant-like checks run
/// at every found point. If no schedule entry matches the count, the
/// report is flagged incomplete (not an error).
LocusReport verify_multiplicity_one(PrimeModulus p,
                                    const std::vector<unsigned>& k_schedule =
                                        {2, 4},
                                    unsigned threads = 1);

struct ExpectationReport {
  std::uint64_t p = 0;
  unsigned k_used = 0;
  std::size_t quotient_dim = 0;
  bool counts_match = false;
  bool incomplete_enumeration = false;
  std::vector<LocusPoint> points;
  // values[point][i-1] = dc_{p-1}/dz_i * dc_{2p-2}/dz_i
  //                    - dc_{2p-1}/dz_i * dc_{p-2}/dz_i   at the point
  std::vector<std::array<Fq, 3>> values;
  bool pass = true;  // all values zero; a failure is a finding, not an error
};

/// Evaluates the three determinant-like expressions at every locus point.
ExpectationReport check_expectation(PrimeModulus p,
                                    const std::vector<unsigned>& k_schedule =
                                        {2, 4},
                                    unsigned threads = 1);

}  // namespace ssplab

#endif
