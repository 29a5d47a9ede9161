#ifndef SSPLAB_CARTIER_HPP
#define SSPLAB_CARTIER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ssplab/field.hpp"
#include "ssplab/poly.hpp"

namespace ssplab {

/// The g x g matrix (c_{ip-j}) of coefficients of f(x)^((p-1)/2) for the
/// Rosenhain curve y^2 = f(x) with symbolic branch points. For g = 1 the
/// single entry is a polynomial in z1 alone.
struct CartierManinData {
  std::uint64_t p;
  int g;
  // entries[i-1][j-1] = c_{ip-j}
  std::vector<std::vector<TriPoly>> entries;

  const TriPoly& entry(int i, int j) const { return entries[i - 1][j - 1]; }
};

/// f(x) = x(x-1)(x-z1)...(x-z_{2g-1}) over F_p; g in {1,2}.
CoeffPoly rosenhain_f(PrimeModulus p, int g);

/// Entries extracted from the expansion of f^((p-1)/2). Results are
/// memoized per (p,g); the returned reference stays valid for the
/// lifetime of the process. Thread-safe.
const CartierManinData& cm_entries(PrimeModulus p, int g);

/// Display name of entry (i,j): "c_p-1", "c_p-2", "c_2p-1", "c_2p-2".
std::string cm_entry_name(int i, int j);

/// Reads a polynomial involving only z1 (a genus-1 entry) as univariate.
UniPoly unipoly_from_tripoly_z1(const TriPoly& f);

/// H_p(t) = sum of binom((p-1)/2, i)^2 t^i over F_p, degree (p-1)/2.
UniPoly hasse_polynomial(PrimeModulus p);

struct IgusaScanEntry {
  std::uint64_t p;
  bool separable;
  UniPoly witness;  // gcd(H_p, H_p') when not separable, else 1
};

struct IgusaScanReport {
  std::uint64_t p_max;
  bool all_separable;
  std::vector<IgusaScanEntry> entries;
};

/// Squarefreeness of H_p for every odd prime p <= p_max.
IgusaScanReport igusa_separability_scan(std::uint64_t p_max);

}  // namespace ssplab

#endif
