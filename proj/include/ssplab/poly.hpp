#ifndef SSPLAB_POLY_HPP
#define SSPLAB_POLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ssplab/field.hpp"

namespace ssplab {

/// Exponent triple of a monomial in z1, z2, z3.
struct Mono {
  std::array<int, 3> e{0, 0, 0};

  int total() const { return e[0] + e[1] + e[2]; }
  friend bool operator==(const Mono&, const Mono&) = default;
};

// Term orders with z1 > z2 > z3.
bool grevlex_less(const Mono& a, const Mono& b);
bool lex_less(const Mono& a, const Mono& b);

bool mono_divides(const Mono& a, const Mono& b);  // a | b
Mono mono_mul(const Mono& a, const Mono& b);
Mono mono_div(const Mono& a, const Mono& b);  // requires b | a
Mono mono_lcm(const Mono& a, const Mono& b);
std::string mono_to_string(const Mono& m);

struct GrevlexLess {
  bool operator()(const Mono& a, const Mono& b) const {
    return grevlex_less(a, b);
  }
};

/// Sparse polynomial in F_p[z1,z2,z3]. Terms are kept in a grevlex-sorted
/// map with no zero coefficients; the zero polynomial has an empty map but
/// still knows its modulus.
class TriPoly {
 public:
  using TermMap = std::map<Mono, Fp, GrevlexLess>;

  // Total degree reported for the zero polynomial ("minus infinity").
  static constexpr int kZeroDegree = -1;

  explicit TriPoly(std::uint64_t p) : p_(p) {}
  explicit TriPoly(PrimeModulus p) : p_(p.value()) {}

  static TriPoly constant(Fp c);
  static TriPoly monomial(std::uint64_t p, const Mono& m, Fp c);
  /// The monomial z_l, l in 1..3.
  static TriPoly variable(std::uint64_t p, int l);

  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Fp coeff(const Mono& m) const;
  void add_term(const Mono& m, Fp c);  // merges; drops resulting zeros

  int total_degree() const;  // kZeroDegree for zero
  int degree_in(int l) const;

  TriPoly operator-() const;
  friend TriPoly operator+(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator-(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
  TriPoly& operator+=(const TriPoly& o);
  TriPoly& operator-=(const TriPoly& o);

  TriPoly scaled(Fp c) const;
  /// this * c * z^m.
  TriPoly times_term(const Mono& m, Fp c) const;

  friend bool operator==(const TriPoly& a, const TriPoly& b);
  friend bool operator!=(const TriPoly& a, const TriPoly& b) {
    return !(a == b);
  }

 private:
  std::uint64_t p_;
  TermMap terms_;
};

/// Formal d/dz_l, l in 1..3 (exponents act mod p).
TriPoly partial_derivative(const TriPoly& a, int l);

/// Exact evaluation at a point of an extension of the coefficient field.
Fq evaluate(const TriPoly& a, const std::array<Fq, 3>& point);

/// Variable relabeling: z_l -> z_{sigma[l-1]}.
TriPoly permute_variables(const TriPoly& a, const std::array<int, 3>& sigma);

/// "c*z1^a*z2^b*z3^c" terms joined by " + ", grevlex-descending,
/// coefficients as residues in [0,p). Zero polynomial is "0".
/// Round-trips bit-exactly through tripoly_from_text.
std::string to_text(const TriPoly& a);
TriPoly tripoly_from_text(const std::string& text, std::uint64_t p);

/// Dense univariate polynomial over F_p, coefficients low to high with a
/// nonzero leading coefficient (zero polynomial = empty).
class UniPoly {
 public:
  // Degree reported for the zero polynomial ("minus infinity" stand-in).
  static constexpr int kZeroDegree = -1;

  explicit UniPoly(std::uint64_t p) : p_(p) {}
  explicit UniPoly(PrimeModulus p) : p_(p.value()) {}
  UniPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

  static UniPoly one(std::uint64_t p);
  /// c * x^k.
  static UniPoly term(std::uint64_t p, Fp c, int k);

  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Fp coeff(int k) const;
  Fp leading_coeff() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);

  UniPoly scaled(Fp c) const;
  UniPoly shifted(int k) const;  // * x^k
  UniPoly monic() const;
  UniPoly derivative() const;
  Fp evaluate(Fp x) const;

  friend bool operator==(const UniPoly& a, const UniPoly& b);
  friend bool operator!=(const UniPoly& a, const UniPoly& b) {
    return !(a == b);
  }

 private:
  void normalize();

  std::uint64_t p_;
  std::vector<Fp> c_;
};

/// Monic gcd; gcd(a, 0) = monic(a).
UniPoly gcd_uni(const UniPoly& a, const UniPoly& b);

/// True iff gcd(a, a') = 1. A vanishing derivative with deg(a) >= 1 (a
/// p-th power in character p) reports false; nonzero constants are
/// squarefree.
bool is_squarefree(const UniPoly& a);

/// "c*t^k" terms joined by " + ", degree-descending, zero terms omitted.
std::string to_text(const UniPoly& a, const std::string& var = "t");
UniPoly unipoly_from_text(const std::string& text, std::uint64_t p,
                          const std::string& var = "t");

/// Polynomial in x whose coefficients live in F_p[z1,z2,z3]; carrier for
/// the Rosenhain quintic and its powers.
class CoeffPoly {
 public:
  explicit CoeffPoly(std::uint64_t p) : p_(p) {}

  static CoeffPoly one(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Coefficient of x^k (zero polynomial if k out of range).
  TriPoly coeff(int k) const;
  void set_coeff(int k, TriPoly v);

  friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
  CoeffPoly power(unsigned e) const;  // binary exponentiation

 private:
  void normalize();

  std::uint64_t p_;
  std::vector<TriPoly> c_;
};

}  // namespace ssplab

#endif
