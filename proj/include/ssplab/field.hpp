#ifndef SSPLAB_FIELD_HPP
#define SSPLAB_FIELD_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ssplab {

using BigInt = mpz_class;
// Exact rational; gmp keeps it canonical (lowest terms, denominator > 0).
using BigRational = mpq_class;

struct ZeroInverse : std::domain_error {
  ZeroInverse() : std::domain_error("zero has no multiplicative inverse") {}
};

// Reduction of a rational whose denominator is divisible by p. If this
// fires while assembling a truncated series, the support set is wrong.
struct DenominatorDivisibleByP : std::domain_error {
  explicit DenominatorDivisibleByP(const std::string& msg)
      : std::domain_error(msg) {}
};

struct NotZeroDimensional : std::runtime_error {
  explicit NotZeroDimensional(const std::string& msg)
      : std::runtime_error(msg) {}
};

bool is_prime(std::uint64_t n);

/// Odd prime modulus, p < 2^32 so residue products fit in 64 bits.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t p);
  std::uint64_t value() const { return p_; }
  friend bool operator==(PrimeModulus a, PrimeModulus b) {
    return a.p_ == b.p_;
  }

 private:
  std::uint64_t p_;
};

/// Element of F_p. Every element carries its modulus; operations on
/// mismatched moduli are programming errors (checked in debug builds).
class Fp {
 public:
  Fp() = default;  // modulus 0 sentinel; must be assigned before use
  Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}
  Fp(std::uint64_t value, PrimeModulus p) : Fp(value, p.value()) {}

  static Fp from_int(std::int64_t value, std::uint64_t p);

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(Fp a, Fp b);
  friend Fp operator-(Fp a, Fp b);
  friend Fp operator*(Fp a, Fp b);
  Fp operator-() const;
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }

  Fp inverse() const;  // throws ZeroInverse on 0
  Fp pow(std::uint64_t e) const;

  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend bool operator!=(Fp a, Fp b) { return !(a == b); }

 private:
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

/// F_{p^k} presented as F_p[t]/(m(t)) where m is the deterministically
/// chosen modulus: the lexicographically smallest monic irreducible of
/// degree k, coefficient vectors compared from the degree-(k-1)
/// coefficient down to the constant term. k = 1 degenerates to F_p
/// (modulus t).
class ExtField {
 public:
  static constexpr unsigned kMaxDegree = 8;

  std::uint64_t p() const { return p_; }
  unsigned degree() const { return k_; }
  /// Modulus coefficients c0..ck, low to high, ck = 1.
  const std::vector<std::uint64_t>& modulus_poly() const { return mod_; }
  BigInt order() const;  // p^k

  /// Coefficients of t^(k+r) reduced mod the modulus, r in [0, k-2].
  const std::array<std::uint64_t, 8>& reduction_row(unsigned r) const {
    return red_[r];
  }

 private:
  friend const ExtField& build_extension(PrimeModulus p, unsigned k);
  friend class Fq;
  ExtField(std::uint64_t p, unsigned k, std::vector<std::uint64_t> mod);

  std::uint64_t p_;
  unsigned k_;
  std::vector<std::uint64_t> mod_;
  // red_[r] = coefficients of t^(k+r) reduced mod m, r = 0..k-2.
  std::array<std::array<std::uint64_t, kMaxDegree>, kMaxDegree> red_{};
};

/// Returns the interned field with the deterministic modulus; thread-safe,
/// the reference stays valid for the lifetime of the process.
const ExtField& build_extension(PrimeModulus p, unsigned k);

/// Element of F_{p^k}: residue polynomial of degree < k in t.
class Fq {
 public:
  Fq() = default;  // detached sentinel

  static Fq zero(const ExtField& f);
  static Fq one(const ExtField& f);
  static Fq from_fp(Fp a, const ExtField& f);
  /// Canonical encoding: index = sum c_i p^i over residue coefficients.
  static Fq from_index(const ExtField& f, std::uint64_t index);
  std::uint64_t index() const;

  const ExtField& field() const { return *f_; }
  std::uint64_t coeff(unsigned i) const { return c_[i]; }
  bool is_zero() const;

  friend Fq operator+(const Fq& a, const Fq& b);
  friend Fq operator-(const Fq& a, const Fq& b);
  friend Fq operator*(const Fq& a, const Fq& b);
  Fq operator-() const;
  Fq& operator+=(const Fq& o) { return *this = *this + o; }
  Fq& operator-=(const Fq& o) { return *this = *this - o; }
  Fq& operator*=(const Fq& o) { return *this = *this * o; }

  /// Multiply by a prime-field scalar (residue in [0,p)).
  Fq scaled(std::uint64_t s) const;

  Fq inverse() const;  // a^(q-2); throws ZeroInverse on 0
  Fq pow(const BigInt& e) const;
  Fq frobenius() const;  // a^p

  /// "c0+c1*t+c2*t^2+..." with all k coefficients printed (comma-free).
  std::string to_string() const;

  friend bool operator==(const Fq& a, const Fq& b);
  friend bool operator!=(const Fq& a, const Fq& b) { return !(a == b); }

 private:
  explicit Fq(const ExtField& f) : f_(&f) { c_.fill(0); }

  std::array<std::uint64_t, ExtField::kMaxDegree> c_{};
  const ExtField* f_ = nullptr;
};

inline Fp inverse(Fp a) { return a.inverse(); }
inline Fq inverse(const Fq& a) { return a.inverse(); }
inline Fq frobenius(const Fq& a) { return a.frobenius(); }

/// num * den^-1 mod p; throws DenominatorDivisibleByP when p | den.
Fp reduce_rational_mod_p(const BigRational& r, PrimeModulus p);

}  // namespace ssplab

#endif
