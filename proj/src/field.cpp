#include "ssplab/field.hpp"

#include <cassert>
#include <map>
#include <memory>
#include <mutex>

namespace ssplab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t(1) << 32))
    throw std::invalid_argument("modulus too large: " + std::to_string(p));
  if (p == 2 || !is_prime(p))
    throw std::invalid_argument("modulus must be an odd prime, got " +
                                std::to_string(p));
}

Fp Fp::from_int(std::int64_t value, std::uint64_t p) {
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  return Fp(static_cast<std::uint64_t>(r), p);
}

Fp operator+(Fp a, Fp b) {
  assert(a.p_ == b.p_);
  std::uint64_t s = a.v_ + b.v_;
  if (s >= a.p_) s -= a.p_;
  return Fp(s, a.p_);
}

Fp operator-(Fp a, Fp b) {
  assert(a.p_ == b.p_);
  std::uint64_t s = a.v_ + a.p_ - b.v_;
  if (s >= a.p_) s -= a.p_;
  return Fp(s, a.p_);
}

Fp operator*(Fp a, Fp b) {
  assert(a.p_ == b.p_);
  return Fp((a.v_ * b.v_) % a.p_, a.p_);  // p < 2^32, no overflow
}

Fp Fp::operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }

Fp Fp::inverse() const {
  if (v_ == 0) throw ZeroInverse();
  // extended Euclid on (v, p)
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p_);
  std::int64_t nr = static_cast<std::int64_t>(v_);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  assert(r == 1);
  return Fp::from_int(t, p_);
}

Fp Fp::pow(std::uint64_t e) const {
  Fp result(1, p_);
  Fp base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

// ---------------------------------------------------------------------
// Dense univariate arithmetic over F_p, local to the irreducibility
// search. Coefficient vectors are low-to-high with no trailing zeros.
// ---------------------------------------------------------------------
namespace {

using Dense = std::vector<std::uint64_t>;

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Dense poly_rem(Dense a, const Dense& m, std::uint64_t p) {
  // m monic
  trim(a);
  while (a.size() >= m.size()) {
    std::uint64_t c = a.back();
    std::size_t shift = a.size() - m.size();
    if (c != 0) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        std::uint64_t sub = (c * m[i]) % p;
        std::uint64_t& t = a[shift + i];
        t = (t + p - sub) % p;
      }
    }
    a.pop_back();
    trim(a);
    if (a.size() < m.size()) break;
  }
  trim(a);
  return a;
}

Dense poly_mulmod(const Dense& a, const Dense& b, const Dense& m,
                  std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Dense c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  trim(c);
  return poly_rem(std::move(c), m, p);
}

Dense poly_powmod(Dense base, BigInt e, const Dense& m, std::uint64_t p) {
  Dense result{1};
  base = poly_rem(std::move(base), m, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) result = poly_mulmod(result, base, m, p);
    if (i + 1 < bits) base = poly_mulmod(base, base, m, p);
  }
  return result;
}

Dense poly_gcd(Dense a, Dense b, std::uint64_t p) {
  while (!b.empty()) {
    Dense mon = b;
    std::uint64_t inv_lead = Fp(mon.back(), p).inverse().value();
    for (auto& c : mon) c = (c * inv_lead) % p;
    a = poly_rem(std::move(a), mon, p);
    std::swap(a, b);
  }
  return a;
}

// Rabin test: monic f of degree k is irreducible iff t^(p^k) = t mod f
// and gcd(t^(p^(k/l)) - t, f) = 1 for each prime l | k.
bool is_irreducible(const Dense& f, std::uint64_t p) {
  unsigned k = static_cast<unsigned>(f.size() - 1);
  if (k == 1) return true;
  Dense t{0, 1};
  BigInt pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
  Dense tq = poly_powmod(t, pk, f, p);
  Dense diff = tq;
  // tq - t
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = (diff[1] + p - 1) % p;
  trim(diff);
  if (!diff.empty()) return false;
  for (unsigned l = 2; l <= k; ++l) {
    if (k % l != 0 || !is_prime(l)) continue;
    BigInt pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, k / l);
    Dense ti = poly_powmod(t, pe, f, p);
    Dense d = ti;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = (d[1] + p - 1) % p;
    trim(d);
    Dense g = poly_gcd(f, d, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

ExtField::ExtField(std::uint64_t p, unsigned k, std::vector<std::uint64_t> mod)
    : p_(p), k_(k), mod_(std::move(mod)) {
  // precompute t^(k+r) mod m for r = 0..k-2
  Dense cur(mod_.begin(), mod_.end() - 1);  // t^k = -(c0..c_{k-1})
  for (auto& c : cur) c = (p_ - c) % p_;
  cur.resize(k_, 0);
  for (unsigned r = 0; r + 1 < k_; ++r) {
    for (unsigned i = 0; i < k_; ++i) red_[r][i] = cur[i];
    // multiply by t
    std::uint64_t top = cur[k_ - 1];
    for (unsigned i = k_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (unsigned i = 0; i < k_; ++i)
        cur[i] = (cur[i] + top * ((p_ - mod_[i]) % p_)) % p_;
  }
}

BigInt ExtField::order() const {
  BigInt q;
  mpz_ui_pow_ui(q.get_mpz_t(), p_, k_);
  return q;
}

const ExtField& build_extension(PrimeModulus pm, unsigned k) {
  if (k < 1 || k > ExtField::kMaxDegree)
    throw std::invalid_argument("extension degree out of range: " +
                                std::to_string(k));
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, unsigned>,
                  std::unique_ptr<const ExtField>>
      registry;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(pm.value(), k);
  auto it = registry.find(key);
  if (it != registry.end()) return *it->second;

  const std::uint64_t p = pm.value();
  // Enumerate monic degree-k candidates so that index m has coefficient
  // of t^i equal to the i-th base-p digit of m; ascending m is the lex
  // order on (c_{k-1}, ..., c_0).
  BigInt total;
  mpz_ui_pow_ui(total.get_mpz_t(), p, k);
  Dense found;
  for (BigInt m = 0; m < total; ++m) {
    Dense f(k + 1, 0);
    f[k] = 1;
    BigInt rest = m;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = mpz_fdiv_ui(rest.get_mpz_t(), p);
      rest /= static_cast<unsigned long>(p);
    }
    if (is_irreducible(f, p)) {
      found = f;
      break;
    }
  }
  assert(!found.empty());
  auto field = std::unique_ptr<const ExtField>(new ExtField(p, k, found));
  const ExtField& ref = *field;
  registry.emplace(key, std::move(field));
  return ref;
}

Fq Fq::zero(const ExtField& f) { return Fq(f); }

Fq Fq::one(const ExtField& f) {
  Fq r(f);
  r.c_[0] = 1;
  return r;
}

Fq Fq::from_fp(Fp a, const ExtField& f) {
  assert(a.modulus() == f.p());
  Fq r(f);
  r.c_[0] = a.value();
  return r;
}

Fq Fq::from_index(const ExtField& f, std::uint64_t index) {
  Fq r(f);
  for (unsigned i = 0; i < f.degree(); ++i) {
    r.c_[i] = index % f.p();
    index /= f.p();
  }
  assert(index == 0);
  return r;
}

std::uint64_t Fq::index() const {
  std::uint64_t idx = 0;
  for (unsigned i = f_->degree(); i-- > 0;) idx = idx * f_->p() + c_[i];
  return idx;
}

bool Fq::is_zero() const {
  for (unsigned i = 0; i < f_->degree(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Fq operator+(const Fq& a, const Fq& b) {
  assert(a.f_ == b.f_);
  Fq r(*a.f_);
  const std::uint64_t p = a.f_->p();
  for (unsigned i = 0; i < a.f_->degree(); ++i) {
    std::uint64_t s = a.c_[i] + b.c_[i];
    r.c_[i] = s >= p ? s - p : s;
  }
  return r;
}

Fq operator-(const Fq& a, const Fq& b) {
  assert(a.f_ == b.f_);
  Fq r(*a.f_);
  const std::uint64_t p = a.f_->p();
  for (unsigned i = 0; i < a.f_->degree(); ++i) {
    std::uint64_t s = a.c_[i] + p - b.c_[i];
    r.c_[i] = s >= p ? s - p : s;
  }
  return r;
}

Fq operator*(const Fq& a, const Fq& b) {
  assert(a.f_ == b.f_);
  const ExtField& f = *a.f_;
  const unsigned k = f.degree();
  const std::uint64_t p = f.p();
  std::array<unsigned __int128, 2 * ExtField::kMaxDegree> acc{};
  for (unsigned i = 0; i < k; ++i) {
    if (a.c_[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j) acc[i + j] += a.c_[i] * b.c_[j];
  }
  Fq r(f);
  for (unsigned i = 0; i < k; ++i)
    r.c_[i] = static_cast<std::uint64_t>(acc[i] % p);
  for (unsigned m = k; m <= 2 * k - 2 && k > 1; ++m) {
    std::uint64_t hi = static_cast<std::uint64_t>(acc[m] % p);
    if (hi == 0) continue;
    const auto& row = f.reduction_row(m - k);
    for (unsigned i = 0; i < k; ++i)
      r.c_[i] = (r.c_[i] + hi * row[i]) % p;
  }
  return r;
}

Fq Fq::operator-() const {
  Fq r(*f_);
  for (unsigned i = 0; i < f_->degree(); ++i)
    r.c_[i] = c_[i] == 0 ? 0 : f_->p() - c_[i];
  return r;
}

Fq Fq::scaled(std::uint64_t s) const {
  Fq r(*f_);
  for (unsigned i = 0; i < f_->degree(); ++i) r.c_[i] = (c_[i] * s) % f_->p();
  return r;
}

Fq Fq::pow(const BigInt& e) const {
  assert(e >= 0);
  Fq result = Fq::one(*f_);
  Fq base = *this;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) result *= base;
    if (i + 1 < bits) base *= base;
  }
  return result;
}

Fq Fq::inverse() const {
  if (is_zero()) throw ZeroInverse();
  return pow(f_->order() - 2);
}

Fq Fq::frobenius() const { return pow(BigInt(static_cast<unsigned long>(f_->p()))); }

std::string Fq::to_string() const {
  std::string s;
  for (unsigned i = 0; i < f_->degree(); ++i) {
    if (i > 0) s += "+";
    s += std::to_string(c_[i]);
    if (i == 1) s += "*t";
    if (i > 1) s += "*t^" + std::to_string(i);
  }
  return s;
}

bool operator==(const Fq& a, const Fq& b) {
  if (a.f_ != b.f_) return false;
  for (unsigned i = 0; i < a.f_->degree(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

Fp reduce_rational_mod_p(const BigRational& r, PrimeModulus pm) {
  const std::uint64_t p = pm.value();
  std::uint64_t den = mpz_fdiv_ui(r.get_den().get_mpz_t(), p);
  if (den == 0)
    throw DenominatorDivisibleByP("denominator of " + r.get_str() +
                                  " is divisible by " + std::to_string(p));
  std::uint64_t num = mpz_fdiv_ui(r.get_num().get_mpz_t(), p);
  return Fp(num, p) * Fp(den, p).inverse();
}

}  // namespace ssplab
