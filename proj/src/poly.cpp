#include "ssplab/poly.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ssplab {

bool grevlex_less(const Mono& a, const Mono& b) {
  const int ta = a.total(), tb = b.total();
  if (ta != tb) return ta < tb;
  for (int i = 2; i >= 0; --i) {
    const int d = a.e[i] - b.e[i];
    if (d != 0) return d > 0;
  }
  return false;
}

bool lex_less(const Mono& a, const Mono& b) {
  for (int i = 0; i < 3; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  return false;
}

bool mono_divides(const Mono& a, const Mono& b) {
  return a.e[0] <= b.e[0] && a.e[1] <= b.e[1] && a.e[2] <= b.e[2];
}

Mono mono_mul(const Mono& a, const Mono& b) {
  return Mono{{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2]}};
}

Mono mono_div(const Mono& a, const Mono& b) {
  assert(mono_divides(b, a));
  return Mono{{a.e[0] - b.e[0], a.e[1] - b.e[1], a.e[2] - b.e[2]}};
}

Mono mono_lcm(const Mono& a, const Mono& b) {
  return Mono{{std::max(a.e[0], b.e[0]), std::max(a.e[1], b.e[1]),
               std::max(a.e[2], b.e[2])}};
}

std::string mono_to_string(const Mono& m) {
  return "z1^" + std::to_string(m.e[0]) + "*z2^" + std::to_string(m.e[1]) +
         "*z3^" + std::to_string(m.e[2]);
}

TriPoly TriPoly::constant(Fp c) {
  TriPoly r(c.modulus());
  r.add_term(Mono{}, c);
  return r;
}

TriPoly TriPoly::monomial(std::uint64_t p, const Mono& m, Fp c) {
  TriPoly r(p);
  r.add_term(m, c);
  return r;
}

TriPoly TriPoly::variable(std::uint64_t p, int l) {
  assert(1 <= l && l <= 3);
  Mono m;
  m.e[l - 1] = 1;
  return monomial(p, m, Fp(1, p));
}

Fp TriPoly::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Fp(0, p_) : it->second;
}

void TriPoly::add_term(const Mono& m, Fp c) {
  assert(c.modulus() == p_);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int TriPoly::total_degree() const {
  if (terms_.empty()) return kZeroDegree;
  // map is grevlex-sorted, so the last term has maximal total degree
  return terms_.rbegin()->first.total();
}

int TriPoly::degree_in(int l) const {
  assert(1 <= l && l <= 3);
  int d = kZeroDegree;
  for (const auto& [m, c] : terms_) d = std::max(d, m.e[l - 1]);
  return d;
}

TriPoly TriPoly::operator-() const {
  TriPoly r(p_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

TriPoly operator+(const TriPoly& a, const TriPoly& b) {
  TriPoly r = a;
  r += b;
  return r;
}

TriPoly operator-(const TriPoly& a, const TriPoly& b) {
  TriPoly r = a;
  r -= b;
  return r;
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
  assert(p_ == o.p_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& o) {
  assert(p_ == o.p_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  assert(a.p_ == b.p_);
  TriPoly r(a.p_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

TriPoly TriPoly::scaled(Fp c) const {
  TriPoly r(p_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

TriPoly TriPoly::times_term(const Mono& m, Fp c) const {
  TriPoly r(p_);
  if (c.is_zero()) return r;
  for (const auto& [mm, v] : terms_) r.terms_.emplace(mono_mul(mm, m), v * c);
  return r;
}

bool operator==(const TriPoly& a, const TriPoly& b) {
  return a.p_ == b.p_ && a.terms_ == b.terms_;
}

TriPoly partial_derivative(const TriPoly& a, int l) {
  assert(1 <= l && l <= 3);
  TriPoly r(a.modulus());
  for (const auto& [m, c] : a.terms()) {
    const int e = m.e[l - 1];
    if (e == 0) continue;
    Fp factor = Fp(static_cast<std::uint64_t>(e), a.modulus());
    Mono d = m;
    d.e[l - 1] = e - 1;
    r.add_term(d, c * factor);
  }
  return r;
}

Fq evaluate(const TriPoly& a, const std::array<Fq, 3>& point) {
  const ExtField& f = point[0].field();
  assert(f.p() == a.modulus());
  std::array<std::vector<Fq>, 3> pows;
  for (int i = 0; i < 3; ++i) {
    const int d = std::max(0, a.degree_in(i + 1));
    pows[i].reserve(d + 1);
    pows[i].push_back(Fq::one(f));
    for (int e = 1; e <= d; ++e) pows[i].push_back(pows[i].back() * point[i]);
  }
  Fq acc = Fq::zero(f);
  for (const auto& [m, c] : a.terms()) {
    Fq t = pows[0][m.e[0]] * pows[1][m.e[1]] * pows[2][m.e[2]];
    acc += t.scaled(c.value());
  }
  return acc;
}

TriPoly permute_variables(const TriPoly& a, const std::array<int, 3>& sigma) {
  TriPoly r(a.modulus());
  for (const auto& [m, c] : a.terms()) {
    Mono n;
    for (int l = 0; l < 3; ++l) n.e[sigma[l] - 1] = m.e[l];
    r.add_term(n, c);
  }
  return r;
}

std::string to_text(const TriPoly& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += std::to_string(it->second.value()) + "*" + mono_to_string(it->first);
  }
  return s;
}

namespace {

std::vector<std::string> split(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(s.substr(pos));
      break;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + sep.size();
  }
  return out;
}

std::uint64_t parse_number(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("malformed number '" + s + "'");
  return std::stoull(s);
}

int parse_exponent(const std::string& tok, const std::string& var) {
  const std::string prefix = var + "^";
  if (tok.rfind(prefix, 0) != 0)
    throw std::invalid_argument("expected '" + prefix + "...', got '" + tok +
                                "'");
  return static_cast<int>(parse_number(tok.substr(prefix.size())));
}

}  // namespace

TriPoly tripoly_from_text(const std::string& text, std::uint64_t p) {
  TriPoly r(p);
  if (text == "0") return r;
  for (const std::string& term : split(text, " + ")) {
    auto parts = split(term, "*");
    if (parts.size() != 4)
      throw std::invalid_argument("malformed term '" + term + "'");
    std::uint64_t c = parse_number(parts[0]);
    if (c == 0 || c >= p)
      throw std::invalid_argument("coefficient out of range in '" + term +
                                  "'");
    Mono m{{parse_exponent(parts[1], "z1"), parse_exponent(parts[2], "z2"),
            parse_exponent(parts[3], "z3")}};
    if (!r.coeff(m).is_zero())
      throw std::invalid_argument("duplicate monomial in '" + text + "'");
    r.add_term(m, Fp(c, p));
  }
  return r;
}

UniPoly::UniPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p) {
  c_.reserve(coeffs.size());
  for (std::uint64_t v : coeffs) c_.emplace_back(v, p);
  normalize();
}

UniPoly UniPoly::one(std::uint64_t p) { return UniPoly(p, {1}); }

UniPoly UniPoly::term(std::uint64_t p, Fp c, int k) {
  UniPoly r(p);
  if (c.is_zero()) return r;
  r.c_.assign(k + 1, Fp(0, p));
  r.c_[k] = c;
  return r;
}

void UniPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Fp UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Fp(0, p_);
  return c_[k];
}

Fp UniPoly::leading_coeff() const {
  return c_.empty() ? Fp(0, p_) : c_.back();
}

UniPoly UniPoly::operator-() const {
  UniPoly r(p_);
  r.c_.reserve(c_.size());
  for (Fp v : c_) r.c_.push_back(-v);
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  assert(a.p_ == b.p_);
  UniPoly r(a.p_);
  r.c_.assign(std::max(a.c_.size(), b.c_.size()), Fp(0, a.p_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
  r.normalize();
  return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  assert(a.p_ == b.p_);
  UniPoly r(a.p_);
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Fp(0, a.p_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.normalize();
  return r;
}

UniPoly UniPoly::scaled(Fp c) const {
  UniPoly r(p_);
  if (c.is_zero()) return r;
  r.c_.reserve(c_.size());
  for (Fp v : c_) r.c_.push_back(v * c);
  r.normalize();
  return r;
}

UniPoly UniPoly::shifted(int k) const {
  UniPoly r(p_);
  if (is_zero()) return r;
  r.c_.assign(c_.size() + k, Fp(0, p_));
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
  return r;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(c_.back().inverse());
}

UniPoly UniPoly::derivative() const {
  UniPoly r(p_);
  if (c_.size() < 2) return r;
  r.c_.reserve(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k)
    r.c_.push_back(c_[k] * Fp(k % p_, p_));
  r.normalize();
  return r;
}

Fp UniPoly::evaluate(Fp x) const {
  Fp acc(0, p_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
  return a.p_ == b.p_ && a.c_ == b.c_;
}

namespace {

// remainder of a by monic-normalized b
UniPoly uni_rem(UniPoly a, const UniPoly& b) {
  const UniPoly bm = b.monic();
  while (!a.is_zero() && a.degree() >= bm.degree()) {
    const int shift = a.degree() - bm.degree();
    a = a - bm.shifted(shift).scaled(a.leading_coeff());
  }
  return a;
}

}  // namespace

UniPoly gcd_uni(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = uni_rem(x, y);
    x = y;
    y = r;
  }
  return x.monic();
}

bool is_squarefree(const UniPoly& a) {
  if (a.is_zero()) return false;
  if (a.degree() == 0) return true;
  const UniPoly d = a.derivative();
  if (d.is_zero()) return false;
  return gcd_uni(a, d).degree() == 0;
}

std::string to_text(const UniPoly& a, const std::string& var) {
  if (a.is_zero()) return "0";
  std::string s;
  for (int k = a.degree(); k >= 0; --k) {
    const Fp c = a.coeff(k);
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += std::to_string(c.value()) + "*" + var + "^" + std::to_string(k);
  }
  return s;
}

UniPoly unipoly_from_text(const std::string& text, std::uint64_t p,
                          const std::string& var) {
  UniPoly r(p);
  if (text == "0") return r;
  for (const std::string& term : split(text, " + ")) {
    auto parts = split(term, "*");
    if (parts.size() != 2)
      throw std::invalid_argument("malformed term '" + term + "'");
    std::uint64_t c = parse_number(parts[0]);
    if (c == 0 || c >= p)
      throw std::invalid_argument("coefficient out of range in '" + term +
                                  "'");
    const int k = parse_exponent(parts[1], var);
    if (!r.coeff(k).is_zero())
      throw std::invalid_argument("duplicate power in '" + text + "'");
    r = r + UniPoly::term(p, Fp(c, p), k);
  }
  return r;
}

CoeffPoly CoeffPoly::one(std::uint64_t p) {
  CoeffPoly r(p);
  r.c_.push_back(TriPoly::constant(Fp(1, p)));
  return r;
}

void CoeffPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TriPoly CoeffPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return TriPoly(p_);
  return c_[k];
}

void CoeffPoly::set_coeff(int k, TriPoly v) {
  assert(v.modulus() == p_);
  if (k >= static_cast<int>(c_.size())) c_.resize(k + 1, TriPoly(p_));
  c_[k] = std::move(v);
  normalize();
}

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
  assert(a.p_ == b.p_);
  CoeffPoly r(a.p_);
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, TriPoly(a.p_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.normalize();
  return r;
}

CoeffPoly CoeffPoly::power(unsigned e) const {
  CoeffPoly result = CoeffPoly::one(p_);
  CoeffPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

}  // namespace ssplab
