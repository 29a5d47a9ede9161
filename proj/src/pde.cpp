#include "ssplab/pde.hpp"

#include <cassert>
#include <stdexcept>

#include "ssplab/cartier.hpp"

namespace ssplab {

OperatorParams OperatorParams::for_j(PrimeModulus pm, int j) {
  if (j != 1 && j != 2) throw std::invalid_argument("j must be 1 or 2");
  const std::uint64_t p = pm.value();
  const Fp half = Fp(2, p).inverse();
  OperatorParams params;
  params.a = Fp(5, p) * half - Fp(static_cast<std::uint64_t>(j), p);
  params.b1 = params.b2 = params.b3 = half;
  params.c = Fp::from_int(3 - j, p);
  params.j = j;
  return params;
}

Fp OperatorParams::b(int l) const {
  assert(1 <= l && l <= 3);
  return l == 1 ? b1 : (l == 2 ? b2 : b3);
}

GaussParams GaussParams::legendre(PrimeModulus pm) {
  const std::uint64_t p = pm.value();
  const Fp half = Fp(2, p).inverse();
  return {half, half, Fp(1, p)};
}

namespace {

Mono var_mono(int l) {
  Mono m;
  m.e[l - 1] = 1;
  return m;
}

}  // namespace

TriPoly apply_D(int l, const OperatorParams& params, const TriPoly& w) {
  assert(1 <= l && l <= 3);
  const std::uint64_t p = w.modulus();
  const Fp one(1, p);
  const Fp bl = params.b(l);

  const TriPoly wl = partial_derivative(w, l);
  const TriPoly wll = partial_derivative(wl, l);

  // z_l (1 - z_l) d^2/dz_l^2
  TriPoly out = wll.times_term(var_mono(l), one) -
                wll.times_term(mono_mul(var_mono(l), var_mono(l)), one);
  for (int k = 1; k <= 3; ++k) {
    if (k == l) continue;
    // z_k (1 - z_l) d^2/dz_l dz_k
    const TriPoly wlk = partial_derivative(wl, k);
    out += wlk.times_term(var_mono(k), one);
    out -= wlk.times_term(mono_mul(var_mono(k), var_mono(l)), one);
    // -b_l z_k d/dz_k
    out -= partial_derivative(w, k).times_term(var_mono(k), bl);
  }
  // (c - (a + b_l + 1) z_l) d/dz_l
  out += wl.scaled(params.c);
  out -= wl.times_term(var_mono(l), params.a + bl + one);
  // -a b_l
  out -= w.scaled(params.a * bl);
  return out;
}

TriPoly apply_E(int l, int m, const OperatorParams& params, const TriPoly& w) {
  if (!(1 <= l && l < m && m <= 3))
    throw std::invalid_argument("need 1 <= l < m <= 3");
  const std::uint64_t p = w.modulus();
  const Fp one(1, p);
  const TriPoly wlm = partial_derivative(partial_derivative(w, l), m);
  TriPoly out = wlm.times_term(var_mono(l), one) -
                wlm.times_term(var_mono(m), one);
  out -= partial_derivative(w, l).scaled(params.b(m));
  out += partial_derivative(w, m).scaled(params.b(l));
  return out;
}

UniPoly apply_gauss_operator(const GaussParams& params, const UniPoly& w) {
  const UniPoly w1 = w.derivative();
  const UniPoly w2 = w1.derivative();
  const Fp one(1, w.modulus());
  UniPoly out = w2.shifted(1) - w2.shifted(2);     // z(1-z) w''
  out = out + w1.scaled(params.c);                 // c w'
  out = out - w1.shifted(1).scaled(params.a + params.b + one);
  out = out - w.scaled(params.a * params.b);       // -ab w
  return out;
}

AnnihilationReport verify_annihilation(PrimeModulus pm) {
  const CartierManinData& cm = cm_entries(pm, 2);
  AnnihilationReport report;
  report.p = pm.value();
  report.pass = true;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      const OperatorParams params = OperatorParams::for_j(pm, j);
      const TriPoly& w = cm.entry(i, j);
      for (int l = 1; l <= 3; ++l) {
        TriPoly r = apply_D(l, params, w);
        if (!r.is_zero()) {
          report.pass = false;
          report.nonzero.push_back(
              {i, j, "D" + std::to_string(l), std::move(r)});
        }
      }
      for (int l = 1; l <= 3; ++l)
        for (int m = l + 1; m <= 3; ++m) {
          TriPoly r = apply_E(l, m, params, w);
          if (!r.is_zero()) {
            report.pass = false;
            report.nonzero.push_back(
                {i, j, "E" + std::to_string(l) + std::to_string(m),
                 std::move(r)});
          }
        }
    }
  return report;
}

TriPoly contiguity_residual(PrimeModulus pm, int i, int which) {
  if (i != 1 && i != 2) throw std::invalid_argument("i must be 1 or 2");
  if (which != 1 && which != 2)
    throw std::invalid_argument("which must be 1 or 2");
  const std::uint64_t p = pm.value();
  const Fp one(1, p);
  const Fp half = Fp(2, p).inverse();
  const CartierManinData& cm = cm_entries(pm, 2);
  const TriPoly& c1 = cm.entry(i, 1);  // c_{ip-1}
  const TriPoly& c2 = cm.entry(i, 2);  // c_{ip-2}

  TriPoly r(p);
  if (which == 1) {
    for (int k = 1; k <= 3; ++k) {
      const TriPoly d = partial_derivative(c1, k);
      r += d.times_term(mono_mul(var_mono(k), var_mono(k)), one);
      r -= d.times_term(var_mono(k), one);
    }
    // + 1/2 (z1 + z2 + z3 - 2) c_{ip-1}
    for (int k = 1; k <= 3; ++k) r += c1.times_term(var_mono(k), half);
    r -= c1;
    r += c2.scaled(half);
  } else {
    for (int k = 1; k <= 3; ++k) {
      const TriPoly d = partial_derivative(c2, k);
      r += d;
      r -= d.times_term(var_mono(k), one);
    }
    r -= (c1 + c2).scaled(half);
  }
  return r;
}

TriPoly remark_relation_residual(PrimeModulus pm, int i, int which) {
  if (i != 1 && i != 2) throw std::invalid_argument("i must be 1 or 2");
  if (which != 1 && which != 2)
    throw std::invalid_argument("which must be 1 or 2");
  const std::uint64_t p = pm.value();
  const Fp one(1, p);
  const Fp half = Fp(2, p).inverse();
  const CartierManinData& cm = cm_entries(pm, 2);
  const TriPoly& c1 = cm.entry(i, 1);
  const TriPoly& c2 = cm.entry(i, 2);

  TriPoly r(p);
  if (which == 1) {
    // -(sum (1-z_k) d_k - 1) c_{ip-2}
    for (int k = 1; k <= 3; ++k) {
      const TriPoly d = partial_derivative(c2, k);
      r -= d;
      r += d.times_term(var_mono(k), one);
    }
    r += c2;
    // - (sum z_k(1-z_k) d_k - 1/2 sum z_k + 1/2) c_{ip-1}
    for (int k = 1; k <= 3; ++k) {
      const TriPoly d = partial_derivative(c1, k);
      r -= d.times_term(var_mono(k), one);
      r += d.times_term(mono_mul(var_mono(k), var_mono(k)), one);
      r += c1.times_term(var_mono(k), half);
    }
    r -= c1.scaled(half);
  } else {
    // (sum z_k d_k + 1/2) c_{ip-2} - (sum z_k d_k + 1) c_{ip-1}
    for (int k = 1; k <= 3; ++k) {
      r += partial_derivative(c2, k).times_term(var_mono(k), one);
      r -= partial_derivative(c1, k).times_term(var_mono(k), one);
    }
    r += c2.scaled(half);
    r -= c1;
  }
  return r;
}

}  // namespace ssplab
