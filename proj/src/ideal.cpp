#include "ssplab/ideal.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace ssplab {

Mono leading_mono(const TriPoly& f, const MonomialOrder& order) {
  assert(!f.is_zero());
  if (order.kind == OrderKind::grevlex) return f.terms().rbegin()->first;
  const Mono* best = nullptr;
  for (const auto& [m, c] : f.terms())
    if (best == nullptr || order.less(*best, m)) best = &m;
  return *best;
}

bool GroebnerBasis::is_unit_ideal() const {
  return gens.size() == 1 && !gens[0].is_zero() &&
         gens[0].terms().begin()->first == Mono{};
}

TriPoly normal_form(const TriPoly& f, const GroebnerBasis& basis) {
  TriPoly work = f;
  TriPoly remainder(f.modulus());
  while (!work.is_zero()) {
    const Mono lt = leading_mono(work, basis.order);
    const Fp lc = work.coeff(lt);
    bool reduced = false;
    for (const TriPoly& g : basis.gens) {
      const Mono lm = leading_mono(g, basis.order);
      if (!mono_divides(lm, lt)) continue;
      const Fp factor = lc * g.coeff(lm).inverse();
      work -= g.times_term(mono_div(lt, lm), factor);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.add_term(lt, lc);
      work.add_term(lt, -lc);
    }
  }
  return remainder;
}

TriPoly s_polynomial(const TriPoly& f, const TriPoly& g,
                     const MonomialOrder& order) {
  const Mono lf = leading_mono(f, order);
  const Mono lg = leading_mono(g, order);
  const Mono l = mono_lcm(lf, lg);
  const TriPoly fm = f.scaled(f.coeff(lf).inverse());
  const TriPoly gm = g.scaled(g.coeff(lg).inverse());
  return fm.times_term(mono_div(l, lf), Fp(1, f.modulus())) -
         gm.times_term(mono_div(l, lg), Fp(1, g.modulus()));
}

namespace {

struct PairKey {
  int lcm_deg;
  Mono lcm;
  std::size_t i, j;
};

struct PairLess {
  MonomialOrder order;
  bool operator()(const PairKey& a, const PairKey& b) const {
    if (a.lcm_deg != b.lcm_deg) return a.lcm_deg < b.lcm_deg;
    if (!(a.lcm == b.lcm)) return order.less(a.lcm, b.lcm);
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

GroebnerBasis buchberger(const std::vector<TriPoly>& generators,
                         MonomialOrder order) {
  if (generators.empty())
    throw std::invalid_argument("buchberger: no generators");
  const std::uint64_t p = generators[0].modulus();

  GroebnerBasis basis{p, order, {}};
  auto unit_basis = [&] {
    GroebnerBasis unit{p, order, {TriPoly::constant(Fp(1, p))}};
    return unit;
  };

  std::set<PairKey, PairLess> pending(PairLess{order});
  auto pair_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    const Mono l = mono_lcm(leading_mono(basis.gens[a], order),
                            leading_mono(basis.gens[b], order));
    return pending.count(PairKey{l.total(), l, a, b}) != 0;
  };
  auto add_poly = [&](const TriPoly& f) {
    const std::size_t n = basis.gens.size();
    basis.gens.push_back(f.scaled(f.coeff(leading_mono(f, order)).inverse()));
    for (std::size_t i = 0; i < n; ++i) {
      const Mono l = mono_lcm(leading_mono(basis.gens[i], order),
                              leading_mono(basis.gens[n], order));
      pending.insert(PairKey{l.total(), l, i, n});
    }
  };

  for (const TriPoly& g : generators) {
    if (g.is_zero()) continue;
    if (leading_mono(g, order) == Mono{}) return unit_basis();
    add_poly(g);
  }
  if (basis.gens.empty())
    throw std::invalid_argument("buchberger: all generators are zero");

  while (!pending.empty()) {
    const PairKey pk = *pending.begin();
    pending.erase(pending.begin());
    const Mono li = leading_mono(basis.gens[pk.i], order);
    const Mono lj = leading_mono(basis.gens[pk.j], order);
    // product criterion: coprime leading monomials
    if (mono_mul(li, lj) == pk.lcm) continue;
    // chain criterion: some other leading monomial divides the lcm and
    // both shoulder pairs are already handled
    bool skip = false;
    for (std::size_t k = 0; k < basis.gens.size() && !skip; ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (mono_divides(leading_mono(basis.gens[k], order), pk.lcm) &&
          !pair_pending(pk.i, k) && !pair_pending(pk.j, k))
        skip = true;
    }
    if (skip) continue;

    const TriPoly s = s_polynomial(basis.gens[pk.i], basis.gens[pk.j], order);
    const TriPoly r = normal_form(s, basis);
    if (r.is_zero()) continue;
    if (leading_mono(r, order) == Mono{}) return unit_basis();
    add_poly(r);
  }

  // minimalize: drop generators whose leading monomial is divisible by
  // another surviving one
  std::vector<TriPoly> minimal;
  for (std::size_t i = 0; i < basis.gens.size(); ++i) {
    const Mono li = leading_mono(basis.gens[i], order);
    bool redundant = false;
    for (std::size_t k = 0; k < basis.gens.size() && !redundant; ++k) {
      if (k == i) continue;
      const Mono lk = leading_mono(basis.gens[k], order);
      if (lk == li ? k < i : mono_divides(lk, li)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis.gens[i]);
  }

  // autoreduce tails
  GroebnerBasis reduced{p, order, {}};
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    GroebnerBasis others{p, order, {}};
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.gens.push_back(minimal[k]);
    reduced.gens.push_back(normal_form(minimal[i], others));
  }
  std::sort(reduced.gens.begin(), reduced.gens.end(),
            [&](const TriPoly& a, const TriPoly& b) {
              return order.less(leading_mono(a, order), leading_mono(b, order));
            });
  return reduced;
}

QuotientAlgebra quotient_algebra(const GroebnerBasis& basis) {
  QuotientAlgebra q;
  q.p = basis.p;
  q.order = basis.order;
  if (basis.is_unit_ideal()) {
    q.dim = 0;
    return q;
  }

  std::vector<Mono> lms;
  for (const TriPoly& g : basis.gens) lms.push_back(leading_mono(g, basis.order));

  // zero-dimensionality: a pure power of every variable must lead
  std::array<int, 3> bound{-1, -1, -1};
  for (const Mono& lm : lms)
    for (int v = 0; v < 3; ++v) {
      const int o1 = lm.e[(v + 1) % 3], o2 = lm.e[(v + 2) % 3];
      if (o1 == 0 && o2 == 0 && (bound[v] < 0 || lm.e[v] < bound[v]))
        bound[v] = lm.e[v];
    }
  for (int v = 0; v < 3; ++v)
    if (bound[v] < 0)
      throw NotZeroDimensional("no pure power of z" + std::to_string(v + 1) +
                               " among leading monomials");

  for (int a = 0; a < bound[0]; ++a)
    for (int b = 0; b < bound[1]; ++b)
      for (int c = 0; c < bound[2]; ++c) {
        const Mono m{{a, b, c}};
        bool standard = true;
        for (const Mono& lm : lms)
          if (mono_divides(lm, m)) {
            standard = false;
            break;
          }
        if (standard) q.staircase.push_back(m);
      }
  std::sort(q.staircase.begin(), q.staircase.end(),
            [&](const Mono& a, const Mono& b) { return basis.order.less(a, b); });
  q.dim = q.staircase.size();

  std::map<Mono, std::size_t, GrevlexLess> index;
  for (std::size_t s = 0; s < q.dim; ++s) index.emplace(q.staircase[s], s);

  for (int l = 0; l < 3; ++l) {
    auto& m = q.mult[l];
    m.assign(q.dim, std::vector<Fp>(q.dim, Fp(0, q.p)));
    for (std::size_t col = 0; col < q.dim; ++col) {
      Mono shifted = q.staircase[col];
      shifted.e[l] += 1;
      const TriPoly nf = normal_form(
          TriPoly::monomial(q.p, shifted, Fp(1, q.p)), basis);
      for (const auto& [mono, coef] : nf.terms()) {
        auto it = index.find(mono);
        assert(it != index.end());
        m[it->second][col] = coef;
      }
    }
  }
  return q;
}

UniPoly elimination_min_poly(const QuotientAlgebra& q, int l) {
  assert(1 <= l && l <= 3);
  const std::uint64_t p = q.p;
  if (q.dim == 0) return UniPoly::one(p);
  const auto& M = q.mult[l - 1];
  const std::size_t D = q.dim;

  // locate the class of the monomial 1
  std::size_t one_idx = D;
  for (std::size_t s = 0; s < D; ++s)
    if (q.staircase[s] == Mono{}) one_idx = s;
  assert(one_idx < D);

  // echelon rows over the Krylov vectors v_t = M^t e_one, each row
  // remembering its expression in the powers
  struct Row {
    std::vector<Fp> vec;
    std::vector<Fp> comb;
    std::size_t pivot;
  };
  std::vector<Row> rows;

  std::vector<Fp> v(D, Fp(0, p));
  v[one_idx] = Fp(1, p);
  for (std::size_t t = 0; t <= D; ++t) {
    std::vector<Fp> r = v;
    std::vector<Fp> comb(t + 1, Fp(0, p));
    comb[t] = Fp(1, p);
    for (const Row& row : rows) {
      const Fp f = r[row.pivot];
      if (f.is_zero()) continue;
      for (std::size_t s = 0; s < D; ++s) r[s] -= f * row.vec[s];
      for (std::size_t s = 0; s < row.comb.size(); ++s)
        comb[s] -= f * row.comb[s];
    }
    std::size_t pivot = D;
    for (std::size_t s = 0; s < D; ++s)
      if (!r[s].is_zero()) {
        pivot = s;
        break;
      }
    if (pivot == D) {
      // sum comb[s] v_s = 0 with comb[t] = 1: comb is the minimal monic
      std::vector<std::uint64_t> coeffs(t + 1, 0);
      for (std::size_t s = 0; s < t; ++s) coeffs[s] = comb[s].value();
      coeffs[t] = 1;
      return UniPoly(p, std::move(coeffs));
    }
    const Fp inv = r[pivot].inverse();
    for (auto& x : r) x *= inv;
    for (auto& x : comb) x *= inv;
    rows.push_back(Row{std::move(r), std::move(comb), pivot});

    // v <- M v
    std::vector<Fp> next(D, Fp(0, p));
    for (std::size_t row = 0; row < D; ++row) {
      Fp acc(0, p);
      for (std::size_t colv = 0; colv < D; ++colv)
        acc += M[row][colv] * v[colv];
      next[row] = acc;
    }
    v = std::move(next);
  }
  // D+1 vectors in a D-dimensional space cannot be independent
  assert(false);
  return UniPoly(p);
}

bool is_radical_zero_dim(const QuotientAlgebra& q) {
  for (int l = 1; l <= 3; ++l)
    if (!is_squarefree(elimination_min_poly(q, l))) return false;
  return true;
}

}  // namespace ssplab
