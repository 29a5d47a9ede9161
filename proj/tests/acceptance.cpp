// Acceptance suite: every check is exact (tolerance zero). Prints one
// PASS/FAIL line per criterion and exits nonzero if any fails.

#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "ssplab/cartier.hpp"
#include "ssplab/field.hpp"
#include "ssplab/ideal.hpp"
#include "ssplab/lauricella.hpp"
#include "ssplab/locus.hpp"
#include "ssplab/pde.hpp"
#include "ssplab/poly.hpp"

using namespace ssplab;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& label, bool pass,
            const std::string& detail = "") {
  std::printf("[%s] criterion %d: %s%s\n", pass ? "PASS" : "FAIL", criterion,
              label.c_str(), detail.empty() ? "" : (" -- " + detail).c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

const std::vector<std::uint64_t> kPrimes{3, 5, 7, 11, 13};
const std::vector<std::uint64_t> kLocusPrimes{5, 7, 11, 13};

unsigned worker_count() {
  return std::max(1u, std::thread::hardware_concurrency());
}

// ----------------------------------------------------------------------
// 1. Igusa separability: gcd(H_p, H_p') = 1 for every odd prime p < 500.
void criterion1() {
  const IgusaScanReport r = igusa_separability_scan(499);
  std::string detail;
  for (const auto& e : r.entries)
    if (!e.separable) detail += " p=" + std::to_string(e.p);
  report(1, "Igusa separability for odd p < 500", r.all_separable, detail);
}

// ----------------------------------------------------------------------
// 2. Two-path identity: hypergeometric reconstruction equals the direct
//    expansion, entrywise, p in {3,5,7,11,13}.
void criterion2() {
  bool pass = true;
  std::string detail;
  for (std::uint64_t p : kPrimes) {
    const PrimeModulus pm(p);
    const CartierManinData& cm = cm_entries(pm, 2);
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        if (cm_via_hypergeometric(pm, i, j) != cm.entry(i, j)) {
          pass = false;
          detail += " p=" + std::to_string(p) + cm_entry_name(i, j);
        }
  }
  report(2, "two-path identity for the Cartier-Manin entries", pass, detail);
}

// ----------------------------------------------------------------------
// 3. Normalization constant: closed form vs double-factorial oracle.
void criterion3() {
  bool pass = true;
  for (std::uint64_t p : kPrimes)
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        if (normalization_constant(PrimeModulus(p), i, j) !=
            normalization_constant_oracle(PrimeModulus(p), i, j))
          pass = false;
  report(3, "normalization-constant agreement (both routes)", pass);
}

// ----------------------------------------------------------------------
// 4. Theorem A: all 24 residuals vanish per prime.
void criterion4() {
  bool pass = true;
  std::string detail;
  for (std::uint64_t p : kPrimes) {
    const AnnihilationReport r = verify_annihilation(PrimeModulus(p));
    if (!r.pass) {
      pass = false;
      detail += " p=" + std::to_string(p) + " (" +
                std::to_string(r.nonzero.size()) + " nonzero)";
    }
  }
  report(4, "operator annihilation of every entry (24 residuals per prime)",
         pass, detail);
}

// ----------------------------------------------------------------------
// 5. Contiguity and first-order relations.
void criterion5() {
  bool pass = true;
  std::string detail;
  for (std::uint64_t p : kPrimes)
    for (int i = 1; i <= 2; ++i)
      for (int which = 1; which <= 2; ++which) {
        if (!contiguity_residual(PrimeModulus(p), i, which).is_zero()) {
          pass = false;
          detail += " contiguity(p=" + std::to_string(p) + ")";
        }
        if (!remark_relation_residual(PrimeModulus(p), i, which).is_zero()) {
          pass = false;
          detail += " remark(p=" + std::to_string(p) + ")";
        }
      }
  report(5, "contiguity relations (1),(2) and predicted relations (1),(2)",
         pass, detail);
}

// ----------------------------------------------------------------------
// 6.-9. locus pipeline; reports computed once per prime.
struct LocusResults {
  std::vector<LocusReport> reports;  // for 5, 7, 11, 13
  LocusReport p3;
};

LocusResults run_locus() {
  LocusResults out;
  out.p3 = verify_multiplicity_one(PrimeModulus(3), {2, 4}, worker_count());
  for (std::uint64_t p : kLocusPrimes)
    out.reports.push_back(
        verify_multiplicity_one(PrimeModulus(p), {2, 4}, worker_count()));
  return out;
}

void criterion6(const LocusResults& lr) {
  bool pass = true;
  std::string detail;
  if (!(lr.p3.quotient_dim == 0 && lr.p3.points.empty() && lr.p3.radical &&
        lr.p3.counts_match)) {
    pass = false;
    detail += " p=3 not the unit ideal";
  }
  for (const LocusReport& r : lr.reports) {
    if (!r.radical || !r.counts_match) {
      pass = false;
      detail += " p=" + std::to_string(r.p) +
                (r.radical ? "" : " not-radical") +
                (r.counts_match ? "" : " count!=dim");
    }
    detail += " N_" + std::to_string(r.p) + "=" +
              std::to_string(r.points.size());
  }
  report(6, "multiplicity one: radical ideal and N_p = dim R/I", pass, detail);
}

void criterion7(const LocusResults& lr) {
  bool pass = true;
  std::string detail;
  for (const LocusReport& r : lr.reports) {
    if (!r.ranks_all_three) {
      pass = false;
      detail += " p=" + std::to_string(r.p) + " rank!=3";
    }
    for (const JacobianAtPoint& jac : r.jacobians)
      if (column_pair_rank(jac, 0, 1) != 2 || column_pair_rank(jac, 2, 3) != 2) {
        pass = false;
        detail += " p=" + std::to_string(r.p) + " column-pair rank!=2";
      }
  }
  report(7, "Jacobian rank 3 at every point; column pairs rank 2", pass,
         detail);
}

void criterion8(const LocusResults& lr) {
  bool pass = true;
  for (const LocusReport& r : lr.reports)
    if (!r.branch_points_ok) pass = false;
  report(8, "branch points distinct and away from 0, 1 at every point", pass);
}

void criterion9() {
  bool pass = true;
  bool completed = true;
  std::string detail;
  for (std::uint64_t p : {5ull, 7ull, 11ull}) {
    const ExpectationReport r =
        check_expectation(PrimeModulus(p), {2, 4}, worker_count());
    std::size_t failing = 0;
    for (const auto& v : r.values)
      for (const Fq& x : v)
        if (!x.is_zero()) ++failing;
    detail += " p=" + std::to_string(p) + ":" +
              (r.pass ? "PASS" : "FAIL(" + std::to_string(failing) + ")");
    if (!r.pass) pass = false;
  }
  report(9, "determinant-like vanishing at every locus point",
         completed && pass, detail);
}

// ----------------------------------------------------------------------
// 10. Property suites, each >= 100 deterministic randomized cases.
struct PropertyCounter {
  int cases = 0;
  int failures = 0;
  void tally(bool ok) {
    ++cases;
    if (!ok) ++failures;
  }
};

TriPoly random_tripoly(std::mt19937_64& rng, std::uint64_t p, int max_terms = 6,
                       int max_exp = 4) {
  TriPoly f(p);
  const int n = 1 + static_cast<int>(rng() % max_terms);
  for (int t = 0; t < n; ++t) {
    Mono m{{static_cast<int>(rng() % (max_exp + 1)),
            static_cast<int>(rng() % (max_exp + 1)),
            static_cast<int>(rng() % (max_exp + 1))}};
    f.add_term(m, Fp(rng() % p, p));
  }
  return f;
}

void criterion10() {
  std::string detail;
  bool pass = true;
  auto finish = [&](const std::string& name, const PropertyCounter& c) {
    const bool ok = c.failures == 0 && c.cases >= 100;
    if (!ok) pass = false;
    detail += " " + name + "=" + std::to_string(c.cases) + "/" +
              std::to_string(c.failures) + "fail";
  };

  {  // field axioms
    PropertyCounter c;
    std::mt19937_64 rng(1001);
    const std::uint64_t p = 13;
    const ExtField& f = build_extension(PrimeModulus(7), 2);
    const std::uint64_t q = f.order().get_ui();
    for (int t = 0; t < 60; ++t) {
      const Fp a(rng() % p, p), b(rng() % p, p), x(rng() % p, p);
      bool ok = (a + b) + x == a + (b + x) && a * (b + x) == a * b + a * x;
      if (!a.is_zero()) ok = ok && a * a.inverse() == Fp(1, p);
      c.tally(ok);
    }
    for (int t = 0; t < 60; ++t) {
      const Fq a = Fq::from_index(f, rng() % q);
      const Fq b = Fq::from_index(f, rng() % q);
      const Fq x = Fq::from_index(f, rng() % q);
      bool ok = (a * b) * x == a * (b * x) && a * (b + x) == a * b + a * x;
      if (!a.is_zero()) ok = ok && a * a.inverse() == Fq::one(f);
      c.tally(ok);
    }
    finish("field-axioms", c);
  }
  {  // Leibniz rule
    PropertyCounter c;
    std::mt19937_64 rng(1002);
    for (int t = 0; t < 110; ++t) {
      const std::uint64_t p = t % 2 ? 5 : 11;
      const TriPoly a = random_tripoly(rng, p);
      const TriPoly b = random_tripoly(rng, p);
      bool ok = true;
      for (int l = 1; l <= 3; ++l)
        ok = ok && partial_derivative(a * b, l) ==
                       partial_derivative(a, l) * b +
                           a * partial_derivative(b, l);
      c.tally(ok);
    }
    finish("leibniz", c);
  }
  {  // evaluation homomorphism
    PropertyCounter c;
    std::mt19937_64 rng(1003);
    const ExtField& f = build_extension(PrimeModulus(5), 2);
    const std::uint64_t q = f.order().get_ui();
    for (int t = 0; t < 110; ++t) {
      const TriPoly a = random_tripoly(rng, 5);
      const TriPoly b = random_tripoly(rng, 5);
      const std::array<Fq, 3> pt{Fq::from_index(f, rng() % q),
                                 Fq::from_index(f, rng() % q),
                                 Fq::from_index(f, rng() % q)};
      c.tally(evaluate(a * b, pt) == evaluate(a, pt) * evaluate(b, pt));
    }
    finish("eval-hom", c);
  }
  {  // operator linearity
    PropertyCounter c;
    std::mt19937_64 rng(1004);
    for (int t = 0; t < 110; ++t) {
      const std::uint64_t p = t % 2 ? 7 : 11;
      const OperatorParams params =
          OperatorParams::for_j(PrimeModulus(p), 1 + t % 2);
      const TriPoly w1 = random_tripoly(rng, p);
      const TriPoly w2 = random_tripoly(rng, p);
      const Fp alpha(rng() % p, p);
      const int l = 1 + static_cast<int>(rng() % 3);
      bool ok = apply_D(l, params, w1.scaled(alpha) + w2) ==
                apply_D(l, params, w1).scaled(alpha) + apply_D(l, params, w2);
      ok = ok && apply_E(1, 2, params, w1.scaled(alpha) + w2) ==
                     apply_E(1, 2, params, w1).scaled(alpha) +
                         apply_E(1, 2, params, w2);
      c.tally(ok);
    }
    finish("op-linearity", c);
  }
  {  // standard-relation coefficient oracle
    PropertyCounter c;
    std::mt19937_64 rng(1005);
    for (int t = 0; t < 110; ++t) {
      const std::uint64_t p = t % 2 ? 5 : 13;
      const OperatorParams params =
          OperatorParams::for_j(PrimeModulus(p), 1 + t % 2);
      const TriPoly f = random_tripoly(rng, p);
      const TriPoly df = apply_D(1, params, f);
      const Fp one(1, p);
      bool ok = true;
      auto oracle = [&](const Mono& n) {
        const Fp total = Fp::from_int(n.total(), p);
        const Fp n1 = Fp::from_int(n.e[0], p);
        Mono up = n;
        up.e[0] += 1;
        return (one + n1) * (params.c + total) * f.coeff(up) -
               (params.b1 + n1) * (params.a + total) * f.coeff(n);
      };
      for (const auto& [m, coef] : df.terms()) ok = ok && coef == oracle(m);
      for (const auto& [m, coef] : f.terms())
        ok = ok && df.coeff(m) == oracle(m);
      c.tally(ok);
    }
    finish("standard-relation", c);
  }
  {  // S-polynomial reduction on random zero-dimensional ideals
    PropertyCounter c;
    std::mt19937_64 rng(1006);
    const MonomialOrder order{OrderKind::grevlex};
    for (int t = 0; t < 110; ++t) {
      const std::uint64_t p = t % 2 ? 3 : 5;
      std::vector<TriPoly> gens;
      for (int l = 1; l <= 3; ++l) {
        const int d = 1 + static_cast<int>(rng() % 3);
        Mono power;
        power.e[l - 1] = d;
        TriPoly g = TriPoly::monomial(p, power, Fp(1, p));
        for (int tt = 0; tt < 2; ++tt) {
          Mono m{{static_cast<int>(rng() % (d + 1)),
                  static_cast<int>(rng() % (d + 1)),
                  static_cast<int>(rng() % (d + 1))}};
          if (m.e[l - 1] >= d) m.e[l - 1] = d - 1;
          if (grevlex_less(m, power)) g.add_term(m, Fp(rng() % p, p));
        }
        gens.push_back(g);
      }
      if (rng() % 2) gens.push_back(random_tripoly(rng, p, 4, 2));
      const GroebnerBasis gb = buchberger(gens, order);
      bool ok = true;
      for (const TriPoly& g : gens)
        ok = ok && normal_form(g, gb).is_zero();
      for (std::size_t a = 0; a < gb.gens.size(); ++a)
        for (std::size_t b = a + 1; b < gb.gens.size(); ++b)
          ok = ok &&
               normal_form(s_polynomial(gb.gens[a], gb.gens[b], order), gb)
                   .is_zero();
      c.tally(ok);
    }
    finish("s-poly-reduction", c);
  }
  {  // multiplication-matrix commutativity
    PropertyCounter c;
    std::mt19937_64 rng(1007);
    const MonomialOrder order{OrderKind::grevlex};
    for (int t = 0; t < 110; ++t) {
      const std::uint64_t p = t % 2 ? 5 : 7;
      std::vector<TriPoly> gens;
      for (int l = 1; l <= 3; ++l) {
        const int d = 1 + static_cast<int>(rng() % 2);
        Mono power;
        power.e[l - 1] = d;
        TriPoly g = TriPoly::monomial(p, power, Fp(1, p));
        Mono m{{static_cast<int>(rng() % 2), static_cast<int>(rng() % 2),
                static_cast<int>(rng() % 2)}};
        if (m.e[l - 1] >= d) m.e[l - 1] = 0;
        if (grevlex_less(m, power)) g.add_term(m, Fp(rng() % p, p));
        gens.push_back(g);
      }
      const QuotientAlgebra q = quotient_algebra(buchberger(gens, order));
      const std::size_t d = q.dim;
      auto matmul = [&](const auto& a, const auto& b) {
        std::vector<std::vector<Fp>> out(d, std::vector<Fp>(d, Fp(0, p)));
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t k = 0; k < d; ++k) {
            if (a[r][k].is_zero()) continue;
            for (std::size_t s = 0; s < d; ++s) out[r][s] += a[r][k] * b[k][s];
          }
        return out;
      };
      bool ok = true;
      for (int l = 0; l < 3; ++l)
        for (int m = l + 1; m < 3; ++m)
          ok = ok && matmul(q.mult[l], q.mult[m]) == matmul(q.mult[m], q.mult[l]);
      c.tally(ok);
    }
    finish("mult-matrix-commute", c);
  }
  {  // Galois and permutation stability of the locus
    PropertyCounter c;
    for (std::uint64_t p : {5ull, 7ull, 11ull}) {
      const auto points = enumerate_points(PrimeModulus(p), 2, worker_count());
      std::set<std::array<std::uint64_t, 3>> got;
      for (const LocusPoint& pt : points)
        got.insert({pt.coords[0].index(), pt.coords[1].index(),
                    pt.coords[2].index()});
      for (const LocusPoint& pt : points) {
        c.tally(got.count({pt.coords[0].frobenius().index(),
                           pt.coords[1].frobenius().index(),
                           pt.coords[2].frobenius().index()}) == 1);
        std::array<std::uint64_t, 3> idx{pt.coords[0].index(),
                                         pt.coords[1].index(),
                                         pt.coords[2].index()};
        std::sort(idx.begin(), idx.end());
        do {
          c.tally(got.count(idx) == 1);
        } while (std::next_permutation(idx.begin(), idx.end()));
      }
    }
    finish("locus-stability", c);
  }

  report(10, "property suites (>= 100 deterministic cases each)", pass,
         detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  const LocusResults lr = run_locus();
  criterion6(lr);
  criterion7(lr);
  criterion8(lr);
  criterion9();
  criterion10();
  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
