#include <doctest.h>

#include <random>

#include "ssplab/poly.hpp"

using namespace ssplab;

namespace {

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

}  // namespace

TEST_CASE("grevlex order") {
  const Mono one{{0, 0, 0}}, z1{{1, 0, 0}}, z2{{0, 1, 0}}, z3{{0, 0, 1}};
  const Mono z1z3{{1, 0, 1}}, z2sq{{0, 2, 0}};
  CHECK(grevlex_less(one, z3));
  CHECK(grevlex_less(z3, z2));
  CHECK(grevlex_less(z2, z1));
  CHECK(grevlex_less(z1z3, z2sq));  // same degree, z2^2 wins over z1 z3
  CHECK_FALSE(grevlex_less(z1, z1));
}

TEST_CASE("tripoly multiply") {
  const std::uint64_t p = 5;
  TriPoly a(p), b(p);
  a.add_term(Mono{{1, 0, 0}}, Fp(1, p));
  a.add_term(Mono{{0, 1, 0}}, Fp(1, p));
  b.add_term(Mono{{1, 0, 0}}, Fp(1, p));
  b.add_term(Mono{{0, 1, 0}}, Fp(4, p));  // z1 - z2
  TriPoly expected(p);
  expected.add_term(Mono{{2, 0, 0}}, Fp(1, p));
  expected.add_term(Mono{{0, 2, 0}}, Fp(4, p));
  CHECK(a * b == expected);

  CHECK((a * TriPoly(p)).is_zero());
  CHECK(a * TriPoly::constant(Fp(1, p)) == a);
}

TEST_CASE("partial derivative") {
  const std::uint64_t p = 7;
  CHECK(partial_derivative(TriPoly::constant(Fp(3, p)), 1).is_zero());
  // d/dz1 z1^p = p z1^(p-1) = 0
  CHECK(partial_derivative(
            TriPoly::monomial(p, Mono{{7, 0, 0}}, Fp(1, p)), 1)
            .is_zero());
  TriPoly f = TriPoly::monomial(p, Mono{{1, 2, 0}}, Fp(1, p));  // z1 z2^2
  CHECK(partial_derivative(f, 2) ==
        TriPoly::monomial(p, Mono{{1, 1, 0}}, Fp(2, p)));
}

TEST_CASE("leibniz rule on random products") {
  std::mt19937_64 rng(424242);
  int cases = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::uint64_t p = trial % 2 ? 5 : 11;
    const TriPoly f = random_tripoly(rng, p);
    const TriPoly g = random_tripoly(rng, p);
    for (int l = 1; l <= 3; ++l)
      CHECK(partial_derivative(f * g, l) ==
            partial_derivative(f, l) * g + f * partial_derivative(g, l));
    ++cases;
  }
  CHECK(cases >= 100);
}

TEST_CASE("evaluation examples") {
  const std::uint64_t p = 3;
  const ExtField& f = build_extension(PrimeModulus(p), 1);
  const auto at = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return std::array<Fq, 3>{Fq::from_index(f, a), Fq::from_index(f, b),
                             Fq::from_index(f, c)};
  };
  CHECK(evaluate(TriPoly(p), at(1, 2, 0)).is_zero());
  const TriPoly z1z2z3 = TriPoly::monomial(p, Mono{{1, 1, 1}}, Fp(1, p));
  CHECK(evaluate(z1z2z3, at(1, 1, 1)) == Fq::one(f));
  CHECK(evaluate(z1z2z3, at(1, 2, 2)) == Fq::one(f));  // 1*2*2 = 4 = 1 mod 3
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(777);
  const std::uint64_t p = 5;
  const ExtField& f = build_extension(PrimeModulus(p), 2);
  const std::uint64_t q = f.order().get_ui();
  int cases = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const TriPoly a = random_tripoly(rng, p);
    const TriPoly b = random_tripoly(rng, p);
    const std::array<Fq, 3> pt{Fq::from_index(f, rng() % q),
                               Fq::from_index(f, rng() % q),
                               Fq::from_index(f, rng() % q)};
    CHECK(evaluate(a * b, pt) == evaluate(a, pt) * evaluate(b, pt));
    CHECK(evaluate(a + b, pt) == evaluate(a, pt) + evaluate(b, pt));
    ++cases;
  }
  CHECK(cases >= 100);
}

TEST_CASE("permute variables") {
  const std::uint64_t p = 5;
  const TriPoly f = TriPoly::monomial(p, Mono{{2, 1, 0}}, Fp(3, p));
  CHECK(permute_variables(f, {1, 2, 3}) == f);
  // z1 -> z2 swap
  CHECK(permute_variables(TriPoly::variable(p, 1), {2, 1, 3}) ==
        TriPoly::variable(p, 2));
  // cycle z1->z2->z3->z1 sends z1^2 z2 to z2^2 z3
  CHECK(permute_variables(f, {2, 3, 1}) ==
        TriPoly::monomial(p, Mono{{0, 2, 1}}, Fp(3, p)));
}

TEST_CASE("unipoly gcd and squarefreeness") {
  const std::uint64_t p = 5;
  const UniPoly x2m1(p, {4, 0, 1});  // x^2 - 1
  const UniPoly xm1(p, {4, 1});      // x - 1
  CHECK(gcd_uni(x2m1, xm1) == xm1);
  const UniPoly a(p, {3, 2, 4});
  CHECK(gcd_uni(a, UniPoly(p)) == a.monic());

  // H_5 = 1 + 4t + t^2 is coprime with its derivative
  const UniPoly h5(p, {1, 4, 1});
  CHECK(h5.derivative() == UniPoly(p, {4, 2}));
  CHECK(gcd_uni(h5, h5.derivative()).degree() == 0);

  CHECK(is_squarefree(UniPoly(p, {1, 0, 1})));  // (x+2)(x+3), distinct roots
  const UniPoly sq = xm1 * xm1;
  CHECK_FALSE(is_squarefree(sq));
  UniPoly xp = UniPoly::term(p, Fp(1, p), 5);  // x^5 over F_5
  CHECK_FALSE(is_squarefree(xp));
  CHECK(is_squarefree(UniPoly::one(p)));
  CHECK_FALSE(is_squarefree(UniPoly(p)));
}

TEST_CASE("unipoly degree of zero marker") {
  CHECK(UniPoly(7).degree() == UniPoly::kZeroDegree);
  CHECK(TriPoly(7).total_degree() == TriPoly::kZeroDegree);
}

TEST_CASE("coeffpoly power homomorphism") {
  std::mt19937_64 rng(1357);
  const std::uint64_t p = 5;
  for (int trial = 0; trial < 20; ++trial) {
    CoeffPoly a(p);
    for (int k = 0; k <= 2; ++k) a.set_coeff(k, random_tripoly(rng, p, 3, 2));
    const unsigned e1 = rng() % 3, e2 = rng() % 3;
    const CoeffPoly lhs = a.power(e1) * a.power(e2);
    const CoeffPoly rhs = a.power(e1 + e2);
    CHECK(lhs.degree() == rhs.degree());
    for (int k = 0; k <= lhs.degree(); ++k) CHECK(lhs.coeff(k) == rhs.coeff(k));
  }
}

TEST_CASE("tripoly text round trip") {
  const std::uint64_t p = 7;
  CHECK(to_text(TriPoly(p)) == "0");
  CHECK(tripoly_from_text("0", p).is_zero());

  TriPoly f(p);
  f.add_term(Mono{{2, 0, 1}}, Fp(3, p));
  f.add_term(Mono{{0, 0, 0}}, Fp(1, p));
  const std::string text = to_text(f);
  CHECK(text == "3*z1^2*z2^0*z3^1 + 1*z1^0*z2^0*z3^0");
  CHECK(tripoly_from_text(text, p) == f);

  std::mt19937_64 rng(9001);
  for (int trial = 0; trial < 100; ++trial) {
    const TriPoly g = random_tripoly(rng, p);
    CHECK(tripoly_from_text(to_text(g), p) == g);
  }
  CHECK_THROWS_AS(tripoly_from_text("junk", p), std::invalid_argument);
  CHECK_THROWS_AS(tripoly_from_text("9*z1^0*z2^0*z3^0", p),
                  std::invalid_argument);
}

TEST_CASE("unipoly text round trip") {
  const std::uint64_t p = 5;
  const UniPoly h(p, {1, 4, 1});
  CHECK(to_text(h) == "1*t^2 + 4*t^1 + 1*t^0");
  CHECK(unipoly_from_text(to_text(h), p) == h);
  CHECK(to_text(UniPoly(p)) == "0");
}
