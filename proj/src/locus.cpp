#include "ssplab/locus.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <thread>

#include "ssplab/cartier.hpp"

namespace ssplab {

namespace {

// Evaluation order: cheapest entry first for the early exit.
constexpr std::array<std::pair<int, int>, 4> kEvalOrder{
    {{2, 2}, {2, 1}, {1, 2}, {1, 1}}};

// Ideal generators in the order (c_{p-1}, c_{2p-1}, c_{p-2}, c_{2p-2}).
constexpr std::array<std::pair<int, int>, 4> kIdealOrder{
    {{1, 1}, {2, 1}, {1, 2}, {2, 2}}};

struct FlatTerm {
  int n1, n2, n3;
  std::uint64_t c;
};

std::vector<FlatTerm> flatten(const TriPoly& f) {
  std::vector<FlatTerm> out;
  out.reserve(f.size());
  for (const auto& [m, c] : f.terms())
    out.push_back({m.e[0], m.e[1], m.e[2], c.value()});
  return out;
}

}  // namespace

std::vector<LocusPoint> enumerate_points(PrimeModulus pm, unsigned k,
                                         unsigned threads) {
  const std::uint64_t p = pm.value();
  const ExtField& field = build_extension(pm, k);
  const BigInt order = field.order();
  if (!order.fits_ulong_p() || order.get_ui() > (1u << 24))
    throw std::overflow_error("extension too large to enumerate: p^" +
                              std::to_string(k));
  const std::uint64_t q = order.get_ui();
  const int emax = static_cast<int>((p - 1) / 2);

  const CartierManinData& cm = cm_entries(pm, 2);
  std::array<std::vector<FlatTerm>, 4> polys;
  for (int s = 0; s < 4; ++s)
    polys[s] = flatten(cm.entry(kEvalOrder[s].first, kEvalOrder[s].second));

  std::vector<Fq> elems(q);
  std::vector<std::vector<Fq>> pow(q);  // pow[idx][e] = elems[idx]^e
  for (std::uint64_t idx = 0; idx < q; ++idx) {
    elems[idx] = Fq::from_index(field, idx);
    pow[idx].reserve(emax + 1);
    pow[idx].push_back(Fq::one(field));
    for (int e = 1; e <= emax; ++e)
      pow[idx].push_back(pow[idx].back() * elems[idx]);
  }

  const unsigned workers =
      std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(q)));
  std::vector<std::vector<LocusPoint>> found(workers);

  auto run = [&](unsigned w) {
    const Fq zero = Fq::zero(field);
    const std::size_t grid = static_cast<std::size_t>(emax + 1);
    // partial evaluations: z1 fixed -> bivariate grid; z2 fixed -> z3 row
    std::array<std::vector<Fq>, 4> biv, uni;
    for (int s = 0; s < 4; ++s) {
      biv[s].assign(grid * grid, zero);
      uni[s].assign(grid, zero);
    }
    for (std::uint64_t i1 = w; i1 < q; i1 += workers) {
      for (int s = 0; s < 4; ++s) {
        std::fill(biv[s].begin(), biv[s].end(), zero);
        for (const FlatTerm& t : polys[s])
          biv[s][t.n2 * grid + t.n3] += pow[i1][t.n1].scaled(t.c);
      }
      for (std::uint64_t i2 = 0; i2 < q; ++i2) {
        std::array<bool, 4> have{false, false, false, false};
        auto value_at = [&](int s, std::uint64_t i3) {
          if (!have[s]) {
            for (std::size_t n3 = 0; n3 < grid; ++n3) {
              Fq acc = zero;
              for (std::size_t n2 = 0; n2 < grid; ++n2)
                acc += biv[s][n2 * grid + n3] * pow[i2][n2];
              uni[s][n3] = acc;
            }
            have[s] = true;
          }
          Fq acc = zero;
          for (std::size_t n3 = 0; n3 < grid; ++n3)
            acc += uni[s][n3] * pow[i3][n3];
          return acc;
        };
        for (std::uint64_t i3 = 0; i3 < q; ++i3) {
          bool vanish = true;
          for (int s = 0; s < 4 && vanish; ++s)
            vanish = value_at(s, i3).is_zero();
          if (vanish)
            found[w].push_back(
                LocusPoint{{elems[i1], elems[i2], elems[i3]}, k});
        }
      }
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  std::vector<LocusPoint> points;
  for (auto& part : found)
    for (auto& pt : part) points.push_back(std::move(pt));
  std::sort(points.begin(), points.end(),
            [](const LocusPoint& a, const LocusPoint& b) {
              for (int c = 0; c < 3; ++c) {
                const std::uint64_t ia = a.coords[c].index();
                const std::uint64_t ib = b.coords[c].index();
                if (ia != ib) return ia < ib;
              }
              return false;
            });
  return points;
}

bool check_branch_points(const LocusPoint& point) {
  const ExtField& field = point.coords[0].field();
  const Fq zero = Fq::zero(field);
  const Fq one = Fq::one(field);
  for (int a = 0; a < 3; ++a) {
    if (point.coords[a] == zero || point.coords[a] == one) return false;
    for (int b = a + 1; b < 3; ++b)
      if (point.coords[a] == point.coords[b]) return false;
  }
  return true;
}

int fq_matrix_rank(std::vector<std::vector<Fq>> rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  int rank = 0;
  std::size_t top = 0;
  for (std::size_t col = 0; col < ncols && top < rows.size(); ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t r = top; r < rows.size(); ++r)
      if (!rows[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[top], rows[pivot]);
    const Fq inv = rows[top][col].inverse();
    for (std::size_t c = col; c < ncols; ++c) rows[top][c] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == top || rows[r][col].is_zero()) continue;
      const Fq f = rows[r][col];
      for (std::size_t c = col; c < ncols; ++c)
        rows[r][c] -= f * rows[top][c];
    }
    ++top;
    ++rank;
  }
  return rank;
}

JacobianAtPoint jacobian_at(PrimeModulus pm, const LocusPoint& point) {
  const CartierManinData& cm = cm_entries(pm, 2);
  JacobianAtPoint jac;
  for (int col = 0; col < 4; ++col) {
    const auto [i, j] = kIdealOrder[col];
    const TriPoly& entry = cm.entry(i, j);
    for (int l = 1; l <= 3; ++l)
      jac.m[l - 1][col] = evaluate(partial_derivative(entry, l), point.coords);
  }
  std::vector<std::vector<Fq>> rows;
  for (int l = 0; l < 3; ++l)
    rows.emplace_back(jac.m[l].begin(), jac.m[l].end());
  jac.rank = fq_matrix_rank(std::move(rows));
  return jac;
}

int column_pair_rank(const JacobianAtPoint& jac, int c1, int c2) {
  std::vector<std::vector<Fq>> rows;
  for (int l = 0; l < 3; ++l)
    rows.push_back({jac.m[l][c1], jac.m[l][c2]});
  return fq_matrix_rank(std::move(rows));
}

namespace {

std::array<Fq, 3> expectation_values(const JacobianAtPoint& jac) {
  // columns: 0 = c_{p-1}, 1 = c_{2p-1}, 2 = c_{p-2}, 3 = c_{2p-2}
  std::array<Fq, 3> v;
  for (int l = 0; l < 3; ++l)
    v[l] = jac.m[l][0] * jac.m[l][3] - jac.m[l][1] * jac.m[l][2];
  return v;
}

// Groebner + quotient data shared by the two report builders.
struct IdealData {
  GroebnerBasis gb;
  QuotientAlgebra qa;
  bool radical;
  std::array<int, 3> min_poly_degrees;
};

IdealData ideal_data(PrimeModulus pm) {
  const CartierManinData& cm = cm_entries(pm, 2);
  std::vector<TriPoly> gens;
  for (const auto& [i, j] : kIdealOrder) gens.push_back(cm.entry(i, j));
  IdealData d{buchberger(gens, MonomialOrder{OrderKind::grevlex}), {}, false,
              {0, 0, 0}};
  d.qa = quotient_algebra(d.gb);
  for (int l = 1; l <= 3; ++l)
    d.min_poly_degrees[l - 1] = elimination_min_poly(d.qa, l).degree();
  d.radical = is_radical_zero_dim(d.qa);
  return d;
}

}  // namespace

LocusReport verify_multiplicity_one(PrimeModulus pm,
                                    const std::vector<unsigned>& k_schedule,
                                    unsigned threads) {
  if (k_schedule.empty())
    throw std::invalid_argument("extension schedule must be nonempty");
  for (std::size_t s = 1; s < k_schedule.size(); ++s)
    if (k_schedule[s] <= k_schedule[s - 1])
      throw std::invalid_argument("extension schedule must increase");

  LocusReport report;
  report.p = pm.value();
  report.schedule = k_schedule;

  const IdealData data = ideal_data(pm);
  report.groebner_size = data.gb.gens.size();
  report.quotient_dim = data.qa.dim;
  report.min_poly_degrees = data.min_poly_degrees;
  report.radical = data.radical;

  for (unsigned k : k_schedule) {
    report.degrees_searched.push_back(k);
    report.k_used = k;
    report.points = enumerate_points(pm, k, threads);
    if (report.points.size() == report.quotient_dim) {
      report.counts_match = true;
      break;
    }
  }
  report.incomplete_enumeration = !report.counts_match;

  for (const LocusPoint& pt : report.points) {
    JacobianAtPoint jac = jacobian_at(pm, pt);
    if (jac.rank != 3) report.ranks_all_three = false;
    if (!check_branch_points(pt)) report.branch_points_ok = false;
    for (const Fq& v : expectation_values(jac))
      if (!v.is_zero()) report.expectation_ok = false;
    report.jacobians.push_back(std::move(jac));
  }
  return report;
}

ExpectationReport check_expectation(PrimeModulus pm,
                                    const std::vector<unsigned>& k_schedule,
                                    unsigned threads) {
  const LocusReport base = verify_multiplicity_one(pm, k_schedule, threads);
  ExpectationReport report;
  report.p = base.p;
  report.k_used = base.k_used;
  report.quotient_dim = base.quotient_dim;
  report.counts_match = base.counts_match;
  report.incomplete_enumeration = base.incomplete_enumeration;
  report.points = base.points;
  for (const JacobianAtPoint& jac : base.jacobians) {
    auto v = expectation_values(jac);
    for (const Fq& x : v)
      if (!x.is_zero()) report.pass = false;
    report.values.push_back(v);
  }
  return report;
}

}  // namespace ssplab
