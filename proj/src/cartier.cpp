#include "ssplab/cartier.hpp"

#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace ssplab {

CoeffPoly rosenhain_f(PrimeModulus pm, int g) {
  if (g != 1 && g != 2) throw std::invalid_argument("genus must be 1 or 2");
  const std::uint64_t p = pm.value();
  const Fp one(1, p);

  // x, then x - 1, then x - z_k for k = 1..2g-1
  CoeffPoly f(p);
  f.set_coeff(1, TriPoly::constant(one));

  CoeffPoly x_minus_1(p);
  x_minus_1.set_coeff(1, TriPoly::constant(one));
  x_minus_1.set_coeff(0, TriPoly::constant(-one));
  f = f * x_minus_1;

  for (int k = 1; k <= 2 * g - 1; ++k) {
    CoeffPoly factor(p);
    factor.set_coeff(1, TriPoly::constant(one));
    factor.set_coeff(0, -TriPoly::variable(p, k));
    f = f * factor;
  }
  return f;
}

const CartierManinData& cm_entries(PrimeModulus pm, int g) {
  if (g != 1 && g != 2) throw std::invalid_argument("genus must be 1 or 2");
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, int>,
                  std::unique_ptr<const CartierManinData>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair(pm.value(), g);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;

  const std::uint64_t p = pm.value();
  const unsigned e = static_cast<unsigned>((p - 1) / 2);
  const CoeffPoly fe = rosenhain_f(pm, g).power(e);

  auto data = std::make_unique<CartierManinData>();
  data->p = p;
  data->g = g;
  data->entries.resize(g);
  for (int i = 1; i <= g; ++i)
    for (int j = 1; j <= g; ++j)
      data->entries[i - 1].push_back(
          fe.coeff(static_cast<int>(i * p) - j));
  const CartierManinData& ref = *data;
  cache.emplace(key, std::move(data));
  return ref;
}

std::string cm_entry_name(int i, int j) {
  assert(1 <= i && i <= 2 && 1 <= j && j <= 2);
  return std::string("c_") + (i == 2 ? "2p" : "p") + "-" + std::to_string(j);
}

UniPoly unipoly_from_tripoly_z1(const TriPoly& f) {
  UniPoly r(f.modulus());
  for (const auto& [m, c] : f.terms()) {
    if (m.e[1] != 0 || m.e[2] != 0)
      throw std::invalid_argument("polynomial involves z2 or z3");
    r = r + UniPoly::term(f.modulus(), c, m.e[0]);
  }
  return r;
}

UniPoly hasse_polynomial(PrimeModulus pm) {
  const std::uint64_t p = pm.value();
  const std::size_t e = (p - 1) / 2;
  // Pascal row e mod p (exact: e < p, no degree overflow)
  std::vector<std::uint64_t> row(e + 1, 0);
  row[0] = 1;
  for (std::size_t r = 1; r <= e; ++r)
    for (std::size_t i = r; i >= 1; --i) row[i] = (row[i] + row[i - 1]) % p;
  for (auto& v : row) v = (v * v) % p;
  return UniPoly(p, std::move(row));
}

IgusaScanReport igusa_separability_scan(std::uint64_t p_max) {
  if (p_max < 3) throw std::invalid_argument("p_max must be at least 3");
  IgusaScanReport report;
  report.p_max = p_max;
  report.all_separable = true;
  for (std::uint64_t p = 3; p <= p_max; p += 2) {
    if (!is_prime(p)) continue;
    const UniPoly h = hasse_polynomial(PrimeModulus(p));
    const UniPoly g = gcd_uni(h, h.derivative());
    const bool separable = g.degree() == 0;
    report.entries.push_back({p, separable, g});
    if (!separable) report.all_separable = false;
  }
  return report;
}

}  // namespace ssplab
