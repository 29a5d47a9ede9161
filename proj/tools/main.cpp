#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ssplab/cartier.hpp"
#include "ssplab/field.hpp"
#include "ssplab/ideal.hpp"
#include "ssplab/lauricella.hpp"
#include "ssplab/locus.hpp"
#include "ssplab/pde.hpp"
#include "ssplab/poly.hpp"

using json = nlohmann::ordered_json;
using namespace ssplab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitBadConfig = 2;
constexpr int kExitIncompleteEnumeration = 3;

enum class Format { json, csv, text };

struct RunConfig {
  std::vector<std::uint64_t> primes;
  std::vector<unsigned> ext_schedule{2, 4};
  Format format = Format::json;
  std::string out_path;
  unsigned threads = 1;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::uint64_t> parse_uint_list(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    const std::string tok = s.substr(pos, next - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw ConfigError("malformed number list '" + s + "'");
    out.push_back(std::stoull(tok));
    pos = next + 1;
  }
  return out;
}

std::vector<std::uint64_t> resolve_primes(const std::string& primes_arg,
                                          std::uint64_t max_p) {
  std::vector<std::uint64_t> primes;
  if (!primes_arg.empty() && max_p != 0)
    throw ConfigError("--primes and --max-p are mutually exclusive");
  if (!primes_arg.empty()) {
    primes = parse_uint_list(primes_arg);
  } else if (max_p != 0) {
    for (std::uint64_t p = 3; p <= max_p; p += 2)
      if (is_prime(p)) primes.push_back(p);
  }
  if (primes.empty()) throw ConfigError("no odd primes selected");
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (std::uint64_t p : primes)
    if (p == 2 || !is_prime(p))
      throw ConfigError(std::to_string(p) + " is not an odd prime");
  return primes;
}

std::vector<unsigned> resolve_schedule(const std::string& ext_arg) {
  if (ext_arg.empty()) return {2, 4};
  std::vector<unsigned> sched;
  for (std::uint64_t v : parse_uint_list(ext_arg)) {
    if (v == 0 || v > ExtField::kMaxDegree)
      throw ConfigError("extension degree out of range: " + std::to_string(v));
    sched.push_back(static_cast<unsigned>(v));
  }
  for (std::size_t s = 1; s < sched.size(); ++s)
    if (sched[s] <= sched[s - 1])
      throw ConfigError("extension schedule must be strictly increasing");
  return sched;
}

Format resolve_format(const std::string& fmt) {
  if (fmt == "json") return Format::json;
  if (fmt == "csv") return Format::csv;
  if (fmt == "text") return Format::text;
  throw ConfigError("unknown format '" + fmt + "'");
}

unsigned resolve_threads(unsigned flag_value) {
  unsigned threads = flag_value;
  if (const char* env = std::getenv("SSPLAB_THREADS")) {
    const std::string s = env;
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw ConfigError("SSPLAB_THREADS must be a positive integer");
    threads = static_cast<unsigned>(std::stoul(s));
  }
  if (threads == 0) throw ConfigError("thread count must be positive");
  return threads;
}

void emit(const RunConfig& config, const std::string& payload) {
  if (config.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(config.out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + config.out_path);
  out << payload;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Runs fn(prime) for every configured prime on a bounded pool; results
// merged in prime order.
template <typename Fn>
std::vector<json> run_per_prime(const RunConfig& config, Fn&& fn) {
  const std::size_t n = config.primes.size();
  const unsigned width =
      std::max<unsigned>(1, std::min<unsigned>(config.threads, n));
  const unsigned inner = std::max(1u, config.threads / width);
  std::vector<json> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= n) break;
      try {
        results[idx] = fn(PrimeModulus(config.primes[idx]), inner);
      } catch (...) {
        errors[idx] = std::current_exception();
      }
    }
  };
  if (width == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < width; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

json point_to_json(const LocusPoint& pt) {
  return json{{"k", pt.k},
              {"lambda", {pt.coords[0].to_string(), pt.coords[1].to_string(),
                          pt.coords[2].to_string()}}};
}

// ---------------------------------------------------------------- hasse

int cmd_hasse(const RunConfig& config, std::uint64_t p_max) {
  const IgusaScanReport report = igusa_separability_scan(p_max);
  json results = json::array();
  for (const auto& entry : report.entries) {
    json e{{"p", entry.p}, {"separable", entry.separable}};
    if (!entry.separable) e["witness"] = to_text(entry.witness);
    results.push_back(std::move(e));
  }
  json out{{"schema", 1},
           {"command", "hasse"},
           {"p_max", report.p_max},
           {"all_separable", report.all_separable},
           {"results", std::move(results)}};
  if (config.format == Format::text) {
    std::string s;
    for (const auto& entry : report.entries)
      s += "p=" + std::to_string(entry.p) +
           (entry.separable ? " separable\n" : " NOT separable\n");
    s += report.all_separable ? "all separable\n" : "separability FAILED\n";
    emit(config, s);
  } else {
    emit(config, dump(out));
  }
  return report.all_separable ? kExitOk : kExitVerificationFailed;
}

// ------------------------------------------------------------------- cm

int cmd_cm(const RunConfig& config, std::uint64_t prime, int g) {
  const PrimeModulus pm(prime);
  const CartierManinData& cm = cm_entries(pm, g);
  json entries;
  for (int i = 1; i <= g; ++i)
    for (int j = 1; j <= g; ++j) {
      if (g == 1)
        entries[cm_entry_name(i, j)] =
            to_text(unipoly_from_tripoly_z1(cm.entry(i, j)));
      else
        entries[cm_entry_name(i, j)] = to_text(cm.entry(i, j));
    }
  json out{{"schema", 1},
           {"command", "cm"},
           {"p", prime},
           {"g", g},
           {"entries", std::move(entries)}};
  emit(config, dump(out));
  return kExitOk;
}

// ------------------------------------------------------------ lauricella

int cmd_lauricella(const RunConfig& config, std::uint64_t prime, int i, int j) {
  const PrimeModulus pm(prime);
  const SupportSet supp = support(pm, i, j);
  const TruncatedSeries series = truncated_series(pm, i, j);
  const Fp constant = normalization_constant(pm, i, j);
  const Fp oracle = normalization_constant_oracle(pm, i, j);
  const TriPoly reconstructed = cm_via_hypergeometric(pm, i, j);
  const TriPoly& direct = cm_entries(pm, 2).entry(i, j);
  const bool matches = reconstructed == direct && constant == oracle;
  json out{{"schema", 1},
           {"command", "lauricella"},
           {"support",
            {{"p", prime},
             {"i", i},
             {"j", j},
             {"d_prime", supp.d_prime()},
             {"size", supp.size()}}},
           {"series", to_text(series.poly)},
           {"normalization_constant", constant.value()},
           {"normalization_constant_oracle", oracle.value()},
           {"cm_via_hypergeometric", to_text(reconstructed)},
           {"cm_entry", to_text(direct)},
           {"pass", matches}};
  emit(config, dump(out));
  return matches ? kExitOk : kExitVerificationFailed;
}

// ------------------------------------------------------------ verify-pde

int cmd_verify_pde(const RunConfig& config) {
  auto results = run_per_prime(config, [](PrimeModulus pm, unsigned) {
    const AnnihilationReport report = verify_annihilation(pm);
    json residuals = json::array();
    for (const auto& r : report.nonzero)
      residuals.push_back(json{{"entry", cm_entry_name(r.i, r.j)},
                               {"op", r.op},
                               {"residual", to_text(r.residual)}});
    return json{{"p", report.p},
                {"theorem_A",
                 {{"pass", report.pass}, {"residuals", std::move(residuals)}}}};
  });
  bool pass = true;
  for (const auto& r : results)
    if (!r["theorem_A"]["pass"].get<bool>()) pass = false;
  json out{{"schema", 1},
           {"command", "verify-pde"},
           {"results", results},
           {"pass", pass}};
  if (config.format == Format::text) {
    std::string s;
    for (const auto& r : results)
      s += "p=" + std::to_string(r["p"].get<std::uint64_t>()) + " theorem_A=" +
           (r["theorem_A"]["pass"].get<bool>() ? "PASS" : "FAIL") + "\n";
    emit(config, s);
  } else {
    emit(config, dump(out));
  }
  return pass ? kExitOk : kExitVerificationFailed;
}

// ----------------------------------------------------- verify-contiguity

int cmd_verify_contiguity(const RunConfig& config) {
  auto results = run_per_prime(config, [](PrimeModulus pm, unsigned) {
    json contiguity = json::array();
    json remark = json::array();
    bool pass = true;
    for (int i = 1; i <= 2; ++i)
      for (int which = 1; which <= 2; ++which) {
        const TriPoly r1 = contiguity_residual(pm, i, which);
        if (!r1.is_zero()) {
          pass = false;
          contiguity.push_back(
              json{{"i", i}, {"which", which}, {"residual", to_text(r1)}});
        }
        const TriPoly r2 = remark_relation_residual(pm, i, which);
        if (!r2.is_zero()) {
          pass = false;
          remark.push_back(
              json{{"i", i}, {"which", which}, {"residual", to_text(r2)}});
        }
      }
    return json{{"p", pm.value()},
                {"contiguity", {{"pass", contiguity.empty()},
                                {"residuals", std::move(contiguity)}}},
                {"remark", {{"pass", remark.empty()},
                            {"residuals", std::move(remark)}}},
                {"pass", pass}};
  });
  bool pass = true;
  for (const auto& r : results)
    if (!r["pass"].get<bool>()) pass = false;
  json out{{"schema", 1},
           {"command", "verify-contiguity"},
           {"results", results},
           {"pass", pass}};
  emit(config, dump(out));
  return pass ? kExitOk : kExitVerificationFailed;
}

// ----------------------------------------------------------------- locus

int cmd_locus(const RunConfig& config) {
  auto results = run_per_prime(config, [&](PrimeModulus pm, unsigned inner) {
    const LocusReport report =
        verify_multiplicity_one(pm, config.ext_schedule, inner);
    json points = json::array();
    for (std::size_t s = 0; s < report.points.size(); ++s) {
      json pt = point_to_json(report.points[s]);
      pt["rank"] = report.jacobians[s].rank;
      points.push_back(std::move(pt));
    }
    return json{{"p", report.p},
                {"k_used", report.k_used},
                {"quotient_dim", report.quotient_dim},
                {"counts_match", report.counts_match},
                {"points", std::move(points)}};
  });
  if (config.format == Format::csv) {
    std::string s = "p,k,lambda1,lambda2,lambda3,rank\n";
    for (const auto& r : results)
      for (const auto& pt : r["points"]) {
        s += std::to_string(r["p"].get<std::uint64_t>()) + ",";
        s += std::to_string(pt["k"].get<unsigned>()) + ",";
        for (const auto& c : pt["lambda"])
          s += c.get<std::string>() + ",";
        s += std::to_string(pt["rank"].get<int>()) + "\n";
      }
    emit(config, s);
  } else {
    json out{{"schema", 1}, {"command", "locus"}, {"results", results}};
    emit(config, dump(out));
  }
  return kExitOk;
}

// -------------------------------------------------------- verify-mult-one

int cmd_verify_mult_one(const RunConfig& config) {
  auto results = run_per_prime(config, [&](PrimeModulus pm, unsigned inner) {
    const LocusReport r = verify_multiplicity_one(pm, config.ext_schedule, inner);
    json points = json::array();
    for (std::size_t s = 0; s < r.points.size(); ++s) {
      json pt = point_to_json(r.points[s]);
      pt["rank"] = r.jacobians[s].rank;
      points.push_back(std::move(pt));
    }
    const bool pass = r.radical && r.counts_match && r.ranks_all_three &&
                      r.branch_points_ok;
    return json{{"p", r.p},
                {"schedule", r.schedule},
                {"degrees_searched", r.degrees_searched},
                {"k_used", r.k_used},
                {"groebner_size", r.groebner_size},
                {"quotient_dim", r.quotient_dim},
                {"min_poly_degrees", r.min_poly_degrees},
                {"radical", r.radical},
                {"point_count", r.points.size()},
                {"counts_match", r.counts_match},
                {"incomplete_enumeration", r.incomplete_enumeration},
                {"ranks_all_three", r.ranks_all_three},
                {"branch_points_ok", r.branch_points_ok},
                {"expectation_ok", r.expectation_ok},
                {"points", std::move(points)},
                {"pass", pass}};
  });
  bool pass = true, incomplete = false;
  for (const auto& r : results) {
    if (!r["pass"].get<bool>()) pass = false;
    if (r["incomplete_enumeration"].get<bool>()) incomplete = true;
  }
  json out{{"schema", 1},
           {"command", "verify-mult-one"},
           {"results", results},
           {"pass", pass}};
  if (config.format == Format::text) {
    std::string s;
    for (const auto& r : results)
      s += "p=" + std::to_string(r["p"].get<std::uint64_t>()) +
           " quotient_dim=" + std::to_string(r["quotient_dim"].get<std::size_t>()) +
           " radical=" + (r["radical"].get<bool>() ? "true" : "false") +
           " pass=" + (r["pass"].get<bool>() ? "PASS" : "FAIL") + "\n";
    emit(config, s);
  } else {
    emit(config, dump(out));
  }
  if (incomplete) return kExitIncompleteEnumeration;
  return pass ? kExitOk : kExitVerificationFailed;
}

// ------------------------------------------------------ check-expectation

int cmd_check_expectation(const RunConfig& config) {
  auto results = run_per_prime(config, [&](PrimeModulus pm, unsigned inner) {
    const ExpectationReport r =
        check_expectation(pm, config.ext_schedule, inner);
    json points = json::array();
    for (std::size_t s = 0; s < r.points.size(); ++s) {
      json pt = point_to_json(r.points[s]);
      json values = json::array();
      bool pt_pass = true;
      for (const Fq& v : r.values[s]) {
        values.push_back(v.to_string());
        if (!v.is_zero()) pt_pass = false;
      }
      pt["values"] = std::move(values);
      pt["pass"] = pt_pass;
      points.push_back(std::move(pt));
    }
    return json{{"p", r.p},
                {"k_used", r.k_used},
                {"quotient_dim", r.quotient_dim},
                {"counts_match", r.counts_match},
                {"points", std::move(points)},
                {"pass", r.pass}};
  });
  bool pass = true;
  for (const auto& r : results)
    if (!r["pass"].get<bool>()) pass = false;
  json out{{"schema", 1},
           {"command", "check-expectation"},
           {"results", results},
           {"pass", pass}};
  emit(config, dump(out));
  return kExitOk;  // a FAIL is a finding reported in the payload
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for Cartier-Manin matrices of "
               "genus-2 Rosenhain curves"};
  app.require_subcommand(1);

  std::string primes_arg, ext_arg, format_arg = "json", out_arg;
  std::uint64_t max_p = 0;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t single_p = 0;
  int opt_g = 2, opt_i = 1, opt_j = 1;

  auto add_common = [&](CLI::App* cmd, bool with_primes) {
    if (with_primes) {
      cmd->add_option("--primes", primes_arg, "comma-separated odd primes");
      cmd->add_option("--max-p", max_p, "all odd primes up to this bound");
    }
    cmd->add_option("--ext", ext_arg,
                    "extension-degree schedule (default 2,4)");
    cmd->add_option("--format", format_arg, "json|csv|text");
    cmd->add_option("--out", out_arg, "output path (default stdout)");
    cmd->add_option("--threads", threads,
                    "worker count (env SSPLAB_THREADS overrides)");
  };

  CLI::App* hasse = app.add_subcommand("hasse", "Hasse polynomial separability scan");
  hasse->add_option("--max-p", max_p, "scan all odd primes up to this bound")
      ->required();
  add_common(hasse, false);

  CLI::App* cm = app.add_subcommand("cm", "Cartier-Manin matrix entries");
  cm->add_option("-p,--p", single_p, "odd prime")->required();
  cm->add_option("-g,--genus", opt_g, "genus (1 or 2, default 2)");
  add_common(cm, false);

  CLI::App* lauricella =
      app.add_subcommand("lauricella", "truncated series and support data");
  lauricella->add_option("-p,--p", single_p, "odd prime")->required();
  lauricella->add_option("-i", opt_i, "row index (1 or 2)")->required();
  lauricella->add_option("-j", opt_j, "column index (1 or 2)")->required();
  add_common(lauricella, false);

  CLI::App* vpde = app.add_subcommand("verify-pde", "operator annihilation");
  add_common(vpde, true);
  CLI::App* vcont =
      app.add_subcommand("verify-contiguity", "contiguity relations");
  add_common(vcont, true);
  CLI::App* locus = app.add_subcommand("locus", "superspecial point table");
  add_common(locus, true);
  CLI::App* vmult =
      app.add_subcommand("verify-mult-one", "multiplicity-one verification");
  add_common(vmult, true);
  CLI::App* vexp =
      app.add_subcommand("check-expectation", "determinant-like vanishing");
  add_common(vexp, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitBadConfig;
  }

  try {
    RunConfig config;
    config.format = resolve_format(format_arg);
    config.out_path = out_arg;
    config.threads = resolve_threads(threads);
    config.ext_schedule = resolve_schedule(ext_arg);

    if (hasse->parsed()) {
      if (max_p < 3) throw ConfigError("no odd primes in range");
      return cmd_hasse(config, max_p);
    }
    if (cm->parsed()) {
      if (opt_g != 1 && opt_g != 2) throw ConfigError("genus must be 1 or 2");
      PrimeModulus check(single_p);  // validates
      return cmd_cm(config, single_p, opt_g);
    }
    if (lauricella->parsed()) {
      if (opt_i < 1 || opt_i > 2 || opt_j < 1 || opt_j > 2)
        throw ConfigError("indices must lie in {1,2}");
      PrimeModulus check(single_p);
      return cmd_lauricella(config, single_p, opt_i, opt_j);
    }

    config.primes = resolve_primes(primes_arg, max_p);
    if (config.format == Format::csv && !locus->parsed())
      throw ConfigError("csv output is only available for 'locus'");
    if (vpde->parsed()) return cmd_verify_pde(config);
    if (vcont->parsed()) return cmd_verify_contiguity(config);
    if (locus->parsed()) return cmd_locus(config);
    if (vmult->parsed()) return cmd_verify_mult_one(config);
    if (vexp->parsed()) return cmd_check_expectation(config);
    throw ConfigError("no subcommand");
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
}
