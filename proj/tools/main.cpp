// Command-line front end for the Schubert calculus kernel.  Every command
// prints a human-readable line followed by a JSON status object; --json
// keeps only the JSON, --quiet keeps neither and leaves the exit code as the
// answer.  Exit codes: 0 ok / positive / accept, 10 negative / reject /
// none, 2 parse error, 3 rank bound, 4 budget exceeded, 5 I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schub/json_io.hpp"
#include "schub/permutation.hpp"
#include "schub/pipedream.hpp"
#include "schub/polynomial.hpp"
#include "schub/schubert.hpp"
#include "schub/tableau.hpp"
#include "schub/witness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 10;
constexpr int kExitParse = 2;
constexpr int kExitRankBound = 3;
constexpr int kExitBudget = 4;
constexpr int kExitIo = 5;

struct Options {
  int rank_bound = schub::kDefaultRankBound;
  std::uint64_t budget = schub::kDefaultBudget;
  int table_bound = 5;
  bool json = false;
  bool quiet = false;
};

void emit(const Options& opts, const std::string& human, const schub::Json& payload) {
  if (opts.quiet) return;
  if (!opts.json && !human.empty()) std::cout << human << "\n";
  schub::Json wrapper;
  wrapper["status"] = "ok";
  wrapper["payload"] = payload;
  std::cout << wrapper.dump() << "\n";
}

schub::Monomial parse_monomial_arg(const std::string& text) {
  std::vector<int> exps;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    std::string tok = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() || v < 0) throw schub::parse_error("bad exponent: " + tok);
      exps.push_back(v);
    } catch (const schub::parse_error&) {
      throw;
    } catch (const std::exception&) {
      throw schub::parse_error("bad exponent list: " + text);
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return schub::Monomial(std::move(exps));
}

schub::Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw schub::io_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return schub::Json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw schub::parse_error(path + ": " + e.what());
  }
}

std::string csv_cell(const schub::Permutation& w) {
  std::string out = "\"";
  const std::vector<int> win = w.trimmed_window();
  for (std::size_t i = 0; i < win.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(win[i]);
  }
  out += '"';
  return out;
}

int run_poly(const Options& opts, const std::string& warg) {
  schub::Permutation w = schub::parse_permutation(warg);
  const schub::SparsePolynomial& p = schub::schubert_polynomial(w, opts.rank_bound);
  schub::Json payload;
  payload["w"] = w.trimmed_window();
  payload["polynomial"] = schub::polynomial_to_json(p);
  emit(opts, schub::to_string(p), payload);
  return kExitOk;
}

int run_kostka(const Options& opts, const std::string& warg, const std::string& aarg) {
  schub::Permutation w = schub::parse_permutation(warg);
  schub::Monomial alpha = parse_monomial_arg(aarg);
  schub::Integer c = schub::schubert_kostka(w, alpha, opts.rank_bound);
  schub::Json payload;
  payload["w"] = w.trimmed_window();
  payload["alpha"] = alpha.exponents();
  payload["coeff"] = schub::to_decimal(c);
  emit(opts, schub::to_decimal(c), payload);
  return kExitOk;
}

int run_pipedreams(const Options& opts, const std::string& warg, bool count_only) {
  schub::Permutation w = schub::parse_permutation(warg);
  std::vector<schub::PipeDream> dreams = schub::pipe_dreams(w, opts.rank_bound);
  schub::Json payload;
  payload["w"] = w.trimmed_window();
  payload["count"] = std::to_string(dreams.size());
  std::string human;
  if (count_only) {
    human = std::to_string(dreams.size());
  } else {
    schub::Json arr = schub::Json::array();
    for (const schub::PipeDream& d : dreams) {
      arr.push_back(schub::pipe_dream_to_json(d));
      std::string line = "crossings:";
      for (const auto& [i, j] : d.crossings)
        line += " (" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (d.crossings.empty()) line += " (none)";
      human += line + "\n";
    }
    payload["dreams"] = std::move(arr);
    human += "count: " + std::to_string(dreams.size());
  }
  emit(opts, human, payload);
  return kExitOk;
}

int run_coeff(const Options& opts, const std::string& uarg, const std::string& varg,
              const std::string& warg) {
  schub::Permutation u = schub::parse_permutation(uarg);
  schub::Permutation v = schub::parse_permutation(varg);
  schub::Permutation w = schub::parse_permutation(warg);
  schub::Integer c = schub::schubert_coefficient(u, v, w, opts.rank_bound);
  schub::Json payload;
  payload["u"] = u.trimmed_window();
  payload["v"] = v.trimmed_window();
  payload["w"] = w.trimmed_window();
  payload["coeff"] = schub::to_decimal(c);
  emit(opts, schub::to_decimal(c), payload);
  return kExitOk;
}

int run_expand(const Options& opts, const std::string& uarg, const std::string& varg) {
  schub::Permutation u = schub::parse_permutation(uarg);
  schub::Permutation v = schub::parse_permutation(varg);
  schub::SchubertExpansion e = schub::schubert_product_expansion(u, v, opts.rank_bound);
  std::string human;
  for (const auto& [w, c] : e.terms) {
    if (!human.empty()) human += "\n";
    human += schub::format_permutation(w) + ": " + schub::to_decimal(c);
  }
  if (human.empty()) human = "(empty)";
  emit(opts, human, schub::expansion_to_json(e));
  return kExitOk;
}

int run_positive(const Options& opts, const std::string& uarg, const std::string& varg,
                 const std::string& warg) {
  schub::Permutation u = schub::parse_permutation(uarg);
  schub::Permutation v = schub::parse_permutation(varg);
  schub::Permutation w = schub::parse_permutation(warg);
  schub::Integer c = schub::schubert_coefficient(u, v, w, opts.rank_bound);
  bool positive = c > 0;
  schub::Json payload;
  payload["u"] = u.trimmed_window();
  payload["v"] = v.trimmed_window();
  payload["w"] = w.trimmed_window();
  payload["positive"] = positive;
  payload["coeff"] = schub::to_decimal(c);
  emit(opts, positive ? "true" : "false", payload);
  return positive ? kExitOk : kExitNegative;
}

// CSV of every positive c^w_{u,v} with u, v in S_n; rows ordered by (u, v, w)
// one-line notation, so two runs produce identical bytes.
int run_table(const Options& opts, int n, const std::string& path) {
  if (n < 1 || n > opts.table_bound)
    throw schub::rank_bound_error("table rank " + std::to_string(n) +
                                  " outside 1.." + std::to_string(opts.table_bound));
  std::vector<int> window(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) window[static_cast<std::size_t>(i)] = i + 1;
  std::vector<schub::Permutation> sn;
  do {
    sn.emplace_back(window);
  } while (std::next_permutation(window.begin(), window.end()));

  std::string csv = "u,v,w,coeff\n";
  std::size_t rows = 0;
  for (const schub::Permutation& u : sn) {
    for (const schub::Permutation& v : sn) {
      schub::SchubertExpansion e = schub::schubert_product_expansion(u, v, opts.rank_bound);
      for (const auto& [w, c] : e.terms) {
        csv += csv_cell(u) + "," + csv_cell(v) + "," + csv_cell(w) + "," +
               schub::to_decimal(c) + "\n";
        ++rows;
      }
    }
  }

  if (path.empty()) {
    if (!opts.quiet) std::cout << csv;
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw schub::io_error("cannot write " + path);
  out << csv;
  out.close();
  if (!out) throw schub::io_error("write failed: " + path);
  schub::Json payload;
  payload["rows"] = rows;
  payload["path"] = path;
  emit(opts, "wrote " + std::to_string(rows) + " rows to " + path, payload);
  return kExitOk;
}

int run_witness_verify(const Options& opts, const std::string& sys_path,
                       const std::string& cert_path) {
  schub::PolySystem sys = schub::system_from_json(load_json_file(sys_path));
  schub::ModPWitness cert = schub::witness_from_json(load_json_file(cert_path));
  bool ok = schub::verify_witness(sys, cert);
  schub::Json payload;
  payload["accepted"] = ok;
  emit(opts, ok ? "accept" : "reject", payload);
  return ok ? kExitOk : kExitNegative;
}

int run_witness_search(const Options& opts, const std::string& sys_path,
                       const std::vector<std::uint64_t>& primes) {
  schub::PolySystem sys = schub::system_from_json(load_json_file(sys_path));
  auto found = schub::search_witness(sys, primes, opts.budget);
  schub::Json payload;
  payload["found"] = found.has_value();
  std::string human = "none";
  if (found) {
    payload["witness"] = schub::witness_to_json(*found);
    human = "prime " + std::to_string(found->prime) + ", point (";
    for (std::size_t i = 0; i < found->point.size(); ++i) {
      if (i > 0) human += ",";
      human += std::to_string(found->point[i]);
    }
    human += ")";
  }
  emit(opts, human, payload);
  return found ? kExitOk : kExitNegative;
}

int run_witness_count(const Options& opts, const std::string& sys_path, std::uint64_t prime) {
  schub::PolySystem sys = schub::system_from_json(load_json_file(sys_path));
  std::uint64_t count = schub::count_solutions_mod_p(sys, prime, opts.budget);
  schub::Json payload;
  payload["count"] = std::to_string(count);
  emit(opts, std::to_string(count), payload);
  return kExitOk;
}

int fail(const Options& opts, const std::string& kind, const std::string& message,
         int exit_code) {
  std::cerr << "error: " << message << "\n";
  if (opts.json && !opts.quiet) {
    schub::Json wrapper;
    wrapper["status"] = kind;
    wrapper["error"] = message;
    std::cout << wrapper.dump() << "\n";
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  Options opts;
  CLI::App app{"Exact Schubert calculus kernel: Schubert polynomials, basis "
               "expansions, positivity of structure constants, pipe dreams, "
               "and mod-p witnesses for integer polynomial systems."};
  app.require_subcommand(1);
  app.add_option("--rank-bound", opts.rank_bound, "largest permutation rank the kernels accept")
      ->envname("SCHUB_RANK_BOUND")
      ->capture_default_str();
  app.add_option("--budget", opts.budget, "largest number of points an exhaustive scan may visit")
      ->envname("SCHUB_BUDGET")
      ->capture_default_str();
  app.add_option("--table-bound", opts.table_bound, "largest n the table command accepts")
      ->envname("SCHUB_TABLE_BOUND")
      ->capture_default_str();
  app.add_flag("--json", opts.json, "print only the JSON status object")
      ->envname("SCHUB_JSON");
  app.add_flag("--quiet", opts.quiet, "suppress output; the exit code carries the answer")
      ->envname("SCHUB_QUIET");

  int code = kExitOk;
  std::string warg, uarg, varg, aarg, sys_path, cert_path, out_path;
  std::vector<std::uint64_t> primes;
  std::uint64_t prime = 2;
  int table_n = 1;
  bool count_only = false;

  CLI::App* poly = app.add_subcommand("poly", "Schubert polynomial of w");
  poly->add_option("w", warg, "permutation, e.g. 1423 or 1,4,2,3")->required();
  poly->callback([&] { code = run_poly(opts, warg); });

  CLI::App* kostka = app.add_subcommand("kostka", "Schubert-Kostka number [x^alpha] Sch_w");
  kostka->add_option("w", warg, "permutation")->required();
  kostka->add_option("alpha", aarg, "exponent vector, e.g. 2,1")->required();
  kostka->callback([&] { code = run_kostka(opts, warg, aarg); });

  CLI::App* dreams = app.add_subcommand("pipedreams", "reduced pipe dreams of w");
  dreams->add_option("w", warg, "permutation")->required();
  dreams->add_flag("--count", count_only, "print only the number of dreams");
  dreams->callback([&] { code = run_pipedreams(opts, warg, count_only); });

  CLI::App* coeff = app.add_subcommand("coeff", "Schubert coefficient c^w_{u,v}");
  coeff->add_option("u", uarg, "permutation")->required();
  coeff->add_option("v", varg, "permutation")->required();
  coeff->add_option("w", warg, "permutation")->required();
  coeff->callback([&] { code = run_coeff(opts, uarg, varg, warg); });

  CLI::App* expand = app.add_subcommand("expand", "Schubert expansion of Sch_u * Sch_v");
  expand->add_option("u", uarg, "permutation")->required();
  expand->add_option("v", varg, "permutation")->required();
  expand->callback([&] { code = run_expand(opts, uarg, varg); });

  CLI::App* positive = app.add_subcommand("positive", "decide c^w_{u,v} > 0");
  positive->add_option("u", uarg, "permutation")->required();
  positive->add_option("v", varg, "permutation")->required();
  positive->add_option("w", warg, "permutation")->required();
  positive->callback([&] { code = run_positive(opts, uarg, varg, warg); });

  CLI::App* table = app.add_subcommand(
      "table", "CSV of all positive c^w_{u,v} for u, v in S_n");
  table->add_option("n", table_n, "symmetric group rank")->required();
  table->add_option("path", out_path, "output file (stdout when omitted)");
  table->callback([&] { code = run_table(opts, table_n, out_path); });

  CLI::App* wverify = app.add_subcommand("witness-verify", "check a mod-p certificate");
  wverify->add_option("system", sys_path, "polynomial system JSON file")->required();
  wverify->add_option("certificate", cert_path, "certificate JSON file")->required();
  wverify->callback([&] { code = run_witness_verify(opts, sys_path, cert_path); });

  CLI::App* wsearch = app.add_subcommand("witness-search", "scan F_p^s for a witness");
  wsearch->add_option("system", sys_path, "polynomial system JSON file")->required();
  wsearch->add_option("primes", primes, "primes to scan, in order")->required();
  wsearch->callback([&] { code = run_witness_search(opts, sys_path, primes); });

  CLI::App* wcount = app.add_subcommand("witness-count", "count solutions in F_p^s");
  wcount->add_option("system", sys_path, "polynomial system JSON file")->required();
  wcount->add_option("prime", prime, "modulus (must be prime)")->required();
  wcount->callback([&] { code = run_witness_count(opts, sys_path, prime); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  } catch (const schub::parse_error& e) {
    return fail(opts, "parse-error", e.what(), kExitParse);
  } catch (const schub::invalid_input_error& e) {
    return fail(opts, "invalid-input", e.what(), kExitParse);
  } catch (const schub::composite_prime_error& e) {
    return fail(opts, "composite-prime", e.what(), kExitParse);
  } catch (const schub::rank_bound_error& e) {
    return fail(opts, "rank-bound", e.what(), kExitRankBound);
  } catch (const schub::budget_error& e) {
    return fail(opts, "budget-exceeded", e.what(), kExitBudget);
  } catch (const schub::io_error& e) {
    return fail(opts, "io-error", e.what(), kExitIo);
  } catch (const std::exception& e) {
    return fail(opts, "internal-error", e.what(), 1);
  }
  return code;
}
