// gessel: exact Gessel-walk counts, identity checks and conjecture fits.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <sys/file.h>
#include <fcntl.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gessel/conjecture_lab.hpp"
#include "gessel/exact_arith.hpp"
#include "gessel/kernel_series.hpp"
#include "gessel/triangular_system.hpp"
#include "gessel/walk_dp.hpp"

namespace {

using gessel::ExactInt;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

enum class Format { text, json, csv };

struct RunConfig {
  Format format = Format::text;
  std::string cache_path;

  // count
  int m = 0, n1 = 0, n2 = 0;
  std::string method = "dp";
  std::size_t chain_limit = gessel::kDefaultChainLimit;

  // verify
  std::string suite;
  int N = 16;
  std::int64_t k_max = 200;
  std::string caps = "10,10,10";

  // universal / fit / table / hessenberg / series
  int i = 1;
  std::string family;
  int k = 0;
  int held_out = gessel::kDefaultHeldOut;
  int m_max = 20;
  int n = 1;
  bool dump = false;
  std::string which = "G";
};

// Inapplicable requests that are the caller's fault.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

gessel::Caps parse_caps(const std::string& s) {
  std::vector<int> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      parts.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("bad --caps component '" + item + "'");
    }
  }
  if (parts.size() != 3 || parts[0] < 0 || parts[1] < 0 || parts[2] < 0) {
    throw UsageError("--caps expects three nonnegative integers dx,dy,dz");
  }
  return {parts[0], parts[1], parts[2]};
}

std::string caps_text(const gessel::Caps& c) {
  return std::to_string(c.dx) + "," + std::to_string(c.dy) + "," + std::to_string(c.dz);
}

// ---------------------------------------------------------------- cache

class CacheSession {
 public:
  explicit CacheSession(std::string path) : path_(std::move(path)) {
    if (path_.empty()) return;
    const std::string lock_path = path_ + ".lock";
    lock_fd_ = ::open(lock_path.c_str(), O_CREAT | O_RDWR, 0644);
    if (lock_fd_ < 0) throw UsageError("cannot open cache lock " + lock_path);
    if (::flock(lock_fd_, LOCK_EX | LOCK_NB) != 0) {
      ::close(lock_fd_);
      lock_fd_ = -1;
      throw UsageError("cache " + path_ + " is in use by another process");
    }
    std::ifstream in(path_);
    if (in) {
      auto table = std::make_shared<const gessel::WalkTable>(gessel::WalkTable::read_jsonl(in));
      loaded_m_max_ = table->m_max();
      gessel::install_shared_walk_table(std::move(table));
    }
  }

  CacheSession(const CacheSession&) = delete;
  CacheSession& operator=(const CacheSession&) = delete;

  ~CacheSession() {
    if (path_.empty()) return;
    const auto table = gessel::peek_shared_walk_table();
    if (table && table->m_max() > loaded_m_max_) {
      const std::string tmp = path_ + ".tmp";
      {
        std::ofstream out(tmp);
        table->write_jsonl(out);
      }
      std::error_code ec;
      std::filesystem::rename(tmp, path_, ec);
    }
    if (lock_fd_ >= 0) {
      ::flock(lock_fd_, LOCK_UN);
      ::close(lock_fd_);
    }
  }

 private:
  std::string path_;
  int lock_fd_ = -1;
  int loaded_m_max_ = -1;
};

std::string resolve_cache_path(const RunConfig& cfg) {
  if (!cfg.cache_path.empty()) return cfg.cache_path;
  if (const char* dir = std::getenv("GESSEL_CACHE_DIR"); dir && *dir) {
    std::filesystem::create_directories(dir);
    return (std::filesystem::path(dir) / "walk_table.jsonl").string();
  }
  return {};
}

// ---------------------------------------------------------------- count

// x(k) of the packed linear system through the selected pipeline.
ExactInt system_unknown(std::int64_t k, const RunConfig& cfg) {
  if (cfg.method == "solve") return gessel::solve_forward(k).x(k);
  if (cfg.method == "det") return gessel::solution_via_determinant(k);
  // multisum: x = A^{-1} e_4, so x(k) is the (k, 4) entry of the inverse.
  if (k < gessel::kRho11) return 0;
  if (k == gessel::kRho11) return 1;
  const auto a = gessel::system_matrix(static_cast<std::size_t>(k) + 1);
  return gessel::inverse_entry_multisum(static_cast<std::size_t>(k), gessel::kRho11, a, cfg.chain_limit);
}

ExactInt f_via_system(int i, int j, const RunConfig& cfg) { return system_unknown(gessel::rho(i, j), cfg); }

ExactInt count_via_system(const RunConfig& cfg) {
  const int m = cfg.m, n1 = cfg.n1, n2 = cfg.n2;
  if (n1 != 0 && n2 != 0) {
    throw UsageError("method '" + cfg.method + "' only reaches boundary points (n1 = 0 or n2 = 0)");
  }
  // F(m; n1, 0) = F~(m+1; n1, 0) = f(m+1+n1, m+1)
  if (n2 == 0) return f_via_system(m + 1 + n1, m + 1, cfg);
  // F(m; 0, n2) = sum_t (-1)^(n2-t) F~(m+1; 0, t), F~(m+1; 0, t) = f(m+1, m+1+t)
  ExactInt acc = 0;
  for (int t = 0; t <= n2; ++t) {
    const ExactInt v = f_via_system(m + 1, m + 1 + t, cfg);
    if ((n2 - t) % 2 == 0) {
      acc += v;
    } else {
      acc -= v;
    }
  }
  return acc;
}

ExactInt count_closed(const RunConfig& cfg) {
  const int m = cfg.m, n1 = cfg.n1, n2 = cfg.n2;
  if (!gessel::reachable(m, n1, n2)) return 0;
  auto integral = [](const gessel::ExactRat& q) {
    if (q.get_den() != 1) throw gessel::Error("closed form is not integral here");
    return ExactInt(q.get_num());
  };
  if (n1 == 0 && n2 == 0) return integral(gessel::gessel_closed_form(m / 2));
  if (const auto s = gessel::shortest_walk(n1, n2); s.length == m) return s.count;
  if (n1 == 0 && n2 == 1) return integral(gessel::conjectured_value(gessel::Family::F201, 1, m / 2));
  if (n1 == 0 && m >= 2 * n2 && (m - 2 * n2) / 2 <= 3) {
    return integral(gessel::conjectured_value(gessel::Family::VERT, (m - 2 * n2) / 2, n2));
  }
  if (n2 == 0 && (m - n1) / 2 <= 3) {
    return integral(gessel::conjectured_value(gessel::Family::HOR, (m - n1) / 2, n1));
  }
  throw UsageError("no closed form covers F(" + std::to_string(m) + "; " + std::to_string(n1) + ", " +
                   std::to_string(n2) + ")");
}

int cmd_count(const RunConfig& cfg) {
  ExactInt value;
  if (cfg.method == "dp") {
    value = gessel::count_walks(cfg.m, cfg.n1, cfg.n2);
  } else if (cfg.method == "closed") {
    value = count_closed(cfg);
  } else {
    if (cfg.m < 0 || cfg.n1 < 0 || cfg.n2 < 0) throw UsageError("coordinates must be nonnegative");
    value = count_via_system(cfg);
  }
  switch (cfg.format) {
    case Format::text:
      std::cout << value.get_str() << " (method: " << cfg.method << ")\n";
      break;
    case Format::csv:
      std::cout << "m,n1,n2,method,F\n"
                << cfg.m << ',' << cfg.n1 << ',' << cfg.n2 << ',' << cfg.method << ',' << value.get_str() << '\n';
      break;
    case Format::json: {
      json j;
      j["m"] = cfg.m;
      j["n1"] = cfg.n1;
      j["n2"] = cfg.n2;
      j["method"] = cfg.method;
      j["F"] = value.get_str();
      std::cout << j.dump() << '\n';
      break;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify

json identity_json(const gessel::IdentityCheck& r) {
  json j;
  j["holds"] = r.holds;
  j["window"] = caps_text(r.window);
  j["monomials_compared"] = r.monomials_compared;
  if (r.first_discrepancy) {
    const auto& d = *r.first_discrepancy;
    j["first_discrepancy"] = {{"ex", d.at[0]}, {"ey", d.at[1]}, {"ez", d.at[2]},
                              {"lhs", d.lhs.get_str()}, {"rhs", d.rhs.get_str()}};
  }
  return j;
}

std::pair<bool, json> suite_families() {
  json checks = json::array();
  bool ok = true;
  auto record = [&](const std::string& name, bool pass, json detail = json::object()) {
    detail["check"] = name;
    detail["pass"] = pass;
    ok = ok && pass;
    checks.push_back(std::move(detail));
  };
  auto run_fit = [&](gessel::FitFamily fam, int k) {
    const std::string name = std::string(gessel::fit_family_name(fam)) + " k=" + std::to_string(k);
    try {
      const auto fit = gessel::fit_family(fam, k);
      const auto claims = gessel::verify_family_claims(fit);
      record("fit " + name, claims.all(), json::parse(gessel::fit_report_json(fit, claims)));
      return std::optional<gessel::PolyFit>(fit);
    } catch (const gessel::Error& e) {
      record("fit " + name, false, {{"error", e.what()}});
      return std::optional<gessel::PolyFit>();
    }
  };
  for (int k = 0; k <= 3; ++k) {
    const auto fit = run_fit(gessel::FitFamily::S_K, k);
    bool agree = fit.has_value();
    for (int n = 0; agree && n <= 12; ++n) agree = fit->poly(n) == gessel::conjectured_value(gessel::Family::HOR, k, n);
    record("HOR k=" + std::to_string(k) + " printed formula", agree);
  }
  for (int k = 0; k <= 3; ++k) {
    if (k >= 1) run_fit(gessel::FitFamily::R_K, k);
    bool agree = true;
    for (int n = 0; agree && n <= 12; ++n) {
      agree = gessel::conjectured_value(gessel::Family::VERT, k, n) == gessel::count_walks(2 * n + 2 * k, 0, n);
    }
    record("VERT k=" + std::to_string(k) + " printed formula", agree);
  }
  run_fit(gessel::FitFamily::P_K, 1);
  run_fit(gessel::FitFamily::Q_K, 1);
  {
    bool agree = true;
    for (int n = 0; agree && n <= 12; ++n) {
      agree = gessel::conjectured_value(gessel::Family::F201, 1, n) == gessel::count_walks(2 * n, 0, 1);
    }
    record("F201 printed formula", agree);
  }
  for (int k = 0; k <= 2; ++k) run_fit(gessel::FitFamily::RT_K, k);
  return {ok, checks};
}

int cmd_verify(const RunConfig& cfg) {
  json report;
  report["suite"] = cfg.suite;
  bool ok = false;

  if (cfg.suite == "gessel") {
    if (cfg.N < 0) throw UsageError("--N must be nonnegative");
    const auto r = gessel::verify_gessel(cfg.N);
    ok = r.all_agree;
    report["N"] = cfg.N;
    if (r.first_mismatch) {
      const int n = *r.first_mismatch;
      report["counterexample"] = {{"n", n},
                                  {"dp", r.values[static_cast<std::size_t>(n)].get_str()},
                                  {"closed", gessel::to_string(gessel::gessel_closed_form(n))}};
    }
  } else if (cfg.suite == "kernel" || cfg.suite == "hkernel" || cfg.suite == "root") {
    const gessel::Caps caps = parse_caps(cfg.caps);
    const auto r = cfg.suite == "kernel"    ? gessel::verify_kernel_equation(caps)
                   : cfg.suite == "hkernel" ? gessel::verify_H_equation(caps)
                                            : gessel::verify_root_identity(caps);
    ok = r.holds;
    report["caps"] = caps_text(caps);
    report["result"] = identity_json(r);
  } else if (cfg.suite == "cross_pipeline") {
    if (cfg.k_max < 0) throw UsageError("--k-max must be nonnegative");
    const auto sys = gessel::solve_forward(cfg.k_max);
    ok = true;
    for (std::int64_t k = 0; k <= cfg.k_max && ok; ++k) {
      const auto [i, j] = gessel::rho_inv(k);
      const ExactInt expected = gessel::f_entry(static_cast<int>(i), static_cast<int>(j));
      if (sys.x(k) != expected) {
        ok = false;
        report["counterexample"] = {{"k", k}, {"i", i}, {"j", j}, {"solve", sys.x(k).get_str()},
                                    {"dp", expected.get_str()}};
      }
    }
    report["k_max"] = cfg.k_max;
  } else if (cfg.suite == "recurrence_g") {
    if (cfg.N < 1) throw UsageError("--N must be at least 1");
    const auto r = gessel::verify_recurrence_g(cfg.N);
    ok = r.holds;
    report["N"] = cfg.N;
    report["range_checked"] = r.range_checked;
    if (r.first_failure) report["counterexample"] = {{"n", *r.first_failure}};
  } else if (cfg.suite == "families") {
    auto [pass, checks] = suite_families();
    ok = pass;
    report["checks"] = std::move(checks);
  } else {
    throw UsageError("unknown suite '" + cfg.suite + "'");
  }

  report["pass"] = ok;
  std::cout << report.dump() << '\n';
  return ok ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------- others

int cmd_universal(const RunConfig& cfg) {
  const auto seq = gessel::universal_sequence(cfg.i);
  switch (cfg.format) {
    case Format::text:
    case Format::csv: {
      const char* sep = cfg.format == Format::text ? ", " : ",";
      for (std::size_t t = 0; t < seq.size(); ++t) std::cout << (t ? sep : "") << seq[t].get_str();
      std::cout << '\n';
      break;
    }
    case Format::json: {
      json j;
      j["i"] = cfg.i;
      j["sequence"] = json::array();
      for (const auto& v : seq) j["sequence"].push_back(v.get_str());
      std::cout << j.dump() << '\n';
      break;
    }
  }
  return kExitOk;
}

int cmd_fit(const RunConfig& cfg) {
  const auto family = gessel::parse_fit_family(cfg.family);
  const auto fit = gessel::fit_family(family, cfg.k, cfg.held_out);
  const auto claims = gessel::verify_family_claims(fit);
  switch (cfg.format) {
    case Format::json:
      std::cout << gessel::fit_report_json(fit, claims) << '\n';
      break;
    case Format::csv:
      std::cout << "power,coef\n";
      for (std::size_t d = 0; d < fit.poly.coeffs().size(); ++d) {
        std::cout << d << ',' << gessel::to_string(fit.poly.coeffs()[d]) << '\n';
      }
      break;
    case Format::text:
      std::cout << gessel::fit_family_name(family) << " k=" << cfg.k << ": " << fit.poly.to_string() << '\n';
      std::cout << "degree " << fit.poly.degree() << " (claimed " << gessel::claimed_degree(family, cfg.k)
                << "), held-out points verified: " << fit.verified_extra << '\n';
      for (const auto& [name, pass] : claims.claims) std::cout << name << ": " << (pass ? "yes" : "no") << '\n';
      break;
  }
  return claims.all() ? kExitOk : kExitVerifyFailed;
}

int cmd_table(const RunConfig& cfg) {
  if (cfg.m_max < 0) throw UsageError("--m-max must be nonnegative");
  const auto table = gessel::shared_walk_table(cfg.m_max);
  switch (cfg.format) {
    case Format::json: {
      table->write_jsonl(std::cout, cfg.m_max);
      break;
    }
    case Format::csv:
    case Format::text:
      if (cfg.format == Format::csv) std::cout << "m,n1,n2,F\n";
      for (int m = 0; m <= cfg.m_max; ++m) {
        for (int n1 = 0; n1 <= m; ++n1) {
          for (int n2 = 0; n2 <= m; ++n2) {
            const ExactInt& v = table->at(m, n1, n2);
            if (v == 0) continue;
            if (cfg.format == Format::csv) {
              std::cout << m << ',' << n1 << ',' << n2 << ',' << v.get_str() << '\n';
            } else {
              std::cout << "F(" << m << "; " << n1 << ", " << n2 << ") = " << v.get_str() << '\n';
            }
          }
        }
      }
      break;
  }
  return kExitOk;
}

int cmd_hessenberg(const RunConfig& cfg) {
  if (cfg.n < 0) throw UsageError("--n must be nonnegative");
  const std::int64_t k = gessel::rho(2 * cfg.n + 1, 2 * cfg.n + 1);
  const auto h = gessel::hessenberg_for(k);
  const ExactInt det = gessel::hessenberg_det(h);
  if (cfg.format == Format::json) {
    json j;
    j["n"] = cfg.n;
    j["k"] = k;
    j["size"] = h.size();
    j["det"] = det.get_str();
    if (cfg.dump) {
      std::ostringstream rows;
      gessel::write_matrix_json(h.dense(), rows);
      j["matrix"] = json::parse(rows.str());
    }
    std::cout << j.dump() << '\n';
  } else if (cfg.dump) {
    gessel::write_matrix_csv(h.dense(), std::cout);
  } else if (cfg.format == Format::csv) {
    std::cout << "n,k,size,det\n" << cfg.n << ',' << k << ',' << h.size() << ',' << det.get_str() << '\n';
  } else {
    std::cout << "det H^(" << k << ") = " << det.get_str() << " (size " << h.size() << ")\n";
  }
  return kExitOk;
}

int cmd_series(const RunConfig& cfg) {
  const gessel::Caps caps = parse_caps(cfg.caps);
  gessel::TruncSeries3 s(caps);
  if (cfg.which == "G") {
    s = gessel::build_G(caps);
  } else if (cfg.which == "H") {
    s = gessel::build_H(caps);
  } else if (cfg.which == "K") {
    s = gessel::build_K(caps);
  } else if (cfg.which == "x") {
    s = gessel::x_of_yz(caps);
  } else if (cfg.which == "root_lhs") {
    s = gessel::root_identity_lhs(gessel::build_G(caps));
  } else {
    throw UsageError("unknown series '" + cfg.which + "'");
  }
  if (cfg.format == Format::csv) {
    std::cout << "ex,ey,ez,coef\n";
    for (const auto& [e, c] : s.terms()) std::cout << e[0] << ',' << e[1] << ',' << e[2] << ',' << c.get_str() << '\n';
  } else {
    s.write_json(std::cout);
    std::cout << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice-walk counts in the quarter plane with steps E, W, NE, SW"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  app.add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("text");
  app.add_option("--cache", cfg.cache_path, "Walk-table cache file (JSON lines); overrides $GESSEL_CACHE_DIR");

  auto* count = app.add_subcommand("count", "Print F(m; n1, n2)");
  count->add_option("--m", cfg.m, "Number of steps")->required();
  count->add_option("--n1", cfg.n1, "Endpoint x-coordinate")->required();
  count->add_option("--n2", cfg.n2, "Endpoint y-coordinate")->required();
  count->add_option("--method", cfg.method, "Pipeline")
      ->check(CLI::IsMember({"dp", "closed", "det", "multisum", "solve"}))
      ->capture_default_str();
  count->add_option("--chain-limit", cfg.chain_limit, "Largest k - m for the multisum pipeline")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run a verification suite; JSON report on stdout");
  verify->add_option("--suite", cfg.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"gessel", "kernel", "hkernel", "root", "cross_pipeline", "recurrence_g", "families"}));
  verify->add_option("--N", cfg.N, "Largest n checked")->capture_default_str();
  verify->add_option("--k-max", cfg.k_max, "Largest packed index (cross_pipeline)")->capture_default_str();
  verify->add_option("--caps", cfg.caps, "Series caps dx,dy,dz")->capture_default_str();

  auto* universal = app.add_subcommand("universal", "Print the i-th universal sequence");
  universal->add_option("--i", cfg.i, "Index, i >= 1")->required();

  auto* fit = app.add_subcommand("fit", "Fit a conjectured polynomial family");
  fit->add_option("--family", cfg.family, "p, q, r, s or rt")
      ->required()
      ->check(CLI::IsMember({"p", "q", "r", "s", "rt", "P_K", "Q_K", "R_K", "S_K", "RT_K"}));
  fit->add_option("--k", cfg.k, "Family index")->required();
  fit->add_option("--held-out", cfg.held_out, "Validation points past the interpolation samples")
      ->capture_default_str();

  auto* table = app.add_subcommand("table", "Export every nonzero F(m; n1, n2) with m <= m-max");
  table->add_option("--m-max", cfg.m_max, "Largest m")->required();

  auto* hessenberg = app.add_subcommand("hessenberg", "Hessenberg determinant for F(2n; 0, 0)");
  hessenberg->add_option("--n", cfg.n, "Gessel index n")->required();
  hessenberg->add_flag("--dump", cfg.dump, "Print the matrix");

  auto* series = app.add_subcommand("series", "Dump a truncated series");
  series->add_option("--which", cfg.which, "G, H, K, x or root_lhs")->capture_default_str();
  series->add_option("--caps", cfg.caps, "Caps dx,dy,dz")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    CacheSession cache(resolve_cache_path(cfg));
    if (count->parsed()) return cmd_count(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (universal->parsed()) return cmd_universal(cfg);
    if (fit->parsed()) return cmd_fit(cfg);
    if (table->parsed()) return cmd_table(cfg);
    if (hessenberg->parsed()) return cmd_hessenberg(cfg);
    if (series->parsed()) return cmd_series(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const gessel::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
