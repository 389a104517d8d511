#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "gmid/errors.hpp"
#include "gmid/extremal.hpp"
#include "gmid/law_json.hpp"
#include "gmid/max_ar1.hpp"
#include "gmid/stats.hpp"
#include "gmid/verify.hpp"

namespace gmid::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 42;

/// Raised for flag combinations that parse but fail validation.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LawFlags {
  std::string kind = "ggamma-mid";
  std::string family = "frechet";
  double alpha = 1.0;
  std::optional<double> beta;

  void attach(CLI::App& app, const std::string& kind_flag = "--kind") {
    app.add_option(kind_flag, kind, "law kind: base | gmid | gamma-mid | ggamma-mid")
        ->capture_default_str();
    app.add_option("--family", family, "exponent family: frechet | weibull | gumbel")
        ->capture_default_str();
    app.add_option("--alpha", alpha, "tail index (ignored for gumbel)")->capture_default_str();
    app.add_option("--beta", beta, "shape, required for gamma-mid and ggamma-mid");
  }

  MaxLaw law() const {
    const auto k = parse_kind(kind);
    const bool shaped = k == LawKind::GammaMID || k == LawKind::GGammaMID;
    if (shaped && !beta) throw UsageError("--beta is required for kind " + kind);
    return MaxLaw::make(k, Exponent::make(parse_family(family), alpha), beta.value_or(1.0));
  }
};

struct GridSpec {
  double lo;
  double hi;
  std::size_t count;
};

GridSpec parse_grid(const std::string& text) {
  std::istringstream is(text);
  GridSpec g{};
  char c1 = 0;
  char c2 = 0;
  if (!(is >> g.lo >> c1 >> g.hi >> c2 >> g.count) || c1 != ':' || c2 != ':' || !is.eof() ||
      g.count == 0 || !(g.lo <= g.hi)) {
    throw UsageError("grid must look like lo:hi:count with lo <= hi and count >= 1, got '" +
                     text + "'");
  }
  return g;
}

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

nlohmann::json num_json(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

/// Writes to --out when set, else to the fallback stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
    }
    os_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

void write_values(std::ostream& os, const std::string& format, const nlohmann::json& header,
                  const std::vector<double>& values) {
  if (format == "json") {
    nlohmann::json j = header;
    j["values"] = nlohmann::json::array();
    for (const double v : values) j["values"].push_back(num_json(v));
    os << j.dump(2) << "\n";
    return;
  }
  os << "value\n";
  for (const double v : values) os << num(v) << "\n";
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("GMID_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("GMID_SEED must be an unsigned integer");
    }
  }
  return kDefaultSeed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Max-infinitely-divisible laws, geometric maxima and related processes"};
  app.name("gmid");
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "csv";
  std::optional<std::uint64_t> seed_flag;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "output file (default: standard output)");
    sub->add_option("--seed", seed_flag, "random seed (default: $GMID_SEED or 42)");
  };
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
  };

  // table
  auto* table = app.add_subcommand("table", "tabulate cdf and -log cdf on a grid");
  LawFlags table_law;
  table_law.attach(*table);
  std::string table_grid;
  std::optional<std::size_t> table_qgrid;
  auto* grid_opt = table->add_option("--grid", table_grid, "lo:hi:count");
  table->add_option("--quantile-grid", table_qgrid, "count points at u = 0.001..0.999")
      ->excludes(grid_opt);
  add_common(table);
  add_format(table);

  // sample
  auto* sample = app.add_subcommand("sample", "draw i.i.d. samples");
  LawFlags sample_law;
  sample_law.attach(*sample);
  std::size_t sample_n = 0;
  std::string route = "inverse";
  sample->add_option("--n", sample_n, "number of draws")->required();
  sample->add_option("--route", route, "inverse | latent")
      ->check(CLI::IsMember({"inverse", "latent"}))
      ->capture_default_str();
  add_common(sample);
  add_format(sample);

  // ep
  auto* ep = app.add_subcommand("ep", "extremal process paths and time-changed marginals");
  LawFlags ep_law;
  ep_law.kind = "base";
  ep_law.attach(*ep, "--base");
  std::string compound = "none";
  double sub_beta = 1.0;
  double ep_t = 1.0;
  std::optional<std::size_t> ep_n;
  bool ep_path = false;
  std::string ep_grid = "1:10:10";
  ep->add_option("--compound", compound, "time change: none | gamma | ggamma")
      ->check(CLI::IsMember({"none", "gamma", "ggamma"}))
      ->capture_default_str();
  ep->add_option("--sub-beta", sub_beta, "shape of the ggamma clock")->capture_default_str();
  ep->add_option("--t", ep_t, "time of the marginal draws")->capture_default_str();
  ep->add_option("--n", ep_n, "number of marginal draws at --t");
  ep->add_flag("--path", ep_path, "emit one path (t, value) on --grid");
  ep->add_option("--grid", ep_grid, "path time grid lo:hi:count")->capture_default_str();
  add_common(ep);
  add_format(ep);

  // ar1
  auto* ar1 = app.add_subcommand("ar1", "simulate the stationary max-AR(1) chain");
  std::string ar1_family = "frechet";
  double ar1_alpha = 1.0;
  double ar1_beta = 1.0;
  double ar1_p = 0.5;
  std::size_t steps = 0;
  std::optional<double> x0;
  bool check = false;
  std::size_t chains = kMonteCarloSize;
  std::size_t lag = 100;
  std::optional<double> innovation_override;
  std::string summary_path;
  ar1->add_option("--family", ar1_family, "exponent family")->capture_default_str();
  ar1->add_option("--alpha", ar1_alpha, "tail index")->capture_default_str();
  ar1->add_option("--beta", ar1_beta, "shape of the stationary ggamma-mid marginal")
      ->capture_default_str();
  ar1->add_option("--p", ar1_p, "reset probability in (0,1)")->capture_default_str();
  ar1->add_option("--steps", steps, "chain length")->required();
  ar1->add_option("--x0", x0, "fixed start (default: stationary draw)");
  ar1->add_flag("--check", check, "KS-check the marginal across independent chains");
  ar1->add_option("--chains", chains, "chains for --check")->capture_default_str();
  ar1->add_option("--lag", lag, "lag for --check")->capture_default_str();
  ar1->add_option("--innovation-beta-override", innovation_override,
                  "innovation shape instead of p*beta");
  ar1->add_option("--summary", summary_path, "JSON summary file (default: standard error)");
  add_common(ar1);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run theorem checks");
  std::vector<std::string> ids;
  verify_cmd->add_option("ids", ids, "theorem ids or 'all'")->required();
  add_common(verify_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const std::uint64_t seed = seed_flag ? *seed_flag : default_seed();

    if (table->parsed()) {
      const auto law = table_law.law();
      std::vector<double> grid;
      if (table_qgrid) {
        if (*table_qgrid == 0) throw UsageError("--quantile-grid needs at least one point");
        grid = quantile_grid(law, *table_qgrid);
      } else {
        const auto g = parse_grid(table_grid.empty() ? "0.1:10:100" : table_grid);
        grid = linear_grid(g.lo, g.hi, g.count);
      }
      Sink sink(out_path, out);
      auto& os = sink.stream();
      if (format == "json") {
        nlohmann::json j = {{"law", law_to_json(law)}, {"rows", nlohmann::json::array()}};
        for (const double x : grid) {
          j["rows"].push_back(
              {{"x", x}, {"cdf", cdf(law, x)}, {"neg_log_cdf", num_json(neg_log_cdf(law, x))}});
        }
        os << j.dump(2) << "\n";
      } else {
        os << "x,cdf,neg_log_cdf\n";
        for (const double x : grid) {
          os << num(x) << "," << num(cdf(law, x)) << "," << num(neg_log_cdf(law, x)) << "\n";
        }
      }
      return kOk;
    }

    if (sample->parsed()) {
      const auto law = sample_law.law();
      if (sample_n == 0) throw UsageError("--n must be at least 1");
      RandomSource rng(seed);
      const auto values = route == "latent" ? sample_latent(law, rng, sample_n)
                                            : sample_inverse(law, rng, sample_n);
      Sink sink(out_path, out);
      write_values(sink.stream(), format,
                   {{"law", law_to_json(law)}, {"route", route}, {"seed", seed}}, values);
      return kOk;
    }

    if (ep->parsed()) {
      const ExtremalSpec spec{ep_law.law()};
      const std::optional<SubordinatorSpec> sub =
          compound == "gamma"    ? std::optional(SubordinatorSpec::gamma_process())
          : compound == "ggamma" ? std::optional(SubordinatorSpec::ggamma_at_unit_time(sub_beta))
                                 : std::nullopt;
      if (ep_path == ep_n.has_value()) throw UsageError("pass exactly one of --path or --n");
      RandomSource rng(seed);
      Sink sink(out_path, out);
      auto& os = sink.stream();
      if (ep_path) {
        const auto g = parse_grid(ep_grid);
        const auto times = linear_grid(g.lo, g.hi, g.count);
        const auto path =
            sub ? time_changed_path(spec, *sub, times, rng) : ep_simulate_path(spec, times, rng);
        if (format == "json") {
          nlohmann::json j = {{"law", law_to_json(spec.base_law)},
                              {"compound", compound},
                              {"seed", seed},
                              {"rows", nlohmann::json::array()}};
          for (std::size_t i = 0; i < path.times.size(); ++i) {
            j["rows"].push_back({{"t", path.times[i]}, {"value", num_json(path.values[i])}});
          }
          os << j.dump(2) << "\n";
        } else {
          os << "t,value\n";
          for (std::size_t i = 0; i < path.times.size(); ++i) {
            os << num(path.times[i]) << "," << num(path.values[i]) << "\n";
          }
        }
        return kOk;
      }
      if (*ep_n == 0) throw UsageError("--n must be at least 1");
      std::vector<double> values;
      if (sub) {
        values = compound_simulate(spec, *sub, ep_t, rng, *ep_n);
      } else {
        values.reserve(*ep_n);
        for (std::size_t i = 0; i < *ep_n; ++i) {
          values.push_back(ep_marginal_quantile(spec, ep_t, rng.uniform()));
        }
      }
      write_values(os, format,
                   {{"law", law_to_json(spec.base_law)},
                    {"compound", compound},
                    {"t", ep_t},
                    {"seed", seed}},
                   values);
      return kOk;
    }

    if (ar1->parsed()) {
      const Ar1Spec spec{ar1_p, ar1_beta, Exponent::make(parse_family(ar1_family), ar1_alpha),
                         innovation_override};
      spec.validate();
      if (steps == 0) throw UsageError("--steps must be at least 1");
      const Ar1Init init = x0 ? Ar1Init::fixed(*x0) : Ar1Init::stationary();
      RandomSource chain_rng(seed, 0);
      const auto chain = ar1_simulate(spec, steps, init, chain_rng);
      {
        Sink sink(out_path, out);
        auto& os = sink.stream();
        os << "step,value\n";
        for (std::size_t k = 0; k < chain.size(); ++k) os << k + 1 << "," << num(chain[k]) << "\n";
      }
      if (!check) return kOk;
      if (chains == 0) throw UsageError("--chains must be at least 1");
      RandomSource check_rng(seed, 1);
      std::vector<double> states;
      states.reserve(chains);
      for (std::size_t c = 0; c < chains; ++c) {
        states.push_back(ar1_state_at(spec, lag, init, check_rng));
      }
      const auto marginal = spec.marginal_law();
      const auto ks = ks_one_sample(states, [&](double x) { return cdf(marginal, x); });
      const nlohmann::json summary = {{"p", spec.p},
                                      {"beta", spec.marginal_beta},
                                      {"innovation_beta", spec.innovation_beta()},
                                      {"chains", chains},
                                      {"lag", lag},
                                      {"seed", seed},
                                      {"ks_statistic", ks.statistic},
                                      {"critical_value", ks.critical_value},
                                      {"pass", ks.pass}};
      if (summary_path.empty()) {
        err << summary.dump(2) << "\n";
      } else {
        Sink sink(summary_path, err);
        sink.stream() << summary.dump(2) << "\n";
      }
      return ks.pass ? kOk : kCheckFailed;
    }

    if (verify_cmd->parsed()) {
      std::vector<TheoremId> todo;
      for (const auto& id : ids) {
        if (id == "all") {
          todo.assign(kAllTheorems.begin(), kAllTheorems.end());
        } else {
          todo.push_back(parse_theorem(id));
        }
      }
      nlohmann::json reports = nlohmann::json::array();
      bool all_pass = true;
      out << std::left << std::setw(6) << "id" << std::setw(13) << "mode" << std::setw(15)
          << "discrepancy" << std::setw(13) << "tolerance" << "result\n";
      for (const auto id : todo) {
        const auto report = verify(id, seed);
        all_pass = all_pass && report.pass;
        reports.push_back(to_json(report));
        out << std::left << std::setw(6) << to_string(id) << std::setw(13)
            << to_string(report.mode) << std::setw(15) << std::setprecision(6)
            << report.discrepancy << std::setw(13) << report.tolerance
            << (report.pass ? "PASS" : "FAIL") << "\n";
      }
      if (!out_path.empty()) {
        Sink sink(out_path, out);
        sink.stream() << reports.dump(2) << "\n";
      }
      return all_pass ? kOk : kCheckFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace gmid::cli
