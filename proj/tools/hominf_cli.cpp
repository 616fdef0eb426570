// Command-line front end: sphere packs, exact occupancy and risk values,
// Monte Carlo risk, sweeps to CSV, sample complexity and Betti numbers.

#include <cmath>
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hominf/format.hpp"
#include "hominf/hominf.hpp"

namespace {

using hominf::format_double;

struct PackArgs {
  int d = 1;
  int D = 2;
  double tau = 1.0 / 16.0;
};

void add_pack_options(CLI::App* cmd, PackArgs& args) {
  cmd->add_option("--d", args.d, "Intrinsic dimension of each sphere")->required();
  cmd->add_option("--D", args.D, "Ambient dimension")->required();
  cmd->add_option("--tau", args.tau, "Sphere radius (condition number 1/tau)")->required();
}

constexpr const char* kFamilyNote =
    "# risk measured over the two-hypothesis sphere-pack family only; not a certified sup over "
    "all distributions";

void print_kv(const std::string& key, const std::string& value) {
  std::cout << key << '=' << value << '\n';
}
void print_kv(const std::string& key, double value) { print_kv(key, format_double(value)); }
void print_kv(const std::string& key, std::size_t value) { print_kv(key, std::to_string(value)); }

void run_pack(const PackArgs& a) {
  const auto pack = hominf::build_pack(a.d, a.D, a.tau);
  print_kv("d", std::to_string(a.d));
  print_kv("D", std::to_string(a.D));
  print_kv("tau", a.tau);
  print_kv("g", pack.grid_size());
  print_kv("m", pack.count());
  print_kv("total_volume", pack.total_volume());
  print_kv("density_floor", hominf::density_floor(pack));
  print_kv("ball_volume_density_floor", hominf::ball_volume_density_floor(pack));
  const std::size_t shown = std::min<std::size_t>(pack.count(), 8);
  for (std::size_t i = 0; i < shown; ++i) {
    std::string coords;
    for (const double c : pack.center(i)) {
      if (!coords.empty()) coords += ',';
      coords += format_double(c);
    }
    print_kv("center[" + std::to_string(i) + "]", coords);
  }
  if (shown < pack.count()) print_kv("centers_omitted", pack.count() - shown);
  const auto report = hominf::validate_pack(pack);
  for (const auto& check : report.checks) {
    print_kv("check." + check.name, std::string(check.passed ? "pass" : "FAIL") + " (" +
                                        check.detail + ")");
  }
  print_kv("valid", std::string(report.all_passed() ? "true" : "false"));
}

void print_estimate(const hominf::RiskEstimate& est) {
  print_kv("trials", est.trials);
  print_kv("type1_hat", est.type_one_hat);
  print_kv("type2_hat", est.type_two_hat);
  print_kv("risk_hat", est.risk_hat);
  print_kv("stderr", est.stderr_hat);
  if (est.exact_type_one) print_kv("exact_type1", *est.exact_type_one);
  if (est.exact_type_two) print_kv("exact_type2", *est.exact_type_two);
  if (est.exact_type_one && est.exact_type_two) {
    print_kv("exact_total", *est.exact_type_one + *est.exact_type_two);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sphere-pack homology testing bench"};
  app.require_subcommand(1);

  PackArgs pack_args;
  auto* pack_cmd = app.add_subcommand("pack", "Build and validate a sphere pack");
  add_pack_options(pack_cmd, pack_args);

  std::size_t coupon_m = 0;
  std::size_t coupon_n = 0;
  std::optional<double> coupon_c;
  bool coupon_asymptotic = false;
  auto* coupon_cmd = app.add_subcommand("coupon", "Probability that some bin stays empty");
  coupon_cmd->add_option("--m", coupon_m, "Number of bins (spheres)")->required();
  coupon_cmd->add_option("--n", coupon_n, "Number of balls (points)")->required();
  auto* exact_flag = coupon_cmd->add_flag("--exact", "Exact inclusion-exclusion value (default)");
  auto* asym_flag =
      coupon_cmd->add_flag("--asymptotic", coupon_asymptotic, "Limit 1 - exp(-exp(c))");
  exact_flag->excludes(asym_flag);
  coupon_cmd->add_option("--c", coupon_c, "Constant c; defaults to ln m - n/m")
      ->needs(asym_flag);

  std::size_t risk_m = 0;
  std::size_t risk_n = 0;
  auto* exact_cmd = app.add_subcommand("risk-exact", "Exact risk of the likelihood-ratio test");
  exact_cmd->add_option("--m", risk_m, "Number of spheres")->required();
  exact_cmd->add_option("--n", risk_n, "Sample size")->required();

  PackArgs mc_pack;
  hominf::TrialConfig mc;
  std::string mc_test = "lrt";
  std::optional<double> mc_scale;
  auto* mc_cmd = app.add_subcommand("risk-mc", "Monte Carlo testing risk");
  add_pack_options(mc_cmd, mc_pack);
  mc_cmd->add_option("--n", mc.n, "Sample size")->required();
  mc_cmd->add_option("--trials", mc.trials, "Trials per hypothesis")->required();
  mc_cmd->add_option("--seed", mc.master_seed, "Master seed")->required();
  mc_cmd->add_option("--test", mc_test, "lrt | occupancy | estimator")
      ->check(CLI::IsMember({"lrt", "occupancy", "estimator"}));
  mc_cmd->add_option("--scale", mc_scale, "Estimator scale (default tau)");
  mc_cmd->add_option("--threads", mc.threads, "Worker threads (0 = all cores)");

  PackArgs sw_pack;
  hominf::TrialConfig sw;
  std::string sw_test = "lrt";
  std::optional<double> sw_scale;
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::size_t n_step = 1;
  double sw_delta = 0.5;
  std::string sw_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "Risk over a range of n, written as CSV");
  add_pack_options(sweep_cmd, sw_pack);
  sweep_cmd->add_option("--n-min", n_min)->required();
  sweep_cmd->add_option("--n-max", n_max)->required();
  sweep_cmd->add_option("--n-step", n_step)->required()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--trials", sw.trials)->required();
  sweep_cmd->add_option("--seed", sw.master_seed)->required();
  sweep_cmd->add_option("--test", sw_test, "lrt | occupancy | estimator")
      ->check(CLI::IsMember({"lrt", "occupancy", "estimator"}));
  sweep_cmd->add_option("--scale", sw_scale, "Estimator scale (default tau)");
  sweep_cmd->add_option("--delta", sw_delta, "Cap of the rate envelope")->required();
  sweep_cmd->add_option("--out", sw_out, "CSV output path")->required();
  sweep_cmd->add_option("--threads", sw.threads, "Worker threads (0 = all cores)");

  PackArgs cx_pack;
  double epsilon = 0.1;
  std::size_t cx_n_min = 1;
  std::size_t cx_n_max = 0;
  auto* complexity_cmd =
      app.add_subcommand("complexity", "Smallest n whose exact LRT risk is <= epsilon");
  add_pack_options(complexity_cmd, cx_pack);
  complexity_cmd->add_option("--epsilon", epsilon)->required();
  complexity_cmd->add_option("--n-max", cx_n_max)->required();
  complexity_cmd->add_option("--n-min", cx_n_min, "Start of the scan (default 1)");

  std::string hom_input;
  double hom_scale = 0.0;
  int hom_max_dim = 2;
  auto* homology_cmd = app.add_subcommand("homology", "Betti numbers of a Rips complex");
  homology_cmd->add_option("--input", hom_input, "Point file (CSV rows, no header)")
      ->required()
      ->check(CLI::ExistingFile);
  homology_cmd->add_option("--scale", hom_scale, "Rips scale")->required();
  homology_cmd->add_option("--max-dim", hom_max_dim, "Top simplex dimension (1..3)")->required();

  PackArgs smp_pack;
  std::size_t smp_n = 0;
  std::uint64_t smp_seed = 0;
  std::string smp_hyp = "null";
  std::string smp_out;
  auto* sample_cmd = app.add_subcommand("sample", "Write a sample from a pack as a point file");
  add_pack_options(sample_cmd, smp_pack);
  sample_cmd->add_option("--n", smp_n)->required();
  sample_cmd->add_option("--seed", smp_seed)->required();
  sample_cmd->add_option("--hypothesis", smp_hyp, "null | mixture | removed sphere index");
  sample_cmd->add_option("--out", smp_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*pack_cmd) {
      run_pack(pack_args);
    } else if (*coupon_cmd) {
      if (coupon_asymptotic) {
        const auto md = static_cast<double>(coupon_m);
        const double c = coupon_c.value_or(std::log(md) - static_cast<double>(coupon_n) / md);
        print_kv("c", c);
        print_kv("miss_prob_limit", hominf::coupon_limit(c));
      } else {
        const double all = hominf::prob_all_occupied(coupon_m, coupon_n);
        print_kv("prob_all_occupied", all);
        print_kv("miss_prob", 1.0 - all);
      }
    } else if (*exact_cmd) {
      const auto r = hominf::exact_lrt_risk(risk_m, risk_n);
      print_kv("m", r.m);
      print_kv("n", r.n);
      print_kv("k_threshold", r.k_threshold);
      print_kv("rejection_start", hominf::lrt_rejection_start(risk_m, risk_n));
      print_kv("type1", r.type_one);
      print_kv("type2", r.type_two);
      print_kv("total", r.total);
    } else if (*mc_cmd) {
      mc.d = mc_pack.d;
      mc.D = mc_pack.D;
      mc.tau = mc_pack.tau;
      mc.test = hominf::parse_test_kind(mc_test);
      mc.scale = mc_scale;
      const auto pack = hominf::build_pack(mc.d, mc.D, mc.tau);
      std::cout << kFamilyNote << '\n';
      print_kv("m", pack.count());
      print_kv("n", mc.n);
      print_kv("seed", std::to_string(mc.master_seed));
      print_kv("test", std::string(hominf::to_string(mc.test)));
      print_estimate(hominf::mc_risk(mc));
    } else if (*sweep_cmd) {
      if (n_max < n_min) throw std::invalid_argument("--n-max must be >= --n-min");
      sw.d = sw_pack.d;
      sw.D = sw_pack.D;
      sw.tau = sw_pack.tau;
      sw.test = hominf::parse_test_kind(sw_test);
      sw.scale = sw_scale;
      sw.delta = sw_delta;
      std::vector<std::size_t> ns;
      for (std::size_t n = n_min; n <= n_max; n += n_step) ns.push_back(n);
      const auto rows = hominf::sweep_n(sw, ns);
      hominf::emit_csv(rows, sw_out);
      std::cout << kFamilyNote << '\n';
      print_kv("rows", rows.size());
      print_kv("out", sw_out);
    } else if (*complexity_cmd) {
      hominf::TrialConfig c;
      c.d = cx_pack.d;
      c.D = cx_pack.D;
      c.tau = cx_pack.tau;
      c.test = hominf::TestKind::kLrt;
      const auto m = hominf::build_pack(c.d, c.D, c.tau).count();
      print_kv("m", m);
      print_kv("epsilon", epsilon);
      const auto n = hominf::sample_complexity(c, epsilon, cx_n_min, cx_n_max);
      if (n) {
        print_kv("n_epsilon", *n);
        print_kv("exact_total", hominf::exact_lrt_risk(m, *n).total);
      } else {
        print_kv("n_epsilon", std::string("not achieved"));
      }
    } else if (*homology_cmd) {
      const auto points = hominf::read_point_file(hom_input);
      const auto complex = hominf::rips(points, hom_scale, hom_max_dim);
      const auto profile = hominf::betti(complex);
      print_kv("points", points.size());
      print_kv("scale", hom_scale);
      for (int q = 0; q <= complex.max_dim(); ++q) {
        print_kv("simplices_" + std::to_string(q), complex.size(q));
      }
      for (int q = 0; q < complex.max_dim(); ++q) {
        print_kv("betti_" + std::to_string(q), profile.beta(q));
      }
      print_kv("euler_characteristic", std::to_string(profile.euler_characteristic));
    } else if (*sample_cmd) {
      const auto pack = hominf::build_pack(smp_pack.d, smp_pack.D, smp_pack.tau);
      hominf::Hypothesis hyp = hominf::Hypothesis::null();
      if (smp_hyp == "mixture") {
        hyp = hominf::Hypothesis::mixture();
      } else if (smp_hyp != "null") {
        hyp = hominf::Hypothesis::alternate(std::stoul(smp_hyp));
      }
      const auto s = hominf::sample(pack, hyp, smp_n, smp_seed);
      hominf::write_point_file(smp_out, s.points);
      print_kv("points", s.size());
      if (s.removed_index) print_kv("removed_index", *s.removed_index);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
