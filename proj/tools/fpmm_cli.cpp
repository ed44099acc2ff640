// fpmm command-line front end: correctness suites, benchmarks, crossover
// tables, and multiword-vs-CRT product-count comparisons.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "fpmm/driver.hpp"
#include "fpmm/matrix_io.hpp"

namespace {

using namespace fpmm;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::vector<Variant> parse_variants(const std::vector<std::string>& specs) {
  std::vector<Variant> out;
  for (const std::string& s : specs) {
    if (s == "auto" || s == "all") return {};
    int u = 0, v = 0;
    if (std::sscanf(s.c_str(), "%d,%d", &u, &v) != 2 || u < 1 || v < 1)
      throw CLI::ValidationError("--variant", "expected u,v or auto, got '" + s + "'");
    out.push_back({u, v});
  }
  return out;
}

driver::Dims parse_dims(const std::string& s) {
  long long m = 0, k = 0, n = 0;
  if (std::sscanf(s.c_str(), "%lld,%lld,%lld", &m, &k, &n) != 3 || m < 1 || k < 1 || n < 1)
    throw CLI::ValidationError("--dims", "expected m,k,n, got '" + s + "'");
  return {m, k, n};
}

std::optional<u64> parse_lambda(const std::string& s) {
  if (s == "auto") return std::nullopt;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--lambda", "expected auto or a positive integer");
  }
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw IoError("cannot open " + path + " for writing");
  return file;
}

int do_check(const driver::CheckConfig& cfg, int t, bool quiet) {
  driver::CheckReport report =
      t == 24 ? driver::run_check<float>(cfg) : driver::run_check<double>(cfg);
  for (const auto& c : report.cases) {
    const char* tag = c.status == driver::CaseResult::Status::pass     ? "PASS"
                      : c.status == driver::CaseResult::Status::fail   ? "FAIL"
                                                                       : "SKIP";
    if (!quiet || c.status == driver::CaseResult::Status::fail)
      std::cout << tag << "  " << c.note << "\n";
  }
  std::cout << "check: " << report.passed << " passed, " << report.failed << " failed, "
            << report.skipped << " skipped\n";
  return report.ok() ? kExitOk : kExitMismatch;
}

int do_bench(const driver::BenchConfig& cfg, int t, const std::string& out_path) {
  auto records = t == 24 ? driver::run_bench<float>(cfg) : driver::run_bench<double>(cfg);
  std::ofstream file;
  write_bench_csv(open_out(file, out_path), records);
  return kExitOk;
}

int do_plan(int bits, driver::Dims d, int t, u64 min_lambda) {
  ProductPlan plan = select_variant(bits, d.m, d.k, d.n, t, min_lambda);
  std::cout << "variant " << variant_name(plan.variant()) << "\n"
            << "lambda " << plan.lambda << "\n"
            << "concat " << concat_name(plan.concat) << "\n"
            << "products " << plan.predicted_products << "\n"
            << "reductions " << plan.predicted_reductions << "\n"
            << "storage_entries " << plan.storage_entries << "\n";
  std::cout << "bit_limits";
  for (Variant v : kVariants)
    std::cout << ' ' << variant_name(v) << '=' << variant_bit_limit(v.u, v.v, t);
  std::cout << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact modular matrix multiplication in floating-point arithmetic"};
  app.require_subcommand(1);

  int t = 53;
  app.add_option("--t", t, "significand width (53: binary64, 24: binary32)")
      ->check(CLI::IsMember({24, 53}))
      ->capture_default_str();

  // check
  auto* check = app.add_subcommand("check", "verify products against the exact integer oracle");
  std::vector<std::string> check_dims, check_variants;
  std::vector<int> check_bits;
  std::string check_lambda = "auto", check_kernel = "naive", check_op = "plain", dump_dir;
  u64 check_seed = 1;
  int check_seeds = 3;
  bool checked = false, quiet = false;
  check->add_option("--dims", check_dims, "m,k,n (repeatable; default suite shapes)");
  check->add_option("--bits", check_bits, "prime bitsizes (default suite list)");
  check->add_option("--variant", check_variants, "u,v or auto (repeatable)");
  check->add_option("--lambda", check_lambda, "block size override (auto: planned)");
  check->add_option("--kernel", check_kernel)->check(CLI::IsMember({"naive", "accelerated"}));
  check->add_option("--op", check_op)->check(CLI::IsMember({"plain", "concat", "workspace"}));
  check->add_option("--seed", check_seed, "base PRNG seed");
  check->add_option("--seeds", check_seeds, "number of consecutive seeds");
  check->add_flag("--checked", checked, "also run the exact-integer shadow replay");
  check->add_flag("--quiet", quiet, "print only failures and the summary");
  check->add_option("--dump-dir", dump_dir, "write failing inputs as matrix files here");

  // bench
  auto* bench = app.add_subcommand("bench", "measure effective Gflops/s, emit CSV");
  std::string bench_scenario = "square", bench_dims, bench_lambda = "auto",
              bench_kernel = "naive", bench_concat = "off", bench_out;
  std::vector<std::string> bench_variants;
  std::vector<int> bench_bits;
  double bench_scale = 1.0;
  int bench_runs = 10, bench_threads = 0;
  u64 bench_seed = 1;
  bench->add_option("--scenario", bench_scenario)->check(CLI::IsMember({"square", "unbalanced"}));
  bench->add_option("--dims", bench_dims, "m,k,n (overrides the scenario preset)");
  bench->add_option("--scale", bench_scale, "scale factor for the preset dims");
  bench->add_option("--bits", bench_bits, "bitsize sweep");
  bench->add_option("--variant", bench_variants, "u,v or auto (repeatable)");
  bench->add_option("--concat", bench_concat, "auto|a|b|off")
      ->check(CLI::IsMember({"auto", "a", "b", "off"}));
  bench->add_option("--lambda", bench_lambda, "block size override (auto: planned)");
  bench->add_option("--kernel", bench_kernel)->check(CLI::IsMember({"naive", "accelerated"}));
  bench->add_option("--runs", bench_runs, "runs averaged per point");
  bench->add_option("--seed", bench_seed);
  bench->add_option("--threads", bench_threads, "accelerated-kernel thread count");
  bench->add_option("--out", bench_out, "CSV path (default stdout)");

  // crossover
  auto* crossover = app.add_subcommand("crossover", "best-variant bitsize intervals from a bench CSV");
  std::string crossover_in, crossover_out;
  crossover->add_option("csv", crossover_in, "bench CSV path")->required();
  crossover->add_option("--out", crossover_out);

  // crt-compare
  auto* crt = app.add_subcommand("crt-compare", "multiword vs multimodular product counts");
  std::vector<u64> crt_lambdas = {1, 512};
  u64 crt_k = 32768;
  int crt_lo = 3, crt_hi = 52;
  std::string crt_out;
  crt->add_option("--lambda", crt_lambdas, "block sizes (default 1 512)");
  crt->add_option("--k", crt_k, "inner dimension in the CRT bound");
  crt->add_option("--bits-lo", crt_lo);
  crt->add_option("--bits-hi", crt_hi);
  crt->add_option("--out", crt_out, "CSV path (default stdout)");

  // plan
  auto* plan = app.add_subcommand("plan", "variant/block-size plan for a bitsize and shape");
  int plan_bits = 0;
  std::string plan_dims = "1024,1024,1024";
  u64 plan_min_lambda = 1;
  plan->add_option("--bits", plan_bits, "modulus bitsize")->required();
  plan->add_option("--dims", plan_dims, "m,k,n");
  plan->add_option("--min-lambda", plan_min_lambda, "smallest acceptable block size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check) {
      driver::CheckConfig cfg;
      if (!check_dims.empty()) {
        cfg.dims.clear();
        for (const auto& s : check_dims) cfg.dims.push_back(parse_dims(s));
      }
      if (!check_bits.empty()) cfg.bits = check_bits;
      if (!check_variants.empty()) {
        auto vs = parse_variants(check_variants);
        if (!vs.empty()) cfg.variants = vs;
      }
      cfg.lambda = parse_lambda(check_lambda);
      cfg.kernel = check_kernel;
      cfg.seed = check_seed;
      cfg.num_seeds = check_seeds;
      cfg.checked = checked;
      cfg.dump_dir = dump_dir;
      cfg.op = check_op == "concat"      ? driver::ProductOp::concat
               : check_op == "workspace" ? driver::ProductOp::workspace
                                         : driver::ProductOp::plain;
      return do_check(cfg, t, quiet);
    }
    if (*bench) {
      driver::BenchConfig cfg;
      cfg.scenario = bench_scenario;
      if (!bench_dims.empty()) cfg.dims = parse_dims(bench_dims);
      cfg.scale = bench_scale;
      if (!bench_bits.empty()) cfg.bits = bench_bits;
      cfg.variants = parse_variants(bench_variants);
      cfg.concat = bench_concat != "off";
      cfg.side = bench_concat == "a"   ? ConcatSide::a
                 : bench_concat == "b" ? ConcatSide::b
                                       : ConcatSide::auto_pick;
      cfg.lambda = parse_lambda(bench_lambda);
      cfg.kernel = bench_kernel;
      cfg.runs = bench_runs;
      cfg.seed = bench_seed;
      cfg.threads = bench_threads;
      return do_bench(cfg, t, bench_out);
    }
    if (*crossover) {
      auto rows = crossover_table(read_bench_csv_file(crossover_in));
      std::ofstream file;
      write_crossover(open_out(file, crossover_out), rows);
      return kExitOk;
    }
    if (*crt) {
      auto rows = crt_compare_table(t, crt_lambdas, crt_k, crt_lo, crt_hi);
      std::ofstream file;
      write_crt_csv(open_out(file, crt_out), t, crt_k, rows);
      std::cerr << "note: s_crt is a lower bound; coprime moduli cannot all sit at the "
                   "maximum, so the true count may be slightly higher\n";
      return kExitOk;
    }
    if (*plan) return do_plan(plan_bits, parse_dims(plan_dims), t, plan_min_lambda);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}
