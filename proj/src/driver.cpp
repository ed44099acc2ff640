#include "fpmm/driver.hpp"

#include <chrono>
#include <cmath>

#include "fpmm/matrix_io.hpp"
#include "fpmm/oracle.hpp"
#include "fpmm/shadow.hpp"

namespace fpmm::driver {

namespace {

u64 matrix_seed(u64 seed, int bits, Dims d, u64 which) {
  u64 h = mix_seed(seed, static_cast<u64>(bits));
  h = mix_seed(h, static_cast<u64>(d.m));
  h = mix_seed(h, static_cast<u64>(d.k));
  h = mix_seed(h, static_cast<u64>(d.n));
  return mix_seed(h, which);
}

template <typename T>
const GemmKernel<T>& lookup_kernel(const std::string& name) {
  const GemmKernel<T>* k = kernel_by_name<T>(name);
  if (!k) throw Error("unknown or unavailable kernel '" + name + "'");
  return *k;
}

std::string case_label(Variant var, int bits, Dims d, u64 seed) {
  return variant_name(var) + " bits=" + std::to_string(bits) + " dims=" + std::to_string(d.m) +
         "x" + std::to_string(d.k) + "x" + std::to_string(d.n) +
         " seed=" + std::to_string(seed);
}

}  // namespace

template <typename T>
CheckReport run_check(const CheckConfig& cfg) {
  constexpr int t = FpContext<T>::t;
  const GemmKernel<T>& kernel = lookup_kernel<T>(cfg.kernel);
  CheckReport report;

  for (const Dims& d : cfg.dims) {
    if (std::max({d.m, d.k, d.n}) > cfg.oracle_cap)
      throw Error("check: dims exceed the oracle cap of " + std::to_string(cfg.oracle_cap));
  }

  for (const Dims& d : cfg.dims) {
    for (int bits : cfg.bits) {
      for (int s = 0; s < cfg.num_seeds; ++s) {
        const u64 seed = cfg.seed + static_cast<u64>(s);
        std::optional<FpContext<T>> ctx;
        std::optional<Mat<T>> A, B;
        std::optional<oracle::BigMat> want;
        std::string bits_problem;
        if (bits > t - 1) {
          bits_problem = "modulus unrepresentable at t=" + std::to_string(t);
        } else {
          const u64 p = prev_prime(u64{1} << bits);
          if (p < 5 || bitsize(p) != bits)
            bits_problem = "no usable prime of bitsize " + std::to_string(bits);
          else
            ctx = FpContext<T>::make(p);
        }

        for (Variant var : cfg.variants) {
          CaseResult r{var, bits, d, seed, CaseResult::Status::skipped, {}};
          if (!bits_problem.empty()) {
            r.note = bits_problem;
          } else if (!variant_admits_bits(var, bits, t)) {
            r.note = "skipped (over variant bit limit " +
                     std::to_string(variant_bit_limit(var.u, var.v, t)) + ")";
          } else {
            const u64 p = ctx->p();
            if (!A) {
              A = random_mat<T>(d.m, d.k, p, matrix_seed(seed, bits, d, 0xA));
              B = random_mat<T>(d.k, d.n, p, matrix_seed(seed, bits, d, 0xB));
              want = oracle::exact_mod_gemm(oracle::to_big(*A), oracle::to_big(*B),
                                            oracle::BigInt(p));
            }
            u64 lambda = cfg.lambda ? *cfg.lambda
                                    : std::min<u64>(*mw_block_size(var.u, var.v, p, t),
                                                    static_cast<u64>(std::max<index_t>(d.k, 1)));
            try {
              Mat<T> C;
              switch (cfg.op) {
                case ProductOp::plain:
                  C = mw_product(*A, *B, var.u, var.v, lambda, *ctx, kernel);
                  break;
                case ProductOp::concat:
                  C = mw_product_concat(*A, *B, var.u, var.v, lambda, *ctx, kernel);
                  break;
                case ProductOp::workspace:
                  C = mw_product_workspace(*A, *B, var.u, var.v, lambda, *ctx, kernel);
                  break;
              }
              auto mismatch = oracle::first_mismatch(C, *want);
              if (mismatch) {
                r.status = CaseResult::Status::fail;
                r.note = "mismatch at (" + std::to_string(mismatch->row) + "," +
                         std::to_string(mismatch->col) + "): got " + mismatch->got + ", want " +
                         mismatch->want;
                if (!cfg.dump_dir.empty()) {
                  if constexpr (std::is_same_v<T, double>) {
                    io::write_matrix_file(cfg.dump_dir + "/fail_A.txt", *A, p);
                    io::write_matrix_file(cfg.dump_dir + "/fail_B.txt", *B, p);
                  }
                }
              } else if (cfg.checked) {
                auto verdict = oracle::shadow_check_mw(
                    *A, *B, var.u, var.v, lambda, *ctx,
                    cfg.op == ProductOp::workspace ? oracle::MwStyle::workspace
                                                   : oracle::MwStyle::inplace);
                if (!verdict.ok) {
                  r.status = CaseResult::Status::fail;
                  r.note = "shadow: " + verdict.describe();
                } else {
                  r.status = CaseResult::Status::pass;
                }
              } else {
                r.status = CaseResult::Status::pass;
              }
            } catch (const InfeasibleError& e) {
              r.status = cfg.lambda ? CaseResult::Status::fail : CaseResult::Status::skipped;
              r.note = e.what();
            }
          }
          r.note = case_label(var, bits, d, seed) + ": " + r.note;
          switch (r.status) {
            case CaseResult::Status::pass: ++report.passed; break;
            case CaseResult::Status::fail: ++report.failed; break;
            case CaseResult::Status::skipped: ++report.skipped; break;
          }
          report.cases.push_back(std::move(r));
        }
      }
    }
  }
  return report;
}

Dims preset_dims(const std::string& scenario, double scale) {
  auto scaled = [&](index_t base, index_t quantum, index_t floor_to) {
    double v = static_cast<double>(base) * scale;
    index_t q = static_cast<index_t>(std::llround(v / static_cast<double>(quantum))) * quantum;
    return std::max(q, floor_to);
  };
  if (scenario == "square") {
    index_t n = scaled(10016, 32, 32);
    return {n, n, n};
  }
  if (scenario == "unbalanced") {
    return {std::max<index_t>(static_cast<index_t>(std::llround(10923 * scale)), 1),
            scaled(32768, 32, 32), 32};
  }
  throw Error("unknown scenario '" + scenario + "' (square|unbalanced)");
}

template <typename T>
std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
  constexpr int t = FpContext<T>::t;
  const GemmKernel<T>& kernel = lookup_kernel<T>(cfg.kernel);
  if (cfg.kernel == "accelerated") set_blas_threads(cfg.threads);
  const Dims d = cfg.dims ? *cfg.dims : preset_dims(cfg.scenario, cfg.scale);
  const std::vector<Variant> variants =
      cfg.variants.empty() ? std::vector<Variant>(kVariants.begin(), kVariants.end())
                           : cfg.variants;
  if (cfg.runs < 1) throw Error("bench: runs must be positive");

  std::vector<BenchRecord> records;
  volatile T sink = T(0);
  for (int bits : cfg.bits) {
    for (Variant var : variants) {
      BenchRecord rec;
      rec.scenario = cfg.scenario;
      rec.m = d.m;
      rec.k = d.k;
      rec.n = d.n;
      rec.bits = bits;
      rec.u = var.u;
      rec.v = var.v;
      rec.kernel = cfg.kernel;
      rec.runs = cfg.runs;
      rec.concat = "none";

      if (bits > t - 1 || !variant_admits_bits(var, bits, t)) {
        rec.status = "infeasible";
        records.push_back(std::move(rec));
        continue;
      }
      const u64 p = prev_prime(u64{1} << bits);
      if (p < 5 || bitsize(p) != bits) {
        rec.status = "infeasible";
        records.push_back(std::move(rec));
        continue;
      }
      rec.p = p;
      const auto planned = mw_block_size(var.u, var.v, p, t);
      if (!planned && !cfg.lambda) {
        rec.status = "infeasible";
        records.push_back(std::move(rec));
        continue;
      }
      const auto ctx = FpContext<T>::make(p);
      const ConcatSide side = cfg.side;
      if (cfg.concat) {
        const bool stacks_a = side == ConcatSide::a || (side == ConcatSide::auto_pick && d.n > d.m);
        rec.concat = stacks_a ? "a" : "b";
      }

      Mat<T> A = random_mat<T>(d.m, d.k, p, matrix_seed(cfg.seed, bits, d, 0xA));
      Mat<T> B = random_mat<T>(d.k, d.n, p, matrix_seed(cfg.seed, bits, d, 0xB));

      try {
        // the unbalanced scenario reuses A's words across iterated
        // products, so they are prepared outside the timer
        std::optional<WordDecomposition<T>> da_fixed;
        if (cfg.scenario == "unbalanced") da_fixed = decompose(A, var.u, ctx);

        double total = 0.0;
        u64 lambda_used = 0;
        for (int run = 0; run < cfg.runs; ++run) {
          const auto t0 = std::chrono::steady_clock::now();
          u64 lambda = cfg.lambda ? *cfg.lambda
                                  : std::min<u64>(*mw_block_size(var.u, var.v, p, t),
                                                  static_cast<u64>(d.k));
          lambda_used = lambda;
          WordDecomposition<T> db = decompose(B, var.v, ctx);
          Mat<T> C;
          if (cfg.scenario == "unbalanced") {
            C = cfg.concat ? mw_product_concat_words(*da_fixed, db, d.m, d.k, d.n, lambda, ctx,
                                                     kernel, side)
                           : mw_product_words(*da_fixed, db, d.m, d.k, d.n, lambda, ctx, kernel);
          } else {
            WordDecomposition<T> da = decompose(A, var.u, ctx);
            C = cfg.concat
                    ? mw_product_concat_words(da, db, d.m, d.k, d.n, lambda, ctx, kernel, side)
                    : mw_product_words(da, db, d.m, d.k, d.n, lambda, ctx, kernel);
          }
          const auto t1 = std::chrono::steady_clock::now();
          total += std::chrono::duration<double>(t1 - t0).count();
          sink = sink + C(0, 0);
        }
        rec.lambda = lambda_used;
        rec.t_avg_s = total / cfg.runs;
        rec.eff_gflops = effective_gflops(d.m, d.k, d.n, rec.t_avg_s);
      } catch (const InfeasibleError&) {
        rec.lambda = cfg.lambda.value_or(0);
        rec.status = "infeasible";
      }
      records.push_back(std::move(rec));
    }
  }
  (void)sink;
  return records;
}

template CheckReport run_check<double>(const CheckConfig&);
template CheckReport run_check<float>(const CheckConfig&);
template std::vector<BenchRecord> run_bench<double>(const BenchConfig&);
template std::vector<BenchRecord> run_bench<float>(const BenchConfig&);

}  // namespace fpmm::driver
