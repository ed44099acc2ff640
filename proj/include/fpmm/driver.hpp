#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fpmm/bench.hpp"
#include "fpmm/planner.hpp"

namespace fpmm::driver {

struct Dims {
  index_t m, k, n;
};

enum class ProductOp { plain, concat, workspace };

// Configuration of the oracle-equivalence suite. Defaults reproduce the
// standard suite: six variants x bitsizes {5,20,26,30,35,39,42,48,52}
// (filtered by each variant's bit limit) x three shapes x three seeds.
struct CheckConfig {
  std::vector<Dims> dims = {{17, 33, 9}, {64, 64, 64}, {128, 300, 32}};
  std::vector<int> bits = {5, 20, 26, 30, 35, 39, 42, 48, 52};
  std::vector<Variant> variants = {kVariants.begin(), kVariants.end()};
  u64 seed = 1;
  int num_seeds = 3;
  std::string kernel = "naive";
  bool checked = false;  // run the exact-integer shadow replay alongside
  ProductOp op = ProductOp::plain;
  std::optional<u64> lambda;  // override the planned block size
  index_t oracle_cap = 512;
  std::string dump_dir;  // when set, failing inputs are written here
};

struct CaseResult {
  enum class Status { pass, fail, skipped };
  Variant variant;
  int bits;
  Dims dims;
  u64 seed;
  Status status;
  std::string note;
};

struct CheckReport {
  std::vector<CaseResult> cases;
  int passed = 0, failed = 0, skipped = 0;
  bool ok() const { return failed == 0; }
};

template <typename T>
CheckReport run_check(const CheckConfig& cfg);

// Benchmark scenarios. "square" times everything including both
// decompositions; "unbalanced" models an iterated product with a fixed
// left matrix, so A's decomposition happens once outside the timer while
// B's decomposition and the product are timed.
struct BenchConfig {
  std::string scenario = "square";  // square | unbalanced
  std::optional<Dims> dims;         // overrides the scenario preset
  double scale = 1.0;               // scales preset dims for desk-scale runs
  std::vector<int> bits = {10, 20, 26, 30, 35, 39, 42, 48, 52};
  std::vector<Variant> variants;  // empty: all six
  bool concat = false;
  ConcatSide side = ConcatSide::auto_pick;
  int runs = 10;
  u64 seed = 1;
  std::string kernel = "naive";
  std::optional<u64> lambda;
  int threads = 0;  // pin the accelerated kernel's thread count
};

template <typename T>
std::vector<BenchRecord> run_bench(const BenchConfig& cfg);

Dims preset_dims(const std::string& scenario, double scale);

}  // namespace fpmm::driver
