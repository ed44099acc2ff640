#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fpmm/planner.hpp"

namespace fpmm {

inline constexpr int kBenchSchemaVersion = 1;

// One benchmark measurement. eff_gflops = 2 m k n / t_avg * 1e-9, a scaled
// inverse runtime comparable across variants with different true flop
// counts.
struct BenchRecord {
  int schema_version = kBenchSchemaVersion;
  std::string scenario;
  index_t m = 0, k = 0, n = 0;
  int bits = 0;
  u64 p = 0;
  int u = 1, v = 1;
  std::string concat = "none";
  u64 lambda = 0;
  std::string kernel;
  int runs = 0;
  double t_avg_s = 0.0;
  double eff_gflops = 0.0;
  std::string status = "ok";
};

double effective_gflops(index_t m, index_t k, index_t n, double t_avg_s);

void write_bench_csv(std::ostream& os, const std::vector<BenchRecord>& records);
std::vector<BenchRecord> read_bench_csv(std::istream& is);
std::vector<BenchRecord> read_bench_csv_file(const std::string& path);

// Bitsize segment where one variant measures best
struct CrossoverRow {
  Variant variant;
  int lo, hi;
};

// Per-bitsize winners of a contiguous sweep, merged into segments. Ties go
// to the smaller uv, then fewer total words, then smaller u. Throws IoError
// listing missing bitsizes if the sweep has gaps, or if fewer than two
// variants were measured.
std::vector<CrossoverRow> crossover_table(const std::vector<BenchRecord>& records);
void write_crossover(std::ostream& os, const std::vector<CrossoverRow>& rows);

// Multiword-vs-CRT product counts for one block size over a bitsize range
struct CrtRow {
  u64 lambda = 1;
  int bits = 0;
  u64 s_crt = 0;
  std::optional<MwCount> mw;  // nullopt: no variant admits this lambda
};

std::vector<CrtRow> crt_compare_table(int t, const std::vector<u64>& lambdas, u64 k, int bits_lo,
                                      int bits_hi);
void write_crt_csv(std::ostream& os, int t, u64 k, const std::vector<CrtRow>& rows);

}  // namespace fpmm
