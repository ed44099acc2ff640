#include "fpmm/bench.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "fpmm/errors.hpp"

namespace fpmm {

namespace {

constexpr const char* kBenchHeader =
    "schema_version,scenario,m,k,n,bits,p,u,v,concat,lambda,kernel,runs,t_avg_s,eff_gflops,"
    "status";

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

double effective_gflops(index_t m, index_t k, index_t n, double t_avg_s) {
  if (t_avg_s <= 0.0) return 0.0;
  return 2.0 * static_cast<double>(m) * static_cast<double>(k) * static_cast<double>(n) /
         t_avg_s * 1e-9;
}

void write_bench_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
  os << kBenchHeader << '\n';
  for (const BenchRecord& r : records) {
    os << r.schema_version << ',' << r.scenario << ',' << r.m << ',' << r.k << ',' << r.n << ','
       << r.bits << ',' << r.p << ',' << r.u << ',' << r.v << ',' << r.concat << ',' << r.lambda
       << ',' << r.kernel << ',' << r.runs << ',';
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g,%.6g", r.t_avg_s, r.eff_gflops);
    os << buf << ',' << r.status << '\n';
  }
}

std::vector<BenchRecord> read_bench_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw IoError("bench csv: empty input");
  if (line != kBenchHeader)
    throw IoError("bench csv: unrecognized header/schema: '" + line + "'");
  std::vector<BenchRecord> records;
  size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto f = split_csv_line(line);
    if (f.size() != 16)
      throw IoError("bench csv: line " + std::to_string(lineno) + " has " +
                    std::to_string(f.size()) + " fields, want 16");
    BenchRecord r;
    try {
      r.schema_version = std::stoi(f[0]);
      r.scenario = f[1];
      r.m = std::stoll(f[2]);
      r.k = std::stoll(f[3]);
      r.n = std::stoll(f[4]);
      r.bits = std::stoi(f[5]);
      r.p = std::stoull(f[6]);
      r.u = std::stoi(f[7]);
      r.v = std::stoi(f[8]);
      r.concat = f[9];
      r.lambda = std::stoull(f[10]);
      r.kernel = f[11];
      r.runs = std::stoi(f[12]);
      r.t_avg_s = std::stod(f[13]);
      r.eff_gflops = std::stod(f[14]);
      r.status = f[15];
    } catch (const std::exception&) {
      throw IoError("bench csv: malformed line " + std::to_string(lineno));
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<BenchRecord> read_bench_csv_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open " + path);
  return read_bench_csv(f);
}

std::vector<CrossoverRow> crossover_table(const std::vector<BenchRecord>& records) {
  std::map<int, const BenchRecord*> best;  // bits -> winner
  std::map<int, bool> seen_bits;
  std::map<std::pair<int, int>, bool> variants_seen;
  for (const BenchRecord& r : records) {
    seen_bits[r.bits] = true;
    if (r.status != "ok") continue;
    variants_seen[{r.u, r.v}] = true;
    const BenchRecord*& w = best[r.bits];
    if (!w) {
      w = &r;
      continue;
    }
    if (r.eff_gflops > w->eff_gflops) {
      w = &r;
    } else if (r.eff_gflops == w->eff_gflops) {
      const int uv = r.u * r.v, wuv = w->u * w->v;
      if (uv < wuv || (uv == wuv && (r.u + r.v < w->u + w->v ||
                                     (r.u + r.v == w->u + w->v && r.u < w->u))))
        w = &r;
    }
  }
  if (variants_seen.size() < 2)
    throw IoError("crossover: need measurements for at least two variants");
  if (seen_bits.empty()) throw IoError("crossover: no rows");
  const int lo = seen_bits.begin()->first, hi = seen_bits.rbegin()->first;
  std::string missing;
  for (int b = lo; b <= hi; ++b)
    if (!seen_bits.count(b)) missing += (missing.empty() ? "" : ", ") + std::to_string(b);
  if (!missing.empty())
    throw IoError("crossover: sweep has gaps at bitsizes " + missing);

  std::vector<CrossoverRow> rows;
  for (int b = lo; b <= hi; ++b) {
    auto it = best.find(b);
    if (it == best.end()) continue;  // all variants infeasible at this bitsize
    Variant var{it->second->u, it->second->v};
    if (!rows.empty() && rows.back().variant == var && rows.back().hi == b - 1)
      rows.back().hi = b;
    else
      rows.push_back({var, b, b});
  }
  return rows;
}

void write_crossover(std::ostream& os, const std::vector<CrossoverRow>& rows) {
  os << "u,v,best_bits_lo,best_bits_hi\n";
  for (const CrossoverRow& r : rows)
    os << r.variant.u << ',' << r.variant.v << ',' << r.lo << ',' << r.hi << '\n';
}

std::vector<CrtRow> crt_compare_table(int t, const std::vector<u64>& lambdas, u64 k, int bits_lo,
                                      int bits_hi) {
  std::vector<CrtRow> rows;
  for (u64 lambda : lambdas) {
    for (int b = bits_lo; b <= bits_hi; ++b) {
      CrtRow row;
      row.lambda = lambda;
      row.bits = b;
      row.s_crt = crt_num_products(b, k, t, lambda);
      row.mw = mw_num_products(b, t, lambda);
      rows.push_back(row);
    }
  }
  return rows;
}

void write_crt_csv(std::ostream& os, int t, u64 k, const std::vector<CrtRow>& rows) {
  os << "schema_version,t,k,lambda,bits,s_crt,mw_u,mw_v,uv_mw,status\n";
  for (const CrtRow& r : rows) {
    os << kBenchSchemaVersion << ',' << t << ',' << k << ',' << r.lambda << ',' << r.bits << ','
       << r.s_crt << ',';
    if (r.mw)
      os << r.mw->variant.u << ',' << r.mw->variant.v << ',' << r.mw->products << ",ok\n";
    else
      os << "0,0,0,infeasible\n";
  }
}

}  // namespace fpmm
