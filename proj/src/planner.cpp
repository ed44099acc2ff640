#include "fpmm/planner.hpp"

#include <cmath>

#include "fpmm/errors.hpp"

namespace fpmm {

namespace {

bool feasible_at(int u, int v, u64 p, int t, u64 min_lambda) {
  auto lam = mw_block_size(u, v, p, t);
  return lam && *lam >= min_lambda;
}

u64 worst_modulus(int bits) { return (u64{1} << bits) - 1; }

}  // namespace

int variant_bit_limit(int u, int v, int t) {
  if (u < 1 || v < 1) throw Error("variant_bit_limit: word counts must be positive");
  if (t < 3 || t > 62) throw Error("variant_bit_limit: t out of range");
  int best = 0;
  for (int b = 1; b <= t - 1; ++b) {
    if (feasible_at(u, v, worst_modulus(b), t, 1)) best = b;
  }
  return best;
}

void finish_plan(ProductPlan& plan, index_t m, index_t k, index_t n) {
  const u64 um = static_cast<u64>(m), uk = static_cast<u64>(k), un = static_cast<u64>(n);
  const u64 uv = static_cast<u64>(plan.u) * plan.v;
  plan.predicted_products = uv;
  const u64 panels = plan.lambda == 0 ? 0 : (uk + plan.lambda - 1) / plan.lambda;
  plan.predicted_reductions = uv * um * un * (panels + 2);
  plan.storage_entries = uk * (static_cast<u64>(plan.u) * um + static_cast<u64>(plan.v) * un) +
                         um * un;
  if (plan.concat != ConcatChoice::none)
    plan.storage_entries +=
        (plan.concat == ConcatChoice::b ? static_cast<u64>(plan.v) : static_cast<u64>(plan.u)) *
        um * un;
}

namespace {

ProductPlan plan_common(int bits, u64 p_for_lambda, index_t m, index_t k, index_t n, int t,
                        u64 min_lambda, index_t concat_threshold) {
  if (bits < 1) throw Error("select_variant: bitsize must be positive");
  if (bits > t - 1)
    throw InfeasibleError("modulus unrepresentable: bitsize " + std::to_string(bits) +
                          " needs p < 2^" + std::to_string(t - 1));

  ConcatChoice concat = ConcatChoice::none;
  if (std::min(m, n) < concat_threshold && m != n)
    concat = (n < m) ? ConcatChoice::b : ConcatChoice::a;

  const Variant* best = nullptr;
  for (const Variant& var : kVariants) {
    if (!variant_admits_bits(var, bits, t)) continue;
    if (!feasible_at(var.u, var.v, p_for_lambda, t, min_lambda)) continue;
    if (!best) {
      best = &var;
      continue;
    }
    if (var.products() < best->products()) {
      best = &var;
    } else if (var.products() == best->products()) {
      // uv tie: concatenation favors the wider decomposition, otherwise
      // fewer total words
      const bool prefer_wide = concat != ConcatChoice::none;
      const int su = var.u + var.v, sb = best->u + best->v;
      if ((prefer_wide && su > sb) || (!prefer_wide && su < sb) ||
          (su == sb && var.u < best->u))
        best = &var;
    }
  }
  if (!best)
    throw InfeasibleError("no (u,v) variant admits bitsize " + std::to_string(bits) +
                          " with block size >= " + std::to_string(min_lambda));

  ProductPlan plan;
  plan.u = best->u;
  plan.v = best->v;
  plan.lambda = std::min<u64>(*mw_block_size(best->u, best->v, p_for_lambda, t),
                              static_cast<u64>(std::max<index_t>(k, 1)));
  plan.concat = concat;
  finish_plan(plan, m, k, n);
  return plan;
}

}  // namespace

ProductPlan select_variant(int bits, index_t m, index_t k, index_t n, int t, u64 min_lambda,
                           index_t concat_threshold) {
  return plan_common(bits, worst_modulus(bits), m, k, n, t, min_lambda, concat_threshold);
}

ProductPlan plan_for_modulus(u64 p, index_t m, index_t k, index_t n, int t, u64 min_lambda,
                             index_t concat_threshold) {
  return plan_common(bitsize(p), p, m, k, n, t, min_lambda, concat_threshold);
}

u64 crt_num_products(int bits_p, u64 k, int t, u64 lambda) {
  if (bits_p < 1 || k < 1 || lambda < 1) throw Error("crt_num_products: arguments must be positive");
  FPMM_CONTRACT(t < 64 && lambda < (u64{1} << t), "crt_num_products: lambda must be below 2^t");
  const double num = 4.0 * bits_p + 2.0 * std::log2(static_cast<double>(k));
  const double den = t - std::log2(static_cast<double>(lambda));
  if (den <= 0) throw Error("crt_num_products: lambda must be below 2^t");
  return static_cast<u64>(std::ceil(num / den));
}

std::optional<MwCount> mw_num_products(int bits_p, int t, u64 lambda) {
  if (bits_p > t - 1) return std::nullopt;
  const double budget = t - std::log2(static_cast<double>(lambda));
  std::optional<MwCount> best;
  for (const Variant& var : kVariants) {
    const u64 uv = static_cast<u64>(var.products());
    if ((var.u + var.v) * static_cast<double>(bits_p) > uv * budget + 1e-9) continue;
    if (!feasible_at(var.u, var.v, worst_modulus(bits_p), t, lambda)) continue;
    if (!best || uv < best->products ||
        (uv == best->products && var.u + var.v < best->variant.u + best->variant.v)) {
      best = MwCount{var, uv};
    }
  }
  return best;
}

}  // namespace fpmm
