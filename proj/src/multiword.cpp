#include "fpmm/multiword.hpp"

#include <cmath>

namespace fpmm {

u64 word_base(u64 p, int u) {
  if (p < 2) throw Error("word_base: p must exceed 1");
  if (u < 1) throw Error("word_base: word count must be positive");
  if (u == 1) return p;
  // fp root can be off by an ulp near 52-bit inputs; fix it with exact
  // integer powering
  const u128 cap = u128{1} << 100;  // anything above p works as a saturation cap
  u64 c = static_cast<u64>(std::llround(std::pow(static_cast<double>(p), 1.0 / u)));
  if (c < 1) c = 1;
  while (pow_saturating(c, u, cap) < p) ++c;
  while (c > 1 && pow_saturating(c - 1, u, cap) >= p) --c;
  return c;
}

}  // namespace fpmm
