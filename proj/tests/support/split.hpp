#pragma once

#include <algorithm>
#include <optional>
#include <utility>

#include "gauss/cyclotomic.hpp"

namespace oracle {

// Writes x = s*P_0 + t*P_1 where P_0, P_1 are the two period classes r0, r1
// mod stride and P_0 + P_1 = -1, read straight off the reduced basis: the
// class of eps^(p-1) has coefficient 0 there, so the constant is -(its s).
// nullopt when x is not constant on the classes.
inline std::optional<std::pair<gauss::num::BigInt, gauss::num::BigInt>> split_two_classes(
    const gauss::cyclo::CycloElement& x, std::uint64_t p, std::uint64_t g, std::uint64_t stride,
    std::uint64_t r0, std::uint64_t r1) {
  using gauss::num::BigInt;
  const auto gr = x.group_ring();
  const auto c0 = gauss::cyclo::class_exponents(p, g, stride, r0);
  const auto c1 = gauss::cyclo::class_exponents(p, g, stride, r1);
  const bool minus_one_in_0 = std::find(c0.begin(), c0.end(), p - 1) != c0.end();
  const BigInt shift = -gr[0];
  const BigInt a = gr[c0.front()], b = gr[c1.front()];
  for (auto e : c0)
    if (gr[e] != a) return std::nullopt;
  for (auto e : c1)
    if (gr[e] != b) return std::nullopt;
  if (minus_one_in_0) return std::make_pair(BigInt(shift), BigInt(b + shift));
  return std::make_pair(BigInt(a + shift), BigInt(shift));
}

}  // namespace oracle
