#include "heatgraph/vertex.hpp"

#include <cmath>
#include <stdexcept>

namespace heatgraph {

std::uint64_t zigzag_encode(std::int64_t n) {
  return n >= 0 ? 2 * static_cast<std::uint64_t>(n)
                : 2 * static_cast<std::uint64_t>(-(n + 1)) + 1;
}

std::int64_t zigzag_decode(std::uint64_t u) {
  return (u % 2 == 0) ? static_cast<std::int64_t>(u / 2)
                      : -static_cast<std::int64_t>(u / 2) - 1;
}

namespace {

std::uint64_t isqrt64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

std::uint64_t pair_encode(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 s = static_cast<unsigned __int128>(a) + b;
  const unsigned __int128 p = s * (s + 1) / 2 + a;
  if (p > static_cast<unsigned __int128>(UINT64_MAX)) {
    throw std::overflow_error("pair_encode: tuple id exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(p);
}

std::pair<std::uint64_t, std::uint64_t> pair_decode(std::uint64_t p) {
  // s = floor((sqrt(8p+1)-1)/2), guarded against rounding at the band edges
  std::uint64_t s = p < (UINT64_MAX / 8) ? (isqrt64(8 * p + 1) - 1) / 2
                                         : 2 * isqrt64(p / 2);
  const auto band = [](std::uint64_t k) {
    return static_cast<unsigned __int128>(k) * (k + 1) / 2;
  };
  while (s > 0 && band(s) > p) --s;
  while (band(s + 1) <= p) ++s;
  const std::uint64_t a = p - static_cast<std::uint64_t>(band(s));
  return {a, s - a};
}

std::uint64_t tuple_encode(std::span<const std::uint64_t> parts) {
  if (parts.empty()) throw std::invalid_argument("tuple_encode: empty tuple");
  std::uint64_t acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) {
    acc = pair_encode(parts[i], acc);
  }
  return acc;
}

std::vector<std::uint64_t> tuple_decode(std::uint64_t id, std::size_t arity) {
  if (arity == 0) throw std::invalid_argument("tuple_decode: zero arity");
  std::vector<std::uint64_t> out;
  out.reserve(arity);
  std::uint64_t acc = id;
  for (std::size_t i = 0; i + 1 < arity; ++i) {
    auto [a, rest] = pair_decode(acc);
    out.push_back(a);
    acc = rest;
  }
  out.push_back(acc);
  return out;
}

}  // namespace heatgraph
