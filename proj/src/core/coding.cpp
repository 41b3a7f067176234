#include "coding.hpp"

#include <cmath>
#include <limits>

#include "common.hpp"

namespace amenlab::coding {

namespace {
[[noreturn]] void overflow(const char* what) {
  throw Error(ErrorCode::kOverflow, std::string("code overflow in ") + what);
}
}  // namespace

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) overflow("addition");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("multiplication");
  return r;
}

std::uint64_t zigzag(std::int64_t z) {
  if (z == std::numeric_limits<std::int64_t>::min()) overflow("zigzag");
  return z >= 0 ? 2 * static_cast<std::uint64_t>(z)
                : 2 * static_cast<std::uint64_t>(-z) - 1;
}

std::int64_t unzigzag(std::uint64_t n) {
  return (n & 1) ? -static_cast<std::int64_t>((n + 1) / 2)
                 : static_cast<std::int64_t>(n / 2);
}

std::uint64_t cantor_pair(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = checked_add(a, b);
  std::uint64_t s1 = checked_add(s, 1);
  std::uint64_t tri = (s % 2 == 0) ? checked_mul(s / 2, s1)
                                   : checked_mul(s, s1 / 2);
  return checked_add(tri, b);
}

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z) {
  // w = floor((sqrt(8z+1)-1)/2), corrected for floating point error.
  auto w = static_cast<std::uint64_t>(
      (std::sqrt(8.0L * static_cast<long double>(z) + 1.0L) - 1.0L) / 2.0L);
  auto tri = [](unsigned __int128 v) { return v * (v + 1) / 2; };
  while (tri(w) > z) --w;
  while (tri(w + 1) <= z) ++w;
  auto b = static_cast<std::uint64_t>(z - tri(w));
  return {w - b, b};
}

std::uint64_t tuple_code(std::span<const std::uint64_t> values) {
  if (values.empty()) return 0;
  std::uint64_t acc = values.back();
  for (std::size_t i = values.size() - 1; i-- > 0;) {
    acc = cantor_pair(values[i], acc);
  }
  return acc;
}

std::vector<std::uint64_t> tuple_decode(std::uint64_t code,
                                        std::size_t arity) {
  std::vector<std::uint64_t> out;
  out.reserve(arity);
  for (std::size_t i = 0; i + 1 < arity; ++i) {
    auto [head, rest] = cantor_unpair(code);
    out.push_back(head);
    code = rest;
  }
  if (arity > 0) out.push_back(code);
  return out;
}

}  // namespace amenlab::coding
