// Integer codings shared by the group families: zig-zag for signed integers,
// Cantor pairing for tuples. All functions throw Error(kOverflow) rather than
// wrap around.

#ifndef AMENLAB_CORE_CODING_HPP_
#define AMENLAB_CORE_CODING_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace amenlab::coding {

// 0,-1,1,-2,2,... -> 0,1,2,3,4,...
std::uint64_t zigzag(std::int64_t z);
std::int64_t unzigzag(std::uint64_t n);

// (a+b)(a+b+1)/2 + b
std::uint64_t cantor_pair(std::uint64_t a, std::uint64_t b);
std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z);

// Right-nested pairing: (v1, (v2, (..., vd))). A 1-tuple codes as v1.
std::uint64_t tuple_code(std::span<const std::uint64_t> values);
std::vector<std::uint64_t> tuple_decode(std::uint64_t code, std::size_t arity);

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

}  // namespace amenlab::coding

#endif  // AMENLAB_CORE_CODING_HPP_
