// Shared vocabulary for the amenlab core: element codes, finite code sets,
// step budgets, exact rationals and the error type every module throws.

#ifndef AMENLAB_CORE_COMMON_HPP_
#define AMENLAB_CORE_COMMON_HPP_

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace amenlab {

// The number of a group element (or of a vertex of a bipartite graph oracle).
enum class Code : std::uint64_t {};

constexpr Code code(std::uint64_t v) noexcept { return Code{v}; }
constexpr std::uint64_t value(Code c) noexcept {
  return static_cast<std::uint64_t>(c);
}

// Strictly increasing list of codes.
using CodeSet = std::vector<Code>;

inline CodeSet make_set(std::vector<Code> codes) {
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

inline bool contains(const CodeSet& s, Code c) {
  return std::binary_search(s.begin(), s.end(), c);
}

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// "p/q" with q >= 1, also for integers.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

enum class ErrorCode {
  kMalformedSpec,
  kMalformedInput,
  kEmptySet,
  kEmptySupport,
  kNoLevelSet,
  kInternalInfeasible,
  kKeyNotInK,
  kUnsupportedFamily,
  kPreconditionFailed,
  kWrongMode,
  kOverflow,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Maximum number of elementary oracle calls a semi-decision may spend.
struct Budget {
  std::uint64_t steps = 1'000'000;
};

// Running count of oracle calls against a Budget.
class StepMeter {
 public:
  explicit StepMeter(Budget b) : limit_(b.steps) {}

  // Charges n calls; false once the limit is exceeded.
  bool charge(std::uint64_t n = 1) noexcept {
    used_ += n;
    return used_ <= limit_;
  }
  bool exhausted() const noexcept { return used_ >= limit_; }
  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace amenlab

template <>
struct std::hash<amenlab::Code> {
  std::size_t operator()(amenlab::Code c) const noexcept {
    std::uint64_t x = amenlab::value(c);
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};

#endif  // AMENLAB_CORE_COMMON_HPP_
