#pragma once

#include <stdexcept>
#include <string>

namespace blackwell {

// Bad user-supplied data: malformed files, shape mismatches, out-of-range arguments.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// The request is well-formed but mathematically unanswerable as posed
// (infeasible program, empty region, unbounded score, unmet preconditions).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// A postcondition we promised failed to verify; indicates a bug, not bad input.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

#define BW_REQUIRE(cond, msg) \
  do { if (!(cond)) throw ::blackwell::InputError(msg); } while (0)
#define BW_DOMAIN(cond, msg) \
  do { if (!(cond)) throw ::blackwell::DomainError(msg); } while (0)
#define BW_ASSERT(cond, msg) \
  do { if (!(cond)) throw ::blackwell::InternalError(msg); } while (0)

}  // namespace blackwell
