#pragma once

#include <stdexcept>
#include <string>

namespace ak {

/// Violated precondition on an argument (bad multipartition, node not
/// removable, mismatched sizes, ...).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The parameter point does not satisfy the hypotheses an operation needs
/// (vanishing separation product, l-singular label, non-semisimple regime).
class RegimeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ambient dimension exceeds the configured guard.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Always a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr std::size_t kDefaultSizeGuard = 20000;

}  // namespace ak
