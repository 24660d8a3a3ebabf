#pragma once

#include <cstddef>

namespace singlab {

// Caps on basis computation effort. Hitting a cap raises ResourceLimitError;
// it never silently degrades an answer.
struct ResourceLimits {
  std::size_t max_pairs = 10000;            // critical pairs generated
  std::size_t max_basis = 1000;             // basis elements
  std::size_t max_reduction_steps = 1000000;  // per normal-form call

  // Reads SINGLAB_MAX_PAIRS, SINGLAB_MAX_BASIS, SINGLAB_MAX_STEPS when set.
  static ResourceLimits from_env();
};

}  // namespace singlab
