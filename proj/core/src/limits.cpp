#include "singlab/limits.hpp"

#include <cstdlib>
#include <string>

namespace singlab {

namespace {

std::size_t env_or(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  char* end = nullptr;
  unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0) return fallback;
  return static_cast<std::size_t>(value);
}

}  // namespace

ResourceLimits ResourceLimits::from_env() {
  ResourceLimits limits;
  limits.max_pairs = env_or("SINGLAB_MAX_PAIRS", limits.max_pairs);
  limits.max_basis = env_or("SINGLAB_MAX_BASIS", limits.max_basis);
  limits.max_reduction_steps = env_or("SINGLAB_MAX_STEPS", limits.max_reduction_steps);
  return limits;
}

}  // namespace singlab
