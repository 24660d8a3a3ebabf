#include "singlab/ring.hpp"

#include <algorithm>

#include "singlab/errors.hpp"

namespace singlab {

Ring::Ring(std::vector<std::string> variables) : variables_(std::move(variables)) {
  if (variables_.empty()) {
    throw DomainError("ring needs at least one variable");
  }
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].empty()) throw DomainError("empty variable name");
    for (std::size_t j = i + 1; j < variables_.size(); ++j) {
      if (variables_[i] == variables_[j]) {
        throw DomainError("duplicate variable name '" + variables_[i] + "'");
      }
    }
  }
}

RingPtr Ring::make(std::vector<std::string> variables) {
  return std::make_shared<const Ring>(std::move(variables));
}

RingPtr Ring::make(std::initializer_list<const char*> variables) {
  std::vector<std::string> names;
  names.reserve(variables.size());
  for (const char* name : variables) names.emplace_back(name);
  return make(std::move(names));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - variables_.begin());
}

}  // namespace singlab
