#pragma once

#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace singlab {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Fixed ordered variable list. Every polynomial carries a ring pointer and
// operations reject operands built over a different variable list. Two rings
// compare equal when their variable lists agree, so independently constructed
// contexts interoperate.
class Ring {
 public:
  explicit Ring(std::vector<std::string> variables);

  static RingPtr make(std::vector<std::string> variables);
  static RingPtr make(std::initializer_list<const char*> variables);

  std::size_t variable_count() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::string& variable(std::size_t index) const {
    return variables_.at(index);
  }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.variables_ == b.variables_;
  }

 private:
  std::vector<std::string> variables_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace singlab
