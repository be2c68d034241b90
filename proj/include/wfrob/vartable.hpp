#pragma once

#include <string>
#include <vector>
#include <stdexcept>

namespace wfrob {

enum class VarRole {
  SymmetricBase,  // q_1..q_{l+1}
  Orbit,          // y^1..y^l (or z^j, t^j)
  LogCoord,       // bare y^{l+1}, y^{l+2} (log coordinates; weight 0)
  ExpMarker,      // E1, E2
  Flat,           // flat t^alpha
  Aux,            // lambda etc.
};

/// Ordered variable registry shared by every polynomial of a computation.
/// The order is fixed for the lifetime of a chart and determines the
/// graded-lex monomial order.
class VarTable {
 public:
  VarTable() = default;

  size_t add(std::string name, VarRole role) {
    for (const auto& n : names_)
      if (n == name) throw std::invalid_argument("duplicate variable " + name);
    names_.push_back(std::move(name));
    roles_.push_back(role);
    return names_.size() - 1;
  }

  size_t size() const { return names_.size(); }
  const std::string& name(size_t i) const { return names_.at(i); }
  VarRole role(size_t i) const { return roles_.at(i); }

  size_t index(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    throw std::out_of_range("unknown variable " + name);
  }

 private:
  std::vector<std::string> names_;
  std::vector<VarRole> roles_;
};

}  // namespace wfrob
