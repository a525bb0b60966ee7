#include "aci/ring.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

namespace aci {
namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

}  // namespace

Ring::Ring(std::vector<std::string> names, PrimeField field, MonomialOrder order)
    : names_(std::move(names)), field_(field), order_(order) {
  if (names_.empty()) throw std::invalid_argument("a ring needs at least one variable");
  if (names_.size() > static_cast<std::size_t>(kMaxVars)) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) throw std::invalid_argument("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
  if (order_.kind() == OrderKind::block &&
      (order_.block_mask() >> names_.size()) != 0) {
    throw std::invalid_argument("block order refers to a variable outside the ring");
  }
}

RingPtr Ring::standard(int n, PrimeField field, const std::string& prefix) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return make(std::move(names), field);
}

std::optional<int> Ring::index_of(const std::string& name) const {
  for (int i = 0; i < num_vars(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::string Ring::describe() const {
  std::string s = "F" + std::to_string(field_.characteristic()) + "[";
  for (int i = 0; i < num_vars(); ++i) {
    if (i) s += ",";
    s += names_[i];
  }
  return s + "] " + order_.describe(names_);
}

}  // namespace aci
