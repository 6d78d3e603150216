#include "gradedq/context.hpp"

#include <cctype>
#include <unordered_set>

#include "gradedq/errors.hpp"

namespace gradedq {

namespace {

bool identifier_shaped(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

Context Context::make(std::vector<VarDecl> vars, int jet_order, int filtration_order) {
  if (jet_order < 0) throw UsageError("jet order must be nonnegative");
  if (filtration_order < 1) throw UsageError("filtration order must be positive");
  std::unordered_set<std::string> seen;
  for (const auto& v : vars) {
    if (!identifier_shaped(v.name)) throw UsageError("bad variable name '" + v.name + "'");
    if (!seen.insert(v.name).second) throw UsageError("duplicate variable '" + v.name + "'");
  }
  auto d = std::make_shared<Data>();
  d->vars = std::move(vars);
  d->jet_order = jet_order;
  d->filtration_order = filtration_order;
  return Context(std::move(d));
}

std::optional<int> Context::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (var(i).name == name) return i;
  return std::nullopt;
}

Context Context::with_orders(int jet_order, int filtration_order) const {
  return make(data_->vars, jet_order, filtration_order);
}

Context Context::restricted(const std::vector<bool>& keep) const {
  std::vector<VarDecl> vars;
  for (int i = 0; i < size(); ++i)
    if (keep[static_cast<size_t>(i)]) vars.push_back(var(i));
  return make(std::move(vars), jet_order(), filtration_order());
}

Context Context::extended(const std::vector<VarDecl>& extra) const {
  std::vector<VarDecl> vars = data_->vars;
  vars.insert(vars.end(), extra.begin(), extra.end());
  return make(std::move(vars), jet_order(), filtration_order());
}

}  // namespace gradedq
