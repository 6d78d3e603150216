// A graded coordinate chart: an ordered list of named variables with integer
// degrees, plus the two truncation orders that make every computation finite.
//
//  * degree-0 variables ("base") generate formal jets around the chart origin,
//    truncated at jet_order (maximal total exponent in base variables);
//  * nonzero-degree variables generate the graded part; monomials whose
//    negative-degree content reaches filtration_order are discarded.
//
// Declaration order is the canonical variable order used for monomial
// normalization, pivoting and reporting, so a context is reproducible data.

#ifndef GRADEDQ_CONTEXT_HPP
#define GRADEDQ_CONTEXT_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gradedq {

struct VarDecl {
  std::string name;
  int degree = 0;

  bool operator==(const VarDecl&) const = default;
};

class Context {
 public:
  Context() = default;

  // Validates names (nonempty, unique, identifier-shaped) and orders
  // (jet_order >= 0, filtration_order >= 1); throws UsageError on violation.
  static Context make(std::vector<VarDecl> vars, int jet_order, int filtration_order);

  int size() const { return static_cast<int>(data_->vars.size()); }
  const VarDecl& var(int i) const { return data_->vars[static_cast<size_t>(i)]; }
  const std::string& name(int i) const { return var(i).name; }
  const std::vector<VarDecl>& vars() const { return data_->vars; }
  std::optional<int> index_of(const std::string& name) const;

  int degree(int i) const { return var(i).degree; }
  // Negative-degree weight of a variable: -degree for degree <= -1, else 0.
  int neg_degree(int i) const { int d = degree(i); return d < 0 ? -d : 0; }
  int pos_degree(int i) const { int d = degree(i); return d > 0 ? d : 0; }
  bool is_base(int i) const { return degree(i) == 0; }
  bool is_odd(int i) const { return degree(i) % 2 != 0; }
  // Order weight used by normal-form iterations: 1 for base, |degree| else.
  int weight(int i) const { return is_base(i) ? 1 : (degree(i) < 0 ? -degree(i) : degree(i)); }

  int jet_order() const { return data_->jet_order; }
  int filtration_order() const { return data_->filtration_order; }

  Context with_orders(int jet_order, int filtration_order) const;

  // Sub-context of the variables selected by `keep` (declaration order kept).
  Context restricted(const std::vector<bool>& keep) const;
  // Same variables plus `extra` appended.
  Context extended(const std::vector<VarDecl>& extra) const;

  bool operator==(const Context& o) const {
    return data_ == o.data_ || (data_ && o.data_ && *data_ == *o.data_);
  }
  bool same_variables(const Context& o) const { return data_->vars == o.data_->vars; }

 private:
  struct Data {
    std::vector<VarDecl> vars;
    int jet_order = 0;
    int filtration_order = 1;
    bool operator==(const Data&) const = default;
  };
  explicit Context(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_ = std::make_shared<Data>();
};

}  // namespace gradedq

#endif
