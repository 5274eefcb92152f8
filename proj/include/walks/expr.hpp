#pragma once

#include <map>
#include <memory>
#include <string>

#include "walks/series.hpp"

namespace walks {

// Expression tree over named leaves, for assembling closed-form right-hand
// sides out of solved series. Leaves are bound at evaluation time.
class Expr {
 public:
  using Ptr = std::shared_ptr<const Expr>;
  using Bindings = std::map<std::string, TSeries>;

  static Ptr leaf(std::string name);
  static Ptr lit(const Rational& c);
  static Ptr lit(long c) { return lit(rat(c)); }
  static Ptr add(Ptr a, Ptr b);
  static Ptr sub(Ptr a, Ptr b);
  static Ptr mul(Ptr a, Ptr b);
  static Ptr div(Ptr a, Ptr b);
  static Ptr pow(Ptr a, long e);
  static Ptr sqrt(Ptr a);

  // Exact evaluation truncated at `order` (s units). Errors from
  // sub-operations are rethrown with the path of the failing subtree.
  TSeries eval(const Bindings& b, long order) const;

 private:
  enum class Kind { kLeaf, kLit, kAdd, kSub, kMul, kDiv, kPow, kSqrt };
  Kind kind_ = Kind::kLit;
  std::string name_;
  Rational value_;
  long exponent_ = 0;
  Ptr lhs_, rhs_;
  TSeries eval_at(const Bindings& b, long order, const std::string& path) const;
};

}  // namespace walks
