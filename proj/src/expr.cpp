#include "walks/expr.hpp"

#include <cstdlib>

namespace walks {

Expr::Ptr Expr::leaf(std::string name) {
  auto e = std::make_shared<Expr>();
  e->kind_ = Kind::kLeaf;
  e->name_ = std::move(name);
  return e;
}

Expr::Ptr Expr::lit(const Rational& c) {
  auto e = std::make_shared<Expr>();
  e->kind_ = Kind::kLit;
  e->value_ = c;
  return e;
}

Expr::Ptr Expr::add(Ptr a, Ptr b) {
  auto e = std::make_shared<Expr>();
  e->kind_ = Kind::kAdd;
  e->lhs_ = std::move(a);
  e->rhs_ = std::move(b);
  return e;
}

Expr::Ptr Expr::sub(Ptr a, Ptr b) {
  auto e = std::make_shared<Expr>();
  e->kind_ = Kind::kSub;
  e->lhs_ = std::move(a);
  e->rhs_ = std::move(b);
  return e;
}

Expr::Ptr Expr::mul(Ptr a, Ptr b) {
  auto e = std::make_shared<Expr>();
  e->kind_ = Kind::kMul;
  e->lhs_ = std::move(a);
  e->rhs_ = std::move(b);
  return e;
}

Expr::Ptr Expr::div(Ptr a, Ptr b) {
  auto e = std::make_shared<Expr>();
  e->kind_ = Kind::kDiv;
  e->lhs_ = std::move(a);
  e->rhs_ = std::move(b);
  return e;
}

Expr::Ptr Expr::pow(Ptr a, long n) {
  auto e = std::make_shared<Expr>();
  e->kind_ = Kind::kPow;
  e->lhs_ = std::move(a);
  e->exponent_ = n;
  return e;
}

Expr::Ptr Expr::sqrt(Ptr a) {
  auto e = std::make_shared<Expr>();
  e->kind_ = Kind::kSqrt;
  e->lhs_ = std::move(a);
  return e;
}

TSeries Expr::eval(const Bindings& b, long order) const {
  return eval_at(b, order, "$").truncated(order);
}

TSeries Expr::eval_at(const Bindings& b, long order, const std::string& path) const {
  try {
    switch (kind_) {
      case Kind::kLeaf: {
        auto it = b.find(name_);
        if (it == b.end()) throw SeriesError("unbound leaf '" + name_ + "'");
        return it->second;
      }
      case Kind::kLit:
        return TSeries::constant(value_);
      case Kind::kAdd:
        return lhs_->eval_at(b, order, path + ".lhs") + rhs_->eval_at(b, order, path + ".rhs");
      case Kind::kSub:
        return lhs_->eval_at(b, order, path + ".lhs") - rhs_->eval_at(b, order, path + ".rhs");
      case Kind::kMul:
        return lhs_->eval_at(b, order, path + ".lhs") * rhs_->eval_at(b, order, path + ".rhs");
      case Kind::kDiv: {
        // Intermediate results keep their natural precision; only exact
        // denominators need an explicit inversion target.
        TSeries den = rhs_->eval_at(b, order, path + ".rhs");
        long tgt = den.exact() ? order + 2 * std::labs(den.val()) + 8 : TSeries::kExact;
        return lhs_->eval_at(b, order, path + ".lhs") * invert(den, tgt);
      }
      case Kind::kPow: {
        TSeries base = lhs_->eval_at(b, order, path + ".arg");
        long tgt = (exponent_ < 0 && base.exact()) ? order + 2 * std::labs(base.val()) + 8
                                                   : TSeries::kExact;
        return pow_int(base, exponent_, tgt);
      }
      case Kind::kSqrt: {
        TSeries arg = lhs_->eval_at(b, order, path + ".arg");
        long tgt = arg.exact() ? order + std::labs(arg.val()) + 8 : TSeries::kExact;
        return sqrt_series(arg, tgt);
      }
    }
  } catch (const SeriesError& err) {
    throw SeriesError(std::string(err.what()) + " [at " + path + "]");
  }
  throw SeriesError("corrupt expression node");
}

}  // namespace walks
