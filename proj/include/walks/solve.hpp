#pragma once

#include <vector>

#include "walks/models.hpp"

namespace walks {

struct SolveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Polynomial in one unknown with TSeries coefficients, c[k] multiplying the
// k-th power of the unknown.
using SeriesPoly = std::vector<TSeries>;

TSeries eval_poly(const SeriesPoly& p, const TSeries& u);
SeriesPoly derivative(const SeriesPoly& p);

// Newton iteration from a seed prefix. Requires the Newton convergence
// condition val(P(seed)) > 2*val(P'(seed)); the solution is verified by
// back-substitution before being returned. `order` is in s units of the
// seed's ramification.
TSeries newton_solve(const SeriesPoly& p, const TSeries& seed, long order);

// An algebraic series: defining polynomial, seed prefix, cached expansion.
class AlgSeries {
 public:
  AlgSeries(SeriesPoly equation, TSeries seed) : eq_(std::move(equation)), seed_(std::move(seed)) {}
  const TSeries& expansion(long order) const;
  const SeriesPoly& equation() const { return eq_; }

 private:
  SeriesPoly eq_;
  TSeries seed_;
  mutable TSeries cache_;
  mutable bool have_ = false;
};

// Substitute a power series argument (val > 0, rational coefficients allowed
// to be Laurent in x) for the variable y of f; f's coefficients may have
// bounded poles in y. Result truncated to `order` (s units).
TSeries subst_y(const TSeries& f, const TSeries& arg, long order);
TSeries subst_x(const TSeries& f, const TSeries& arg, long order);

// --- catalog of named series --------------------------------------------
// All satisfy their defining polynomial equations exactly to the returned
// truncation; cross identities between them live in the test suite.
TSeries series_V(long order);   // V = t(2 + V^3)
TSeries series_W(long order);   // 4W(1-W) = V^3, W(0) = 0
TSeries series_Z(long order);   // 2Z = W(1 + Z^2), Z = O(t^3)
TSeries series_M(long order);   // M = t(1 + 2M + 4M^2)
TSeries series_N(long order);   // N = M(1-N)^2, N = O(t)
TSeries series_P1(long order);  // P1(1-P1)^2 (1+4M)^3 = M(1+M)^3 (1+P1)^4
TSeries series_P2(long order);  // P2^4 - (1+4M)^3 P2^2 + 4M(1+M)^3(1+4M)^3 = 0, P2(0)=1
TSeries series_A1dk(long order);  // quartic over Q(N); A1 = 4 + 4t^2 + O(t^3)

// Power-series roots of the discriminant of the companion model of `model`.
// Ramified branches are returned with ram = 2.
std::vector<TSeries> delta_roots(const StepSet& model, long order_t);

// The unique power-series root X(y) of the kernel 1 - t*S(x,y) of `m` itself,
// with coefficients Laurent in y; validated by back-substitution.
TSeries kernel_root(const StepSet& m, long order_t);

}  // namespace walks
