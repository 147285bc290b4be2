#pragma once
#include "dyneval/curve.hpp"
#include "dyneval/surface.hpp"

namespace dyneval {

// Reference evaluators, independent of the dynamic iteration path. These
// are the ground truth for tests and error reports.

// Lifted point by coefficient matrix times basis vector (host
// transcendentals).
DenseVector direct_eval(const LiftedCurve& c, double t);
DenseVector direct_eval(const LiftedSurface& s, double u, double v);

// Repeated linear interpolation on the control columns (d x (n+1)).
// Numerically stable for any real t.
DenseVector de_casteljau(const DenseMatrix& control, double t);

// Tensor-product surface point: de Casteljau in v along each row of the
// (nu+1) x (nv+1) net (columns stored v-fastest), then in u.
DenseVector de_casteljau_surface(const DenseMatrix& control, int nu, int nv, double u, double v);

// Nested multiplication on power-form coefficient columns (d x (n+1),
// column k multiplies t^k).
DenseVector horner_power(const DenseMatrix& coefficients, double t);

// Truncated series sum_{k=0..order} (h*A)^k / k!. This is the comparator
// one-step matrix for integrating X' = A X; its accuracy degrades as
// O(h^(order+1)) with growing step size.
DenseMatrix taylor_ode_step_matrix(const DenseMatrix& a, double h, int order);

}  // namespace dyneval
