#pragma once
#include <utility>

#include "dyneval/basis.hpp"
#include "dyneval/smallmat.hpp"

namespace dyneval {

// How the curve parameter advances between consecutive points:
//   Translate(h):  t -> t + h          (any basis)
//   Linear(a, b):  t -> (1-t)a + tb    (polynomial bases only)
struct StepSpec {
    enum class Kind { Translate, Linear };
    Kind kind = Kind::Translate;
    double h = 0.0;
    double a = 0.0;
    double b = 0.0;

    static StepSpec translate(double h);
    static StepSpec linear(double a, double b);
};

// Truncated Taylor values of (sin h, cos h) through h^15 / h^16, Horner in
// h^2. Requires |h| <= 0.1 (argument-reduction threshold); absolute error
// <= 1e-15 on that range.
std::pair<double, double> sin_cos_taylor(double h);

// Same for (sinh h, cosh h); cosh^2 - sinh^2 = 1 within 1e-15.
std::pair<double, double> sinh_cosh_taylor(double h);

// Lower-triangular binomial matrix M with U_n(t+h) = M * U_n(t);
// entry (i,j) = C(i,j) * h^(i-j).
DenseMatrix poly_translation_matrix(int n, double h);

// Rotation [[cos,-sin],[sin,cos]] of the given angle, computed from the
// Taylor series after halving the angle to <= 0.1 and squaring back.
DenseMatrix trig_translation_matrix(double angle);

// [[cosh,sinh],[sinh,cosh]] with the same argument reduction.
DenseMatrix hyper_translation_matrix(double angle);

// C with Phi(t+h) = C * Phi(t), assembled structurally: union -> block
// diagonal, product -> Kronecker, elementary blocks as above (trig/hyper
// use the effective step w*h, Bernstein blocks translate via the linear
// map (a,b) = (h, 1+h)).
DenseMatrix translation_matrix(const Basis& b, double h);

// C with Phi((1-t)a + tb) = C * Phi(t) for polynomial bases; throws
// UnsupportedStepError on trig/hyperbolic blocks.
DenseMatrix linear_matrix(const Basis& basis, double a, double b);

// Lower-triangular matrix C with U_n(a0*t + a1) = C * U_n(t);
// entry (i,j) = C(i,j) * a0^j * a1^(i-j); det = a0^(n(n+1)/2).
DenseMatrix power_linear_matrix(int n, double a0, double a1);

// Bernstein reparametrization matrix C with Phi_B((1-t)a + tb) = C * Phi_B(t);
// entries c_kl = sum_{i+j=k} B_{i,l}(b) * B_{j,n-l}(a). Columns sum to 1.
DenseMatrix bernstein_linear_matrix(int n, double a, double b);

// Per-parameter translation matrices (C_u, C_v) with
// Phi(u+h1, v) = C_u * Phi(u,v) and Phi(u, v+h2) = C_v * Phi(u,v);
// identity in the untranslated factor, so C_u * C_v = C_v * C_u.
std::pair<DenseMatrix, DenseMatrix> surface_translation_matrices(const SurfaceBasis& sb,
                                                                 double h1, double h2);

}  // namespace dyneval
