#pragma once
#include <optional>
#include <vector>

#include "dyneval/smallmat.hpp"

namespace dyneval {

// A basis vector described structurally as nested unions/products of
// elementary blocks:
//   Poly(n)      -> (1, t, t^2, ..., t^n)
//   Trig(w)      -> (cos wt, sin wt)
//   Hyper(w)     -> (cosh wt, sinh wt)
//   Bernstein(n) -> (B_{0,n}(t), ..., B_{n,n}(t))
//   Union        -> ordered concatenation of children
//   Product      -> union of scaled copies, left child index varying slowest
class Basis {
public:
    enum class Kind { Poly, Trig, Hyper, Bernstein, Union, Product };

    static Basis poly(int degree);
    static Basis trig(double frequency = 1.0);
    static Basis hyper(double frequency = 1.0);
    static Basis bernstein(int degree);
    static Basis union_of(std::vector<Basis> children);
    static Basis product_of(std::vector<Basis> children);

    Kind kind() const { return kind_; }
    int degree() const { return degree_; }
    double frequency() const { return frequency_; }
    const std::vector<Basis>& children() const { return children_; }

    int dim() const;
    // True when every entry is a polynomial (poly/bernstein blocks only);
    // such bases are closed under linear reparametrization.
    bool polynomial_only() const;

private:
    Basis() = default;
    Kind kind_ = Kind::Poly;
    int degree_ = 0;
    double frequency_ = 0.0;
    std::vector<Basis> children_;
};

// Numeric evaluation with host transcendental routines. This is the
// reference path used by oracles, not the dynamic iteration path.
DenseVector eval_basis(const Basis& b, double t);

// All Bernstein values B_{i,n}(t), i = 0..n, by the stable triangle
// recurrence (valid for any real t).
DenseVector bernstein_values(int n, double t);

// Matrix A with d/dt eval_basis(b, t) = A * eval_basis(b, t).
DenseMatrix derivative_matrix(const Basis& b);

// One additive term of a bivariate basis: a factor in u, a factor in v,
// or a tensor product of both (u factor varying slowest). Terms with a
// single factor are constant in the other parameter.
struct SurfaceTerm {
    std::optional<Basis> u;
    std::optional<Basis> v;
    int dim() const { return (u ? u->dim() : 1) * (v ? v->dim() : 1); }
};

// Bivariate basis: ordered union of SurfaceTerms. A plain tensor-product
// surface is a single term carrying both factors; bases like
// (1, v, cos v, sin v, u cos v, u sin v) mix v-only and tensor terms.
class SurfaceBasis {
public:
    static SurfaceBasis tensor(Basis u, Basis v);
    static SurfaceBasis mixed(std::vector<SurfaceTerm> terms);

    const std::vector<SurfaceTerm>& terms() const { return terms_; }
    int dim() const;

private:
    SurfaceBasis() = default;
    std::vector<SurfaceTerm> terms_;
};

DenseVector eval_surface_basis(const SurfaceBasis& sb, double u, double v);

// (A1, A2) with dPhi/du = A1*Phi and dPhi/dv = A2*Phi. For a tensor term
// these are D_u kron I and I kron D_v, so A1*A2 = A2*A1 always holds.
std::pair<DenseMatrix, DenseMatrix> surface_derivative_matrices(const SurfaceBasis& sb);

}  // namespace dyneval
