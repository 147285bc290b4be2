#pragma once
#include <span>
#include <vector>

#include "dyneval/basis.hpp"
#include "dyneval/smallmat.hpp"

namespace dyneval {

enum class Axis { U, V };

// Bivariate analogue of LiftedCurve. For homogeneous surfaces the lifted
// iteration stays linear; the division by the weight coordinate happens
// only when a point is projected for emission.
class LiftedSurface {
public:
    LiftedSurface(SurfaceBasis basis, DenseMatrix matrix, DenseMatrix inverse, double condition,
                  int geometric_dim, bool homogeneous);

    const SurfaceBasis& basis() const { return basis_; }
    const DenseMatrix& matrix() const { return matrix_; }
    const DenseMatrix& inverse() const { return inverse_; }
    // A_u, A_v with dX/du = A_u X and dX/dv = A_v X on the lifted surface.
    const DenseMatrix& u_derivative_operator() const { return du_op_; }
    const DenseMatrix& v_derivative_operator() const { return dv_op_; }
    double condition() const { return condition_; }
    int geometric_dim() const { return geometric_dim_; }
    int dim() const { return matrix_.rows(); }
    bool homogeneous() const { return homogeneous_; }

    DenseVector start_point(double u, double v) const;

private:
    SurfaceBasis basis_;
    DenseMatrix matrix_;
    DenseMatrix inverse_;
    DenseMatrix du_op_;
    DenseMatrix dv_op_;
    double condition_;
    int geometric_dim_;
    bool homogeneous_;
};

// coeffs has one column per basis function; rows are either the geometric
// coordinates (rectangular input, gets augmented) or an already-lifted
// square matrix whose first geometric_dim rows are geometric.
LiftedSurface lift_surface(const DenseMatrix& coeffs, SurfaceBasis basis, int geometric_dim,
                           bool homogeneous = false);

// (M_u, M_v) advancing a lifted surface point by h1 in u / h2 in v.
std::pair<DenseMatrix, DenseMatrix> iso_step_matrices(const LiftedSurface& s, double h1,
                                                      double h2);

// Straight path in the parameter domain: u(t) = u0 + delta*(t - t0),
// v(t) = v0 + eta*(t - t0), advanced in increments of `step` for `count`
// steps.
struct SkewPath {
    double u0 = 0.0;
    double v0 = 0.0;
    double delta = 0.0;
    double eta = 0.0;
    double step = 0.0;
    long count = 0;
};

// M advancing a lifted point by (delta*step, eta*step) in the parameters.
DenseMatrix skew_step_matrix(const LiftedSurface& s, const SkewPath& path);

// delta*A_u + eta*A_v: derivative operator along the skew direction.
DenseMatrix skew_derivative_matrix(const LiftedSurface& s, double delta, double eta);

struct SurfaceSample {
    long index;
    double u;
    double v;
    DenseVector lifted;
};

// A run broken into pieces; each segment advances the parameters by
// (du, dv) per step, starting from the previous segment's last point.
struct ScheduleSegment {
    double du = 0.0;
    double dv = 0.0;
    long steps = 0;
};

std::vector<SurfaceSample> run_schedule(const LiftedSurface& s, double u0, double v0,
                                        std::span<const ScheduleSegment> segments,
                                        const DenseVector* start = nullptr);

std::vector<SurfaceSample> run_iso(const LiftedSurface& s, double u0, double v0, Axis along,
                                   double h, long count, const DenseVector* start = nullptr);

std::vector<SurfaceSample> run_skew(const LiftedSurface& s, const SkewPath& path,
                                    const DenseVector* start = nullptr);

// A_u^du A_v^dv x in lifted coordinates (du + dv >= 1). The operators
// commute, so application order is immaterial.
DenseVector surface_partials_lifted(const LiftedSurface& s, const DenseVector& lifted, int du,
                                    int dv);

// Same, restricted to the first geometric_dim coordinates (derivatives of
// the homogeneous coordinates when the surface is homogeneous).
DenseVector surface_partials(const LiftedSurface& s, const DenseVector& lifted, int du, int dv);

// Geometric point for emission. Homogeneous surfaces divide the leading
// coordinates by the weight; throws ZeroWeightError when |w| < 1e-12.
DenseVector project_surface_point(const LiftedSurface& s, const DenseVector& lifted);

}  // namespace dyneval
