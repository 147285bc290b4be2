#pragma once
#include <vector>

#include "dyneval/basis.hpp"
#include "dyneval/transform.hpp"

namespace dyneval {

// A curve given by a basis and one coefficient column per basis function
// (coefficients has d rows, one per geometric coordinate).
struct CurveSpec {
    Basis basis;
    DenseMatrix coefficients;
};

// Curve with its coefficient matrix lifted to an invertible square matrix.
// Everything is immutable after construction and safe to share.
class LiftedCurve {
public:
    LiftedCurve(Basis basis, DenseMatrix matrix, DenseMatrix inverse, double condition,
                int geometric_dim);

    const Basis& basis() const { return basis_; }
    const DenseMatrix& matrix() const { return matrix_; }
    const DenseMatrix& inverse() const { return inverse_; }
    // A_c with X'(t) = A_c X(t) on the lifted curve.
    const DenseMatrix& derivative_operator() const { return derivative_op_; }
    double condition() const { return condition_; }
    int geometric_dim() const { return geometric_dim_; }
    int dim() const { return matrix_.rows(); }

    DenseVector start_point(double t) const;          // lifted point by direct evaluation
    DenseVector project(const DenseVector& lifted) const;  // first d coordinates

private:
    Basis basis_;
    DenseMatrix matrix_;
    DenseMatrix inverse_;
    DenseMatrix derivative_op_;
    double condition_;
    int geometric_dim_;
};

// Lift a rectangular coefficient matrix (throws LiftingError when no
// acceptable augmentation exists). A square invertible input passes
// through unchanged.
LiftedCurve lift(const CurveSpec& spec);

// Accept an already-square coefficient matrix whose first geometric_dim
// rows are the geometric coordinates.
LiftedCurve lift_square(Basis basis, DenseMatrix matrix, int geometric_dim);

// One-step iteration matrix: X(next t) = M * X(t). Linear steps require a
// polynomial basis.
DenseMatrix iteration_matrix(const LiftedCurve& c, const StepSpec& step);

struct CurveSample {
    long index;
    double t;
    DenseVector lifted;
};

// count steps of t -> t + h from t0; emits count+1 samples including the
// start. A caller-supplied lifted start point overrides direct evaluation.
std::vector<CurveSample> run_fixed(const LiftedCurve& c, double t0, double h, long count,
                                   const DenseVector* start = nullptr);

// count steps of t -> (1-t)a + tb; parameters attached via the closed form
// t_i = t0 + i*a when b-a = 1, else a*(1-(b-a)^i)/(1-(b-a)) + t0*(b-a)^i.
std::vector<CurveSample> run_linear(const LiftedCurve& c, double t0, double a, double b,
                                    long count, const DenseVector* start = nullptr);

// Derivatives at a lifted point: A_c x, A_c^2 x, ..., A_c^order x,
// projected to the geometric dimension.
std::vector<DenseVector> derivatives_at(const LiftedCurve& c, const DenseVector& lifted,
                                        int order);

}  // namespace dyneval
