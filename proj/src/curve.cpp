#include "dyneval/curve.hpp"

#include <cmath>

#include "dyneval/lifting.hpp"

namespace dyneval {

LiftedCurve::LiftedCurve(Basis basis, DenseMatrix matrix, DenseMatrix inverse, double condition,
                         int geometric_dim)
    : basis_(std::move(basis)),
      matrix_(std::move(matrix)),
      inverse_(std::move(inverse)),
      condition_(condition),
      geometric_dim_(geometric_dim) {
    derivative_op_ = mat_mul(mat_mul(matrix_, derivative_matrix(basis_)), inverse_);
}

DenseVector LiftedCurve::start_point(double t) const {
    return mat_vec(matrix_, eval_basis(basis_, t));
}

DenseVector LiftedCurve::project(const DenseVector& lifted) const {
    return DenseVector(lifted.begin(), lifted.begin() + geometric_dim_);
}

LiftedCurve lift(const CurveSpec& spec) {
    if (spec.coefficients.cols() != spec.basis.dim())
        throw PreconditionError("control point count must equal the basis dimension");
    Lifted lifted = lift_to_square(spec.coefficients);
    return LiftedCurve(spec.basis, std::move(lifted.matrix), std::move(lifted.inverse),
                       lifted.condition, spec.coefficients.rows());
}

LiftedCurve lift_square(Basis basis, DenseMatrix matrix, int geometric_dim) {
    if (matrix.rows() != matrix.cols() || matrix.cols() != basis.dim())
        throw PreconditionError("matrix must be square of the basis dimension");
    if (geometric_dim < 1 || geometric_dim > matrix.rows())
        throw PreconditionError("geometric dimension out of range");
    Lifted lifted = lift_to_square(matrix);
    return LiftedCurve(std::move(basis), std::move(lifted.matrix), std::move(lifted.inverse),
                       lifted.condition, geometric_dim);
}

DenseMatrix iteration_matrix(const LiftedCurve& c, const StepSpec& step) {
    DenseMatrix basis_transform;
    if (step.kind == StepSpec::Kind::Translate) {
        basis_transform = translation_matrix(c.basis(), step.h);
    } else {
        if (!c.basis().polynomial_only())
            throw UnsupportedStepError("linear steps require a polynomial basis");
        basis_transform = linear_matrix(c.basis(), step.a, step.b);
    }
    return mat_mul(mat_mul(c.matrix(), basis_transform), c.inverse());
}

namespace {

DenseVector initial_point(const LiftedCurve& c, double t0, const DenseVector* start) {
    if (!start) return c.start_point(t0);
    if (static_cast<int>(start->size()) != c.dim())
        throw DimensionError("start point has wrong dimension");
    return *start;
}

}  // namespace

std::vector<CurveSample> run_fixed(const LiftedCurve& c, double t0, double h, long count,
                                   const DenseVector* start) {
    if (count < 0) throw PreconditionError("point count must be non-negative");
    const DenseMatrix m = iteration_matrix(c, StepSpec::translate(h));
    std::vector<CurveSample> samples;
    samples.reserve(count + 1);
    DenseVector x = initial_point(c, t0, start);
    samples.push_back({0, t0, x});
    DenseVector next;
    for (long i = 1; i <= count; ++i) {
        mat_vec_into(m, x, next);
        x.swap(next);
        samples.push_back({i, t0 + static_cast<double>(i) * h, x});
    }
    return samples;
}

std::vector<CurveSample> run_linear(const LiftedCurve& c, double t0, double a, double b,
                                    long count, const DenseVector* start) {
    if (count < 0) throw PreconditionError("point count must be non-negative");
    const DenseMatrix m = iteration_matrix(c, StepSpec::linear(a, b));
    const double r = b - a;
    // Guard the closed form against catastrophic cancellation when r is
    // within rounding of 1; the uniform branch is the correct limit there.
    const bool uniform = std::fabs(r - 1.0) < 1e-14;
    std::vector<CurveSample> samples;
    samples.reserve(count + 1);
    DenseVector x = initial_point(c, t0, start);
    samples.push_back({0, t0, x});
    DenseVector next;
    for (long i = 1; i <= count; ++i) {
        mat_vec_into(m, x, next);
        x.swap(next);
        const double di = static_cast<double>(i);
        const double ti = uniform ? t0 + di * a
                                  : a * (1.0 - std::pow(r, di)) / (1.0 - r) + t0 * std::pow(r, di);
        samples.push_back({i, ti, x});
    }
    return samples;
}

std::vector<DenseVector> derivatives_at(const LiftedCurve& c, const DenseVector& lifted,
                                        int order) {
    if (order < 1) throw PreconditionError("derivative order must be >= 1");
    std::vector<DenseVector> out;
    out.reserve(order);
    DenseVector y = lifted;
    DenseVector next;
    for (int k = 0; k < order; ++k) {
        mat_vec_into(c.derivative_operator(), y, next);
        y.swap(next);
        out.push_back(c.project(y));
    }
    return out;
}

}  // namespace dyneval
