#include "dyneval/surface.hpp"

#include <cmath>
#include <map>

#include "dyneval/lifting.hpp"
#include "dyneval/transform.hpp"

namespace dyneval {

LiftedSurface::LiftedSurface(SurfaceBasis basis, DenseMatrix matrix, DenseMatrix inverse,
                             double condition, int geometric_dim, bool homogeneous)
    : basis_(std::move(basis)),
      matrix_(std::move(matrix)),
      inverse_(std::move(inverse)),
      condition_(condition),
      geometric_dim_(geometric_dim),
      homogeneous_(homogeneous) {
    auto [a1, a2] = surface_derivative_matrices(basis_);
    du_op_ = mat_mul(mat_mul(matrix_, a1), inverse_);
    dv_op_ = mat_mul(mat_mul(matrix_, a2), inverse_);
}

DenseVector LiftedSurface::start_point(double u, double v) const {
    return mat_vec(matrix_, eval_surface_basis(basis_, u, v));
}

LiftedSurface lift_surface(const DenseMatrix& coeffs, SurfaceBasis basis, int geometric_dim,
                           bool homogeneous) {
    if (coeffs.cols() != basis.dim())
        throw PreconditionError("coefficient count must equal the surface basis dimension");
    if (geometric_dim < 1 || geometric_dim > coeffs.rows())
        throw PreconditionError("geometric dimension out of range");
    if (homogeneous && geometric_dim < 2)
        throw PreconditionError("homogeneous surfaces need at least two coordinates");
    Lifted lifted = lift_to_square(coeffs);
    return LiftedSurface(std::move(basis), std::move(lifted.matrix), std::move(lifted.inverse),
                         lifted.condition, geometric_dim, homogeneous);
}

namespace {

DenseMatrix conjugate(const LiftedSurface& s, const DenseMatrix& inner) {
    return mat_mul(mat_mul(s.matrix(), inner), s.inverse());
}

DenseMatrix step_matrix(const LiftedSurface& s, double du, double dv) {
    auto [cu, cv] = surface_translation_matrices(s.basis(), du, dv);
    return conjugate(s, mat_mul(cu, cv));
}

}  // namespace

std::pair<DenseMatrix, DenseMatrix> iso_step_matrices(const LiftedSurface& s, double h1,
                                                      double h2) {
    auto [cu, cv] = surface_translation_matrices(s.basis(), h1, h2);
    return {conjugate(s, cu), conjugate(s, cv)};
}

DenseMatrix skew_step_matrix(const LiftedSurface& s, const SkewPath& path) {
    if (path.delta == 0.0 && path.eta == 0.0)
        throw PreconditionError("skew path needs a nonzero parameter velocity");
    return step_matrix(s, path.delta * path.step, path.eta * path.step);
}

DenseMatrix skew_derivative_matrix(const LiftedSurface& s, double delta, double eta) {
    return mat_add(mat_scale(s.u_derivative_operator(), delta),
                   mat_scale(s.v_derivative_operator(), eta));
}

std::vector<SurfaceSample> run_schedule(const LiftedSurface& s, double u0, double v0,
                                        std::span<const ScheduleSegment> segments,
                                        const DenseVector* start) {
    DenseVector x;
    if (start) {
        if (static_cast<int>(start->size()) != s.dim())
            throw DimensionError("start point has wrong dimension");
        x = *start;
    } else {
        x = s.start_point(u0, v0);
    }

    long total = 0;
    for (const auto& seg : segments) {
        if (seg.steps < 0) throw PreconditionError("segment step count must be non-negative");
        total += seg.steps;
    }

    std::vector<SurfaceSample> samples;
    samples.reserve(total + 1);
    samples.push_back({0, u0, v0, x});

    std::map<std::pair<double, double>, DenseMatrix> cache;
    DenseVector next;
    long index = 0;
    double su = u0, sv = v0;
    for (const auto& seg : segments) {
        auto it = cache.find({seg.du, seg.dv});
        if (it == cache.end())
            it = cache.emplace(std::make_pair(seg.du, seg.dv), step_matrix(s, seg.du, seg.dv))
                     .first;
        const DenseMatrix& m = it->second;
        for (long j = 1; j <= seg.steps; ++j) {
            mat_vec_into(m, x, next);
            x.swap(next);
            samples.push_back({++index, su + static_cast<double>(j) * seg.du,
                               sv + static_cast<double>(j) * seg.dv, x});
        }
        su += static_cast<double>(seg.steps) * seg.du;
        sv += static_cast<double>(seg.steps) * seg.dv;
    }
    return samples;
}

std::vector<SurfaceSample> run_iso(const LiftedSurface& s, double u0, double v0, Axis along,
                                   double h, long count, const DenseVector* start) {
    const ScheduleSegment seg{along == Axis::U ? h : 0.0, along == Axis::V ? h : 0.0, count};
    return run_schedule(s, u0, v0, std::span(&seg, 1), start);
}

std::vector<SurfaceSample> run_skew(const LiftedSurface& s, const SkewPath& path,
                                    const DenseVector* start) {
    if (path.delta == 0.0 && path.eta == 0.0)
        throw PreconditionError("skew path needs a nonzero parameter velocity");
    const ScheduleSegment seg{path.delta * path.step, path.eta * path.step, path.count};
    return run_schedule(s, path.u0, path.v0, std::span(&seg, 1), start);
}

DenseVector surface_partials_lifted(const LiftedSurface& s, const DenseVector& lifted, int du,
                                    int dv) {
    if (du < 0 || dv < 0 || du + dv < 1)
        throw PreconditionError("partial derivative order must be >= 1");
    DenseVector y = lifted;
    DenseVector next;
    for (int k = 0; k < dv; ++k) {
        mat_vec_into(s.v_derivative_operator(), y, next);
        y.swap(next);
    }
    for (int k = 0; k < du; ++k) {
        mat_vec_into(s.u_derivative_operator(), y, next);
        y.swap(next);
    }
    return y;
}

DenseVector surface_partials(const LiftedSurface& s, const DenseVector& lifted, int du, int dv) {
    DenseVector y = surface_partials_lifted(s, lifted, du, dv);
    return DenseVector(y.begin(), y.begin() + s.geometric_dim());
}

DenseVector project_surface_point(const LiftedSurface& s, const DenseVector& lifted) {
    const int d = s.geometric_dim();
    if (!s.homogeneous()) return DenseVector(lifted.begin(), lifted.begin() + d);
    const double w = lifted[d - 1];
    if (std::fabs(w) < 1e-12)
        throw ZeroWeightError("homogeneous point has (near-)zero weight at emit");
    DenseVector out(d - 1);
    for (int i = 0; i < d - 1; ++i) out[i] = lifted[i] / w;
    return out;
}

}  // namespace dyneval
