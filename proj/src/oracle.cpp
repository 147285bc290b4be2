#include "dyneval/oracle.hpp"

namespace dyneval {

DenseVector direct_eval(const LiftedCurve& c, double t) {
    return mat_vec(c.matrix(), eval_basis(c.basis(), t));
}

DenseVector direct_eval(const LiftedSurface& s, double u, double v) {
    return mat_vec(s.matrix(), eval_surface_basis(s.basis(), u, v));
}

DenseVector de_casteljau(const DenseMatrix& control, double t) {
    const int d = control.rows();
    const int n = control.cols() - 1;
    std::vector<double> work(control.entries().begin(), control.entries().end());
    const double s = 1.0 - t;
    for (int level = n; level >= 1; --level)
        for (int i = 0; i < level; ++i)
            for (int r = 0; r < d; ++r) {
                double* row = work.data() + static_cast<size_t>(r) * (n + 1);
                row[i] = s * row[i] + t * row[i + 1];
            }
    DenseVector out(d);
    for (int r = 0; r < d; ++r) out[r] = work[static_cast<size_t>(r) * (n + 1)];
    return out;
}

DenseVector de_casteljau_surface(const DenseMatrix& control, int nu, int nv, double u, double v) {
    const int d = control.rows();
    if (control.cols() != (nu + 1) * (nv + 1))
        throw DimensionError("control net size does not match the degrees");
    DenseMatrix rows(d, nu + 1);
    DenseMatrix strip(d, nv + 1);
    for (int i = 0; i <= nu; ++i) {
        for (int j = 0; j <= nv; ++j)
            for (int r = 0; r < d; ++r) strip(r, j) = control(r, i * (nv + 1) + j);
        const DenseVector p = de_casteljau(strip, v);
        for (int r = 0; r < d; ++r) rows(r, i) = p[r];
    }
    return de_casteljau(rows, u);
}

DenseVector horner_power(const DenseMatrix& coefficients, double t) {
    const int d = coefficients.rows();
    const int n = coefficients.cols() - 1;
    DenseVector out(d);
    for (int r = 0; r < d; ++r) {
        double acc = coefficients(r, n);
        for (int k = n - 1; k >= 0; --k) acc = coefficients(r, k) + t * acc;
        out[r] = acc;
    }
    return out;
}

DenseMatrix taylor_ode_step_matrix(const DenseMatrix& a, double h, int order) {
    if (a.rows() != a.cols()) throw DimensionError("taylor_ode_step_matrix: matrix not square");
    if (order < 1) throw PreconditionError("expansion order must be >= 1");
    DenseMatrix sum = DenseMatrix::identity(a.rows());
    DenseMatrix term = DenseMatrix::identity(a.rows());
    for (int k = 1; k <= order; ++k) {
        term = mat_scale(mat_mul(term, a), h / static_cast<double>(k));
        sum = mat_add(sum, term);
    }
    return sum;
}

}  // namespace dyneval
