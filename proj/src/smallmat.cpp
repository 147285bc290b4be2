#include "dyneval/smallmat.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>

namespace dyneval {

DenseMatrix::DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) throw DimensionError("matrix dimensions must be positive");
    a_.assign(static_cast<size_t>(rows) * cols, 0.0);
}

DenseMatrix::DenseMatrix(int rows, int cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (rows <= 0 || cols <= 0) throw DimensionError("matrix dimensions must be positive");
    if (a_.size() != static_cast<size_t>(rows) * cols)
        throw DimensionError("entry count does not match rows*cols");
}

DenseMatrix DenseMatrix::identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    DenseMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c) throw DimensionError("ragged row list");
        int j = 0;
        for (double x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

bool DenseMatrix::all_finite() const {
    for (double x : a_)
        if (!std::isfinite(x)) return false;
    return true;
}

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("mat_mul: inner dimensions differ");
    DenseMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

DenseMatrix mat_add(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("mat_add: shape mismatch");
    DenseMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

DenseMatrix mat_sub(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("mat_sub: shape mismatch");
    DenseMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

DenseMatrix mat_scale(const DenseMatrix& a, double s) {
    DenseMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) * s;
    return c;
}

DenseVector mat_vec(const DenseMatrix& m, const DenseVector& v) {
    DenseVector out;
    mat_vec_into(m, v, out);
    return out;
}

void mat_vec_into(const DenseMatrix& m, const DenseVector& v, DenseVector& out) {
    if (m.cols() != static_cast<int>(v.size())) throw DimensionError("mat_vec: shape mismatch");
    out.assign(m.rows(), 0.0);
    for (int i = 0; i < m.rows(); ++i) {
        double acc = 0.0;
        for (int j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
        out[i] = acc;
    }
}

namespace {

// Residual norm_inf(a*x - I); used to decide whether refinement helped.
double inverse_residual(const DenseMatrix& a, const DenseMatrix& x) {
    DenseMatrix r = mat_mul(a, x);
    for (int i = 0; i < r.rows(); ++i) r(i, i) -= 1.0;
    return norm_inf(r);
}

}  // namespace

std::optional<InverseResult> try_inverse(const DenseMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("try_inverse: matrix not square");
    const int n = a.rows();
    const double anorm = norm_inf(a);
    const double pivot_floor = n * std::numeric_limits<double>::epsilon() * anorm;

    DenseMatrix lu = a;
    std::vector<int> piv(n);
    std::iota(piv.begin(), piv.end(), 0);

    for (int k = 0; k < n; ++k) {
        int p = k;
        double best = std::fabs(lu(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double v = std::fabs(lu(i, k));
            if (v > best) {
                best = v;
                p = i;
            }
        }
        if (!(best > pivot_floor)) return std::nullopt;
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
            std::swap(piv[k], piv[p]);
        }
        const double inv_pivot = 1.0 / lu(k, k);
        for (int i = k + 1; i < n; ++i) {
            const double f = lu(i, k) * inv_pivot;
            lu(i, k) = f;
            for (int j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
        }
    }

    // Solve lu * x_col = e_piv for each column of the inverse.
    DenseMatrix x(n, n);
    std::vector<double> col(n);
    for (int c = 0; c < n; ++c) {
        for (int i = 0; i < n; ++i) col[i] = piv[i] == c ? 1.0 : 0.0;
        for (int i = 1; i < n; ++i) {
            double acc = col[i];
            for (int j = 0; j < i; ++j) acc -= lu(i, j) * col[j];
            col[i] = acc;
        }
        for (int i = n - 1; i >= 0; --i) {
            double acc = col[i];
            for (int j = i + 1; j < n; ++j) acc -= lu(i, j) * col[j];
            col[i] = acc / lu(i, i);
        }
        for (int i = 0; i < n; ++i) x(i, c) = col[i];
    }

    // One Newton pass x <- x(2I - a x); keep it only if the residual drops.
    {
        DenseMatrix r = mat_mul(a, x);
        double res0 = 0.0;
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += std::fabs(r(i, j) - (i == j ? 1.0 : 0.0));
            res0 = std::max(res0, s);
        }
        DenseMatrix t(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t(i, j) = (i == j ? 2.0 : 0.0) - r(i, j);
        DenseMatrix refined = mat_mul(x, t);
        if (refined.all_finite() && inverse_residual(a, refined) < res0) x = std::move(refined);
    }

    if (!x.all_finite()) return std::nullopt;
    const double condition = anorm * norm_inf(x);
    return InverseResult{std::move(x), condition};
}

DenseMatrix mat_inverse(const DenseMatrix& a) {
    auto r = try_inverse(a);
    if (!r)
        throw SingularMatrixError("mat_inverse: singular matrix",
                                  std::numeric_limits<double>::infinity());
    if (r->condition > kConditionLimit)
        throw SingularMatrixError("mat_inverse: condition estimate above limit", r->condition);
    return std::move(r->inverse);
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
    const int p = b.rows(), q = b.cols();
    DenseMatrix c(a.rows() * p, a.cols() * q);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const double aij = a(i, j);
            if (aij == 0.0) continue;
            for (int k = 0; k < p; ++k)
                for (int l = 0; l < q; ++l) c(i * p + k, j * q + l) = aij * b(k, l);
        }
    return c;
}

DenseMatrix block_diag(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols())
        throw DimensionError("block_diag: blocks must be square");
    DenseMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
    return c;
}

DenseMatrix block_diag(std::span<const DenseMatrix> blocks) {
    if (blocks.empty()) throw DimensionError("block_diag: no blocks");
    DenseMatrix acc = blocks[0];
    for (size_t i = 1; i < blocks.size(); ++i) acc = block_diag(acc, blocks[i]);
    return acc;
}

DenseMatrix mat_pow(const DenseMatrix& a, unsigned long k) {
    if (a.rows() != a.cols()) throw DimensionError("mat_pow: matrix not square");
    DenseMatrix result = DenseMatrix::identity(a.rows());
    DenseMatrix base = a;
    while (k > 0) {
        if (k & 1UL) result = mat_mul(result, base);
        k >>= 1UL;
        if (k > 0) base = mat_mul(base, base);
    }
    return result;
}

double norm_inf(const DenseMatrix& a) {
    double best = 0.0;
    for (int i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (int j = 0; j < a.cols(); ++j) s += std::fabs(a(i, j));
        best = std::max(best, s);
    }
    return best;
}

double norm_inf(const DenseVector& v) {
    double best = 0.0;
    for (double x : v) best = std::max(best, std::fabs(x));
    return best;
}

double dist_inf(const DenseVector& a, const DenseVector& b) {
    if (a.size() != b.size()) throw DimensionError("dist_inf: length mismatch");
    double best = 0.0;
    for (size_t i = 0; i < a.size(); ++i) best = std::max(best, std::fabs(a[i] - b[i]));
    return best;
}

double dist_euclid(const DenseVector& a, const DenseVector& b) {
    if (a.size() != b.size()) throw DimensionError("dist_euclid: length mismatch");
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

std::vector<std::vector<double>> pascal_rows(int n) {
    if (n < 0 || n > 64) throw PreconditionError("pascal_rows: degree out of range [0,64]");
    std::vector<std::vector<std::uint64_t>> rows(n + 1);
    for (int i = 0; i <= n; ++i) {
        rows[i].assign(i + 1, 1);
        for (int j = 1; j < i; ++j) rows[i][j] = rows[i - 1][j - 1] + rows[i - 1][j];
    }
    std::vector<std::vector<double>> out(n + 1);
    for (int i = 0; i <= n; ++i) out[i].assign(rows[i].begin(), rows[i].end());
    return out;
}

}  // namespace dyneval
