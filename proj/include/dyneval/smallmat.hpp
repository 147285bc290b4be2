#pragma once
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "dyneval/errors.hpp"

namespace dyneval {

using DenseVector = std::vector<double>;

// Small dense real matrix, row-major, double precision. Sized for this
// problem (orders ~2..64); no sparsity, no views.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols);  // zero-filled
    DenseMatrix(int rows, int cols, std::vector<double> entries);

    static DenseMatrix identity(int n);
    static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    std::span<const double> entries() const { return a_; }
    bool all_finite() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b);
inline DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) { return mat_mul(a, b); }

DenseMatrix mat_add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix mat_sub(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix mat_scale(const DenseMatrix& a, double s);

DenseVector mat_vec(const DenseMatrix& m, const DenseVector& v);
void mat_vec_into(const DenseMatrix& m, const DenseVector& v, DenseVector& out);

// Inverse by LU-style elimination with partial (row) pivoting, plus one
// residual-guarded refinement pass. Condition estimated as
// norm_inf(a) * norm_inf(inverse).
struct InverseResult {
    DenseMatrix inverse;
    double condition;
};
std::optional<InverseResult> try_inverse(const DenseMatrix& a);

// Throws SingularMatrixError when singular or condition estimate > 1e12.
DenseMatrix mat_inverse(const DenseMatrix& a);

inline constexpr double kConditionLimit = 1e12;

// (a kron b)[i*p+k, j*q+l] = a(i,j)*b(k,l) for b of shape p x q.
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

// Block-diagonal assembly of two square matrices.
DenseMatrix block_diag(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix block_diag(std::span<const DenseMatrix> blocks);

// a^k by binary exponentiation; a^0 = I.
DenseMatrix mat_pow(const DenseMatrix& a, unsigned long k);

double norm_inf(const DenseMatrix& a);
double norm_inf(const DenseVector& v);
double dist_inf(const DenseVector& a, const DenseVector& b);
double dist_euclid(const DenseVector& a, const DenseVector& b);

// Rows 0..n of Pascal's triangle; additions done in 64-bit integers
// (exact through n = 64), returned as doubles.
std::vector<std::vector<double>> pascal_rows(int n);

}  // namespace dyneval
