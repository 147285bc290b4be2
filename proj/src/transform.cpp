#include "dyneval/transform.hpp"

#include <array>
#include <cmath>

namespace dyneval {

StepSpec StepSpec::translate(double h) {
    if (!std::isfinite(h)) throw PreconditionError("translate step must be finite");
    StepSpec s;
    s.kind = Kind::Translate;
    s.h = h;
    return s;
}

StepSpec StepSpec::linear(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b)) throw PreconditionError("linear step must be finite");
    if (a == b) throw PreconditionError("linear step requires a != b");
    StepSpec s;
    s.kind = Kind::Linear;
    s.a = a;
    s.b = b;
    return s;
}

namespace {

constexpr double kReductionThreshold = 0.1;

constexpr double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

template <int N>
constexpr std::array<double, N> alternating_inverse_factorials(int first, int stride) {
    std::array<double, N> c{};
    for (int k = 0; k < N; ++k)
        c[k] = (k % 2 == 0 ? 1.0 : -1.0) / factorial(first + stride * k);
    return c;
}

template <int N>
constexpr std::array<double, N> inverse_factorials(int first, int stride) {
    std::array<double, N> c{};
    for (int k = 0; k < N; ++k) c[k] = 1.0 / factorial(first + stride * k);
    return c;
}

// sin through h^15, cos through h^16.
constexpr auto kSinCoeffs = alternating_inverse_factorials<8>(1, 2);
constexpr auto kCosCoeffs = alternating_inverse_factorials<9>(0, 2);
constexpr auto kSinhCoeffs = inverse_factorials<8>(1, 2);
constexpr auto kCoshCoeffs = inverse_factorials<9>(0, 2);

template <size_t N>
double horner_even(const std::array<double, N>& c, double x) {
    double p = c[N - 1];
    for (int k = static_cast<int>(N) - 2; k >= 0; --k) p = c[k] + x * p;
    return p;
}

void check_reduced(double h) {
    if (!(std::fabs(h) <= kReductionThreshold))
        throw PreconditionError("Taylor series argument exceeds reduction threshold 0.1");
}

}  // namespace

std::pair<double, double> sin_cos_taylor(double h) {
    check_reduced(h);
    const double x = h * h;
    return {h * horner_even(kSinCoeffs, x), horner_even(kCosCoeffs, x)};
}

std::pair<double, double> sinh_cosh_taylor(double h) {
    check_reduced(h);
    const double x = h * h;
    return {h * horner_even(kSinhCoeffs, x), horner_even(kCoshCoeffs, x)};
}

DenseMatrix poly_translation_matrix(int n, double h) {
    if (!std::isfinite(h)) throw PreconditionError("step must be finite");
    const auto pas = pascal_rows(n);
    DenseMatrix m(n + 1, n + 1);
    for (int i = 0; i <= n; ++i) {
        double hp = 1.0;  // h^(i-j), built from the diagonal outward
        for (int j = i; j >= 0; --j) {
            m(i, j) = pas[i][j] * hp;
            hp *= h;
        }
    }
    return m;
}

namespace {

// Halve the angle until the series applies, then square the matrix back.
// Halving by two is exact in binary floating point.
template <typename F>
DenseMatrix reduced_2x2(double angle, F build) {
    unsigned long k = 1;
    double red = angle;
    while (std::fabs(red) > kReductionThreshold) {
        red *= 0.5;
        k <<= 1UL;
    }
    DenseMatrix base = build(red);
    return k == 1 ? base : mat_pow(base, k);
}

}  // namespace

DenseMatrix trig_translation_matrix(double angle) {
    if (!std::isfinite(angle)) throw PreconditionError("angle must be finite");
    return reduced_2x2(angle, [](double h) {
        const auto [s, c] = sin_cos_taylor(h);
        return DenseMatrix::from_rows({{c, -s}, {s, c}});
    });
}

DenseMatrix hyper_translation_matrix(double angle) {
    if (!std::isfinite(angle)) throw PreconditionError("angle must be finite");
    return reduced_2x2(angle, [](double h) {
        const auto [s, c] = sinh_cosh_taylor(h);
        return DenseMatrix::from_rows({{c, s}, {s, c}});
    });
}

DenseMatrix power_linear_matrix(int n, double a0, double a1) {
    if (a0 == 0.0) throw PreconditionError("power_linear_matrix: a0 must be nonzero");
    if (!std::isfinite(a0) || !std::isfinite(a1))
        throw PreconditionError("power_linear_matrix: coefficients must be finite");
    const auto pas = pascal_rows(n);
    DenseMatrix m(n + 1, n + 1);
    for (int i = 0; i <= n; ++i) {
        double p0 = 1.0;  // a0^j
        for (int j = 0; j <= i; ++j) {
            double p1 = 1.0;  // a1^(i-j)
            for (int k = 0; k < i - j; ++k) p1 *= a1;
            m(i, j) = pas[i][j] * p0 * p1;
            p0 *= a0;
        }
    }
    return m;
}

DenseMatrix bernstein_linear_matrix(int n, double a, double b) {
    if (a == b) throw PreconditionError("bernstein_linear_matrix: requires a != b");
    if (!std::isfinite(a) || !std::isfinite(b))
        throw PreconditionError("bernstein_linear_matrix: endpoints must be finite");
    DenseMatrix c(n + 1, n + 1);
    for (int l = 0; l <= n; ++l) {
        const DenseVector bb = bernstein_values(l, b);
        const DenseVector ba = bernstein_values(n - l, a);
        for (int i = 0; i <= l; ++i)
            for (int j = 0; j <= n - l; ++j) c(i + j, l) += bb[i] * ba[j];
    }
    return c;
}

DenseMatrix translation_matrix(const Basis& b, double h) {
    if (!std::isfinite(h)) throw PreconditionError("step must be finite");
    switch (b.kind()) {
        case Basis::Kind::Poly:
            return poly_translation_matrix(b.degree(), h);
        case Basis::Kind::Trig:
            return trig_translation_matrix(b.frequency() * h);
        case Basis::Kind::Hyper:
            return hyper_translation_matrix(b.frequency() * h);
        case Basis::Kind::Bernstein:
            // B_{i,n}(t+h) is the linear reparametrization onto [h, 1+h].
            return h == 0.0 ? DenseMatrix::identity(b.degree() + 1)
                            : bernstein_linear_matrix(b.degree(), h, 1.0 + h);
        case Basis::Kind::Union: {
            DenseMatrix acc = translation_matrix(b.children()[0], h);
            for (size_t i = 1; i < b.children().size(); ++i)
                acc = block_diag(acc, translation_matrix(b.children()[i], h));
            return acc;
        }
        case Basis::Kind::Product: {
            DenseMatrix acc = translation_matrix(b.children()[0], h);
            for (size_t i = 1; i < b.children().size(); ++i)
                acc = kron(acc, translation_matrix(b.children()[i], h));
            return acc;
        }
    }
    throw Error("translation_matrix: unreachable");
}

DenseMatrix linear_matrix(const Basis& basis, double a, double b) {
    if (a == b) throw PreconditionError("linear_matrix: requires a != b");
    switch (basis.kind()) {
        case Basis::Kind::Poly:
            // t -> (1-t)a + tb is the power-basis map with (a0, a1) = (b-a, a).
            return power_linear_matrix(basis.degree(), b - a, a);
        case Basis::Kind::Bernstein:
            return bernstein_linear_matrix(basis.degree(), a, b);
        case Basis::Kind::Trig:
        case Basis::Kind::Hyper:
            throw UnsupportedStepError(
                "linear parameter steps are only defined for polynomial bases");
        case Basis::Kind::Union: {
            DenseMatrix acc = linear_matrix(basis.children()[0], a, b);
            for (size_t i = 1; i < basis.children().size(); ++i)
                acc = block_diag(acc, linear_matrix(basis.children()[i], a, b));
            return acc;
        }
        case Basis::Kind::Product: {
            DenseMatrix acc = linear_matrix(basis.children()[0], a, b);
            for (size_t i = 1; i < basis.children().size(); ++i)
                acc = kron(acc, linear_matrix(basis.children()[i], a, b));
            return acc;
        }
    }
    throw Error("linear_matrix: unreachable");
}

std::pair<DenseMatrix, DenseMatrix> surface_translation_matrices(const SurfaceBasis& sb,
                                                                 double h1, double h2) {
    if (!std::isfinite(h1) || !std::isfinite(h2))
        throw PreconditionError("surface steps must be finite");
    std::vector<DenseMatrix> cu_blocks, cv_blocks;
    for (const auto& term : sb.terms()) {
        if (term.u && term.v) {
            const int nu = term.u->dim(), nv = term.v->dim();
            cu_blocks.push_back(kron(translation_matrix(*term.u, h1), DenseMatrix::identity(nv)));
            cv_blocks.push_back(kron(DenseMatrix::identity(nu), translation_matrix(*term.v, h2)));
        } else if (term.u) {
            cu_blocks.push_back(translation_matrix(*term.u, h1));
            cv_blocks.push_back(DenseMatrix::identity(term.u->dim()));
        } else {
            cu_blocks.push_back(DenseMatrix::identity(term.v->dim()));
            cv_blocks.push_back(translation_matrix(*term.v, h2));
        }
    }
    return {block_diag(cu_blocks), block_diag(cv_blocks)};
}

}  // namespace dyneval
