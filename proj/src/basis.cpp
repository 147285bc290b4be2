#include "dyneval/basis.hpp"

#include <cmath>

namespace dyneval {

namespace {

constexpr int kMaxDegree = 64;

void check_degree(int degree) {
    if (degree < 0 || degree > kMaxDegree)
        throw PreconditionError("basis degree out of range [0,64]");
}

void check_frequency(double w) {
    if (!std::isfinite(w) || w == 0.0)
        throw PreconditionError("basis frequency must be finite and nonzero");
}

}  // namespace

Basis Basis::poly(int degree) {
    check_degree(degree);
    Basis b;
    b.kind_ = Kind::Poly;
    b.degree_ = degree;
    return b;
}

Basis Basis::trig(double frequency) {
    check_frequency(frequency);
    Basis b;
    b.kind_ = Kind::Trig;
    b.frequency_ = frequency;
    return b;
}

Basis Basis::hyper(double frequency) {
    check_frequency(frequency);
    Basis b;
    b.kind_ = Kind::Hyper;
    b.frequency_ = frequency;
    return b;
}

Basis Basis::bernstein(int degree) {
    check_degree(degree);
    Basis b;
    b.kind_ = Kind::Bernstein;
    b.degree_ = degree;
    return b;
}

Basis Basis::union_of(std::vector<Basis> children) {
    if (children.empty()) throw PreconditionError("union needs at least one child");
    Basis b;
    b.kind_ = Kind::Union;
    b.children_ = std::move(children);
    return b;
}

Basis Basis::product_of(std::vector<Basis> children) {
    if (children.empty()) throw PreconditionError("product needs at least one child");
    Basis b;
    b.kind_ = Kind::Product;
    b.children_ = std::move(children);
    return b;
}

int Basis::dim() const {
    switch (kind_) {
        case Kind::Poly:
        case Kind::Bernstein:
            return degree_ + 1;
        case Kind::Trig:
        case Kind::Hyper:
            return 2;
        case Kind::Union: {
            int d = 0;
            for (const auto& c : children_) d += c.dim();
            return d;
        }
        case Kind::Product: {
            int d = 1;
            for (const auto& c : children_) d *= c.dim();
            return d;
        }
    }
    return 0;
}

bool Basis::polynomial_only() const {
    switch (kind_) {
        case Kind::Poly:
        case Kind::Bernstein:
            return true;
        case Kind::Trig:
        case Kind::Hyper:
            return false;
        case Kind::Union:
        case Kind::Product:
            for (const auto& c : children_)
                if (!c.polynomial_only()) return false;
            return true;
    }
    return false;
}

DenseVector bernstein_values(int n, double t) {
    DenseVector b(static_cast<size_t>(n) + 1, 0.0);
    b[0] = 1.0;
    const double s = 1.0 - t;
    for (int d = 1; d <= n; ++d) {
        b[d] = t * b[d - 1];
        for (int i = d - 1; i >= 1; --i) b[i] = t * b[i - 1] + s * b[i];
        b[0] = s * b[0];
    }
    return b;
}

namespace {

// Concatenation of scaled copies: entry i*dim(b) + j = a[i]*b[j].
DenseVector outer(const DenseVector& a, const DenseVector& b) {
    DenseVector out(a.size() * b.size());
    size_t k = 0;
    for (double ai : a)
        for (double bj : b) out[k++] = ai * bj;
    return out;
}

}  // namespace

DenseVector eval_basis(const Basis& b, double t) {
    switch (b.kind()) {
        case Basis::Kind::Poly: {
            DenseVector v(static_cast<size_t>(b.degree()) + 1);
            double p = 1.0;
            for (int i = 0; i <= b.degree(); ++i) {
                v[i] = p;
                p *= t;
            }
            return v;
        }
        case Basis::Kind::Trig: {
            const double x = b.frequency() * t;
            return {std::cos(x), std::sin(x)};
        }
        case Basis::Kind::Hyper: {
            const double x = b.frequency() * t;
            return {std::cosh(x), std::sinh(x)};
        }
        case Basis::Kind::Bernstein:
            return bernstein_values(b.degree(), t);
        case Basis::Kind::Union: {
            DenseVector out;
            out.reserve(b.dim());
            for (const auto& c : b.children()) {
                DenseVector cv = eval_basis(c, t);
                out.insert(out.end(), cv.begin(), cv.end());
            }
            return out;
        }
        case Basis::Kind::Product: {
            DenseVector acc = eval_basis(b.children()[0], t);
            for (size_t i = 1; i < b.children().size(); ++i)
                acc = outer(acc, eval_basis(b.children()[i], t));
            return acc;
        }
    }
    throw Error("eval_basis: unreachable");
}

namespace {

// Bernstein-to-power conversion G (Phi_B = G * U_n) and its closed-form
// inverse; both have exact integer/rational entries so the Bernstein
// derivative matrix G * A_poly * G^-1 is built without a numeric solve.
DenseMatrix bernstein_to_power(int n, const std::vector<std::vector<double>>& pas) {
    DenseMatrix g(n + 1, n + 1);
    for (int i = 0; i <= n; ++i)
        for (int k = i; k <= n; ++k) {
            const double sign = ((k - i) % 2 == 0) ? 1.0 : -1.0;
            g(i, k) = sign * pas[n][i] * pas[n - i][k - i];
        }
    return g;
}

DenseMatrix power_to_bernstein(int n, const std::vector<std::vector<double>>& pas) {
    DenseMatrix g(n + 1, n + 1);
    for (int k = 0; k <= n; ++k)
        for (int i = k; i <= n; ++i) g(k, i) = pas[i][k] / pas[n][k];
    return g;
}

DenseMatrix poly_derivative_matrix(int n) {
    DenseMatrix a(n + 1, n + 1);
    for (int i = 1; i <= n; ++i) a(i, i - 1) = static_cast<double>(i);
    return a;
}

}  // namespace

DenseMatrix derivative_matrix(const Basis& b) {
    switch (b.kind()) {
        case Basis::Kind::Poly:
            return poly_derivative_matrix(b.degree());
        case Basis::Kind::Trig: {
            const double w = b.frequency();
            return DenseMatrix::from_rows({{0.0, -w}, {w, 0.0}});
        }
        case Basis::Kind::Hyper: {
            const double w = b.frequency();
            return DenseMatrix::from_rows({{0.0, w}, {w, 0.0}});
        }
        case Basis::Kind::Bernstein: {
            const int n = b.degree();
            const auto pas = pascal_rows(n);
            const DenseMatrix g = bernstein_to_power(n, pas);
            const DenseMatrix ginv = power_to_bernstein(n, pas);
            return mat_mul(mat_mul(g, poly_derivative_matrix(n)), ginv);
        }
        case Basis::Kind::Union: {
            DenseMatrix acc = derivative_matrix(b.children()[0]);
            for (size_t i = 1; i < b.children().size(); ++i)
                acc = block_diag(acc, derivative_matrix(b.children()[i]));
            return acc;
        }
        case Basis::Kind::Product: {
            // d/dt (a x b) = A kron I + I kron B, folded right-associatively
            // for more than two factors.
            const auto& ch = b.children();
            DenseMatrix acc = derivative_matrix(ch.back());
            int acc_dim = ch.back().dim();
            for (int i = static_cast<int>(ch.size()) - 2; i >= 0; --i) {
                const int di = ch[i].dim();
                acc = mat_add(kron(derivative_matrix(ch[i]), DenseMatrix::identity(acc_dim)),
                              kron(DenseMatrix::identity(di), acc));
                acc_dim *= di;
            }
            return acc;
        }
    }
    throw Error("derivative_matrix: unreachable");
}

SurfaceBasis SurfaceBasis::tensor(Basis u, Basis v) {
    SurfaceBasis sb;
    sb.terms_.push_back(SurfaceTerm{std::move(u), std::move(v)});
    return sb;
}

SurfaceBasis SurfaceBasis::mixed(std::vector<SurfaceTerm> terms) {
    if (terms.empty()) throw PreconditionError("surface basis needs at least one term");
    for (const auto& t : terms)
        if (!t.u && !t.v) throw PreconditionError("surface term needs at least one factor");
    SurfaceBasis sb;
    sb.terms_ = std::move(terms);
    return sb;
}

int SurfaceBasis::dim() const {
    int d = 0;
    for (const auto& t : terms_) d += t.dim();
    return d;
}

DenseVector eval_surface_basis(const SurfaceBasis& sb, double u, double v) {
    DenseVector out;
    out.reserve(sb.dim());
    for (const auto& term : sb.terms()) {
        DenseVector tv;
        if (term.u && term.v)
            tv = outer(eval_basis(*term.u, u), eval_basis(*term.v, v));
        else if (term.u)
            tv = eval_basis(*term.u, u);
        else
            tv = eval_basis(*term.v, v);
        out.insert(out.end(), tv.begin(), tv.end());
    }
    return out;
}

std::pair<DenseMatrix, DenseMatrix> surface_derivative_matrices(const SurfaceBasis& sb) {
    std::vector<DenseMatrix> du_blocks, dv_blocks;
    for (const auto& term : sb.terms()) {
        if (term.u && term.v) {
            const int nu = term.u->dim(), nv = term.v->dim();
            du_blocks.push_back(kron(derivative_matrix(*term.u), DenseMatrix::identity(nv)));
            dv_blocks.push_back(kron(DenseMatrix::identity(nu), derivative_matrix(*term.v)));
        } else if (term.u) {
            du_blocks.push_back(derivative_matrix(*term.u));
            dv_blocks.push_back(DenseMatrix(term.u->dim(), term.u->dim()));
        } else {
            du_blocks.push_back(DenseMatrix(term.v->dim(), term.v->dim()));
            dv_blocks.push_back(derivative_matrix(*term.v));
        }
    }
    return {block_diag(du_blocks), block_diag(dv_blocks)};
}

}  // namespace dyneval
