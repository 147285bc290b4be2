#include "dyneval/lifting.hpp"

#include <cmath>
#include <numeric>
#include <optional>
#include <random>

namespace dyneval {

namespace {

constexpr int kMaxFullAttempts = 500;
constexpr std::uint64_t kComplementSeed = 0x1d7f3a92;

// det(M_X) with unit rows on columns S equals (up to sign) the minor of the
// coefficient block on the complementary columns, so a singular minor rules
// a subset out without forming the full matrix.
std::optional<Lifted> try_unit_row_subsets(const DenseMatrix& coeffs) {
    const int d = coeffs.rows();
    const int n = coeffs.cols();
    const int k = n - d;

    std::vector<int> subset(k);
    std::iota(subset.begin(), subset.end(), 0);
    std::vector<char> in_subset(n, 0);

    int full_attempts = 0;
    while (true) {
        std::fill(in_subset.begin(), in_subset.end(), 0);
        for (int c : subset) in_subset[c] = 1;

        DenseMatrix minor(d, d);
        int mc = 0;
        for (int c = 0; c < n; ++c) {
            if (in_subset[c]) continue;
            for (int r = 0; r < d; ++r) minor(r, mc) = coeffs(r, c);
            ++mc;
        }

        if (auto mi = try_inverse(minor); mi && mi->condition <= kConditionLimit) {
            DenseMatrix full(n, n);
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < n; ++c) full(r, c) = coeffs(r, c);
            for (int r = 0; r < k; ++r) full(d + r, subset[r]) = 1.0;

            if (auto fi = try_inverse(full); fi && fi->condition <= kPreferredLiftCondition)
                return Lifted{std::move(full), std::move(fi->inverse), fi->condition};
            if (++full_attempts >= kMaxFullAttempts) return std::nullopt;
        }

        // next combination in lexicographic order
        int i = k - 1;
        while (i >= 0 && subset[i] == n - k + i) --i;
        if (i < 0) return std::nullopt;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
}

std::optional<Lifted> try_orthonormal_complement(const DenseMatrix& coeffs) {
    const int d = coeffs.rows();
    const int n = coeffs.cols();
    const int k = n - d;

    // Orthonormalize the coefficient rows (projection targets only).
    std::vector<DenseVector> ortho;
    for (int r = 0; r < d; ++r) {
        DenseVector row(n);
        for (int c = 0; c < n; ++c) row[c] = coeffs(r, c);
        for (const auto& q : ortho) {
            double dot = 0.0;
            for (int c = 0; c < n; ++c) dot += row[c] * q[c];
            for (int c = 0; c < n; ++c) row[c] -= dot * q[c];
        }
        double nrm = 0.0;
        for (double x : row) nrm += x * x;
        nrm = std::sqrt(nrm);
        if (nrm > 1e-12) {
            for (double& x : row) x /= nrm;
            ortho.push_back(std::move(row));
        }
    }

    std::mt19937_64 rng(kComplementSeed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    DenseMatrix full(n, n);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < n; ++c) full(r, c) = coeffs(r, c);

    for (int r = 0; r < k; ++r) {
        DenseVector row(n);
        bool ok = false;
        for (int attempt = 0; attempt < 64 && !ok; ++attempt) {
            for (double& x : row) x = gauss(rng);
            for (const auto& q : ortho) {
                double dot = 0.0;
                for (int c = 0; c < n; ++c) dot += row[c] * q[c];
                for (int c = 0; c < n; ++c) row[c] -= dot * q[c];
            }
            double nrm = 0.0;
            for (double x : row) nrm += x * x;
            nrm = std::sqrt(nrm);
            if (nrm > 1e-6) {
                for (double& x : row) x /= nrm;
                ok = true;
            }
        }
        if (!ok) return std::nullopt;
        for (int c = 0; c < n; ++c) full(d + r, c) = row[c];
        ortho.push_back(std::move(row));
    }

    if (auto fi = try_inverse(full); fi && fi->condition <= kConditionLimit)
        return Lifted{std::move(full), std::move(fi->inverse), fi->condition};
    return std::nullopt;
}

}  // namespace

Lifted lift_to_square(const DenseMatrix& coeffs) {
    const int d = coeffs.rows();
    const int n = coeffs.cols();
    if (d > n) throw LiftingError("coefficient matrix has more rows than basis functions");
    if (!coeffs.all_finite()) throw LiftingError("coefficient matrix has non-finite entries");

    if (d == n) {
        auto fi = try_inverse(coeffs);
        if (!fi || fi->condition > kConditionLimit)
            throw LiftingError("square coefficient matrix is singular or too ill-conditioned");
        return Lifted{coeffs, std::move(fi->inverse), fi->condition};
    }

    if (auto lifted = try_unit_row_subsets(coeffs)) return std::move(*lifted);
    if (auto lifted = try_orthonormal_complement(coeffs)) return std::move(*lifted);
    throw LiftingError("no augmentation with acceptable conditioning found");
}

}  // namespace dyneval
