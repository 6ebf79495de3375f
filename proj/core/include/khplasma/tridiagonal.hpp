#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace khplasma {

/// Real symmetric tridiagonal matrix: diagonal d[0..n) and off-diagonal e[0..n-1),
/// e[i] coupling rows i and i+1.
struct SymmetricTridiagonal {
    std::vector<double> diagonal;
    std::vector<double> off_diagonal;

    [[nodiscard]] std::size_t size() const noexcept { return diagonal.size(); }

    /// Number of eigenvalues strictly less than x (Sturm sequence / LDL^T inertia).
    [[nodiscard]] std::size_t count_below(double x) const;

    /// Gershgorin interval containing the whole spectrum.
    [[nodiscard]] std::pair<double, double> gershgorin_bounds() const;
};

struct Eigenpair {
    double value = 0.0;
    std::vector<double> vector;  ///< Unit 2-norm, largest component positive.
};

/// k-th smallest eigenvalue (k = 0 is the minimum) by bisection on the Sturm count,
/// converged to a few ulps of the matrix norm.
double kth_eigenvalue(const SymmetricTridiagonal& t, std::size_t k);

/// Eigenvector for an isolated eigenvalue estimate by inverse iteration.
std::vector<double> inverse_iteration(const SymmetricTridiagonal& t, double eigenvalue,
                                      int iterations = 3);

Eigenpair lowest_eigenpair(const SymmetricTridiagonal& t);

/// Number of sign changes in `values`, ignoring entries below `threshold` in magnitude.
std::size_t count_sign_changes(std::span<const double> values, double threshold);

}  // namespace khplasma
