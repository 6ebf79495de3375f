#include "khplasma/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "khplasma/errors.hpp"

namespace khplasma {

namespace {

double pivot_floor(const SymmetricTridiagonal& t) {
    double max_e2 = 1.0;
    for (double e : t.off_diagonal) max_e2 = std::max(max_e2, e * e);
    return std::numeric_limits<double>::min() * max_e2;
}

void check_shape(const SymmetricTridiagonal& t) {
    if (t.diagonal.empty()) throw InputError("tridiagonal: empty matrix");
    if (t.off_diagonal.size() + 1 != t.diagonal.size()) {
        throw InputError("tridiagonal: off-diagonal must have n-1 entries");
    }
}

}  // namespace

std::size_t SymmetricTridiagonal::count_below(double x) const {
    const double floor = pivot_floor(*this);
    std::size_t count = 0;
    double q = diagonal[0] - x;
    if (std::abs(q) < floor) q = -floor;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < diagonal.size(); ++i) {
        const double e = off_diagonal[i - 1];
        q = diagonal[i] - x - e * e / q;
        if (std::abs(q) < floor) q = -floor;
        if (q < 0.0) ++count;
    }
    return count;
}

std::pair<double, double> SymmetricTridiagonal::gershgorin_bounds() const {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0) radius += std::abs(off_diagonal[i - 1]);
        if (i + 1 < n) radius += std::abs(off_diagonal[i]);
        lo = std::min(lo, diagonal[i] - radius);
        hi = std::max(hi, diagonal[i] + radius);
    }
    return {lo, hi};
}

double kth_eigenvalue(const SymmetricTridiagonal& t, std::size_t k) {
    check_shape(t);
    if (k >= t.size()) throw InputError("kth_eigenvalue: index out of range");
    auto [lo, hi] = t.gershgorin_bounds();
    const double norm = std::max(std::abs(lo), std::abs(hi));
    const double eps = std::numeric_limits<double>::epsilon();
    lo -= 2.0 * eps * norm + pivot_floor(t);
    hi += 2.0 * eps * norm + pivot_floor(t);
    // Invariant: count_below(lo) <= k < count_below(hi).
    for (int iter = 0; iter < 256; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (hi - lo <= 2.0 * eps * (std::abs(lo) + std::abs(hi)) + pivot_floor(t)) break;
        if (t.count_below(mid) > k) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> inverse_iteration(const SymmetricTridiagonal& t, double eigenvalue,
                                      int iterations) {
    check_shape(t);
    const std::size_t n = t.size();
    const double floor = std::max(pivot_floor(t), std::numeric_limits<double>::epsilon() *
                                                      std::abs(t.gershgorin_bounds().second));

    // LDL^T of (T - eigenvalue I); pivots guarded away from zero.
    std::vector<double> d(n);
    std::vector<double> l(n > 0 ? n - 1 : 0);
    d[0] = t.diagonal[0] - eigenvalue;
    if (std::abs(d[0]) < floor) d[0] = std::copysign(floor, d[0] == 0.0 ? 1.0 : d[0]);
    for (std::size_t i = 1; i < n; ++i) {
        l[i - 1] = t.off_diagonal[i - 1] / d[i - 1];
        d[i] = t.diagonal[i] - eigenvalue - l[i - 1] * t.off_diagonal[i - 1];
        if (std::abs(d[i]) < floor) d[i] = std::copysign(floor, d[i] == 0.0 ? 1.0 : d[i]);
    }

    std::vector<double> y(n, 1.0 / std::sqrt(static_cast<double>(n)));
    for (int it = 0; it < iterations; ++it) {
        for (std::size_t i = 1; i < n; ++i) y[i] -= l[i - 1] * y[i - 1];
        for (std::size_t i = 0; i < n; ++i) y[i] /= d[i];
        for (std::size_t i = n - 1; i-- > 0;) y[i] -= l[i] * y[i + 1];
        double norm = 0.0;
        for (double v : y) norm += v * v;
        norm = std::sqrt(norm);
        if (!(norm > 0.0) || !std::isfinite(norm)) {
            throw InputError("inverse_iteration: iterate lost finiteness");
        }
        for (double& v : y) v /= norm;
    }
    const auto biggest = std::max_element(y.begin(), y.end(),
                                          [](double a, double b) { return std::abs(a) < std::abs(b); });
    if (*biggest < 0.0) {
        for (double& v : y) v = -v;
    }
    return y;
}

Eigenpair lowest_eigenpair(const SymmetricTridiagonal& t) {
    Eigenpair pair;
    pair.value = kth_eigenvalue(t, 0);
    pair.vector = inverse_iteration(t, pair.value);
    return pair;
}

std::size_t count_sign_changes(std::span<const double> values, double threshold) {
    std::size_t changes = 0;
    int last_sign = 0;
    for (double v : values) {
        if (std::abs(v) <= threshold) continue;
        const int sign = v > 0.0 ? 1 : -1;
        if (last_sign != 0 && sign != last_sign) ++changes;
        last_sign = sign;
    }
    return changes;
}

}  // namespace khplasma
