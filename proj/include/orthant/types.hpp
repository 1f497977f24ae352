#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <optional>
#include <string>

namespace orthant {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Max-abs-entry norm. All scale-relative tolerances in this library are
// expressed against this norm, for vectors and matrices alike.
inline double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double max_abs(const Vector& v) {
    return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

inline bool all_positive(const Vector& v) {
    return v.size() > 0 && (v.array() > 0.0).all();
}

inline bool all_nonnegative(const Vector& v, double slack = 0.0) {
    return (v.array() >= -slack).all();
}

struct CholeskyResult {
    bool ok = false;
    Matrix lower;        // valid iff ok
    int fail_index = -1; // first pivot that fell below tolerance
    double fail_pivot = 0.0;
};

// Symmetric factorization A = L L^T without pivoting. Fails (ok = false)
// as soon as a pivot drops below pivot_rel_tol times the largest diagonal
// entry of A, which doubles as the positive-definiteness test.
inline CholeskyResult sym_cholesky_lower(const Matrix& a, double pivot_rel_tol = 1e-12) {
    const auto n = a.rows();
    CholeskyResult res;
    res.lower = Matrix::Zero(n, n);
    const double diag_scale = a.diagonal().cwiseAbs().maxCoeff();
    const double pivot_floor = pivot_rel_tol * std::max(diag_scale, 1e-300);
    for (Eigen::Index j = 0; j < n; ++j) {
        double d = a(j, j);
        for (Eigen::Index k = 0; k < j; ++k) d -= res.lower(j, k) * res.lower(j, k);
        if (!(d > pivot_floor)) {
            res.fail_index = static_cast<int>(j);
            res.fail_pivot = d;
            return res;
        }
        const double ljj = std::sqrt(d);
        res.lower(j, j) = ljj;
        for (Eigen::Index i = j + 1; i < n; ++i) {
            double s = a(i, j);
            for (Eigen::Index k = 0; k < j; ++k) s -= res.lower(i, k) * res.lower(j, k);
            res.lower(i, j) = s / ljj;
        }
    }
    res.ok = true;
    return res;
}

} // namespace orthant
