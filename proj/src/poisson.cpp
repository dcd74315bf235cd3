#include "fedosov/poisson.hpp"

#include <stdexcept>

namespace fedosov {

bool is_antisymmetric(const ScalarMatrix& m) {
    const int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[i].size()) != n) return false;
        for (int j = 0; j < n; ++j)
            if (!(m[i][j] + m[j][i]).is_zero()) return false;
    }
    return true;
}

ScalarMatrix invert_matrix(const ScalarMatrix& m) {
    const int n = static_cast<int>(m.size());
    ScalarMatrix a = m;
    ScalarMatrix inv(n, std::vector<Scalar>(n, Scalar(0)));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[i].size()) != n)
            throw std::invalid_argument("invert_matrix: not square");
        inv[i][i] = Scalar(1);
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!a[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::domain_error("invert_matrix: singular matrix");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        Scalar p = a[col][col];
        for (int c = 0; c < n; ++c) {
            a[col][c] /= p;
            inv[col][c] /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Scalar f = a[r][col];
            for (int c = 0; c < n; ++c) {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

PoissonMatrix PoissonMatrix::from_omega(const ScalarMatrix& omega) {
    if (!is_antisymmetric(omega))
        throw std::invalid_argument("PoissonMatrix: omega not antisymmetric");
    if (omega.size() % 2 != 0)
        throw std::invalid_argument("PoissonMatrix: odd dimension");
    PoissonMatrix P;
    P.dim_ = static_cast<int>(omega.size());
    P.omega_ = omega;
    P.pi_ = invert_matrix(omega);
    return P;
}

PoissonMatrix PoissonMatrix::from_pi(const ScalarMatrix& pi) {
    if (!is_antisymmetric(pi))
        throw std::invalid_argument("PoissonMatrix: pi not antisymmetric");
    PoissonMatrix P;
    P.dim_ = static_cast<int>(pi.size());
    P.pi_ = pi;
    return P;
}

const ScalarMatrix& PoissonMatrix::omega() const {
    if (!omega_) throw std::domain_error("PoissonMatrix: omega not available");
    return *omega_;
}

Scalar PoissonMatrix::omega_at(int i, int j) const { return omega()[i][j]; }

}  // namespace fedosov
