#pragma once

// Constant fiber symplectic/Poisson data for the Weyl algebra: the matrix
// omega_{ij} and its exact inverse pi^{ij} = (omega^{-1})^{ij}.  The Moyal
// kernel only ever reads pi; omega is optional so degenerate-Poisson fibers
// can be exercised in tests.

#include <optional>
#include <vector>

#include "fedosov/scalar.hpp"

namespace fedosov {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

ScalarMatrix invert_matrix(const ScalarMatrix& m);  // throws if singular
bool is_antisymmetric(const ScalarMatrix& m);

class PoissonMatrix {
public:
    // symplectic: pi = omega^{-1} computed exactly
    static PoissonMatrix from_omega(const ScalarMatrix& omega);
    // degenerate allowed: pi given directly, omega absent
    static PoissonMatrix from_pi(const ScalarMatrix& pi);

    int dim() const { return dim_; }
    bool has_omega() const { return omega_.has_value(); }
    const ScalarMatrix& omega() const;
    const ScalarMatrix& pi() const { return pi_; }
    Scalar omega_at(int i, int j) const;
    Scalar pi_at(int i, int j) const { return pi_[i][j]; }

    friend bool operator==(const PoissonMatrix& a, const PoissonMatrix& b) {
        return a.dim_ == b.dim_ && a.omega_ == b.omega_ && a.pi_ == b.pi_;
    }

private:
    int dim_ = 0;
    std::optional<ScalarMatrix> omega_;
    ScalarMatrix pi_;
};

}  // namespace fedosov
