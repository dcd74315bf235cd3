#pragma once

// Symplectic connection data on the chart: lowered Christoffel symbols
// G_{ijk} with polynomial entries, validated for torsion symmetry and
// compatibility with the constant symplectic form.  Provides the quadratic
// fiber generator and the curvature element used by the flat-connection
// recursion.

#include <array>
#include <map>

#include "fedosov/weyl_form.hpp"

namespace fedosov {

class ConnectionData {
public:
    ConnectionData() = default;
    explicit ConnectionData(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    bool is_flat_zero() const { return symbols_.empty(); }

    // lowered symbol G_{ijk}; unset symbols are zero
    void set_symbol(int i, int j, int k, const BasePoly& value);
    BasePoly symbol(int i, int j, int k) const;

    const std::map<std::array<int, 3>, BasePoly>& symbols() const {
        return symbols_;
    }

    // raised symbol G^m_{jk} = pi^{mi} G_{ijk}
    BasePoly raised_symbol(int m, int j, int k, const PoissonMatrix& P) const;

    // throws std::domain_error unless G_{ijk} = G_{ikj} and the covariant
    // derivative of the constant symplectic form vanishes identically
    void validate(const PoissonMatrix& P) const;

    // (1/2) G_{ijk} y^i y^j dx^k
    WeylForm gamma_tilde(Truncation trunc) const;

    // R~ = d Gamma~ + (i/hbar) Gamma~ * Gamma~  (homogeneous of degree 2)
    WeylForm curvature(const PoissonMatrix& P, Truncation trunc) const;

private:
    int dim_ = 0;
    std::map<std::array<int, 3>, BasePoly> symbols_;
};

// partial a = d_x a + (i/hbar) [Gamma~, a]; gamma_tilde is passed in built
// so repeated applications reuse it
WeylForm covariant_partial(const WeylForm& a, const WeylForm& gamma_tilde,
                           const PoissonMatrix& P);

}  // namespace fedosov
