#pragma once

// The two central recursions: solving the connection 1-form gamma for a
// prescribed Weyl curvature, and lifting central series to flat sections.
// The star product is the center projection of the fiberwise product of
// flat sections; the characteristic class is the prescribed curvature
// divided by hbar.

#include <utility>
#include <vector>

#include "fedosov/connection.hpp"

namespace fedosov {

class CurvaturePrescription {
public:
    CurvaturePrescription() = default;
    // curvature equal to the symplectic form itself
    explicit CurvaturePrescription(const PoissonMatrix& P);

    // add hbar^k * omega_k with omega_k a closed polynomial 2-form given at
    // hbar order 0; requires k >= 1
    void add_perturbation(int k, const ScalarFormSeries& omega_k);

    const PoissonMatrix& poisson() const { return poisson_; }
    int dim() const { return poisson_.dim(); }

    // omega + sum_k hbar^k omega_k
    const ScalarFormSeries& omega_total() const { return omega_total_; }
    // sum_k hbar^k omega_k only
    const ScalarFormSeries& perturbation_part() const { return perturbation_; }

private:
    PoissonMatrix poisson_;
    ScalarFormSeries omega_total_;
    ScalarFormSeries perturbation_;
};

// D_gamma a = -delta a + partial a + (i/hbar)[gamma, a] for an arbitrary
// 1-form gamma (not necessarily solved)
WeylForm fedosov_d_with(const WeylForm& a, const WeylForm& gamma,
                        const WeylForm& gamma_tilde, const PoissonMatrix& P);

// the Weyl curvature of an arbitrary gamma:
//   omega - R + delta gamma - partial gamma - (i/hbar) gamma * gamma
// with omega embedded as a central 2-form
WeylForm weyl_curvature_of(const WeylForm& gamma, const WeylForm& gamma_tilde,
                           const WeylForm& r_tilde, const PoissonMatrix& P);

class FedosovSetup {
public:
    // validates the connection, solves gamma, and caches the derived data
    FedosovSetup(ConnectionData conn, CurvaturePrescription presc,
                 Truncation trunc);

    int dim() const { return presc_.dim(); }
    const Truncation& trunc() const { return trunc_; }
    const PoissonMatrix& poisson() const { return presc_.poisson(); }
    const ConnectionData& connection() const { return conn_; }
    const CurvaturePrescription& prescription() const { return presc_; }
    const WeylForm& gamma() const { return gamma_; }
    const WeylForm& gamma_tilde() const { return gamma_tilde_; }
    const WeylForm& curvature_r() const { return r_tilde_; }

    // partial a (no gamma term)
    WeylForm covariant(const WeylForm& a) const;
    // D a = -delta a + partial a + (i/hbar)[gamma, a]
    WeylForm fedosov_d(const WeylForm& a) const;

    // (omega - R + delta gamma - partial gamma - (i/hbar) gamma^2) minus the
    // prescribed curvature, truncated to the exactness margin cap-1;
    // identically zero for a correctly solved gamma
    WeylForm curvature_residual() const;

    WeylElement flat_section(const CenterSeries& a) const;
    WeylElement flat_section(const BasePoly& a) const;

    CenterSeries star(const CenterSeries& a, const CenterSeries& b) const;
    CenterSeries star(const BasePoly& a, const BasePoly& b) const;

    // the prescribed curvature divided by hbar (a Laurent form series)
    ScalarFormSeries characteristic_class() const;

private:
    void solve_gamma_();

    ConnectionData conn_;
    CurvaturePrescription presc_;
    Truncation trunc_;
    WeylForm gamma_tilde_;
    WeylForm r_tilde_;
    WeylForm gamma_;
};

// report for the quantum-exponential axioms checked over the monomial basis
// of degree <= test_degree: closure of flat sections under the fiber
// product, center projection being a left inverse, and the first-order
// Taylor shape a + delta_inv(d a)
struct QuantumExpCheck {
    bool star_closure_ok = true;
    bool center_identity_ok = true;
    bool taylor_axiom_ok = true;
    int cases_checked = 0;
    bool all_ok() const {
        return star_closure_ok && center_identity_ok && taylor_axiom_ok;
    }
};

QuantumExpCheck check_quantum_exponential(const FedosovSetup& setup,
                                          int test_degree);

}  // namespace fedosov
