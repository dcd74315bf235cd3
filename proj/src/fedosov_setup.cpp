#include "fedosov/fedosov_setup.hpp"

#include <stdexcept>

#include "fedosov/multi_index.hpp"

namespace fedosov {

CurvaturePrescription::CurvaturePrescription(const PoissonMatrix& P)
    : poisson_(P),
      omega_total_(P.dim()),
      perturbation_(P.dim()) {
    if (!P.has_omega())
        throw std::domain_error(
            "CurvaturePrescription: needs a nondegenerate symplectic form");
    omega_total_ = ScalarFormSeries::constant_two_form(P.dim(), P.omega());
}

void CurvaturePrescription::add_perturbation(int k,
                                             const ScalarFormSeries& omega_k) {
    if (k < 1)
        throw std::invalid_argument(
            "CurvaturePrescription: perturbation order must be >= 1");
    if (omega_k.dim() != dim())
        throw std::invalid_argument("CurvaturePrescription: dim mismatch");
    for (const auto& [key, p] : omega_k.entries()) {
        if (key.first != 0)
            throw std::invalid_argument(
                "CurvaturePrescription: perturbation must be given at hbar "
                "order zero");
        if (key.second.size() != 2)
            throw std::invalid_argument(
                "CurvaturePrescription: perturbation must be a 2-form");
    }
    if (!d_exterior(omega_k).is_zero())
        throw std::domain_error(
            "CurvaturePrescription: perturbation 2-form is not closed");
    ScalarFormSeries shifted = omega_k.shifted_hbar(k);
    omega_total_ += shifted;
    perturbation_ += shifted;
}

WeylForm fedosov_d_with(const WeylForm& a, const WeylForm& gamma,
                        const WeylForm& gamma_tilde, const PoissonMatrix& P) {
    return -delta(a) + covariant_partial(a, gamma_tilde, P) +
           i_over_hbar_commutator(gamma, a, P);
}

WeylForm weyl_curvature_of(const WeylForm& gamma, const WeylForm& gamma_tilde,
                           const WeylForm& r_tilde, const PoissonMatrix& P) {
    WeylForm omega = WeylForm::from_scalar_form(
        ScalarFormSeries::constant_two_form(P.dim(), P.omega()),
        gamma.trunc());
    return omega - r_tilde + delta(gamma) -
           covariant_partial(gamma, gamma_tilde, P) - quad_over_hbar(gamma, P);
}

FedosovSetup::FedosovSetup(ConnectionData conn, CurvaturePrescription presc,
                           Truncation trunc)
    : conn_(std::move(conn)), presc_(std::move(presc)), trunc_(trunc) {
    if (conn_.dim() != presc_.dim())
        throw std::invalid_argument("FedosovSetup: dim mismatch");
    conn_.validate(presc_.poisson());
    gamma_tilde_ = conn_.gamma_tilde(trunc_);
    r_tilde_ = conn_.curvature(presc_.poisson(), trunc_);
    gamma_ = WeylForm(dim(), trunc_);
    solve_gamma_();
}

void FedosovSetup::solve_gamma_() {
    const PoissonMatrix& P = presc_.poisson();
    WeylForm source =
        WeylForm::from_scalar_form(presc_.perturbation_part(), trunc_) +
        r_tilde_;
    WeylForm gamma(dim(), trunc_);
    for (int it = 0; it <= trunc_.degree_cap + 3; ++it) {
        WeylForm next =
            delta_inv(source + covariant_partial(gamma, gamma_tilde_, P) +
                      quad_over_hbar(gamma, P));
        if (next == gamma) {
            gamma_ = std::move(gamma);
            return;
        }
        gamma = std::move(next);
    }
    throw std::runtime_error(
        "FedosovSetup: gamma recursion did not stabilize within the degree "
        "cap");
}

WeylForm FedosovSetup::covariant(const WeylForm& a) const {
    return covariant_partial(a, gamma_tilde_, presc_.poisson());
}

WeylForm FedosovSetup::fedosov_d(const WeylForm& a) const {
    return fedosov_d_with(a, gamma_, gamma_tilde_, presc_.poisson());
}

WeylForm FedosovSetup::curvature_residual() const {
    WeylForm hat =
        weyl_curvature_of(gamma_, gamma_tilde_, r_tilde_, presc_.poisson());
    WeylForm presc_form =
        WeylForm::from_scalar_form(presc_.omega_total(), trunc_);
    return (hat - presc_form).truncated_above(trunc_.degree_cap - 1);
}

WeylElement FedosovSetup::flat_section(const CenterSeries& a) const {
    const PoissonMatrix& P = presc_.poisson();
    WeylForm base =
        WeylForm::from_element(WeylElement::from_center(a, trunc_));
    WeylForm u = base;
    for (int it = 0; it <= trunc_.degree_cap + 3; ++it) {
        WeylForm next =
            base + delta_inv(covariant(u) + i_over_hbar_commutator(gamma_, u, P));
        if (next == u) return u.element();
        u = std::move(next);
    }
    throw std::runtime_error(
        "FedosovSetup: flat-section recursion did not stabilize");
}

WeylElement FedosovSetup::flat_section(const BasePoly& a) const {
    return flat_section(CenterSeries::from_poly(a));
}

CenterSeries FedosovSetup::star(const CenterSeries& a,
                                const CenterSeries& b) const {
    return moyal_center(flat_section(a), flat_section(b), presc_.poisson());
}

CenterSeries FedosovSetup::star(const BasePoly& a, const BasePoly& b) const {
    return star(CenterSeries::from_poly(a), CenterSeries::from_poly(b));
}

ScalarFormSeries FedosovSetup::characteristic_class() const {
    return presc_.omega_total().shifted_hbar(-1);
}

QuantumExpCheck check_quantum_exponential(const FedosovSetup& setup,
                                          int test_degree) {
    QuantumExpCheck report;
    const int n = setup.dim();
    const Truncation& trunc = setup.trunc();
    const PoissonMatrix& P = setup.poisson();
    const int margin = trunc.degree_cap - 1;

    std::vector<BasePoly> basis;
    for (const Exp& e : exps_up_to(n, test_degree))
        basis.push_back(BasePoly::monomial(n, e, Scalar(1)));

    std::vector<WeylElement> sections;
    sections.reserve(basis.size());
    for (const BasePoly& a : basis) {
        WeylElement u = setup.flat_section(a);
        sections.push_back(u);
        ++report.cases_checked;

        if (center_project(u) != CenterSeries::from_poly(a))
            report.center_identity_ok = false;

        // first-order shape: the section opens as a + delta_inv(d a)
        WeylForm expect =
            WeylForm::from_element(WeylElement::from_poly(a, trunc));
        expect += delta_inv(x_exterior(expect));
        if (WeylForm::from_element(u).truncated_above(1) !=
            expect.truncated_above(1))
            report.taylor_axiom_ok = false;
    }

    // closure of flat sections under the fiber product: the product of two
    // sections is flat, hence equals the section of its own center
    for (std::size_t ia = 0; ia < sections.size(); ++ia) {
        for (std::size_t ib = 0; ib < sections.size(); ++ib) {
            WeylElement w = moyal_mul(sections[ia], sections[ib], P);
            WeylForm dw = setup.fedosov_d(WeylForm::from_element(w));
            if (!dw.truncated_above(margin).is_zero()) {
                report.star_closure_ok = false;
                continue;
            }
            WeylElement again = setup.flat_section(center_project(w));
            if (again.truncated_above(margin) != w.truncated_above(margin))
                report.star_closure_ok = false;
        }
    }
    return report;
}

}  // namespace fedosov
