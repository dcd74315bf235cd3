#include "fedosov/connection.hpp"

#include <stdexcept>

namespace fedosov {

void ConnectionData::set_symbol(int i, int j, int k, const BasePoly& value) {
    if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_)
        throw std::invalid_argument("ConnectionData: index out of range");
    if (value.dim() != dim_)
        throw std::invalid_argument("ConnectionData: coefficient dim mismatch");
    if (value.is_zero())
        symbols_.erase({i, j, k});
    else
        symbols_[{i, j, k}] = value;
}

BasePoly ConnectionData::symbol(int i, int j, int k) const {
    auto it = symbols_.find({i, j, k});
    return it == symbols_.end() ? BasePoly(dim_) : it->second;
}

BasePoly ConnectionData::raised_symbol(int m, int j, int k,
                                       const PoissonMatrix& P) const {
    BasePoly out(dim_);
    for (int i = 0; i < dim_; ++i) {
        const Scalar pi = P.pi_at(m, i);
        if (pi.is_zero()) continue;
        out += symbol(i, j, k).scaled(pi);
    }
    return out;
}

void ConnectionData::validate(const PoissonMatrix& P) const {
    if (P.dim() != dim_)
        throw std::invalid_argument("ConnectionData: Poisson dim mismatch");
    if (!P.has_omega())
        throw std::domain_error(
            "ConnectionData: connection requires a nondegenerate form");
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = j + 1; k < dim_; ++k)
                if (symbol(i, j, k) != symbol(i, k, j))
                    throw std::domain_error(
                        "ConnectionData: torsion symmetry G_ijk = G_ikj fails");
    // nabla_k omega_ij = -G^m_ki omega_mj - G^m_kj omega_im must vanish
    for (int k = 0; k < dim_; ++k) {
        for (int i = 0; i < dim_; ++i) {
            for (int j = i + 1; j < dim_; ++j) {
                BasePoly acc(dim_);
                for (int m = 0; m < dim_; ++m) {
                    const Scalar omj = P.omega_at(m, j);
                    if (!omj.is_zero())
                        acc -= raised_symbol(m, k, i, P).scaled(omj);
                    const Scalar oim = P.omega_at(i, m);
                    if (!oim.is_zero())
                        acc -= raised_symbol(m, k, j, P).scaled(oim);
                }
                if (!acc.is_zero())
                    throw std::domain_error(
                        "ConnectionData: symplectic form is not parallel");
            }
        }
    }
}

WeylForm ConnectionData::gamma_tilde(Truncation trunc) const {
    WeylForm g(dim_, trunc);
    const Scalar half = Scalar::ratio(1, 2);
    for (const auto& [idx, p] : symbols_) {
        WeylElement w(dim_, trunc);
        Exp alpha(dim_, 0);
        alpha[idx[0]] += 1;
        alpha[idx[1]] += 1;
        w.add_term(0, alpha, p.scaled(half));
        g.add_entry({idx[2]}, w);
    }
    return g;
}

WeylForm ConnectionData::curvature(const PoissonMatrix& P,
                                   Truncation trunc) const {
    WeylForm g = gamma_tilde(trunc);
    return x_exterior(g) + quad_over_hbar(g, P);
}

WeylForm covariant_partial(const WeylForm& a, const WeylForm& gamma_tilde,
                           const PoissonMatrix& P) {
    return x_exterior(a) + i_over_hbar_commutator(gamma_tilde, a, P);
}

}  // namespace fedosov
