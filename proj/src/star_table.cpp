#include "fedosov/star_table.hpp"

#include <random>
#include <stdexcept>
#include <utility>

#include "fedosov/multi_index.hpp"

namespace fedosov {

void StarProductTable::add_term(int k, const Exp& alpha, const Exp& beta,
                                const BasePoly& coeff) {
    if (k < 0 || k >= static_cast<int>(c_.size()))
        throw std::invalid_argument("StarProductTable: order out of range");
    if (static_cast<int>(alpha.size()) != dim_ ||
        static_cast<int>(beta.size()) != dim_ || coeff.dim() != dim_)
        throw std::invalid_argument("StarProductTable: dim mismatch");
    if (coeff.is_zero()) return;
    c_[k].push_back(BiDiffTerm{alpha, beta, coeff});
}

BasePoly StarProductTable::apply(int k, const BasePoly& f,
                                 const BasePoly& g) const {
    BasePoly out(dim_);
    for (const BiDiffTerm& t : c_.at(k)) {
        BasePoly df = f.derivative(t.alpha);
        if (df.is_zero()) continue;
        BasePoly dg = g.derivative(t.beta);
        if (dg.is_zero()) continue;
        out += t.coeff * df * dg;
    }
    return out;
}

CenterSeries StarProductTable::evaluate(const BasePoly& f,
                                        const BasePoly& g) const {
    CenterSeries out(dim_);
    for (int k = 0; k <= order(); ++k) out.add_term(k, apply(k, f, g));
    return out;
}

CenterSeries StarProductTable::evaluate(const CenterSeries& f,
                                        const CenterSeries& g) const {
    CenterSeries out(dim_);
    for (const auto& [m, fm] : f.terms()) {
        for (const auto& [l, gl] : g.terms()) {
            for (int k = 0; k <= order(); ++k) {
                if (m + l + k > order()) break;
                out.add_term(m + l + k, apply(k, fm, gl));
            }
        }
    }
    return out;
}

bool StarProductTable::check_normalization(const PoissonMatrix& P) const {
    if (order() < 1) return false;
    // C_0 is plain multiplication
    const Exp zero(dim_, 0);
    if (c_[0].size() != 1) return false;
    if (c_[0][0].alpha != zero || c_[0][0].beta != zero ||
        c_[0][0].coeff != BasePoly::constant(dim_, Scalar(1)))
        return false;

    // antisymmetric part of C_1
    std::map<std::pair<Exp, Exp>, BasePoly> anti;
    const Scalar half = Scalar::ratio(1, 2);
    for (const BiDiffTerm& t : c_[1]) {
        auto add = [&](const Exp& a, const Exp& b, const BasePoly& v) {
            auto [it, fresh] = anti.emplace(std::make_pair(a, b), v);
            if (!fresh) {
                it->second += v;
                if (it->second.is_zero()) anti.erase(it);
            }
        };
        add(t.alpha, t.beta, t.coeff.scaled(half));
        add(t.beta, t.alpha, t.coeff.scaled(-half));
    }
    std::map<std::pair<Exp, Exp>, BasePoly> want;
    const Scalar factor = Scalar::i() * Scalar::ratio(-1, 2);
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            const Scalar pij = P.pi_at(i, j);
            if (pij.is_zero()) continue;
            want.emplace(std::make_pair(exp_unit(dim_, i), exp_unit(dim_, j)),
                         BasePoly::constant(dim_, factor * pij));
        }
    }
    return anti == want;
}

namespace {

BasePoly probe_poly(int dim, int max_degree, int n_terms,
                    std::mt19937_64& eng) {
    const std::vector<Exp> pool = exps_up_to(dim, max_degree);
    BasePoly out(dim);
    for (int t = 0; t < n_terms; ++t) {
        const Exp& e = pool[eng() % pool.size()];
        long num = static_cast<long>(eng() % 19) - 9;
        long den = 1 + static_cast<long>(eng() % 4);
        if (num == 0) num = 1;
        out += BasePoly::monomial(dim, e, Scalar::ratio(num, den));
    }
    return out;
}

}  // namespace

TableExtraction extract_table(const FedosovSetup& setup, int N, int order_cap,
                              std::uint64_t probe_seed) {
    if (N < 0) throw std::invalid_argument("extract_table: negative order");
    if (order_cap < 0)
        throw std::invalid_argument("extract_table: negative derivative cap");
    if (2 * N > setup.trunc().degree_cap)
        throw std::invalid_argument(
            "extract_table: 2N exceeds the degree cap, star values would be "
            "truncated");

    const int n = setup.dim();
    TableExtraction out;
    out.table = StarProductTable(n, N);

    // jet basis with cached sections; exps_up_to is ordered by total degree
    const std::vector<Exp> basis = exps_up_to(n, order_cap);
    std::vector<BasePoly> monomials;
    std::vector<WeylElement> sections;
    monomials.reserve(basis.size());
    sections.reserve(basis.size());
    for (const Exp& e : basis) {
        monomials.push_back(BasePoly::monomial(n, e));
        sections.push_back(setup.flat_section(monomials.back()));
    }

    // triangular solve in increasing |alpha| + |beta|: after subtracting the
    // already-known terms, the probe value reduces to alpha! beta! g_{ab}
    for (int total = 0; total <= 2 * order_cap; ++total) {
        for (std::size_t ia = 0; ia < basis.size(); ++ia) {
            const int da = exp_total(basis[ia]);
            if (da > total) break;
            for (std::size_t ib = 0; ib < basis.size(); ++ib) {
                const int db = exp_total(basis[ib]);
                if (db > total - da) break;
                if (da + db != total) continue;
                CenterSeries value =
                    moyal_center(sections[ia], sections[ib], setup.poisson());
                const Scalar norm =
                    Scalar(1) / Scalar(exp_factorial(basis[ia]) *
                                       exp_factorial(basis[ib]));
                for (int k = 0; k <= N; ++k) {
                    BasePoly residual =
                        value.coeff(k) -
                        out.table.apply(k, monomials[ia], monomials[ib]);
                    if (!residual.is_zero())
                        out.table.add_term(k, basis[ia], basis[ib],
                                           residual.scaled(norm));
                }
            }
        }
    }

    // reconstruction residual on random pairs two degrees past the probe
    // basis, where any missed higher-order coefficient would show up
    std::mt19937_64 eng(probe_seed);
    out.residual_ok = true;
    const int probe_degree = order_cap + 2;
    for (int rep = 0; rep < 10; ++rep) {
        BasePoly f = probe_poly(n, probe_degree, 4, eng);
        BasePoly g = probe_poly(n, probe_degree, 4, eng);
        CenterSeries direct = setup.star(f, g).truncated(N);
        CenterSeries viatable = out.table.evaluate(f, g).truncated(N);
        if (direct != viatable) {
            out.residual_ok = false;
            out.residual_note =
                "reconstruction residual nonzero: the derivative cap is too "
                "small to express some C_k";
            break;
        }
    }
    if (out.residual_ok) out.residual_note = "10 random pairs reproduced";
    return out;
}

}  // namespace fedosov
