#include "fedosov/hochschild.hpp"

#include <climits>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fedosov {

namespace {

int single_index(const Exp& e) {
    for (std::size_t j = 0; j < e.size(); ++j)
        if (e[j] == 1) return static_cast<int>(j);
    throw std::logic_error("single_index: not a unit multi-index");
}

}  // namespace

void Cochain::add_term(int l, const std::vector<Exp>& alphas, const BasePoly& g) {
    if (static_cast<int>(alphas.size()) != arity_)
        throw std::invalid_argument("Cochain::add_term: arity mismatch");
    for (const Exp& a : alphas)
        if (static_cast<int>(a.size()) != dim_)
            throw std::invalid_argument("Cochain::add_term: index dimension mismatch");
    if (g.dim() != dim_)
        throw std::invalid_argument("Cochain::add_term: coefficient dimension mismatch");
    if (g.is_zero()) return;
    CochainKey key{l, alphas};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), g);
        return;
    }
    it->second += g;
    if (it->second.is_zero()) terms_.erase(it);
}

int Cochain::min_order() const {
    if (terms_.empty()) throw std::logic_error("Cochain::min_order: zero cochain");
    return terms_.begin()->first.l;
}

int Cochain::max_order() const {
    if (terms_.empty()) throw std::logic_error("Cochain::max_order: zero cochain");
    return terms_.rbegin()->first.l;
}

Cochain Cochain::operator-() const { return scaled(Scalar(-1)); }

Cochain& Cochain::operator+=(const Cochain& o) {
    if (dim_ != o.dim_ || arity_ != o.arity_)
        throw std::invalid_argument("Cochain: shape mismatch");
    for (const auto& [key, g] : o.terms_) add_term(key.l, key.alphas, g);
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) { return *this += -o; }

Cochain Cochain::scaled(const Scalar& c) const {
    Cochain out(dim_, arity_);
    if (c.is_zero()) return out;
    for (const auto& [key, g] : terms_) out.terms_.emplace(key, g.scaled(c));
    return out;
}

Cochain Cochain::shifted_hbar(int m) const {
    Cochain out(dim_, arity_);
    for (const auto& [key, g] : terms_)
        out.terms_.emplace(CochainKey{key.l + m, key.alphas}, g);
    return out;
}

Cochain Cochain::truncated(int max_order) const {
    Cochain out(dim_, arity_);
    for (const auto& [key, g] : terms_)
        if (key.l <= max_order) out.terms_.emplace(key, g);
    return out;
}

Cochain Cochain::hbar_slice(int l) const {
    Cochain out(dim_, arity_);
    for (const auto& [key, g] : terms_)
        if (key.l == l) out.terms_.emplace(key, g);
    return out;
}

std::string Cochain::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, g] : terms_) {
        if (!first) os << "  +  ";
        first = false;
        os << "hbar^" << key.l << " (" << g.str() << ") d[";
        for (std::size_t s = 0; s < key.alphas.size(); ++s) {
            if (s) os << "|";
            for (std::size_t j = 0; j < key.alphas[s].size(); ++j) {
                if (j) os << ",";
                os << key.alphas[s][j];
            }
        }
        os << "]";
    }
    return os.str();
}

CenterSeries apply_cochain(const Cochain& c, const std::vector<BasePoly>& fs) {
    if (static_cast<int>(fs.size()) != c.arity())
        throw std::invalid_argument("apply_cochain: arity mismatch");
    for (const BasePoly& f : fs)
        if (f.dim() != c.dim())
            throw std::invalid_argument("apply_cochain: dimension mismatch");
    CenterSeries out(c.dim());
    for (const auto& [key, g] : c.terms()) {
        BasePoly prod = g;
        for (std::size_t j = 0; j < fs.size() && !prod.is_zero(); ++j)
            prod = prod * fs[j].derivative(key.alphas[j]);
        if (!prod.is_zero()) out.add_term(key.l, prod);
    }
    return out;
}

Cochain coboundary(const Cochain& c, const StarProductTable& S, int N) {
    if (S.dim() != c.dim())
        throw std::invalid_argument("coboundary: dimension mismatch");
    const int k = c.arity();
    Cochain out(c.dim(), k + 1);
    if (c.is_zero()) return out;
    if (S.order() < N + 1 - c.min_order())
        throw std::invalid_argument(
            "coboundary: table order insufficient for the requested truncation");

    // push one composed term of btilde at hbar^p; b shifts to p-1 and
    // scales by i
    auto push = [&](int p, const std::vector<Exp>& alphas, const BasePoly& g) {
        if (p - 1 > N || g.is_zero()) return;
        out.add_term(p - 1, alphas, g.scaled(Scalar::i()));
    };

    const Scalar sgn_last = (k % 2 == 0) ? Scalar(-1) : Scalar(1);  // (-1)^{k+1}

    for (const auto& [key, g] : c.terms()) {
        const int l = key.l;
        const auto& al = key.alphas;
        for (int m = 0; m <= S.order(); ++m) {
            if (m + l - 1 > N) break;
            for (const auto& st : S.terms(m)) {
                // u_0 * c(u_1..u_k): d^beta spreads over g and the k slots
                for (const auto& [parts, mult] : exp_splits(st.beta, k + 1)) {
                    BasePoly coeff = st.coeff * g.derivative(parts[0]);
                    if (coeff.is_zero()) continue;
                    std::vector<Exp> na(k + 1);
                    na[0] = st.alpha;
                    for (int j = 0; j < k; ++j)
                        na[j + 1] = exp_add(al[j], parts[j + 1]);
                    push(m + l, na, coeff.scaled(Scalar(mult)));
                }
                // (-1)^{k+1} c(u_0..u_{k-1}) * u_k: d^alpha spreads likewise
                for (const auto& [parts, mult] : exp_splits(st.alpha, k + 1)) {
                    BasePoly coeff = st.coeff * g.derivative(parts[0]);
                    if (coeff.is_zero()) continue;
                    std::vector<Exp> na(k + 1);
                    for (int j = 0; j < k; ++j)
                        na[j] = exp_add(al[j], parts[j + 1]);
                    na[k] = st.beta;
                    push(m + l, na, coeff.scaled(sgn_last * Scalar(mult)));
                }
                // (-1)^{i+1} c(u_0,..,u_i*u_{i+1},..,u_k): d^{al[i]} spreads
                // over the table coefficient and the two product slots
                for (int i = 0; i < k; ++i) {
                    const Scalar sgn = (i % 2 == 0) ? Scalar(-1) : Scalar(1);
                    for (const auto& [parts, mult] : exp_splits(al[i], 3)) {
                        BasePoly coeff = g * st.coeff.derivative(parts[0]);
                        if (coeff.is_zero()) continue;
                        std::vector<Exp> na(k + 1);
                        for (int j = 0; j < i; ++j) na[j] = al[j];
                        na[i] = exp_add(st.alpha, parts[1]);
                        na[i + 1] = exp_add(st.beta, parts[2]);
                        for (int j = i + 1; j < k; ++j) na[j + 1] = al[j];
                        push(m + l, na, coeff.scaled(sgn * Scalar(mult)));
                    }
                }
            }
        }
    }
    return out;
}

Cochain derivative_cocycle(const StarProductTable& S) {
    Cochain out(S.dim(), 2);
    for (int m = 1; m <= S.order(); ++m)
        for (const auto& st : S.terms(m))
            out.add_term(m - 1, {st.alpha, st.beta}, st.coeff.scaled(Scalar(m)));
    return out;
}

std::optional<Scalar> cochain_ratio(const Cochain& num, const Cochain& den) {
    if (den.is_zero())
        return num.is_zero() ? std::optional<Scalar>(Scalar(1)) : std::nullopt;
    if (num.is_zero()) return Scalar(0);
    const auto& [k0, g0] = *den.terms().begin();
    auto it = num.terms().find(k0);
    if (it == num.terms().end()) return std::nullopt;
    const auto& [e0, c0] = *g0.terms().begin();
    Scalar nv = it->second.coeff(e0);
    if (nv.is_zero()) return std::nullopt;
    Scalar s = nv / c0;
    if (num == den.scaled(s)) return s;
    return std::nullopt;
}

LiouvilleReport liouville_check(const LiouvilleCandidate& cand,
                                const StarProductTable& S, int test_degree,
                                int N) {
    const Cochain& X = cand.X;
    if (X.arity() != 1)
        throw std::invalid_argument("liouville_check: candidate must have arity 1");
    if (X.dim() != S.dim())
        throw std::invalid_argument("liouville_check: dimension mismatch");
    const int n = S.dim();
    // the table is exact through its order; a Laurent candidate lowers the
    // reach of the star evaluation by its floor
    const int floor0 = X.is_zero() ? 0 : std::min(0, X.min_order());
    const int Nw = std::min(N, S.order() + floor0);

    LiouvilleReport rep;
    rep.kappa = Scalar(0);
    rep.derivation_ok = true;
    int first_bad = INT_MAX;

    auto apply_X = [&](const CenterSeries& s) {
        CenterSeries out(n);
        for (const auto& [m, p] : s.terms())
            out += apply_cochain(X, {p}).shifted_hbar(m);
        return out;
    };

    const std::vector<Exp> monos = exps_up_to(n, test_degree);
    for (const Exp& a : monos) {
        for (const Exp& b : monos) {
            BasePoly f = BasePoly::monomial(n, a);
            BasePoly g = BasePoly::monomial(n, b);
            CenterSeries prod = S.evaluate(f, g);
            CenterSeries lhs =
                prod.hbar_derivative().shifted_hbar(1) + apply_X(prod);
            CenterSeries rhs =
                S.evaluate(apply_cochain(X, {f}), CenterSeries::from_poly(g)) +
                S.evaluate(CenterSeries::from_poly(f), apply_cochain(X, {g}));
            CenterSeries resid = (lhs - rhs).truncated(Nw);
            ++rep.pairs_checked;
            if (!resid.is_zero()) {
                rep.derivation_ok = false;
                if (resid.min_order() < first_bad) {
                    first_bad = resid.min_order();
                    std::ostringstream os;
                    os << "residual at hbar^" << resid.min_order() << " on ("
                       << f.str() << ", " << g.str() << ")";
                    rep.note = os.str();
                }
            }
        }
    }
    rep.first_bad_order = rep.derivation_ok ? -1 : first_bad;

    if (rep.derivation_ok && !X.is_zero() && X.min_order() >= 0) {
        Cochain bX = coboundary(X, S, Nw - 1);
        Cochain c = derivative_cocycle(S).truncated(Nw - 1);
        if (auto s = cochain_ratio(bX, c)) {
            rep.kappa = *s;
            rep.kappa_ok = true;
        }
    }
    return rep;
}

namespace {

// classical coboundary of the arity-1 operator sum_alpha t_alpha(x) d^alpha:
//   b0(x^gamma id)        = + x^gamma (0,0)
//   b0(vector field)      = 0
//   b0(x^gamma d^alpha)   = - sum_{0<sigma<alpha} binom(alpha,sigma)
//                             x^gamma d^sigma ox d^{alpha-sigma}
Cochain b0_classical(const std::map<Exp, BasePoly>& t, int dim) {
    Cochain out(dim, 2);
    const Exp zero(dim, 0);
    for (const auto& [alpha, g] : t) {
        const int total = exp_total(alpha);
        if (total == 0) {
            out.add_term(0, {zero, zero}, g);
            continue;
        }
        if (total == 1) continue;
        for (const auto& [parts, mult] : exp_splits(alpha, 2)) {
            if (exp_total(parts[0]) == 0 || exp_total(parts[1]) == 0) continue;
            out.add_term(0, {parts[0], parts[1]}, g.scaled(Scalar(-1) * Scalar(mult)));
        }
    }
    return out;
}

}  // namespace

TrivializerResult trivialize_on_flat(const Cochain& c, const StarProductTable& S,
                                     int N) {
    if (c.arity() != 2)
        throw std::invalid_argument("trivialize_on_flat: arity-2 input required");
    const int n = S.dim();
    if (c.dim() != n)
        throw std::invalid_argument("trivialize_on_flat: dimension mismatch");
    if (N > S.order() - 1)
        throw std::invalid_argument(
            "trivialize_on_flat: truncation exceeds the table's validity");

    // constant pi read off the antisymmetric first-order part of C_1,
    // normalized as C_1|_antisym = -(i/2) pi^{ij}
    ScalarMatrix pi(n, std::vector<Scalar>(n, Scalar(0)));
    for (const auto& st : S.terms(1)) {
        if (exp_total(st.alpha) != 1 || exp_total(st.beta) != 1) continue;
        if (!st.coeff.is_constant())
            throw std::domain_error(
                "trivialize_on_flat: first-order product part is not constant");
        const int i = single_index(st.alpha);
        const int j = single_index(st.beta);
        // pi^{ij} = antisym(C1)^{ij} / (-(i/2)) = i (C1_{ij} - C1_{ji})
        const Scalar contrib = st.coeff.constant_term() * Scalar::i();
        pi[i][j] += contrib;
        pi[j][i] -= contrib;
    }
    const ScalarMatrix omega = invert_matrix(pi);

    TrivializerResult res;
    res.H = Cochain(n, 1);
    res.euler_fit = Scalar(0);
    int last_m = INT_MIN;
    const int floor0 = c.is_zero() ? 0 : c.min_order();
    const int max_rounds = N - floor0 + 2;

    for (int round = 0; round <= max_rounds; ++round) {
        const Cochain bH =
            res.H.is_zero() ? Cochain(n, 2) : coboundary(res.H, S, N);
        const Cochain r = (c - bH).truncated(N);
        if (r.is_zero()) {
            res.verified_order = N;
            return res;
        }
        const int m = r.min_order();
        if (m <= last_m)
            throw std::runtime_error(
                "trivialize_on_flat: no progress; input is not a coboundary "
                "at this truncation");
        last_m = m;
        const Cochain slice0 = r.hbar_slice(m).shifted_hbar(-m);

        // antisymmetric (1,1) bivector part A^{ij}(x), i<j
        std::map<std::pair<int, int>, BasePoly> A;
        for (const auto& [key, g] : slice0.terms()) {
            if (exp_total(key.alphas[0]) != 1 || exp_total(key.alphas[1]) != 1)
                continue;
            const int i = single_index(key.alphas[0]);
            const int j = single_index(key.alphas[1]);
            if (i == j) continue;
            const BasePoly half = g.scaled(Scalar::ratio(1, 2));
            auto& slot = A.try_emplace({std::min(i, j), std::max(i, j)}, BasePoly(n))
                             .first->second;
            if (i < j)
                slot += half;
            else
                slot -= half;
        }
        Cochain Ac(n, 2);
        for (const auto& [ij, a] : A) {
            Ac.add_term(0, {exp_unit(n, ij.first), exp_unit(n, ij.second)}, a);
            Ac.add_term(0, {exp_unit(n, ij.second), exp_unit(n, ij.first)}, -a);
        }

        // diagonal classical solve b0(T) = slice - bivector part
        const Cochain R0 = slice0 - Ac;
        std::map<Exp, BasePoly> t;
        std::set<Exp> assigned;
        for (const auto& [key, g] : R0.terms()) {
            const Exp& s0 = key.alphas[0];
            const Exp& s1 = key.alphas[1];
            const int t0 = exp_total(s0), t1 = exp_total(s1);
            Exp alpha;
            BasePoly cand(n);
            if (t0 == 0 && t1 == 0) {
                alpha = Exp(n, 0);
                cand = g;
            } else if (t0 == 0 || t1 == 0) {
                throw std::runtime_error(
                    "trivialize_on_flat: one-sided term cannot be a classical "
                    "coboundary");
            } else {
                alpha = exp_add(s0, s1);
                cand = g.scaled(Scalar(Rational(-1) / exp_binomial(alpha, s0)));
            }
            if (assigned.count(alpha)) {
                if (t[alpha] != cand)
                    throw std::runtime_error(
                        "trivialize_on_flat: inconsistent split coefficients; "
                        "slice is not a cocycle");
            } else {
                t[alpha] = cand;
                assigned.insert(alpha);
            }
        }
        if (b0_classical(t, n) != R0)
            throw std::runtime_error(
                "trivialize_on_flat: classical solve failed verification");

        // transported vector field for the bivector part
        if (!Ac.is_zero()) {
            ScalarFormSeries w(n);
            for (int k = 0; k < n; ++k) {
                for (int l = k + 1; l < n; ++l) {
                    BasePoly acc(n);
                    for (const auto& [ij, a] : A) {
                        const int i = ij.first, j = ij.second;
                        // w_{kl} = sum omega_{ki} A^{ij} omega_{jl}, over the
                        // full antisymmetric A
                        acc += a.scaled(omega[k][i] * omega[j][l]);
                        acc += a.scaled(Scalar(-1) * omega[k][j] * omega[i][l]);
                    }
                    if (!acc.is_zero()) w.add_term(0, DxTuple{k, l}, acc);
                }
            }
            const ScalarFormSeries theta = euler_homotopy(w);  // checks closedness
            res.transports[m] = w;
            Cochain X(n, 1);
            for (int a = 0; a < n; ++a) {
                const BasePoly th = theta.coeff(0, DxTuple{a});
                if (th.is_zero()) continue;
                for (int j = 0; j < n; ++j) {
                    if (pi[a][j].is_zero()) continue;
                    X.add_term(0, {exp_unit(n, j)}, th.scaled(pi[a][j]));
                }
            }
            const Cochain bX0 = coboundary(X, S, 0).hbar_slice(0);
            const auto sfit = cochain_ratio(bX0, Ac);
            if (!sfit || sfit->is_zero())
                throw std::runtime_error(
                    "trivialize_on_flat: transported field does not reproduce "
                    "the bivector part");
            res.euler_fit = *sfit;
            res.used_euler = true;
            res.H += X.scaled(Scalar(1) / *sfit).shifted_hbar(m);
        }

        // exact part: b(-i hbar^{m+1} T) restores b0(T) at hbar^m
        Cochain Tc(n, 1);
        for (const auto& [alpha, g] : t) Tc.add_term(0, {alpha}, g);
        res.H += Tc.scaled(Scalar(0) - Scalar::i()).shifted_hbar(m + 1);
    }
    throw std::runtime_error(
        "trivialize_on_flat: failed to terminate within the expected rounds");
}

// ---- section-level pipeline ----

WeylElement apply_H(const FedosovSetup& setup, const WeylElement& u_flat) {
    const PoissonMatrix& P = setup.poisson();
    const WeylForm W =
        setup.fedosov_d(WeylForm::from_element(rho(u_flat)));
    WeylForm v(setup.dim(), setup.trunc());
    const int rounds = setup.trunc().degree_cap + 3;
    for (int it = 0; it < rounds; ++it) {
        WeylForm next = delta_inv(setup.covariant(v) +
                                  i_over_hbar_commutator(setup.gamma(), v, P) -
                                  W);
        if (next == v) return v.element();
        v = next;
    }
    throw std::runtime_error("apply_H: recursion failed to stabilize");
}

WeylForm compute_K0(const FedosovSetup& setup) {
    const int n = setup.dim();
    const Truncation trunc = setup.trunc();
    const WeylForm& g = setup.gamma();
    const Scalar I = Scalar::i();

    WeylForm acc = euler_E(g);                                    // E gamma
    acc += hbar_derivative(g).shifted_hbar(1).scaled(Scalar(0) - I);  // -i hbar gamma'
    acc += g.scaled(I);                                           // i gamma

    WeylForm lam(n, trunc);  // (i/2) omega_{ij} y^i dx^j
    for (int j = 0; j < n; ++j) {
        WeylElement e(n, trunc);
        for (int i = 0; i < n; ++i) {
            const Scalar w = setup.poisson().omega_at(i, j);
            if (w.is_zero()) continue;
            e += WeylElement::fiber_coordinate(n, i, trunc)
                     .scaled(w * I * Scalar::ratio(1, 2));
        }
        if (!e.is_zero()) lam.add_entry(DxTuple{j}, e);
    }
    acc += lam;
    return -acc;
}

DK0Report verify_DK0(const FedosovSetup& setup) {
    DK0Report rep;
    const Truncation trunc = setup.trunc();
    const WeylForm K0 = compute_K0(setup);
    const WeylForm DK0 = setup.fedosov_d(K0);

    const ScalarFormSeries& Omega = setup.prescription().omega_total();
    const ScalarFormSeries target_sf =
        (Omega - Omega.hbar_derivative().shifted_hbar(1)).scaled(Scalar::i());
    const WeylForm target = WeylForm::from_scalar_form(target_sf, trunc);

    rep.residual = (DK0 - target).truncated_above(trunc.degree_cap - 1);
    rep.ok = rep.residual.is_zero();
    rep.phi_value = Omega.shifted_hbar(-1)
                        .hbar_derivative()
                        .shifted_hbar(2)
                        .scaled(Scalar(0) - Scalar::i());
    return rep;
}

LemmaReport verify_commutator_lemmas(const FedosovSetup& setup,
                                     std::uint64_t seed) {
    const PoissonMatrix& P = setup.poisson();
    const int n = setup.dim();
    const Truncation t0 = setup.trunc();
    const int cap = t0.degree_cap;
    // lifted working truncation: two hbar divisions and one hbar derivative
    // appear in the identities, so give degree and floor headroom up front
    const Truncation lift{cap + 4, t0.laurent_floor - 2};
    const WeylForm g = setup.gamma().with_truncation(lift);
    const WeylForm gt = setup.gamma_tilde().with_truncation(lift);
    const Scalar I = Scalar::i();

    auto D = [&](const WeylForm& a) { return fedosov_d_with(a, g, gt, P); };
    auto partial = [&](const WeylForm& a) {
        return x_exterior(a) + i_over_hbar_commutator(gt, a, P);
    };
    auto c1 = [&](const WeylForm& a, const WeylForm& b) {
        return hbar_derivative(wedge_mul(a, b, P)) -
               wedge_mul(hbar_derivative(a), b, P) -
               wedge_mul(a, hbar_derivative(b), P);
    };

    std::mt19937_64 eng(seed);
    auto rnd_poly = [&](int maxdeg) {
        BasePoly p(n);
        for (int t = 0; t < 2; ++t) {
            Exp e(n, 0);
            const int budget = static_cast<int>(eng() % (maxdeg + 1));
            for (int u = 0; u < budget; ++u) e[eng() % n] += 1;
            const long num = static_cast<long>(eng() % 19) - 9;
            const long den = 1 + static_cast<long>(eng() % 4);
            p.add_term(e, Scalar::ratio(num, den));
        }
        return p;
    };
    auto rnd_element = [&](int max_degree) {
        WeylElement w(n, lift);
        for (int t = 0; t < 3; ++t) {
            const int k = static_cast<int>(eng() % (max_degree / 2 + 1));
            const int room = max_degree - 2 * k;
            Exp a(n, 0);
            const int budget = room > 0 ? static_cast<int>(eng() % (room + 1)) : 0;
            for (int u = 0; u < budget; ++u) a[eng() % n] += 1;
            w.add_term(k, a, rnd_poly(2));
        }
        return w;
    };
    auto rnd_form = [&](int q, int max_degree) {
        WeylForm a(n, lift);
        if (q == 0) {
            a.add_entry(DxTuple{}, rnd_element(max_degree));
        } else if (q == 1) {
            for (int j = 0; j < std::min(n, 2); ++j)
                a.add_entry(DxTuple{j}, rnd_element(max_degree));
        } else {
            a.add_entry(DxTuple{0, 1}, rnd_element(max_degree));
        }
        return a;
    };

    LemmaReport rep;
    const int max_degree = std::min(cap, 6);
    const WeylForm ig_dot = hbar_derivative(g.shifted_hbar(-1).scaled(I));
    const WeylForm iEg_over_h = euler_E(g).shifted_hbar(-1).scaled(I);

    for (int round = 0; round < 2; ++round) {
        for (int q = 0; q <= 2; ++q) {
            const WeylForm a = rnd_form(q, max_degree);
            const Scalar sgn = (q % 2 == 0) ? Scalar(1) : Scalar(-1);
            ++rep.cases_checked;

            // [partial, E] = 0
            if (!(partial(euler_E(a)) - euler_E(partial(a)))
                     .truncated_above(cap)
                     .is_zero())
                rep.partial_E_ok = false;

            // [delta, E] = -(i/2) delta
            if (!(delta(euler_E(a)) - euler_E(delta(a)) +
                  delta(a).scaled(I * Scalar::ratio(1, 2)))
                     .truncated_above(cap)
                     .is_zero())
                rep.delta_E_ok = false;

            // [D, d_hbar] a = -[(i gamma/hbar)', a]
            //                 - (i/hbar)(c1(gamma,a) - (-1)^{|a|} c1(a,gamma))
            {
                const WeylForm lhs =
                    D(hbar_derivative(a)) - hbar_derivative(D(a));
                const WeylForm cc = c1(g, a) - c1(a, g).scaled(sgn);
                const WeylForm rhs = -graded_commutator(ig_dot, a, P) -
                                     cc.shifted_hbar(-1).scaled(I);
                if (!(lhs - rhs).truncated_above(cap - 2).is_zero())
                    rep.d_hbar_ok = false;
            }

            // [D, E] a = (i/2) delta a - [(i/hbar) E gamma, a]
            //            + (c1(gamma,a) - (-1)^{|a|} c1(a,gamma))
            {
                const WeylForm lhs = D(euler_E(a)) - euler_E(D(a));
                const WeylForm cc = c1(g, a) - c1(a, g).scaled(sgn);
                const WeylForm rhs = delta(a).scaled(I * Scalar::ratio(1, 2)) -
                                     graded_commutator(iEg_over_h, a, P) + cc;
                if (!(lhs - rhs).truncated_above(cap - 2).is_zero())
                    rep.d_E_ok = false;
            }
        }
    }
    return rep;
}

}  // namespace fedosov
