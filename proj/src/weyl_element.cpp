#include "fedosov/weyl_element.hpp"

#include <limits>
#include <stdexcept>

namespace fedosov {

WeylElement WeylElement::from_center(const CenterSeries& s, Truncation trunc) {
    WeylElement w(s.dim(), trunc);
    for (const auto& [k, p] : s.terms()) w.add_term(k, Exp(s.dim(), 0), p);
    return w;
}

WeylElement WeylElement::from_poly(const BasePoly& p, Truncation trunc) {
    WeylElement w(p.dim(), trunc);
    w.add_term(0, Exp(p.dim(), 0), p);
    return w;
}

WeylElement WeylElement::fiber_coordinate(int dim, int j, Truncation trunc) {
    WeylElement w(dim, trunc);
    w.add_term(0, exp_unit(dim, j), BasePoly::constant(dim, Scalar(1)));
    return w;
}

int WeylElement::max_weyl_degree() const {
    if (terms_.empty()) return std::numeric_limits<int>::min();
    return weyl_degree(terms_.rbegin()->first);
}

int WeylElement::min_weyl_degree() const {
    if (terms_.empty()) return std::numeric_limits<int>::max();
    return weyl_degree(terms_.begin()->first);
}

void WeylElement::add_term(int k, const Exp& alpha, const BasePoly& coeff) {
    if (coeff.dim() != dim_ || static_cast<int>(alpha.size()) != dim_)
        throw std::invalid_argument("WeylElement::add_term: dim mismatch");
    if (coeff.is_zero()) return;
    if (2 * k + exp_total(alpha) > trunc_.degree_cap) return;  // quotient
    if (k < trunc_.laurent_floor)
        throw std::domain_error(
            "WeylElement: hbar exponent " + std::to_string(k) +
            " below laurent_floor " + std::to_string(trunc_.laurent_floor));
    Key key{k, alpha};
    auto [it, fresh] = terms_.emplace(std::move(key), coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WeylElement WeylElement::operator-() const {
    WeylElement r(dim_, trunc_);
    for (const auto& [key, p] : terms_) r.terms_.emplace(key, -p);
    return r;
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("WeylElement: dim mismatch");
    if (trunc_ != o.trunc_)
        throw std::invalid_argument("WeylElement: truncation mismatch");
    for (const auto& [key, p] : o.terms_) add_term(key.first, key.second, p);
    return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("WeylElement: dim mismatch");
    if (trunc_ != o.trunc_)
        throw std::invalid_argument("WeylElement: truncation mismatch");
    for (const auto& [key, p] : o.terms_) add_term(key.first, key.second, -p);
    return *this;
}

WeylElement WeylElement::scaled(const Scalar& c) const {
    WeylElement r(dim_, trunc_);
    if (c.is_zero()) return r;
    for (const auto& [key, p] : terms_) r.terms_.emplace(key, p.scaled(c));
    return r;
}

WeylElement WeylElement::mul_center_poly(const BasePoly& p) const {
    WeylElement r(dim_, trunc_);
    for (const auto& [key, q] : terms_) {
        BasePoly prod = q * p;
        if (!prod.is_zero()) r.add_term(key.first, key.second, prod);
    }
    return r;
}

WeylElement WeylElement::shifted_hbar(int m) const {
    WeylElement r(dim_, trunc_);
    for (const auto& [key, p] : terms_) r.add_term(key.first + m, key.second, p);
    return r;
}

WeylElement WeylElement::truncated_above(int max_degree) const {
    WeylElement r(dim_, trunc_);
    for (const auto& [key, p] : terms_) {
        if (weyl_degree(key) > max_degree) break;  // canonical order is by degree
        r.terms_.emplace(key, p);
    }
    return r;
}

WeylElement WeylElement::with_truncation(Truncation trunc) const {
    WeylElement r(dim_, trunc);
    for (const auto& [key, p] : terms_) r.add_term(key.first, key.second, p);
    return r;
}

WeylElement WeylElement::slice_degree(int degree) const {
    WeylElement r(dim_, trunc_);
    for (const auto& [key, p] : terms_)
        if (weyl_degree(key) == degree) r.terms_.emplace(key, p);
    return r;
}

std::string WeylElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, p] : terms_) {
        if (!first) out += "  +  ";
        first = false;
        out += "hbar^" + std::to_string(key.first) + " * [" + p.str() + "]";
        for (int j = 0; j < dim_; ++j) {
            if (key.second[j] == 0) continue;
            out += "*y" + std::to_string(j + 1);
            if (key.second[j] > 1) out += "^" + std::to_string(key.second[j]);
        }
    }
    return out;
}

namespace {

// one application of the transvection kernel pi^{ab} d/dy^a (x) d/dy^b to a
// set of monomial pairs with scalar weights
using PairState = std::map<std::pair<Exp, Exp>, Scalar>;

PairState transvect(const PairState& state, const PoissonMatrix& P) {
    PairState next;
    const int dim = P.dim();
    for (const auto& [pr, c] : state) {
        const Exp& a = pr.first;
        const Exp& b = pr.second;
        for (int u = 0; u < dim; ++u) {
            if (a[u] == 0) continue;
            for (int v = 0; v < dim; ++v) {
                if (b[v] == 0) continue;
                Scalar w = P.pi_at(u, v);
                if (w.is_zero()) continue;
                Exp a2 = a, b2 = b;
                a2[u] -= 1;
                b2[v] -= 1;
                Scalar add = c * w * Scalar(Rational(static_cast<long>(a[u]))) *
                             Scalar(Rational(static_cast<long>(b[v])));
                auto key = std::make_pair(std::move(a2), std::move(b2));
                auto [it, fresh] = next.emplace(std::move(key), add);
                if (!fresh) {
                    it->second += add;
                    if (it->second.is_zero()) next.erase(it);
                }
            }
        }
    }
    return next;
}

}  // namespace

WeylElement moyal_mul(const WeylElement& a, const WeylElement& b,
                      const PoissonMatrix& P) {
    if (a.dim() != b.dim() || a.dim() != P.dim())
        throw std::invalid_argument("moyal_mul: dim mismatch");
    if (a.trunc() != b.trunc())
        throw std::invalid_argument("moyal_mul: truncation mismatch");
    WeylElement r(a.dim(), a.trunc());
    const Scalar half_mi = Scalar::ratio(-1, 2) * Scalar::i();  // -i/2
    for (const auto& [ka, fa] : a.terms()) {
        for (const auto& [kb, fb] : b.terms()) {
            // every Moyal term of this pair has total degree
            // 2(k1+k2) + |alpha| + |beta|, independent of j
            int dsum = WeylElement::weyl_degree(ka) + WeylElement::weyl_degree(kb);
            if (dsum > a.trunc().degree_cap) continue;
            BasePoly fg = fa * fb;
            if (fg.is_zero()) continue;
            PairState state;
            state.emplace(std::make_pair(ka.second, kb.second), Scalar(1));
            Scalar jfac(1);  // (-i/2)^j / j!
            for (int j = 0; !state.empty(); ++j) {
                if (j > 0) {
                    jfac *= half_mi;
                    jfac /= Scalar(Rational(j));
                }
                for (const auto& [pr, c] : state)
                    r.add_term(ka.first + kb.first + j,
                               exp_add(pr.first, pr.second), fg.scaled(c * jfac));
                state = transvect(state, P);
            }
        }
    }
    return r;
}

CenterSeries moyal_center(const WeylElement& a, const WeylElement& b,
                          const PoissonMatrix& P) {
    if (a.dim() != b.dim() || a.dim() != P.dim())
        throw std::invalid_argument("moyal_center: dim mismatch");
    if (a.trunc() != b.trunc())
        throw std::invalid_argument("moyal_center: truncation mismatch");
    CenterSeries r(a.dim());
    for (const auto& [ka, fa] : a.terms()) {
        int na = exp_total(ka.second);
        for (const auto& [kb, fb] : b.terms()) {
            if (exp_total(kb.second) != na) continue;  // full contraction only
            int dsum = WeylElement::weyl_degree(ka) + WeylElement::weyl_degree(kb);
            if (dsum > a.trunc().degree_cap) continue;
            BasePoly fg = fa * fb;
            if (fg.is_zero()) continue;
            PairState state;
            state.emplace(std::make_pair(ka.second, kb.second), Scalar(1));
            Scalar jfac(1);
            const Scalar half_mi = Scalar::ratio(-1, 2) * Scalar::i();
            for (int j = 1; j <= na; ++j) {
                state = transvect(state, P);
                jfac *= half_mi;
                jfac /= Scalar(Rational(j));
            }
            // whatever survives na transvections is the full contraction
            auto it = state.find(std::make_pair(Exp(a.dim(), 0), Exp(a.dim(), 0)));
            if (it != state.end() && !it->second.is_zero())
                r.add_term(ka.first + kb.first + na, fg.scaled(it->second * jfac));
        }
    }
    return r;
}

WeylElement commutator(const WeylElement& a, const WeylElement& b,
                       const PoissonMatrix& P) {
    return moyal_mul(a, b, P) - moyal_mul(b, a, P);
}

CenterSeries center_project(const WeylElement& a) {
    CenterSeries r(a.dim());
    for (const auto& [key, p] : a.terms())
        if (exp_total(key.second) == 0) r.add_term(key.first, p);
    return r;
}

WeylElement euler_E(const WeylElement& a) {
    WeylElement r(a.dim(), a.trunc());
    const Scalar half_mi = Scalar::ratio(-1, 2) * Scalar::i();
    for (const auto& [key, p] : a.terms()) {
        int n = exp_total(key.second);
        if (n == 0) continue;
        r.add_term(key.first, key.second, p.scaled(half_mi * Scalar(Rational(n))));
    }
    return r;
}

WeylElement hbar_derivative(const WeylElement& a) {
    WeylElement r(a.dim(), a.trunc());
    for (const auto& [key, p] : a.terms()) {
        if (key.first == 0) continue;
        r.add_term(key.first - 1, key.second,
                   p.scaled(Scalar(Rational(key.first))));
    }
    return r;
}

WeylElement y_derivative(const WeylElement& a, int j) {
    if (j < 0 || j >= a.dim()) throw std::invalid_argument("y_derivative: index");
    WeylElement r(a.dim(), a.trunc());
    for (const auto& [key, p] : a.terms()) {
        if (key.second[j] == 0) continue;
        Exp alpha = key.second;
        alpha[j] -= 1;
        r.add_term(key.first, alpha,
                   p.scaled(Scalar(Rational(static_cast<long>(key.second[j])))));
    }
    return r;
}

WeylElement x_derivative(const WeylElement& a, int j) {
    if (j < 0 || j >= a.dim()) throw std::invalid_argument("x_derivative: index");
    WeylElement r(a.dim(), a.trunc());
    for (const auto& [key, p] : a.terms()) {
        BasePoly dp = p.derivative(j);
        if (!dp.is_zero()) r.add_term(key.first, key.second, dp);
    }
    return r;
}

WeylElement rho(const WeylElement& a) {
    // (hbar/i) da/dhbar + E(a)
    WeylElement d = hbar_derivative(a).shifted_hbar(1).scaled(-Scalar::i());
    return d + euler_E(a);
}

}  // namespace fedosov
