#include "fedosov/base_poly.hpp"

#include <stdexcept>

namespace fedosov {

BasePoly BasePoly::constant(int dim, const Scalar& c) {
    BasePoly p(dim);
    p.add_term(Exp(dim, 0), c);
    return p;
}

BasePoly BasePoly::monomial(int dim, const Exp& e, const Scalar& c) {
    if (static_cast<int>(e.size()) != dim)
        throw std::invalid_argument("BasePoly::monomial: exponent size != dim");
    BasePoly p(dim);
    p.add_term(e, c);
    return p;
}

BasePoly BasePoly::coordinate(int dim, int j) {
    if (j < 0 || j >= dim) throw std::invalid_argument("BasePoly::coordinate: index");
    return monomial(dim, exp_unit(dim, j));
}

int BasePoly::degree() const {
    if (terms_.empty()) return -1;
    return exp_total(terms_.rbegin()->first);  // graded-lex: last term has max degree
}

Scalar BasePoly::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
}

bool BasePoly::is_constant() const { return degree() <= 0; }

Scalar BasePoly::constant_term() const { return coeff(Exp(dim_, 0)); }

void BasePoly::add_term(const Exp& e, const Scalar& c) {
    if (static_cast<int>(e.size()) != dim_)
        throw std::invalid_argument("BasePoly::add_term: exponent size != dim");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BasePoly BasePoly::operator-() const {
    BasePoly r(dim_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

BasePoly& BasePoly::operator+=(const BasePoly& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("BasePoly: dim mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

BasePoly& BasePoly::operator-=(const BasePoly& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("BasePoly: dim mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

BasePoly operator*(const BasePoly& a, const BasePoly& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("BasePoly: dim mismatch");
    BasePoly r(a.dim_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(exp_add(ea, eb), ca * cb);
    return r;
}

BasePoly BasePoly::scaled(const Scalar& c) const {
    BasePoly r(dim_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

BasePoly BasePoly::derivative(int j) const {
    if (j < 0 || j >= dim_) throw std::invalid_argument("BasePoly::derivative: index");
    BasePoly r(dim_);
    for (const auto& [e, c] : terms_) {
        if (e[j] == 0) continue;
        Exp d = e;
        d[j] -= 1;
        r.add_term(d, Scalar(Rational(static_cast<long>(e[j]))) * c);
    }
    return r;
}

BasePoly BasePoly::derivative(const Exp& alpha) const {
    if (static_cast<int>(alpha.size()) != dim_)
        throw std::invalid_argument("BasePoly::derivative: multi-index size");
    BasePoly r = *this;
    for (int j = 0; j < dim_; ++j)
        for (std::uint32_t k = 0; k < alpha[j]; ++k) r = r.derivative(j);
    return r;
}

std::string BasePoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += "(" + c.str() + ")";
        for (int j = 0; j < dim_; ++j) {
            if (e[j] == 0) continue;
            out += "*x" + std::to_string(j + 1);
            if (e[j] > 1) out += "^" + std::to_string(e[j]);
        }
    }
    return out;
}

}  // namespace fedosov
