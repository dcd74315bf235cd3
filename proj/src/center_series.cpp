#include "fedosov/center_series.hpp"

#include <stdexcept>

namespace fedosov {

CenterSeries CenterSeries::from_poly(const BasePoly& p, int hbar_order) {
    CenterSeries s(p.dim());
    s.add_term(hbar_order, p);
    return s;
}

BasePoly CenterSeries::coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? BasePoly(dim_) : it->second;
}

int CenterSeries::min_order() const {
    if (terms_.empty()) throw std::domain_error("CenterSeries::min_order: zero");
    return terms_.begin()->first;
}

int CenterSeries::max_order() const {
    if (terms_.empty()) throw std::domain_error("CenterSeries::max_order: zero");
    return terms_.rbegin()->first;
}

void CenterSeries::add_term(int k, const BasePoly& p) {
    if (p.dim() != dim_) throw std::invalid_argument("CenterSeries: dim mismatch");
    if (p.is_zero()) return;
    auto [it, fresh] = terms_.emplace(k, p);
    if (!fresh) {
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CenterSeries CenterSeries::operator-() const {
    CenterSeries r(dim_);
    for (const auto& [k, p] : terms_) r.terms_.emplace(k, -p);
    return r;
}

CenterSeries& CenterSeries::operator+=(const CenterSeries& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("CenterSeries: dim mismatch");
    for (const auto& [k, p] : o.terms_) add_term(k, p);
    return *this;
}

CenterSeries& CenterSeries::operator-=(const CenterSeries& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("CenterSeries: dim mismatch");
    for (const auto& [k, p] : o.terms_) add_term(k, -p);
    return *this;
}

CenterSeries operator*(const CenterSeries& a, const CenterSeries& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("CenterSeries: dim mismatch");
    CenterSeries r(a.dim_);
    for (const auto& [ka, pa] : a.terms_)
        for (const auto& [kb, pb] : b.terms_) r.add_term(ka + kb, pa * pb);
    return r;
}

CenterSeries CenterSeries::scaled(const Scalar& c) const {
    CenterSeries r(dim_);
    if (c.is_zero()) return r;
    for (const auto& [k, p] : terms_) r.terms_.emplace(k, p.scaled(c));
    return r;
}

CenterSeries CenterSeries::shifted_hbar(int m) const {
    CenterSeries r(dim_);
    for (const auto& [k, p] : terms_) r.terms_.emplace(k + m, p);
    return r;
}

CenterSeries CenterSeries::hbar_derivative() const {
    CenterSeries r(dim_);
    for (const auto& [k, p] : terms_) {
        if (k == 0) continue;
        r.add_term(k - 1, p.scaled(Scalar(Rational(k))));
    }
    return r;
}

CenterSeries CenterSeries::truncated(int max_order) const {
    CenterSeries r(dim_);
    for (const auto& [k, p] : terms_) {
        if (k > max_order) break;
        r.terms_.emplace(k, p);
    }
    return r;
}

std::string CenterSeries::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, p] : terms_) {
        if (!first) out += "  +  ";
        first = false;
        out += "hbar^" + std::to_string(k) + " * [" + p.str() + "]";
    }
    return out;
}

}  // namespace fedosov
