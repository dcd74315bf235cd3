#include "fedosov/form_series.hpp"

#include <stdexcept>

namespace fedosov {

ScalarFormSeries ScalarFormSeries::constant_two_form(
    int dim, const std::vector<std::vector<Scalar>>& coeffs, int hbar_order) {
    if (static_cast<int>(coeffs.size()) != dim)
        throw std::invalid_argument("constant_two_form: matrix size != dim");
    ScalarFormSeries w(dim);
    // w = 1/2 c_{ij} dx^i ^ dx^j with c antisymmetric; store i<j entries
    for (int i = 0; i < dim; ++i) {
        if (static_cast<int>(coeffs[i].size()) != dim)
            throw std::invalid_argument("constant_two_form: matrix not square");
        for (int j = 0; j < dim; ++j) {
            if (!(coeffs[i][j] + coeffs[j][i]).is_zero())
                throw std::invalid_argument("constant_two_form: matrix not antisymmetric");
            if (i < j && !coeffs[i][j].is_zero())
                w.add_term(hbar_order, DxTuple{i, j},
                           BasePoly::constant(dim, coeffs[i][j]));
        }
    }
    return w;
}

void ScalarFormSeries::add_term(int k, DxTuple J, const BasePoly& coeff) {
    if (coeff.dim() != dim_)
        throw std::invalid_argument("ScalarFormSeries::add_term: dim mismatch");
    for (std::size_t t = 1; t < J.size(); ++t)
        if (J[t - 1] >= J[t])
            throw std::invalid_argument("ScalarFormSeries::add_term: tuple not increasing");
    if (!J.empty() && (J.front() < 0 || J.back() >= dim_))
        throw std::invalid_argument("ScalarFormSeries::add_term: tuple out of range");
    if (coeff.is_zero()) return;
    auto key = std::make_pair(k, std::move(J));
    auto [it, fresh] = entries_.emplace(std::move(key), coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

BasePoly ScalarFormSeries::coeff(int k, const DxTuple& J) const {
    auto it = entries_.find({k, J});
    return it == entries_.end() ? BasePoly(dim_) : it->second;
}

ScalarFormSeries ScalarFormSeries::hbar_slice(int k) const {
    ScalarFormSeries r(dim_);
    for (const auto& [key, p] : entries_)
        if (key.first == k) r.add_term(k, key.second, p);
    return r;
}

int ScalarFormSeries::min_hbar_order() const {
    if (entries_.empty()) throw std::domain_error("min_hbar_order: zero series");
    return entries_.begin()->first.first;
}

int ScalarFormSeries::max_hbar_order() const {
    if (entries_.empty()) throw std::domain_error("max_hbar_order: zero series");
    return entries_.rbegin()->first.first;
}

ScalarFormSeries ScalarFormSeries::operator-() const {
    ScalarFormSeries r(dim_);
    for (const auto& [key, p] : entries_) r.entries_.emplace(key, -p);
    return r;
}

ScalarFormSeries& ScalarFormSeries::operator+=(const ScalarFormSeries& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("ScalarFormSeries: dim mismatch");
    for (const auto& [key, p] : o.entries_) add_term(key.first, key.second, p);
    return *this;
}

ScalarFormSeries& ScalarFormSeries::operator-=(const ScalarFormSeries& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("ScalarFormSeries: dim mismatch");
    for (const auto& [key, p] : o.entries_) add_term(key.first, key.second, -p);
    return *this;
}

ScalarFormSeries ScalarFormSeries::scaled(const Scalar& c) const {
    ScalarFormSeries r(dim_);
    if (c.is_zero()) return r;
    for (const auto& [key, p] : entries_) r.entries_.emplace(key, p.scaled(c));
    return r;
}

ScalarFormSeries ScalarFormSeries::shifted_hbar(int m) const {
    ScalarFormSeries r(dim_);
    for (const auto& [key, p] : entries_)
        r.entries_.emplace(std::make_pair(key.first + m, key.second), p);
    return r;
}

ScalarFormSeries ScalarFormSeries::hbar_derivative() const {
    ScalarFormSeries r(dim_);
    for (const auto& [key, p] : entries_) {
        if (key.first == 0) continue;
        r.add_term(key.first - 1, key.second,
                   p.scaled(Scalar(Rational(key.first))));
    }
    return r;
}

std::string ScalarFormSeries::str() const {
    if (entries_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, p] : entries_) {
        if (!first) out += "  +  ";
        first = false;
        out += "hbar^" + std::to_string(key.first) + " * [" + p.str() + "]";
        for (int j : key.second) out += " dx" + std::to_string(j + 1);
    }
    return out;
}

ScalarFormSeries d_exterior(const ScalarFormSeries& w) {
    ScalarFormSeries r(w.dim());
    DxTuple out;
    for (const auto& [key, p] : w.entries()) {
        for (int j = 0; j < w.dim(); ++j) {
            BasePoly dp = p.derivative(j);
            if (dp.is_zero()) continue;
            int sign = wedge_insert(j, key.second, out);
            if (sign == 0) continue;
            r.add_term(key.first, out, sign == 1 ? dp : -dp);
        }
    }
    return r;
}

ScalarFormSeries euler_homotopy(const ScalarFormSeries& w) {
    if (!d_exterior(w).is_zero())
        throw std::domain_error("euler_homotopy: input form is not closed");
    ScalarFormSeries r(w.dim());
    DxTuple out;
    for (const auto& [key, p] : w.entries()) {
        const int q = static_cast<int>(key.second.size());
        for (const auto& [e, c] : p.terms()) {
            const int d = exp_total(e);
            if (d + q == 0)
                throw std::domain_error(
                    "euler_homotopy: nonzero component with poly degree 0 and "
                    "form degree 0 has no primitive");
            Scalar inv = Scalar(1) / Scalar(Rational(d + q));
            for (std::size_t m = 0; m < key.second.size(); ++m) {
                int sign = contract_slot(key.second[m], key.second, out);
                Exp mono = e;
                mono[key.second[m]] += 1;
                r.add_term(key.first, out,
                           BasePoly::monomial(w.dim(), mono,
                                              c * inv * Scalar(sign)));
            }
        }
    }
    return r;
}

}  // namespace fedosov
