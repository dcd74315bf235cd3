#include "fedosov/weyl_form.hpp"

#include <limits>
#include <stdexcept>

namespace fedosov {

WeylForm WeylForm::from_element(const WeylElement& w) {
    WeylForm f(w.dim(), w.trunc());
    f.add_entry({}, w);
    return f;
}

WeylForm WeylForm::from_scalar_form(const ScalarFormSeries& s, Truncation trunc) {
    WeylForm f(s.dim(), trunc);
    for (const auto& [key, p] : s.entries()) {
        WeylElement w(s.dim(), trunc);
        w.add_term(key.first, Exp(s.dim(), 0), p);
        f.add_entry(key.second, w);
    }
    return f;
}

const WeylElement* WeylForm::entry(const DxTuple& J) const {
    auto it = entries_.find(J);
    return it == entries_.end() ? nullptr : &it->second;
}

WeylElement WeylForm::element() const {
    const WeylElement* w = entry({});
    return w ? *w : WeylElement(dim_, trunc_);
}

void WeylForm::add_entry(const DxTuple& J, const WeylElement& w) {
    if (w.dim() != dim_) throw std::invalid_argument("WeylForm: dim mismatch");
    if (w.trunc() != trunc_)
        throw std::invalid_argument("WeylForm: truncation mismatch");
    for (std::size_t t = 1; t < J.size(); ++t)
        if (J[t - 1] >= J[t])
            throw std::invalid_argument("WeylForm: tuple not strictly increasing");
    if (!J.empty() && (J.front() < 0 || J.back() >= dim_))
        throw std::invalid_argument("WeylForm: tuple out of range");
    if (w.is_zero()) return;
    auto [it, fresh] = entries_.emplace(J, w);
    if (!fresh) {
        it->second += w;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

WeylForm WeylForm::operator-() const {
    WeylForm r(dim_, trunc_);
    for (const auto& [J, w] : entries_) r.entries_.emplace(J, -w);
    return r;
}

WeylForm& WeylForm::operator+=(const WeylForm& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("WeylForm: dim mismatch");
    if (trunc_ != o.trunc_)
        throw std::invalid_argument("WeylForm: truncation mismatch");
    for (const auto& [J, w] : o.entries_) add_entry(J, w);
    return *this;
}

WeylForm& WeylForm::operator-=(const WeylForm& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("WeylForm: dim mismatch");
    if (trunc_ != o.trunc_)
        throw std::invalid_argument("WeylForm: truncation mismatch");
    for (const auto& [J, w] : o.entries_) add_entry(J, -w);
    return *this;
}

WeylForm WeylForm::scaled(const Scalar& c) const {
    WeylForm r(dim_, trunc_);
    if (c.is_zero()) return r;
    for (const auto& [J, w] : entries_) r.entries_.emplace(J, w.scaled(c));
    return r;
}

WeylForm WeylForm::shifted_hbar(int m) const {
    WeylForm r(dim_, trunc_);
    for (const auto& [J, w] : entries_) r.add_entry(J, w.shifted_hbar(m));
    return r;
}

WeylForm WeylForm::truncated_above(int max_weyl_degree) const {
    WeylForm r(dim_, trunc_);
    for (const auto& [J, w] : entries_)
        r.add_entry(J, w.truncated_above(max_weyl_degree));
    return r;
}

WeylForm WeylForm::with_truncation(Truncation trunc) const {
    WeylForm r(dim_, trunc);
    for (const auto& [J, w] : entries_) r.add_entry(J, w.with_truncation(trunc));
    return r;
}

int WeylForm::max_weyl_degree() const {
    int m = std::numeric_limits<int>::min();
    for (const auto& [J, w] : entries_) m = std::max(m, w.max_weyl_degree());
    return m;
}

bool WeylForm::is_scalar() const {
    for (const auto& [J, w] : entries_)
        for (const auto& [key, p] : w.terms())
            if (exp_total(key.second) != 0) return false;
    return true;
}

ScalarFormSeries WeylForm::scalar_part() const {
    ScalarFormSeries s(dim_);
    for (const auto& [J, w] : entries_)
        for (const auto& [key, p] : w.terms())
            if (exp_total(key.second) == 0) s.add_term(key.first, J, p);
    return s;
}

std::string WeylForm::str() const {
    if (entries_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [J, w] : entries_) {
        if (!first) out += "\n";
        first = false;
        out += "[";
        for (std::size_t t = 0; t < J.size(); ++t) {
            if (t) out += "^";
            out += "dx" + std::to_string(J[t] + 1);
        }
        out += "]: " + w.str();
    }
    return out;
}

WeylForm wedge_mul(const WeylForm& a, const WeylForm& b, const PoissonMatrix& P) {
    if (a.dim() != b.dim()) throw std::invalid_argument("wedge_mul: dim mismatch");
    if (a.trunc() != b.trunc())
        throw std::invalid_argument("wedge_mul: truncation mismatch");
    WeylForm r(a.dim(), a.trunc());
    DxTuple merged;
    for (const auto& [J, w] : a.entries()) {
        for (const auto& [K, v] : b.entries()) {
            int sign = wedge_merge(J, K, merged);
            if (sign == 0) continue;
            WeylElement prod = moyal_mul(w, v, P);
            if (sign < 0) prod = -prod;
            r.add_entry(merged, prod);
        }
    }
    return r;
}

WeylForm graded_commutator(const WeylForm& a, const WeylForm& b,
                           const PoissonMatrix& P) {
    WeylForm r = wedge_mul(a, b, P);
    // subtract (-1)^{|J||K|} per entry pair of b*a
    if (a.dim() != b.dim()) throw std::invalid_argument("graded_commutator: dim");
    DxTuple merged;
    for (const auto& [K, v] : b.entries()) {
        for (const auto& [J, w] : a.entries()) {
            int sign = wedge_merge(K, J, merged);
            if (sign == 0) continue;
            if ((J.size() * K.size()) % 2 == 1) sign = -sign;
            WeylElement prod = moyal_mul(v, w, P);
            if (sign > 0) prod = -prod;  // subtracting
            r.add_entry(merged, prod);
        }
    }
    return r;
}

WeylForm i_over_hbar_commutator(const WeylForm& a, const WeylForm& b,
                                const PoissonMatrix& P) {
    if (a.trunc() != b.trunc())
        throw std::invalid_argument(
            "i_over_hbar_commutator: truncation mismatch");
    Truncation lifted{a.trunc().degree_cap + 2, a.trunc().laurent_floor};
    WeylForm raw = graded_commutator(a.with_truncation(lifted),
                                     b.with_truncation(lifted), P);
    return raw.shifted_hbar(-1).scaled(Scalar::i()).with_truncation(a.trunc());
}

WeylForm quad_over_hbar(const WeylForm& a, const PoissonMatrix& P) {
    Truncation lifted{a.trunc().degree_cap + 2, a.trunc().laurent_floor};
    WeylForm al = a.with_truncation(lifted);
    WeylForm raw = wedge_mul(al, al, P);
    return raw.shifted_hbar(-1).scaled(Scalar::i()).with_truncation(a.trunc());
}

WeylForm delta(const WeylForm& a) {
    WeylForm r(a.dim(), a.trunc());
    DxTuple out;
    for (const auto& [J, w] : a.entries()) {
        for (int i = 0; i < a.dim(); ++i) {
            WeylElement dw = y_derivative(w, i);
            if (dw.is_zero()) continue;
            int sign = wedge_insert(i, J, out);
            if (sign == 0) continue;
            r.add_entry(out, sign > 0 ? dw : -dw);
        }
    }
    return r;
}

WeylForm delta_inv(const WeylForm& a) {
    WeylForm r(a.dim(), a.trunc());
    DxTuple out;
    for (const auto& [J, w] : a.entries()) {
        const int q = static_cast<int>(J.size());
        if (q == 0) continue;  // iota of a 0-form vanishes
        for (const auto& [key, p] : w.terms()) {
            const int yp = exp_total(key.second);
            Scalar inv = Scalar(1) / Scalar(Rational(yp + q));
            for (std::size_t m = 0; m < J.size(); ++m) {
                int sign = contract_slot(J[m], J, out);
                Exp alpha = key.second;
                alpha[J[m]] += 1;
                WeylElement piece(a.dim(), a.trunc());
                piece.add_term(key.first, alpha, p.scaled(inv * Scalar(sign)));
                r.add_entry(out, piece);
            }
        }
    }
    return r;
}

HodgeParts hodge_decompose(const WeylForm& a) {
    HodgeParts h{delta(delta_inv(a)), delta_inv(delta(a)), CenterSeries(a.dim())};
    h.center = center_project(a.element());
    return h;
}

WeylForm euler_E(const WeylForm& a) {
    WeylForm r(a.dim(), a.trunc());
    for (const auto& [J, w] : a.entries()) r.add_entry(J, euler_E(w));
    return r;
}

WeylForm hbar_derivative(const WeylForm& a) {
    WeylForm r(a.dim(), a.trunc());
    for (const auto& [J, w] : a.entries()) r.add_entry(J, hbar_derivative(w));
    return r;
}

WeylForm x_exterior(const WeylForm& a) {
    WeylForm r(a.dim(), a.trunc());
    DxTuple out;
    for (const auto& [J, w] : a.entries()) {
        for (int i = 0; i < a.dim(); ++i) {
            WeylElement dw = x_derivative(w, i);
            if (dw.is_zero()) continue;
            int sign = wedge_insert(i, J, out);
            if (sign == 0) continue;
            r.add_entry(out, sign > 0 ? dw : -dw);
        }
    }
    return r;
}

}  // namespace fedosov
