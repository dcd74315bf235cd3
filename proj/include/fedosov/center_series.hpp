#pragma once

// Finite hbar-Laurent series with polynomial coefficients: the center of the
// Weyl algebra, and the value type of star products and cochain evaluation.

#include <map>
#include <string>

#include "fedosov/base_poly.hpp"

namespace fedosov {

class CenterSeries {
public:
    explicit CenterSeries(int dim = 0) : dim_(dim) {}

    static CenterSeries from_poly(const BasePoly& p, int hbar_order = 0);

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<int, BasePoly>& terms() const { return terms_; }
    BasePoly coeff(int k) const;
    int min_order() const;  // throws on zero
    int max_order() const;

    void add_term(int k, const BasePoly& p);

    CenterSeries operator-() const;
    CenterSeries& operator+=(const CenterSeries& o);
    CenterSeries& operator-=(const CenterSeries& o);
    friend CenterSeries operator+(CenterSeries a, const CenterSeries& b) { return a += b; }
    friend CenterSeries operator-(CenterSeries a, const CenterSeries& b) { return a -= b; }
    friend CenterSeries operator*(const CenterSeries& a, const CenterSeries& b);
    friend bool operator==(const CenterSeries& a, const CenterSeries& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const CenterSeries& a, const CenterSeries& b) {
        return !(a == b);
    }

    CenterSeries scaled(const Scalar& c) const;
    CenterSeries shifted_hbar(int m) const;
    CenterSeries hbar_derivative() const;
    CenterSeries truncated(int max_order) const;  // drop orders > max_order

    std::string str() const;

private:
    int dim_;
    std::map<int, BasePoly> terms_;  // hbar order -> coefficient, no zero entries
};

}  // namespace fedosov
