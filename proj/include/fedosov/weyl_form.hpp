#pragma once

// Weyl-algebra-valued differential forms on the chart, and the operators
// delta, delta^{-1} and their Hodge-type decomposition.  Entries are keyed
// by strictly increasing dx tuples; mixed form degrees are allowed and all
// graded signs are taken per entry.

#include <map>
#include <string>

#include "fedosov/dx_tuple.hpp"
#include "fedosov/form_series.hpp"
#include "fedosov/weyl_element.hpp"

namespace fedosov {

class WeylForm {
public:
    struct TupleLess {
        bool operator()(const DxTuple& a, const DxTuple& b) const {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        }
    };
    using Entries = std::map<DxTuple, WeylElement, TupleLess>;

    WeylForm() = default;
    WeylForm(int dim, Truncation trunc) : dim_(dim), trunc_(trunc) {}

    static WeylForm from_element(const WeylElement& w);  // 0-form
    // embed a scalar form series as a y-free Weyl form
    static WeylForm from_scalar_form(const ScalarFormSeries& s, Truncation trunc);

    int dim() const { return dim_; }
    const Truncation& trunc() const { return trunc_; }
    bool is_zero() const { return entries_.empty(); }
    const Entries& entries() const { return entries_; }
    const WeylElement* entry(const DxTuple& J) const;
    WeylElement element() const;  // the 0-form part

    void add_entry(const DxTuple& J, const WeylElement& w);

    WeylForm operator-() const;
    WeylForm& operator+=(const WeylForm& o);
    WeylForm& operator-=(const WeylForm& o);
    friend WeylForm operator+(WeylForm a, const WeylForm& b) { return a += b; }
    friend WeylForm operator-(WeylForm a, const WeylForm& b) { return a -= b; }
    friend bool operator==(const WeylForm& a, const WeylForm& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const WeylForm& a, const WeylForm& b) { return !(a == b); }

    WeylForm scaled(const Scalar& c) const;
    WeylForm shifted_hbar(int m) const;
    WeylForm truncated_above(int max_weyl_degree) const;
    // re-clamp into another truncation (drops overflow, checks the floor)
    WeylForm with_truncation(Truncation trunc) const;
    int max_weyl_degree() const;  // INT_MIN when zero

    // all entries y-free?
    bool is_scalar() const;
    ScalarFormSeries scalar_part() const;  // y-free slice as a form series

    std::string str() const;

private:
    int dim_ = 0;
    Truncation trunc_;
    Entries entries_;
};

// Moyal-wedge product: (w dx^J) * (v dx^K) = (w*v) dx^J^dx^K
WeylForm wedge_mul(const WeylForm& a, const WeylForm& b, const PoissonMatrix& P);

// [a,b] = a*b - (-1)^{|a||b|} b*a, signs taken per entry pair
WeylForm graded_commutator(const WeylForm& a, const WeylForm& b,
                           const PoissonMatrix& P);

// (i/hbar) [a, b].  The product is taken with two degrees of headroom
// before the hbar division, so the result is exact wherever the operands
// are: dividing by hbar lowers total Weyl degree by two, and without the
// headroom the top two degrees of the result would be cut by the product
// truncation.
WeylForm i_over_hbar_commutator(const WeylForm& a, const WeylForm& b,
                                const PoissonMatrix& P);

// (i/hbar) a*a for an odd-degree form (the quadratic term of the curvature
// expressions), with the same headroom treatment
WeylForm quad_over_hbar(const WeylForm& a, const PoissonMatrix& P);

// delta a = dx^i ^ da/dy^i  (lowers y-degree, raises form degree)
WeylForm delta(const WeylForm& a);

// delta^{-1}: on the component with y-degree p, form degree q acts as
// (1/(p+q)) y^k iota_k, and as 0 on the p=q=0 part
WeylForm delta_inv(const WeylForm& a);

struct HodgeParts {
    WeylForm dd_inv;    // delta(delta_inv(a))
    WeylForm d_inv_d;   // delta_inv(delta(a))
    CenterSeries center;  // a_{00} (0-form, y-free part)
};

// a = dd_inv + d_inv_d + center, the contracting-homotopy identity
HodgeParts hodge_decompose(const WeylForm& a);

WeylForm euler_E(const WeylForm& a);
WeylForm hbar_derivative(const WeylForm& a);
WeylForm x_exterior(const WeylForm& a);  // dx^i ^ d/dx^i, no connection term

}  // namespace fedosov
