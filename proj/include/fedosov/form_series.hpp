#pragma once

// Scalar-valued differential forms on the chart whose coefficients are
// polynomials, organized as a finite Laurent series in hbar:
//     w = sum_k hbar^k  sum_J  w_{k,J}(x) dx^J.
// This is the value type for curvature prescriptions, characteristic
// classes and cohomology projections.

#include <map>
#include <string>
#include <utility>

#include "fedosov/base_poly.hpp"
#include "fedosov/dx_tuple.hpp"

namespace fedosov {

class ScalarFormSeries {
public:
    // key: (hbar exponent, dx tuple); tuples compare by (size, lex)
    struct KeyLess {
        bool operator()(const std::pair<int, DxTuple>& a,
                        const std::pair<int, DxTuple>& b) const {
            if (a.first != b.first) return a.first < b.first;
            if (a.second.size() != b.second.size())
                return a.second.size() < b.second.size();
            return a.second < b.second;
        }
    };
    using Entries = std::map<std::pair<int, DxTuple>, BasePoly, KeyLess>;

    explicit ScalarFormSeries(int dim = 0) : dim_(dim) {}

    static ScalarFormSeries constant_two_form(
        int dim, const std::vector<std::vector<Scalar>>& coeffs, int hbar_order = 0);

    int dim() const { return dim_; }
    bool is_zero() const { return entries_.empty(); }
    const Entries& entries() const { return entries_; }

    void add_term(int k, DxTuple J, const BasePoly& coeff);
    BasePoly coeff(int k, const DxTuple& J) const;
    // the sub-series at one hbar order
    ScalarFormSeries hbar_slice(int k) const;
    int min_hbar_order() const;  // throws on zero series
    int max_hbar_order() const;

    ScalarFormSeries operator-() const;
    ScalarFormSeries& operator+=(const ScalarFormSeries& o);
    ScalarFormSeries& operator-=(const ScalarFormSeries& o);
    friend ScalarFormSeries operator+(ScalarFormSeries a, const ScalarFormSeries& b) {
        return a += b;
    }
    friend ScalarFormSeries operator-(ScalarFormSeries a, const ScalarFormSeries& b) {
        return a -= b;
    }
    friend bool operator==(const ScalarFormSeries& a, const ScalarFormSeries& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const ScalarFormSeries& a, const ScalarFormSeries& b) {
        return !(a == b);
    }

    ScalarFormSeries scaled(const Scalar& c) const;
    ScalarFormSeries shifted_hbar(int m) const;      // multiply by hbar^m
    ScalarFormSeries hbar_derivative() const;        // d/dhbar

    std::string str() const;

private:
    int dim_;
    Entries entries_;
};

// exterior derivative in x
ScalarFormSeries d_exterior(const ScalarFormSeries& w);

// Poincare-lemma homotopy h built from contraction with the Euler field
// x^j d/dx^j, applied per homogeneous (poly degree, form degree) component:
//   h(w)|_{d,q} = 1/(d+q) * iota_Euler(w).
// pre: w closed (checked); no component with d+q == 0 unless zero.
// post: d(h(w)) == w.
ScalarFormSeries euler_homotopy(const ScalarFormSeries& w);

}  // namespace fedosov
