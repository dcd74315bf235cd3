#pragma once

// Element of the (truncated, possibly Laurent-extended) formal Weyl algebra
// attached to one chart:
//     a = sum  hbar^k  f_{k,alpha}(x)  y^alpha,
// filtration degree 2k + |alpha|.  Terms above the degree cap are dropped --
// the grading of the fiber product makes that a quotient -- while terms
// below the Laurent floor throw: they signal a window misconfiguration.

#include <map>
#include <string>
#include <utility>

#include "fedosov/base_poly.hpp"
#include "fedosov/center_series.hpp"
#include "fedosov/poisson.hpp"
#include "fedosov/truncation.hpp"

namespace fedosov {

class WeylElement {
public:
    using Key = std::pair<int, Exp>;  // (hbar exponent k, y multi-index alpha)
    struct KeyLess {
        // canonical order: total Weyl degree, then k, then alpha lex
        bool operator()(const Key& a, const Key& b) const {
            int da = 2 * a.first + exp_total(a.second);
            int db = 2 * b.first + exp_total(b.second);
            if (da != db) return da < db;
            if (a.first != b.first) return a.first < b.first;
            return a.second < b.second;
        }
    };
    using Terms = std::map<Key, BasePoly, KeyLess>;

    WeylElement() = default;
    WeylElement(int dim, Truncation trunc) : dim_(dim), trunc_(trunc) {}

    static WeylElement from_center(const CenterSeries& s, Truncation trunc);
    static WeylElement from_poly(const BasePoly& p, Truncation trunc);
    // the fiber coordinate y^j (0-based)
    static WeylElement fiber_coordinate(int dim, int j, Truncation trunc);

    int dim() const { return dim_; }
    const Truncation& trunc() const { return trunc_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    static int weyl_degree(const Key& key) {
        return 2 * key.first + exp_total(key.second);
    }
    int max_weyl_degree() const;  // most negative int for zero element
    int min_weyl_degree() const;

    // cap: silently dropped; floor: throws std::domain_error
    void add_term(int k, const Exp& alpha, const BasePoly& coeff);

    WeylElement operator-() const;
    WeylElement& operator+=(const WeylElement& o);
    WeylElement& operator-=(const WeylElement& o);
    friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
    friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const WeylElement& a, const WeylElement& b) {
        return !(a == b);
    }

    WeylElement scaled(const Scalar& c) const;
    WeylElement mul_center_poly(const BasePoly& p) const;  // central multiplier
    WeylElement shifted_hbar(int m) const;                 // multiply by hbar^m
    WeylElement truncated_above(int max_degree) const;     // keep degree <= max
    // re-clamp into another truncation (drops overflow, checks the floor)
    WeylElement with_truncation(Truncation trunc) const;
    WeylElement slice_degree(int degree) const;            // homogeneous part

    std::string str() const;

private:
    int dim_ = 0;
    Truncation trunc_;
    Terms terms_;
};

// fiberwise Moyal product
//   a*b = sum_j (-i/2)^j (hbar^j/j!) pi^{i1 j1}..pi^{ij jj}
//         (d^j a/dy^{i..}) (d^j b/dy^{j..})
WeylElement moyal_mul(const WeylElement& a, const WeylElement& b,
                      const PoissonMatrix& P);

// only the y-degree-0 part of a*b (same truncation semantics); this is
// center_project(moyal_mul(a,b,P)) computed without the off-center work
CenterSeries moyal_center(const WeylElement& a, const WeylElement& b,
                          const PoissonMatrix& P);

// a*b - b*a (0-form commutator; graded version lives with WeylForm)
WeylElement commutator(const WeylElement& a, const WeylElement& b,
                       const PoissonMatrix& P);

CenterSeries center_project(const WeylElement& a);

// E = -(i/2) sum_j y^j d/dy^j
WeylElement euler_E(const WeylElement& a);

// d/dhbar; throws if a floor violation results
WeylElement hbar_derivative(const WeylElement& a);

// d/dy^j
WeylElement y_derivative(const WeylElement& a, int j);

// d/dx^j applied to the polynomial coefficients
WeylElement x_derivative(const WeylElement& a, int j);

// rho(u) = (hbar/i) du/dhbar + E(u)
WeylElement rho(const WeylElement& a);

}  // namespace fedosov
