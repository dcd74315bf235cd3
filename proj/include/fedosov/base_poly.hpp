#pragma once

// Sparse multivariate polynomial in the chart coordinates x^1..x^{2n} with
// Scalar coefficients.  Zero coefficients are never stored; iteration order
// is graded-lex, which every renderer downstream relies on.

#include <map>
#include <string>

#include "fedosov/multi_index.hpp"
#include "fedosov/scalar.hpp"

namespace fedosov {

class BasePoly {
public:
    using Terms = std::map<Exp, Scalar, GradedLex>;

    explicit BasePoly(int dim = 0) : dim_(dim) {}

    static BasePoly constant(int dim, const Scalar& c);
    static BasePoly monomial(int dim, const Exp& e, const Scalar& c = Scalar(1));
    // convenience: the coordinate function x^j (0-based j)
    static BasePoly coordinate(int dim, int j);

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // total degree; -1 for the zero polynomial
    const Terms& terms() const { return terms_; }
    Scalar coeff(const Exp& e) const;
    bool is_constant() const;
    Scalar constant_term() const;

    void add_term(const Exp& e, const Scalar& c);

    BasePoly operator-() const;
    BasePoly& operator+=(const BasePoly& o);
    BasePoly& operator-=(const BasePoly& o);
    friend BasePoly operator+(BasePoly a, const BasePoly& b) { return a += b; }
    friend BasePoly operator-(BasePoly a, const BasePoly& b) { return a -= b; }
    friend BasePoly operator*(const BasePoly& a, const BasePoly& b);
    friend bool operator==(const BasePoly& a, const BasePoly& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const BasePoly& a, const BasePoly& b) { return !(a == b); }

    BasePoly scaled(const Scalar& c) const;
    BasePoly derivative(int j) const;            // d/dx^j
    BasePoly derivative(const Exp& alpha) const;  // iterated

    std::string str() const;  // canonical text, graded-lex term order

private:
    int dim_;
    Terms terms_;
};

}  // namespace fedosov
