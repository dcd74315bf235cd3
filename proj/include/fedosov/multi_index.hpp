#pragma once

// Exponent vectors (multi-indices) and the graded-lex order used for every
// canonical iteration in the engine.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "fedosov/scalar.hpp"

namespace fedosov {

using Exp = std::vector<std::uint32_t>;  // one exponent per coordinate

inline int exp_total(const Exp& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

inline bool graded_lex_less(const Exp& a, const Exp& b) {
    int ta = exp_total(a), tb = exp_total(b);
    if (ta != tb) return ta < tb;
    return a < b;  // lexicographic tie-break
}

struct GradedLex {
    bool operator()(const Exp& a, const Exp& b) const { return graded_lex_less(a, b); }
};

inline Exp exp_add(const Exp& a, const Exp& b) {
    if (a.size() != b.size()) throw std::invalid_argument("exp_add: dim mismatch");
    Exp r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
    return r;
}

// componentwise a - b; requires b <= a
inline Exp exp_sub(const Exp& a, const Exp& b) {
    if (a.size() != b.size()) throw std::invalid_argument("exp_sub: dim mismatch");
    Exp r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (b[k] > a[k]) throw std::invalid_argument("exp_sub: negative exponent");
        r[k] = a[k] - b[k];
    }
    return r;
}

inline bool exp_leq(const Exp& a, const Exp& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

inline Exp exp_unit(int dim, int j) {
    Exp e(dim, 0);
    e[j] = 1;
    return e;
}

inline Rational factorial(unsigned n) {
    Rational r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Rational exp_factorial(const Exp& e) {
    Rational r = 1;
    for (auto x : e) r *= factorial(x);
    return r;
}

// binomial(n, k) componentwise product: number of ways to carve b out of a
inline Rational exp_binomial(const Exp& a, const Exp& b) {
    Rational r = 1;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (b[k] > a[k]) return 0;
        // C(a_k, b_k)
        Rational c = 1;
        for (std::uint32_t j = 0; j < b[k]; ++j) {
            c *= Rational(a[k] - j);
            c /= Rational(j + 1);
        }
        r *= c;
    }
    return r;
}

// all multi-indices of given dim with total degree <= max_total, graded-lex order
std::vector<Exp> exps_up_to(int dim, int max_total);

// all multi-indices of given dim with total degree == total, lex order
std::vector<Exp> exps_of_degree(int dim, int total);

// all ways of splitting e into an ordered list of `parts` multi-indices
// summing to e, paired with the multinomial coefficient e!/(prod parts!)
std::vector<std::pair<std::vector<Exp>, Rational>> exp_splits(const Exp& e, int parts);

}  // namespace fedosov
