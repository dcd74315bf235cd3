#pragma once

// Deterministic random data for property tests.  mt19937_64 with explicit
// seeds and raw modular draws only, so the same seed gives the same stream
// on every platform.

#include <random>

#include "fedosov/base_poly.hpp"
#include "fedosov/weyl_element.hpp"

namespace fedosov::testgen {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }
    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(raw() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Scalar scalar(bool complex_part = true) {
        long num = range(-6, 6);
        long den = range(1, 4);
        Scalar s = Scalar::ratio(num, den);
        if (complex_part && range(0, 1) == 1)
            s += Scalar::ratio(range(-6, 6), range(1, 4)) * Scalar::i();
        return s;
    }

    Scalar nonzero_scalar() {
        for (;;) {
            Scalar s = scalar();
            if (!s.is_zero()) return s;
        }
    }

    Exp exponent(int dim, int max_total) {
        Exp e(dim, 0);
        int budget = range(0, max_total);
        for (int t = 0; t < budget; ++t) e[range(0, dim - 1)] += 1;
        return e;
    }

    BasePoly poly(int dim, int max_deg, int n_terms) {
        BasePoly p(dim);
        for (int t = 0; t < n_terms; ++t)
            p.add_term(exponent(dim, max_deg), scalar());
        return p;
    }

    // non-Laurent Weyl element with bounded degree
    WeylElement weyl(int dim, Truncation trunc, int max_term_degree,
                     int n_terms, int max_x_deg = 2) {
        WeylElement w(dim, trunc);
        for (int t = 0; t < n_terms; ++t) {
            int k = range(0, max_term_degree / 2);
            int room = max_term_degree - 2 * k;
            Exp alpha = exponent(dim, room);
            w.add_term(k, alpha, poly(dim, max_x_deg, 2));
        }
        return w;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace fedosov::testgen
