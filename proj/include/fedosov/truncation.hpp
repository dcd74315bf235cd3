#pragma once

// Truncation window for the formal Weyl algebra.  Filtration degree of a
// term hbar^k y^alpha is 2k + |alpha|; terms above degree_cap are dropped
// (quotient by the filtration ideal), terms below laurent_floor in the hbar
// exponent are an error: they mean the window was configured too small for
// the computation at hand, and silently dropping them would destroy
// exactness.

#include <stdexcept>

namespace fedosov {

struct Truncation {
    int degree_cap = 8;    // max 2k + |alpha|
    int laurent_floor = 0; // min hbar exponent, <= 0

    Truncation() = default;
    Truncation(int cap, int floor) : degree_cap(cap), laurent_floor(floor) {
        if (cap < 0) throw std::invalid_argument("Truncation: degree_cap < 0");
        if (floor > 0) throw std::invalid_argument("Truncation: laurent_floor > 0");
    }

    friend bool operator==(const Truncation& a, const Truncation& b) {
        return a.degree_cap == b.degree_cap && a.laurent_floor == b.laurent_floor;
    }
    friend bool operator!=(const Truncation& a, const Truncation& b) { return !(a == b); }
};

}  // namespace fedosov
