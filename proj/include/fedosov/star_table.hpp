#pragma once

// Reifies the star product as the coefficient operators of its hbar
// expansion: a table of bidifferential operators C_k, each a finite sum of
// terms g(x) * (d^alpha tensor d^beta).  Extraction probes the exact star
// evaluator on the monomial jet basis and solves the triangular linear
// system for the coefficients; a randomized reconstruction residual guards
// against an operator order larger than the probed one.

#include <cstdint>
#include <vector>

#include "fedosov/fedosov_setup.hpp"

namespace fedosov {

struct BiDiffTerm {
    Exp alpha;       // derivative multi-index, left slot
    Exp beta;        // derivative multi-index, right slot
    BasePoly coeff;  // g(x)

    friend bool operator==(const BiDiffTerm& a, const BiDiffTerm& b) {
        return a.alpha == b.alpha && a.beta == b.beta && a.coeff == b.coeff;
    }
};

class StarProductTable {
public:
    StarProductTable() = default;
    StarProductTable(int dim, int order) : dim_(dim), c_(order + 1) {}

    int dim() const { return dim_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BiDiffTerm>& terms(int k) const { return c_.at(k); }
    void add_term(int k, const Exp& alpha, const Exp& beta,
                  const BasePoly& coeff);

    // C_k(f, g)
    BasePoly apply(int k, const BasePoly& f, const BasePoly& g) const;
    // sum_k hbar^k C_k(f, g), orders 0..order()
    CenterSeries evaluate(const BasePoly& f, const BasePoly& g) const;
    // hbar-bilinear extension, truncated at order()
    CenterSeries evaluate(const CenterSeries& f, const CenterSeries& g) const;

    // C_0 must be plain multiplication; the antisymmetric part of C_1 must
    // be -(i/2) pi^{ij} d_i tensor d_j
    bool check_normalization(const PoissonMatrix& P) const;

private:
    int dim_ = 0;
    std::vector<std::vector<BiDiffTerm>> c_;
};

struct TableExtraction {
    StarProductTable table;
    bool residual_ok = false;  // random pairs reproduce star through order N
    std::string residual_note;
};

// Probes star(x^alpha, x^beta) for all |alpha|, |beta| <= order_cap and
// solves for the coefficients of C_0..C_N.  Requires 2N <= degree cap (the
// exactness bound of the star evaluator).  The residual probe draws random
// polynomial pairs of degree order_cap + 2, so coefficients the probe basis
// cannot see are reported rather than silently dropped.
TableExtraction extract_table(const FedosovSetup& setup, int N, int order_cap,
                              std::uint64_t probe_seed = 0x5eed0f5eedULL);

}  // namespace fedosov
