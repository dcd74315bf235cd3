#pragma once

// Chart-level de Rham bookkeeping.  The engine itself never sees global
// topology; it enters exactly once, through a declared basis of constant
// closed 2-forms that are to be treated as non-exact.  Every closed
// polynomial 2-form series then splits, per hbar order, into coordinates
// on the declared basis plus a remainder that is exact by the Euler
// homotopy.  The quantum-Liouville obstruction is the projection of the
// hbar-derivative of the characteristic class.

#include <map>
#include <string>
#include <vector>

#include "fedosov/fedosov_setup.hpp"
#include "fedosov/form_series.hpp"

namespace fedosov {

// Named constant antisymmetric 2-forms declared non-exact.  Constant forms
// are automatically closed, and independence modulo exact forms reduces to
// plain linear independence of the coefficient matrices: by the declared
// rule a nonzero combination of basis forms is never exact.
class CohomologyDecl {
public:
    CohomologyDecl() = default;
    explicit CohomologyDecl(int dim) : dim_(dim) {}

    // validates shape, antisymmetry, and independence from the forms already
    // declared; throws std::invalid_argument on violation
    void add_basis_form(const std::string& name, const ScalarMatrix& coeffs);

    int dim() const { return dim_; }
    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const ScalarMatrix& matrix(std::size_t j) const { return mats_.at(j); }
    // the j-th basis form embedded at hbar order 0
    ScalarFormSeries form(std::size_t j) const;

private:
    int dim_ = 0;
    std::vector<std::string> names_;
    std::vector<ScalarMatrix> mats_;
};

struct ClassProjection {
    // hbar order -> one coordinate per declared basis form; orders appear
    // exactly when the input has terms there
    std::map<int, std::vector<Scalar>> coordinates;
    // primitive with  w = sum_k hbar^k sum_j coord_{k,j} basis_j + d(primitive)
    ScalarFormSeries primitive;

    bool all_zero() const;
};

// Splits a closed 2-form series into declared-class coordinates and an
// exact remainder, per hbar order.  Coordinates are read off the pivot
// entries of the basis (exact Gaussian elimination over the constant-form
// coefficients); the remainder, constant part included, is integrated with
// the Euler homotopy.  The round-trip identity
//     w == sum coords * basis + d_exterior(primitive)
// holds exactly.  Throws std::invalid_argument when w is not a closed
// 2-form series on the declared chart.
ClassProjection project_class(const ScalarFormSeries& w,
                              const CohomologyDecl& decl);

struct ObstructionReport {
    ScalarFormSeries class_derivative;  // d/dhbar of the characteristic class
    ClassProjection projection;
    bool obstructed = false;  // some coordinate nonzero at some hbar order
};

// Projects d/dhbar(Omega/hbar) onto the declared classes.  All-zero
// coordinates mean no cohomological obstruction at the chart+declaration
// level; any nonzero coordinate rules out a quantum Liouville operator.
ObstructionReport liouville_obstruction(const FedosovSetup& setup,
                                        const CohomologyDecl& decl);

}  // namespace fedosov
