#include "fedosov/cohomology.hpp"

#include <stdexcept>
#include <utility>

namespace fedosov {

namespace {

// flattening order for constant 2-forms: pairs (i,j), i<j, lexicographic --
// the same order ScalarFormSeries uses for its dx tuples
std::vector<std::pair<int, int>> pair_index(int dim) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) out.emplace_back(i, j);
    return out;
}

std::vector<Scalar> flatten(const ScalarMatrix& m, int dim) {
    std::vector<Scalar> v;
    for (const auto& [i, j] : pair_index(dim)) v.push_back(m[i][j]);
    return v;
}

// Solves C = sum_j c_j b_j + remainder by Gaussian elimination on the
// augmented matrix [b_1 .. b_r | C]; pivot rows are chosen first-nonzero in
// flattening order, so the coordinates are canonical.  With an independent
// basis the elimination never stalls; the caller checks independence by
// passing r+1 columns and asking whether the last one reduced to zero.
struct SolveResult {
    std::vector<Scalar> coords;
    std::vector<Scalar> remainder;
};

SolveResult solve_coordinates(const std::vector<std::vector<Scalar>>& basis,
                              const std::vector<Scalar>& target) {
    const std::size_t m = target.size();
    const std::size_t r = basis.size();
    // rows of the augmented system
    std::vector<std::vector<Scalar>> aug(m, std::vector<Scalar>(r + 1, Scalar(0)));
    for (std::size_t row = 0; row < m; ++row) {
        for (std::size_t j = 0; j < r; ++j) aug[row][j] = basis[j][row];
        aug[row][r] = target[row];
    }

    std::vector<bool> used(m, false);
    std::vector<std::size_t> pivot_row(r, m);
    for (std::size_t j = 0; j < r; ++j) {
        std::size_t p = m;
        for (std::size_t row = 0; row < m; ++row)
            if (!used[row] && !aug[row][j].is_zero()) {
                p = row;
                break;
            }
        if (p == m)
            throw std::invalid_argument(
                "cohomology basis is linearly dependent modulo exact forms");
        used[p] = true;
        pivot_row[j] = p;
        const Scalar inv = Scalar(1) / aug[p][j];
        for (std::size_t col = j; col <= r; ++col) aug[p][col] = aug[p][col] * inv;
        for (std::size_t row = 0; row < m; ++row) {
            if (row == p || aug[row][j].is_zero()) continue;
            const Scalar f = aug[row][j];
            for (std::size_t col = j; col <= r; ++col)
                aug[row][col] = aug[row][col] - f * aug[p][col];
        }
    }

    SolveResult res;
    res.coords.resize(r, Scalar(0));
    for (std::size_t j = 0; j < r; ++j) res.coords[j] = aug[pivot_row[j]][r];
    res.remainder = target;
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t row = 0; row < m; ++row)
            res.remainder[row] = res.remainder[row] - res.coords[j] * basis[j][row];
    return res;
}

}  // namespace

void CohomologyDecl::add_basis_form(const std::string& name,
                                    const ScalarMatrix& coeffs) {
    if (static_cast<int>(coeffs.size()) != dim_)
        throw std::invalid_argument("cohomology basis form has wrong dimension");
    for (const auto& row : coeffs)
        if (static_cast<int>(row.size()) != dim_)
            throw std::invalid_argument("cohomology basis form is not square");
    if (!is_antisymmetric(coeffs))
        throw std::invalid_argument("cohomology basis form is not antisymmetric");

    std::vector<std::vector<Scalar>> flat;
    for (const ScalarMatrix& m : mats_) flat.push_back(flatten(m, dim_));
    const std::vector<Scalar> target = flatten(coeffs, dim_);
    bool nonzero = false;
    for (const Scalar& s : target) nonzero = nonzero || !s.is_zero();
    if (!nonzero)
        throw std::invalid_argument("cohomology basis form is zero");
    if (!mats_.empty()) {
        SolveResult sr = solve_coordinates(flat, target);
        bool independent = false;
        for (const Scalar& s : sr.remainder) independent = independent || !s.is_zero();
        if (!independent)
            throw std::invalid_argument(
                "cohomology basis form '" + name +
                "' is linearly dependent on the declared basis");
    }

    names_.push_back(name);
    mats_.push_back(coeffs);
}

ScalarFormSeries CohomologyDecl::form(std::size_t j) const {
    return ScalarFormSeries::constant_two_form(dim_, mats_.at(j));
}

bool ClassProjection::all_zero() const {
    for (const auto& [order, coords] : coordinates)
        for (const Scalar& c : coords)
            if (!c.is_zero()) return false;
    return true;
}

ClassProjection project_class(const ScalarFormSeries& w,
                              const CohomologyDecl& decl) {
    if (w.dim() != decl.dim())
        throw std::invalid_argument("project_class: dimension mismatch");
    for (const auto& [key, coeff] : w.entries())
        if (key.second.size() != 2)
            throw std::invalid_argument("project_class: input is not a 2-form");
    if (!d_exterior(w).is_zero())
        throw std::invalid_argument("project_class: input is not closed");

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t j = 0; j < decl.size(); ++j)
        basis.push_back(flatten(decl.matrix(j), decl.dim()));

    ClassProjection out;
    ScalarFormSeries remainder = w;
    if (!w.is_zero()) {
        for (int k = w.min_hbar_order(); k <= w.max_hbar_order(); ++k) {
            const ScalarFormSeries slice = w.hbar_slice(k);
            if (slice.is_zero()) continue;
            // constant part of the slice in flattening order
            std::vector<Scalar> target;
            for (const auto& [i, j] : pair_index(decl.dim()))
                target.push_back(slice.coeff(k, DxTuple{i, j}).constant_term());
            SolveResult sr = solve_coordinates(basis, target);
            out.coordinates[k] = sr.coords;
            for (std::size_t j = 0; j < decl.size(); ++j)
                if (!sr.coords[j].is_zero())
                    remainder -= decl.form(j).scaled(sr.coords[j]).shifted_hbar(k);
        }
    }
    // the remainder, constant parts included, is exact on the chart
    out.primitive = euler_homotopy(remainder);
    if (d_exterior(out.primitive) != remainder)
        throw std::logic_error("project_class: homotopy round-trip failed");
    return out;
}

ObstructionReport liouville_obstruction(const FedosovSetup& setup,
                                        const CohomologyDecl& decl) {
    ObstructionReport rep;
    rep.class_derivative = setup.characteristic_class().hbar_derivative();
    rep.projection = project_class(rep.class_derivative, decl);
    rep.obstructed = !rep.projection.all_zero();
    return rep;
}

}  // namespace fedosov
