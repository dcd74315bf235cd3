#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fedosov/cohomology.hpp"
#include "support/random_gen.hpp"

using namespace fedosov;

namespace {

ScalarMatrix zero_matrix(int dim) {
    return ScalarMatrix(dim, std::vector<Scalar>(dim, Scalar(0)));
}

ScalarMatrix pair_form(int dim, int i, int j, const Scalar& c = Scalar(1)) {
    ScalarMatrix m = zero_matrix(dim);
    m[i][j] = c;
    m[j][i] = -c;
    return m;
}

PoissonMatrix block_poisson_4d() {
    ScalarMatrix omega = zero_matrix(4);
    omega[0][2] = Scalar(1);
    omega[2][0] = Scalar(-1);
    omega[1][3] = Scalar(1);
    omega[3][1] = Scalar(-1);
    return PoissonMatrix::from_omega(omega);
}

// the torus chart declaration: dtheta_1 ^ dtheta_2 spans the non-exact
// directions
CohomologyDecl torus_decl() {
    CohomologyDecl decl(4);
    decl.add_basis_form("dtheta1^dtheta2", pair_form(4, 0, 1));
    return decl;
}

FedosovSetup torus_setup(int pert_order) {
    CurvaturePrescription presc(block_poisson_4d());
    presc.add_perturbation(pert_order,
                           ScalarFormSeries::constant_two_form(4, pair_form(4, 0, 1)));
    return FedosovSetup(ConnectionData(4), presc, Truncation{6, 0});
}

// reassemble coordinates * basis + d(primitive)
ScalarFormSeries reassemble(const ClassProjection& p, const CohomologyDecl& decl) {
    ScalarFormSeries out(decl.dim());
    for (const auto& [k, coords] : p.coordinates)
        for (std::size_t j = 0; j < decl.size(); ++j)
            if (!coords[j].is_zero())
                out += decl.form(j).scaled(coords[j]).shifted_hbar(k);
    out += d_exterior(p.primitive);
    return out;
}

}  // namespace

TEST_CASE("declaration validates its basis") {
    CohomologyDecl decl(4);
    decl.add_basis_form("a", pair_form(4, 0, 1));
    decl.add_basis_form("b", pair_form(4, 2, 3));
    CHECK(decl.size() == 2);

    // dependent on a - already declared
    CHECK_THROWS_AS(decl.add_basis_form("dup", pair_form(4, 0, 1, Scalar(3))),
                    std::invalid_argument);
    // dependent combination of a and b
    ScalarMatrix combo = zero_matrix(4);
    combo[0][1] = Scalar(2);
    combo[1][0] = Scalar(-2);
    combo[2][3] = Scalar(-5);
    combo[3][2] = Scalar(5);
    CHECK_THROWS_AS(decl.add_basis_form("combo", combo), std::invalid_argument);

    // shape and symmetry violations
    CHECK_THROWS_AS(decl.add_basis_form("zero", zero_matrix(4)),
                    std::invalid_argument);
    ScalarMatrix sym = zero_matrix(4);
    sym[0][1] = Scalar(1);
    sym[1][0] = Scalar(1);
    CHECK_THROWS_AS(decl.add_basis_form("sym", sym), std::invalid_argument);
    CHECK_THROWS_AS(decl.add_basis_form("small", zero_matrix(3)),
                    std::invalid_argument);

    // an independent third direction is fine
    decl.add_basis_form("c", pair_form(4, 0, 2));
    CHECK(decl.size() == 3);
}

TEST_CASE("projection of trivial and basis inputs") {
    CohomologyDecl decl = torus_decl();

    // zero form
    ClassProjection z = project_class(ScalarFormSeries(4), decl);
    CHECK(z.coordinates.empty());
    CHECK(z.primitive.is_zero());
    CHECK(z.all_zero());

    // a basis member projects to coordinate 1 with zero remainder
    ClassProjection b = project_class(decl.form(0), decl);
    REQUIRE(b.coordinates.count(0) == 1);
    CHECK(b.coordinates.at(0) == std::vector<Scalar>{Scalar(1)});
    CHECK(b.primitive.is_zero());
    CHECK(!b.all_zero());
    CHECK(reassemble(b, decl) == decl.form(0));
}

TEST_CASE("the canonical form is exact with the Liouville primitive") {
    CohomologyDecl decl = torus_decl();
    ScalarMatrix omega = zero_matrix(4);
    omega[0][2] = Scalar(1);
    omega[2][0] = Scalar(-1);
    omega[1][3] = Scalar(1);
    omega[3][1] = Scalar(-1);
    ScalarFormSeries w = ScalarFormSeries::constant_two_form(4, omega);

    ClassProjection p = project_class(w, decl);
    CHECK(p.all_zero());
    REQUIRE(p.coordinates.count(0) == 1);
    CHECK(p.coordinates.at(0) == std::vector<Scalar>{Scalar(0)});

    // primitive is (1/2) omega_{ij} x^i dx^j
    ScalarFormSeries want(4);
    for (int j = 0; j < 4; ++j) {
        BasePoly acc(4);
        for (int i = 0; i < 4; ++i)
            if (!omega[i][j].is_zero())
                acc += BasePoly::coordinate(4, i).scaled(omega[i][j] *
                                                         Scalar::ratio(1, 2));
        if (!acc.is_zero()) want.add_term(0, DxTuple{j}, acc);
    }
    CHECK(p.primitive == want);
    CHECK(reassemble(p, decl) == w);
}

TEST_CASE("mixed Laurent input round-trips per hbar order") {
    CohomologyDecl decl = torus_decl();
    testgen::Rng rng(29);

    // hbar^{-2} constant part + declared classes at two orders + an exact
    // polynomial piece d(eta)
    ScalarFormSeries w(4);
    w += ScalarFormSeries::constant_two_form(4, pair_form(4, 1, 3, Scalar(-2)))
             .shifted_hbar(-2);
    w += decl.form(0).scaled(Scalar(3));
    w += decl.form(0).scaled(Scalar::i()).shifted_hbar(2);
    ScalarFormSeries eta(4);
    eta.add_term(2, DxTuple{1}, rng.poly(4, 3, 3));
    eta.add_term(0, DxTuple{2}, rng.poly(4, 2, 2));
    w += d_exterior(eta);

    ClassProjection p = project_class(w, decl);
    CHECK(reassemble(p, decl) == w);
    CHECK(p.coordinates.at(-2) == std::vector<Scalar>{Scalar(0)});
    CHECK(p.coordinates.at(0) == std::vector<Scalar>{Scalar(3)});
    CHECK(p.coordinates.at(2) == std::vector<Scalar>{Scalar::i()});
    CHECK(!p.all_zero());
}

TEST_CASE("projection rejects malformed input") {
    CohomologyDecl decl = torus_decl();

    // not closed: x^1 dx^0^dx^1 has d = -dx^0^dx^1^... pick x^2 dx^0^dx^1
    ScalarFormSeries bad(4);
    bad.add_term(0, DxTuple{0, 1}, BasePoly::coordinate(4, 2));
    CHECK_THROWS_AS(project_class(bad, decl), std::invalid_argument);

    // not a 2-form
    ScalarFormSeries one(4);
    one.add_term(0, DxTuple{0}, BasePoly::constant(4, Scalar(1)));
    CHECK_THROWS_AS(project_class(one, decl), std::invalid_argument);

    // wrong chart dimension
    CHECK_THROWS_AS(project_class(ScalarFormSeries(2), decl),
                    std::invalid_argument);
}

TEST_CASE("order-1 momentum perturbation is unobstructed") {
    FedosovSetup s = torus_setup(1);
    ObstructionReport rep = liouville_obstruction(s, torus_decl());
    CHECK(!rep.obstructed);

    // d/dhbar(omega/hbar + omega_1) = -omega/hbar^2: the perturbation drops out
    ScalarFormSeries want =
        ScalarFormSeries::constant_two_form(
            4, [] {
                ScalarMatrix m = zero_matrix(4);
                m[0][2] = Scalar(-1);
                m[2][0] = Scalar(1);
                m[1][3] = Scalar(-1);
                m[3][1] = Scalar(1);
                return m;
            }())
            .shifted_hbar(-2);
    CHECK(rep.class_derivative == want);
    REQUIRE(rep.projection.coordinates.count(-2) == 1);
    CHECK(rep.projection.coordinates.at(-2) == std::vector<Scalar>{Scalar(0)});
}

TEST_CASE("order-2 momentum perturbation is obstructed at hbar^0") {
    FedosovSetup s = torus_setup(2);
    ObstructionReport rep = liouville_obstruction(s, torus_decl());
    CHECK(rep.obstructed);
    REQUIRE(rep.projection.coordinates.count(0) == 1);
    CHECK(rep.projection.coordinates.at(0) == std::vector<Scalar>{Scalar(1)});
    // the stray hbar^{-2} term still projects to zero
    REQUIRE(rep.projection.coordinates.count(-2) == 1);
    CHECK(rep.projection.coordinates.at(-2) == std::vector<Scalar>{Scalar(0)});
}

TEST_CASE("contractible chart with empty declaration is never obstructed") {
    ScalarMatrix omega = zero_matrix(2);
    omega[0][1] = Scalar(1);
    omega[1][0] = Scalar(-1);
    FedosovSetup s(ConnectionData(2),
                   CurvaturePrescription(PoissonMatrix::from_omega(omega)),
                   Truncation{6, 0});
    CohomologyDecl decl(2);
    ObstructionReport rep = liouville_obstruction(s, decl);
    CHECK(!rep.obstructed);
    CHECK(rep.projection.all_zero());
    // everything is exact: the primitive reassembles the class derivative
    CHECK(d_exterior(rep.projection.primitive) == rep.class_derivative);
}
