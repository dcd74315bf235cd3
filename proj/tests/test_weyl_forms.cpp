#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fedosov/weyl_form.hpp"
#include "support/random_gen.hpp"

using namespace fedosov;

namespace {

PoissonMatrix standard_poisson_2d() {
    ScalarMatrix omega(2, std::vector<Scalar>(2, Scalar(0)));
    omega[0][1] = Scalar(1);
    omega[1][0] = Scalar(-1);
    return PoissonMatrix::from_omega(omega);
}

WeylForm random_form(testgen::Rng& rng, int dim, Truncation trunc,
                     int max_form_degree) {
    WeylForm f(dim, trunc);
    for (int q = 0; q <= max_form_degree; ++q) {
        // pick a random strictly increasing tuple of length q
        DxTuple J;
        int next = 0;
        for (int t = 0; t < q; ++t) {
            int hi = dim - (q - t);
            if (next > hi) break;
            int pick = static_cast<int>(rng.range(next, hi));
            J.push_back(pick);
            next = pick + 1;
        }
        if (static_cast<int>(J.size()) != q) continue;
        f.add_entry(J, rng.weyl(dim, trunc, 4, 3));
    }
    return f;
}

}  // namespace

TEST_CASE("delta_inv on the book-keeping example") {
    // delta_inv(y^1 dx^2) = (1/2) y^2 y^1  (y-degree 1, form degree 1)
    Truncation trunc{6, 0};
    WeylForm a(2, trunc);
    WeylElement y1 = WeylElement::fiber_coordinate(2, 0, trunc);
    a.add_entry({1}, y1);

    WeylForm got = delta_inv(a);
    WeylElement want(2, trunc);
    Exp alpha(2, 0);
    alpha[0] = 1;
    alpha[1] = 1;
    want.add_term(0, alpha, BasePoly::constant(2, Scalar::ratio(1, 2)));
    CHECK(got == WeylForm::from_element(want));
}

TEST_CASE("delta lowers y and raises dx with the right sign") {
    Truncation trunc{6, 0};
    // a = y^1 y^2 dx^1: delta a = dx^1 ^ d/dy^1 (...) + dx^2 ^ d/dy^2 (...)
    //   = y^2 dx^1^dx^1 (=0) + y^1 dx^2^dx^1 = -y^1 dx^1^dx^2
    WeylForm a(2, trunc);
    WeylElement y1y2(2, trunc);
    Exp alpha(2, 0);
    alpha[0] = 1;
    alpha[1] = 1;
    y1y2.add_term(0, alpha, BasePoly::constant(2, Scalar(1)));
    a.add_entry({0}, y1y2);

    WeylForm got = delta(a);
    WeylForm want(2, trunc);
    want.add_entry({0, 1}, -WeylElement::fiber_coordinate(2, 0, trunc));
    CHECK(got == want);
}

TEST_CASE("delta and delta_inv square to zero") {
    Truncation trunc{6, 0};
    testgen::Rng rng(20260814);
    for (int rep = 0; rep < 6; ++rep) {
        WeylForm a = random_form(rng, 2, trunc, 2);
        CHECK(delta(delta(a)).is_zero());
        CHECK(delta_inv(delta_inv(a)).is_zero());
    }
}

TEST_CASE("hodge identity a = delta delta_inv a + delta_inv delta a + a_00") {
    Truncation trunc{6, 0};
    testgen::Rng rng(7);
    for (int dim : {2, 4}) {
        for (int rep = 0; rep < 4; ++rep) {
            WeylForm a = random_form(rng, dim, trunc, dim == 2 ? 2 : 3);
            HodgeParts h = hodge_decompose(a);
            WeylForm rebuilt = h.dd_inv + h.d_inv_d +
                               WeylForm::from_element(
                                   WeylElement::from_center(h.center, trunc));
            CHECK(rebuilt == a);
        }
    }
}

TEST_CASE("delta agrees with the inner commutator presentation") {
    // delta a = -[(i/hbar) omega_{ij} y^i dx^j, a] for the standard omega.
    // The right-hand side needs one spare hbar order, so run it on a
    // Laurent-friendly truncation and compare exactly.
    Truncation trunc{6, -2};
    PoissonMatrix P = standard_poisson_2d();

    WeylForm lambda(2, trunc);
    for (int j = 0; j < 2; ++j) {
        WeylElement w(2, trunc);
        for (int i = 0; i < 2; ++i) {
            const Scalar& om = P.omega_at(i, j);
            if (om.is_zero()) continue;
            Exp alpha(2, 0);
            alpha[i] = 1;
            w.add_term(0, alpha, BasePoly::constant(2, om));
        }
        if (!w.is_zero()) lambda.add_entry({j}, w);
    }

    testgen::Rng rng(99);
    for (int rep = 0; rep < 6; ++rep) {
        WeylForm a = random_form(rng, 2, trunc, 2);
        WeylForm lhs = delta(a);
        WeylForm rhs = -i_over_hbar_commutator(lambda, a, P);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("wedge_mul is associative on mixed forms") {
    Truncation trunc{6, 0};
    PoissonMatrix P = standard_poisson_2d();
    testgen::Rng rng(4242);
    for (int rep = 0; rep < 4; ++rep) {
        WeylForm a = random_form(rng, 2, trunc, 1);
        WeylForm b = random_form(rng, 2, trunc, 1);
        WeylForm c = random_form(rng, 2, trunc, 1);
        WeylForm left = wedge_mul(wedge_mul(a, b, P), c, P).truncated_above(2);
        WeylForm right = wedge_mul(a, wedge_mul(b, c, P), P).truncated_above(2);
        CHECK(left == right);
    }
}

TEST_CASE("graded commutator signs: odd forms use the plus sign") {
    Truncation trunc{6, 0};
    PoissonMatrix P = standard_poisson_2d();
    // For 1-forms [a,b] = a*b + b*a; with a = y^1 dx^1 and b = y^2 dx^2 the
    // polynomial parts cancel against the wedge sign, leaving the fiber
    // commutator [y^1, y^2] = -i hbar pi^{12} = i hbar on dx^1^dx^2.
    WeylForm a(2, trunc), b(2, trunc);
    a.add_entry({0}, WeylElement::fiber_coordinate(2, 0, trunc));
    b.add_entry({1}, WeylElement::fiber_coordinate(2, 1, trunc));
    WeylForm lhs = graded_commutator(a, b, P);
    WeylForm rhs = wedge_mul(a, b, P) + wedge_mul(b, a, P);
    CHECK(lhs == rhs);
    WeylForm want(2, trunc);
    WeylElement ihbar(2, trunc);
    ihbar.add_term(1, Exp(2, 0), BasePoly::constant(2, Scalar::i()));
    want.add_entry({0, 1}, ihbar);
    CHECK(lhs == want);
}

TEST_CASE("[delta, E] = -(i/2) delta") {
    Truncation trunc{6, 0};
    testgen::Rng rng(606);
    for (int rep = 0; rep < 5; ++rep) {
        WeylForm a = random_form(rng, 2, trunc, 2);
        WeylForm lhs = delta(euler_E(a)) - euler_E(delta(a));
        WeylForm rhs = delta(a).scaled(Scalar::i() * Scalar::ratio(-1, 2));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("x_exterior differentiates base coefficients only") {
    Truncation trunc{6, 0};
    // a = x1 x2 dx^1 -> d_x a = x1 dx^2 ^ dx^1 = -x1 dx^1^dx^2
    WeylForm a(2, trunc);
    BasePoly x1x2 = BasePoly::coordinate(2, 0) * BasePoly::coordinate(2, 1);
    a.add_entry({0}, WeylElement::from_poly(x1x2, trunc));
    WeylForm got = x_exterior(a);
    WeylForm want(2, trunc);
    want.add_entry({0, 1},
                   -WeylElement::from_poly(BasePoly::coordinate(2, 0), trunc));
    CHECK(got == want);
    CHECK(x_exterior(got).is_zero());
}

TEST_CASE("scalar embedding round-trips") {
    Truncation trunc{6, 0};
    ScalarFormSeries s(2);
    s.add_term(0, {0, 1}, BasePoly::coordinate(2, 1));
    s.add_term(2, {0}, BasePoly::constant(2, Scalar::ratio(3, 7)));
    WeylForm f = WeylForm::from_scalar_form(s, trunc);
    CHECK(f.is_scalar());
    CHECK(f.scalar_part() == s);
}
