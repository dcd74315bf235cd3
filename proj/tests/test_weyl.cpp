#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fedosov/weyl_element.hpp"
#include "support/random_gen.hpp"

using namespace fedosov;

namespace {

PoissonMatrix standard_pi_2d() {
    // pi^{12} = 1 directly (no omega); the display convention of the fiber
    // examples
    return PoissonMatrix::from_pi({{Scalar(0), Scalar(1)}, {Scalar(-1), Scalar(0)}});
}

PoissonMatrix canonical_omega_2d() {
    // omega = dx1 ^ dx2, pi = omega^{-1}
    return PoissonMatrix::from_omega(
        {{Scalar(0), Scalar(1)}, {Scalar(-1), Scalar(0)}});
}

}  // namespace

TEST_CASE("pi is the exact inverse of omega") {
    PoissonMatrix P = canonical_omega_2d();
    CHECK(P.pi_at(0, 1) == Scalar(-1));
    CHECK(P.pi_at(1, 0) == Scalar(1));
    // omega * pi = identity
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Scalar s(0);
            for (int m = 0; m < 2; ++m) s += P.omega_at(i, m) * P.pi_at(m, j);
            CHECK(s == (i == j ? Scalar(1) : Scalar(0)));
        }
}

TEST_CASE("moyal product of fiber coordinates") {
    Truncation tr(8, 0);
    PoissonMatrix P = standard_pi_2d();
    WeylElement y1 = WeylElement::fiber_coordinate(2, 0, tr);
    WeylElement y2 = WeylElement::fiber_coordinate(2, 1, tr);
    WeylElement prod = moyal_mul(y1, y2, P);
    // y1*y2 = y1 y2 - (i/2) hbar pi^{12}
    WeylElement expect(2, tr);
    expect.add_term(0, Exp{1, 1}, BasePoly::constant(2, Scalar(1)));
    expect.add_term(1, Exp{0, 0},
                    BasePoly::constant(2, Scalar::ratio(-1, 2) * Scalar::i()));
    CHECK(prod == expect);
    // commutator [y^i, y^j] = -i hbar pi^{ij}
    WeylElement comm = commutator(y1, y2, P);
    WeylElement cexp(2, tr);
    cexp.add_term(1, Exp{0, 0}, BasePoly::constant(2, -Scalar::i()));
    CHECK(comm == cexp);
}

TEST_CASE("moyal product is graded: term degrees add") {
    testgen::Rng rng(31);
    Truncation tr(8, 0);
    PoissonMatrix P = canonical_omega_2d();
    for (int t = 0; t < 20; ++t) {
        WeylElement a = rng.weyl(2, tr, 4, 3);
        WeylElement b = rng.weyl(2, tr, 4, 3);
        WeylElement ab = moyal_mul(a, b, P);
        // collect attainable degree sums
        std::set<int> sums;
        for (const auto& [ka, fa] : a.terms())
            for (const auto& [kb, fb] : b.terms())
                sums.insert(WeylElement::weyl_degree(ka) +
                            WeylElement::weyl_degree(kb));
        for (const auto& [key, p] : ab.terms())
            CHECK(sums.count(WeylElement::weyl_degree(key)) == 1);
    }
}

TEST_CASE("moyal product is associative on the truncated algebra") {
    testgen::Rng rng(32);
    Truncation tr(8, 0);
    for (int t = 0; t < 15; ++t) {
        int dim = (t % 2 == 0) ? 2 : 4;
        PoissonMatrix P =
            dim == 2 ? canonical_omega_2d()
                     : PoissonMatrix::from_omega(
                           {{Scalar(0), Scalar(0), Scalar(1), Scalar(0)},
                            {Scalar(0), Scalar(0), Scalar(0), Scalar(1)},
                            {Scalar(-1), Scalar(0), Scalar(0), Scalar(0)},
                            {Scalar(0), Scalar(-1), Scalar(0), Scalar(0)}});
        WeylElement a = rng.weyl(dim, tr, 4, 3);
        WeylElement b = rng.weyl(dim, tr, 4, 3);
        WeylElement c = rng.weyl(dim, tr, 4, 3);
        CHECK(moyal_mul(moyal_mul(a, b, P), c, P) ==
              moyal_mul(a, moyal_mul(b, c, P), P));
    }
}

TEST_CASE("center projection and the fast center product") {
    testgen::Rng rng(33);
    Truncation tr(8, 0);
    PoissonMatrix P = canonical_omega_2d();
    for (int t = 0; t < 25; ++t) {
        WeylElement a = rng.weyl(2, tr, 4, 3);
        WeylElement b = rng.weyl(2, tr, 4, 3);
        CHECK(moyal_center(a, b, P) == center_project(moyal_mul(a, b, P)));
    }
    BasePoly p = rng.poly(2, 3, 3);
    CHECK(center_project(WeylElement::from_poly(p, tr)) ==
          CenterSeries::from_poly(p));
}

TEST_CASE("euler operator E") {
    Truncation tr(8, 0);
    WeylElement w(2, tr);
    w.add_term(0, Exp{1, 1}, BasePoly::constant(2, Scalar(1)));  // y1 y2
    WeylElement e = euler_E(w);
    CHECK(e == w.scaled(-Scalar::i()));  // E(y1 y2) = -i y1 y2
    // E kills the center
    WeylElement c = WeylElement::from_poly(BasePoly::coordinate(2, 0), tr);
    CHECK(euler_E(c).is_zero());
}

TEST_CASE("rho on hbar") {
    Truncation tr(8, -1);
    WeylElement h(2, tr);
    h.add_term(1, Exp{0, 0}, BasePoly::constant(2, Scalar(1)));  // hbar
    // rho(hbar) = (hbar/i) * 1 = -i hbar
    CHECK(rho(h) == h.scaled(-Scalar::i()));
}

TEST_CASE("hbar derivative floor violation throws") {
    Truncation tr(8, -1);
    WeylElement w(2, tr);
    w.add_term(-1, Exp{0, 0}, BasePoly::constant(2, Scalar(1)));
    CHECK_THROWS_AS(hbar_derivative(w), std::domain_error);
}

TEST_CASE("degree cap drops high terms, floor throws") {
    Truncation tr(4, 0);
    WeylElement w(2, tr);
    w.add_term(0, Exp{5, 0}, BasePoly::constant(2, Scalar(1)));  // degree 5 > 4
    CHECK(w.is_zero());
    CHECK_THROWS_AS(w.add_term(-1, Exp{0, 0}, BasePoly::constant(2, Scalar(1))),
                    std::domain_error);
}

TEST_CASE("fiber derivative cocycle identity c1 = B(E)") {
    // c1(a,b) := d/dhbar(a*b) - (da/dhbar)*b - a*(db/dhbar)
    // must equal (i/hbar)( a*E(b) - E(a*b) + E(a)*b )
    testgen::Rng rng(34);
    Truncation tr(8, -1);
    PoissonMatrix P = canonical_omega_2d();
    for (int t = 0; t < 20; ++t) {
        WeylElement a = rng.weyl(2, tr, 4, 3);
        WeylElement b = rng.weyl(2, tr, 4, 3);
        WeylElement c1 = hbar_derivative(moyal_mul(a, b, P)) -
                         moyal_mul(hbar_derivative(a), b, P) -
                         moyal_mul(a, hbar_derivative(b), P);
        WeylElement be = (moyal_mul(a, euler_E(b), P) -
                          euler_E(moyal_mul(a, b, P)) +
                          moyal_mul(euler_E(a), b, P))
                             .shifted_hbar(-1)
                             .scaled(Scalar::i());
        // the cap makes d/dhbar lose the top slice: compare below it
        CHECK(c1.truncated_above(tr.degree_cap - 2) ==
              be.truncated_above(tr.degree_cap - 2));
    }
}
