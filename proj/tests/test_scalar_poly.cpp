#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fedosov/base_poly.hpp"
#include "fedosov/center_series.hpp"
#include "support/random_gen.hpp"

using namespace fedosov;

TEST_CASE("scalar field arithmetic") {
    Scalar a = Scalar::ratio(1, 2) + Scalar::ratio(3, 4) * Scalar::i();
    Scalar b = Scalar::ratio(-2, 3) + Scalar::ratio(1, 5) * Scalar::i();
    CHECK(a + b - b == a);
    CHECK((a * b) / b == a);
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    CHECK((a - a).is_zero());
    CHECK_THROWS_AS(a / Scalar(0), std::domain_error);
}

TEST_CASE("scalar canonical rendering is bit-exact") {
    Scalar a = Scalar::ratio(2, 4);  // reduces to 1/2
    Scalar b = Scalar::ratio(1, 2);
    CHECK(a.str() == b.str());
    CHECK(a.str() == "1/2+0/1*i");
    CHECK((Scalar::ratio(-1, 3) - Scalar::ratio(3, 4) * Scalar::i()).str() ==
          "-1/3-3/4*i");
    CHECK(Scalar(0).str() == "0/1+0/1*i");
}

TEST_CASE("scalar parse round trip") {
    testgen::Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        Scalar s = rng.scalar();
        CHECK(Scalar::parse(s.str()) == s);
    }
    CHECK(Scalar::parse("3") == Scalar(3));
    CHECK(Scalar::parse("-1/2") == Scalar::ratio(-1, 2));
    CHECK(Scalar::parse("2*i") == Scalar(2) * Scalar::i());
    CHECK(Scalar::parse("1/2-3/4*i") ==
          Scalar::ratio(1, 2) - Scalar::ratio(3, 4) * Scalar::i());
    CHECK_THROWS_AS(Scalar::parse("zzz"), std::invalid_argument);
}

TEST_CASE("polynomial ring basics") {
    const int dim = 2;
    BasePoly x1 = BasePoly::coordinate(dim, 0);
    BasePoly x2 = BasePoly::coordinate(dim, 1);
    // (x1+x2)*(x1-x2) = x1^2 - x2^2
    BasePoly lhs = (x1 + x2) * (x1 - x2);
    BasePoly rhs = x1 * x1 - x2 * x2;
    CHECK(lhs == rhs);
    CHECK(lhs.degree() == 2);
    CHECK(BasePoly(dim).degree() == -1);
}

TEST_CASE("polynomial arithmetic properties") {
    testgen::Rng rng(12);
    for (int t = 0; t < 50; ++t) {
        BasePoly a = rng.poly(3, 3, 4);
        BasePoly b = rng.poly(3, 3, 4);
        BasePoly c = rng.poly(3, 3, 4);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("polynomial derivative: Leibniz") {
    testgen::Rng rng(13);
    for (int t = 0; t < 50; ++t) {
        BasePoly a = rng.poly(3, 3, 4);
        BasePoly b = rng.poly(3, 3, 4);
        int j = rng.range(0, 2);
        CHECK((a * b).derivative(j) == a.derivative(j) * b + a * b.derivative(j));
    }
    BasePoly p = BasePoly::monomial(2, Exp{2, 1});  // x1^2 x2
    CHECK(p.derivative(0) == BasePoly::monomial(2, Exp{1, 1}, Scalar(2)));
    CHECK(p.derivative(Exp{2, 1}) == BasePoly::constant(2, Scalar(2)));
}

TEST_CASE("graded-lex canonical term order") {
    BasePoly p(2);
    p.add_term(Exp{0, 2}, Scalar(1));
    p.add_term(Exp{1, 0}, Scalar(1));
    p.add_term(Exp{0, 0}, Scalar(5));
    std::vector<Exp> order;
    for (const auto& [e, c] : p.terms()) order.push_back(e);
    CHECK(order == std::vector<Exp>{{0, 0}, {1, 0}, {0, 2}});
}

TEST_CASE("center series ring and hbar operations") {
    testgen::Rng rng(14);
    for (int t = 0; t < 30; ++t) {
        CenterSeries a = CenterSeries::from_poly(rng.poly(2, 2, 3), rng.range(0, 2));
        CenterSeries b = CenterSeries::from_poly(rng.poly(2, 2, 3), rng.range(0, 2));
        CHECK(a * b == b * a);
        // d/dhbar is a derivation
        CHECK((a * b).hbar_derivative() ==
              a.hbar_derivative() * b + a * b.hbar_derivative());
        CHECK(a.shifted_hbar(2).shifted_hbar(-2) == a);
    }
    CenterSeries s = CenterSeries::from_poly(BasePoly::constant(2, Scalar(3)), 2);
    CHECK(s.hbar_derivative().coeff(1) == BasePoly::constant(2, Scalar(6)));
}

TEST_CASE("multi-index splits carry multinomial weights") {
    // sum of multinomials over splits of e into 2 parts = 2^{|e|}
    Exp e{2, 1};
    Rational total = 0;
    for (const auto& [parts, w] : exp_splits(e, 2)) {
        CHECK(exp_add(parts[0], parts[1]) == e);
        total += w;
    }
    CHECK(total == 8);
}
