#include "doctest.h"

#include "dumont/series.hpp"

using namespace dumont;

namespace {

FormalPowerSeries one_series(const VariableSetPtr& ring, int order) {
    return FormalPowerSeries::constant(ring, "u", order, ExactPolynomial::constant(ring, 1));
}

}  // namespace

TEST_CASE("series arithmetic basics") {
    auto ring = make_ring({"k2"});
    // (1+u)(1-u) truncated at order 2 is 1-u^2; factorial scaling makes the
    // u-coefficient slot hold 1!*1 and the u^2 slot 2!*(-1).
    FormalPowerSeries a = one_series(ring, 2), b = one_series(ring, 2);
    a.set_coeff(1, ExactPolynomial::constant(ring, 1));
    b.set_coeff(1, ExactPolynomial::constant(ring, -1));
    auto prod = a * b;
    CHECK(prod.coeff(0) == ExactPolynomial::constant(ring, 1));
    CHECK(prod.coeff(1).is_zero());
    CHECK(prod.coeff(2) == ExactPolynomial::constant(ring, -2));

    // reciprocal of 1-u is the geometric series: m-th slot m!*1
    auto recip = b.reciprocal();
    CHECK(recip.coeff(1) == ExactPolynomial::constant(ring, 1));
    CHECK(recip.coeff(2) == ExactPolynomial::constant(ring, 2));

    // order is respected: multiplying two order-2 series stays order 2
    CHECK((a * b).order() == 2);
    auto two = FormalPowerSeries::constant(ring, "u", 2, ExactPolynomial::constant(ring, 2));
    CHECK_THROWS_AS(two.reciprocal(), std::invalid_argument);
}

TEST_CASE("two-parameter series integrates the symmetric system") {
    JacobiSeries js = jacobi_two_param(6);
    auto ring = js.sn.coeff_ring();
    auto a2 = ExactPolynomial::variable(ring, "a2");
    auto b2 = ExactPolynomial::variable(ring, "b2");
    CHECK(js.sn.coeff(0).is_zero());
    CHECK(js.cn.coeff(0) == ExactPolynomial::constant(ring, 1));
    CHECK(js.dn.coeff(0) == ExactPolynomial::constant(ring, 1));
    CHECK(js.sn.coeff(1) == ExactPolynomial::constant(ring, 1));
    // u^3 slot of sn holds 3!*(a2+b2)/3! = a2+b2
    CHECK(js.sn.coeff(3) == a2 + b2);
    // u^2 slot of cn holds 2!*(a2/2) = a2
    CHECK(js.cn.coeff(2) == a2);
    CHECK(js.dn.coeff(2) == b2);
}

TEST_CASE("classical series, parity and Pythagorean identities") {
    int order = 12;
    JacobiSeries js = jacobi_classical(order);
    auto ring = js.sn.coeff_ring();
    auto k2 = ExactPolynomial::variable(ring, "k2");

    CHECK(js.sn.coeff(3) == -(ExactPolynomial::constant(ring, 1) + k2));

    for (int m = 0; m <= order; ++m) {
        if (m % 2 == 0) CHECK(js.sn.coeff(m).is_zero());
        else {
            CHECK(js.cn.coeff(m).is_zero());
            CHECK(js.dn.coeff(m).is_zero());
        }
    }

    auto one = one_series(ring, order);
    CHECK(js.sn * js.sn + js.cn * js.cn == one);
    CHECK(js.dn * js.dn + (js.sn * js.sn).scale(k2) == one);
}

TEST_CASE("classical equals the specialized two-parameter series") {
    int order = 10;
    JacobiSeries two = jacobi_two_param(order);
    JacobiSeries cls = jacobi_classical(order);
    auto ring = cls.sn.coeff_ring();
    std::map<std::string, ExactPolynomial> bind{
        {"a2", ExactPolynomial::constant(ring, -1)},
        {"b2", -ExactPolynomial::variable(ring, "k2")}};
    for (int m = 0; m <= order; ++m) {
        CHECK(two.sn.coeff(m).substitute(bind) == cls.sn.coeff(m));
        CHECK(two.cn.coeff(m).substitute(bind) == cls.cn.coeff(m));
        CHECK(two.dn.coeff(m).substitute(bind) == cls.dn.coeff(m));
    }
}

TEST_CASE("J-coefficient table") {
    JTable jt = j_coefficients(12);
    CHECK(jt.j(0, 0) == 1);
    CHECK(jt.j(1, 0) == 1);
    CHECK(jt.j(3, 0) == 1);
    CHECK(jt.j(3, 2) == 1);
    CHECK(jt.j(5, 0) == 1);
    CHECK(jt.j(5, 2) == 14);
    CHECK(jt.j(5, 4) == 1);
    // all entries non-negative, constant coefficient 1
    for (const auto& [key, v] : jt.entries) CHECK(v >= 0);
    for (int n = 1; n <= 12; ++n) CHECK(jt.j(n, 0) == 1);
}

TEST_CASE("closed generating function for the iterated derivative") {
    auto rep = verify_dumont_gf(7);
    CHECK(rep.pass);
    CHECK(rep.counterexample.empty());
}

TEST_CASE("convolution identities at small range") {
    Triangle t = extract(ArrayName::t, 8);
    Triangle s = extract(ArrayName::s, 6);
    auto rep = verify_convolution(t, s, 3);
    CHECK(rep.pass);
    CHECK_THROWS_AS(verify_convolution(t, s, 6), std::invalid_argument);
}
