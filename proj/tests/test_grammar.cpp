#include "doctest.h"

#include <random>

#include "dumont/bigint.hpp"
#include "dumont/grammar.hpp"
#include "dumont/permstats.hpp"

using namespace dumont;

namespace {

ExactPolynomial random_poly(const VariableSetPtr& ring, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), expo(0, 2), coef(-5, 5);
    ExactPolynomial p(ring);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m(ring->size());
        for (std::size_t v = 0; v < ring->size(); ++v) m.exp[v] = expo(rng);
        p.add_term(m, coef(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("single derivation steps") {
    Grammar g = Grammar::schett();
    CHECK(g.derive(ExactPolynomial::variable(g.ring(), "x")) ==
          ExactPolynomial::parse(g.ring(), "y*z"));

    Grammar ge = Grammar::schett_extended();
    auto w2 = ExactPolynomial::parse(ge.ring(), "w^2");
    CHECK(ge.derive(w2) == ExactPolynomial::parse(ge.ring(), "2*w^2*x"));

    CHECK(g.derive(ExactPolynomial::constant(g.ring(), 1)).is_zero());
    CHECK(g.derive(ExactPolynomial::constant(g.ring(), 7)).is_zero());
}

TEST_CASE("grammar parsing round-trips with the serializer") {
    Grammar g = Grammar::schett();
    Grammar again = Grammar::parse(g.ring(), g.to_string());
    auto probe = ExactPolynomial::parse(g.ring(), "x^2*y + z^3");
    CHECK(g.derive(probe) == again.derive(probe));
}

TEST_CASE("iterated composite operators match the worked expansions") {
    Grammar g = Grammar::schett();
    auto x = ExactPolynomial::variable(g.ring(), "x");
    auto y = ExactPolynomial::variable(g.ring(), "y");

    CHECK(iterate({OperatorKind::XD, g, x}, 2) ==
          ExactPolynomial::parse(g.ring(), "x*y^2*z^2 + x^3*y^2 + x^3*z^2"));
    CHECK(iterate({OperatorKind::DX, g, y}, 2) ==
          ExactPolynomial::parse(g.ring(), "y^3*z^2 + 5*x^2*y*z^2 + x^2*y^3 + x^4*y"));
    CHECK(iterate({OperatorKind::DX, g, x}, 2) ==
          ExactPolynomial::parse(g.ring(), "4*x*y^2*z^2 + 2*x^3*y^2 + 2*x^3*z^2"));
    CHECK(iterate({OperatorKind::D, g, x}, 2) ==
          ExactPolynomial::parse(g.ring(), "x*z^2 + x*y^2"));

    Grammar ge = Grammar::schett_extended();
    auto w = ExactPolynomial::variable(ge.ring(), "w");
    CHECK(iterate({OperatorKind::D, ge, w}, 4) ==
          ExactPolynomial::parse(
              ge.ring(),
              "w*x^4 + 10*w*x^2*y*z + 4*w*x^2*z^2 + 4*w*x^2*y^2 + 3*w*y^2*z^2 + w*y^3*z + w*y*z^3"));

    CHECK(iterate({OperatorKind::D, g, x}, 0) == x);
}

TEST_CASE("the Eulerian grammar reproduces brute-force descent counts") {
    for (int n = 1; n <= 6; ++n) {
        ExactPolynomial got = eulerian_sanity(n);
        auto ring = got.ring();
        ExactPolynomial expect(ring);
        DistributionTable des = descents(n);
        for (const auto& [k, count] : des.counts) {
            Monomial m(2);
            m.exp[0] = static_cast<unsigned>(k + 1);  // w^(k+1)
            m.exp[1] = static_cast<unsigned>(n - k);  // x^(n-k)
            expect.add_term(m, count);
        }
        CHECK(got == expect);
    }
}

TEST_CASE("derivation is linear and satisfies the Leibniz rule") {
    Grammar g = Grammar::schett_extended();
    std::mt19937_64 rng(4242);
    for (int it = 0; it < 2000; ++it) {
        auto a = random_poly(g.ring(), rng), b = random_poly(g.ring(), rng);
        CHECK(g.derive(a + b) == g.derive(a) + g.derive(b));
        CHECK(g.derive(a * b) == g.derive(a) * b + a * g.derive(b));
    }
}

TEST_CASE("iterates of the three-variable system are homogeneous with fixed parities") {
    Grammar g = Grammar::schett();
    auto levels = iterate_levels({OperatorKind::D, g, ExactPolynomial::variable(g.ring(), "x")},
                                 14);
    for (int n = 0; n <= 14; ++n) {
        CHECK(levels[n].is_homogeneous(n + 1));
        for (const auto& [m, c] : levels[n].terms()) {
            if (n % 2 == 0) {
                CHECK(m.exp[0] % 2 == 1);
                CHECK(m.exp[1] % 2 == 0);
                CHECK(m.exp[2] % 2 == 0);
            } else {
                CHECK(m.exp[0] % 2 == 0);
                CHECK(m.exp[1] % 2 == 1);
                CHECK(m.exp[2] % 2 == 1);
            }
        }
    }
}

TEST_CASE("odd iterates recompose from binomial convolutions of lower levels") {
    // D^(2n+1)(w) = sum_k C(2n,2k) D^(2k)(w) D^(2n-2k)(x)
    //             + sum_k C(2n,2k+1) D^(2k+1)(w) D^(2n-2k-1)(x)
    Grammar g = Grammar::schett_extended();
    auto w = ExactPolynomial::variable(g.ring(), "w");
    auto x = ExactPolynomial::variable(g.ring(), "x");
    auto wl = iterate_levels({OperatorKind::D, g, w}, 13);
    auto xl = iterate_levels({OperatorKind::D, g, x}, 13);
    for (int n = 0; n <= 6; ++n) {
        ExactPolynomial sum(g.ring());
        for (int k = 0; 2 * k <= 2 * n; ++k)
            sum += (wl[2 * k] * xl[2 * n - 2 * k]) * binomial(2 * n, 2 * k);
        for (int k = 0; 2 * k + 1 <= 2 * n; ++k)
            sum += (wl[2 * k + 1] * xl[2 * n - 2 * k - 1]) * binomial(2 * n, 2 * k + 1);
        CHECK(wl[2 * n + 1] == sum);
    }
}

TEST_CASE("iteration argument validation") {
    Grammar g = Grammar::schett();
    auto x = ExactPolynomial::variable(g.ring(), "x");
    CHECK_THROWS_AS(iterate({OperatorKind::D, g, x}, -1), std::invalid_argument);
    Grammar ge = Grammar::schett_extended();
    auto w = ExactPolynomial::variable(ge.ring(), "w");
    CHECK_THROWS_AS(iterate({OperatorKind::D, g, w}, 1), std::invalid_argument);
}
