#include <doctest.h>

#include "dmcyl/algebra.hpp"
#include "oracles.hpp"

using namespace dmcyl;

namespace {

AlgebraPtr poly_t() { return make_algebra({{"t", 2}}); }
AlgebraPtr poly_tvw() { return make_algebra({{"tp", 4}, {"v", 4}, {"w", 6}}); }
AlgebraPtr exterior_mixed() { return make_algebra({{"v3", 3}, {"v5", 5}, {"t", 2}}); }

}  // namespace

TEST_CASE("algebra construction validates generators") {
    CHECK_THROWS_AS(make_algebra({{"x", 0}}), error);
    CHECK_THROWS_AS(make_algebra({{"x", 2}, {"x", 4}}), error);
}

TEST_CASE("monomial basis of a single even generator") {
    const auto alg = poly_t();
    const auto b6 = monomial_basis(*alg, 6);
    REQUIRE(b6.size() == 1);
    CHECK(b6[0].exp == std::vector<int>{3});
    CHECK(monomial_basis(*alg, 3).empty());
    const auto b0 = monomial_basis(*alg, 0);
    REQUIRE(b0.size() == 1);
    CHECK(b0[0].exp == std::vector<int>{0});
}

TEST_CASE("monomial basis of degrees 4,4,6 at degree 8") {
    const auto alg = poly_tvw();
    const auto b = monomial_basis(*alg, 8);
    REQUIRE(b.size() == 3);
    CHECK(b[0].exp == std::vector<int>{2, 0, 0});
    CHECK(b[1].exp == std::vector<int>{1, 1, 0});
    CHECK(b[2].exp == std::vector<int>{0, 2, 0});
}

TEST_CASE("monomial basis with odd generators") {
    const auto alg = exterior_mixed();
    const auto b = monomial_basis(*alg, 5);
    REQUIRE(b.size() == 2);
    // order: t*v3 = (1,0,1) before v5 = (0,1,0)
    CHECK(b[0].exp == std::vector<int>{1, 0, 1});
    CHECK(b[1].exp == std::vector<int>{0, 1, 0});
    // odd exponents stay <= 1
    for (int d = 0; d <= 12; ++d)
        for (const auto& m : monomial_basis(*alg, d)) {
            CHECK(m.exp[0] <= 1);
            CHECK(m.exp[1] <= 1);
        }
}

TEST_CASE("slice dimensions match the series oracle") {
    const auto algs = {make_algebra({{"a", 2}, {"b", 2}}),
                       make_algebra({{"x", 4}, {"y", 6}}),
                       make_algebra({{"v3", 3}, {"v5", 5}, {"t", 2}}),
                       make_algebra({{"u", 1}, {"s", 2}, {"w", 7}})};
    for (const auto& alg : algs) {
        std::vector<int> degrees;
        for (const auto& g : alg->gens())
            degrees.push_back(g.degree);
        const auto dims = oracle::free_ring_dims(degrees, 14);
        for (int d = 0; d <= 14; ++d)
            CHECK(static_cast<long>(monomial_basis(*alg, d).size()) == dims[d]);
    }
}

TEST_CASE("odd generators square to zero and anticommute") {
    const auto alg = exterior_mixed();
    const auto v3 = Polynomial::generator(alg, 0);
    const auto v5 = Polynomial::generator(alg, 1);
    CHECK((v3 * v3).is_zero());
    CHECK(v3 * v5 == Polynomial::zero(alg) - v5 * v3);
    CHECK_FALSE((v3 * v5).is_zero());
}

TEST_CASE("square of a + b") {
    const auto alg = make_algebra({{"a", 2}, {"b", 2}});
    const auto a = Polynomial::generator(alg, 0);
    const auto b = Polynomial::generator(alg, 1);
    const auto sq = (a + b) * (a + b);
    Polynomial expect = a * a + Rational(2) * (a * b) + b * b;
    CHECK(sq == expect);
    CHECK(sq.homogeneous_degree() == 4);
}

TEST_CASE("graded commutativity on sampled homogeneous elements") {
    const auto alg = make_algebra({{"e", 2}, {"u", 3}, {"v", 5}, {"f", 4}});
    std::uint64_t state = 12345;
    auto next = [&state]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<long>((state >> 33) % 7) - 3;
    };
    for (int d1 = 2; d1 <= 8; ++d1) {
        for (int d2 = 2; d2 <= 8; ++d2) {
            Polynomial p(alg), q(alg);
            for (const auto& m : monomial_basis(*alg, d1))
                p += Polynomial::monomial(alg, m.exp, Rational(next()));
            for (const auto& m : monomial_basis(*alg, d2))
                q += Polynomial::monomial(alg, m.exp, Rational(next()));
            const Polynomial pq = p * q;
            Polynomial qp = q * p;
            if ((d1 * d2) % 2 != 0)
                qp *= Rational(-1);
            CHECK(pq == qp);
        }
    }
}

TEST_CASE("mismatched algebras are rejected") {
    const auto a = poly_t();
    const auto b = poly_tvw();
    CHECK_THROWS_AS(Polynomial::generator(a, 0) * Polynomial::generator(b, 0), error);
}

TEST_CASE("homogeneous degree queries") {
    const auto alg = poly_tvw();
    const auto tp = Polynomial::generator(alg, 0);
    const auto w = Polynomial::generator(alg, 2);
    CHECK(tp.homogeneous_degree() == 4);
    CHECK_FALSE((tp + w).homogeneous_degree().has_value());
    CHECK(Polynomial::zero(alg).homogeneous_of(4));
    CHECK(Polynomial::zero(alg).homogeneous_of(7));
    CHECK((tp * w).homogeneous_of(10));
}
