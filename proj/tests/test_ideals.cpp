#include <doctest.h>

#include "riesz/core.hpp"
#include "riesz/ideals.hpp"
#include "riesz/spaces.hpp"

using namespace riesz;

namespace {

Vec V(std::initializer_list<long long> xs) {
    Vec out;
    for (long long x : xs) out.push_back(Rational(x));
    return out;
}

} // namespace

TEST_CASE("perp_ideal is the support annihilator") {
    SupportIdeal d = perp_ideal(V({1, 0, 2}));
    CHECK(d.n == 3);
    CHECK(d.zero_set == std::vector<std::size_t>{0, 2});
    CHECK(d.contains(V({0, 7, 0})));
    CHECK_FALSE(d.contains(V({1, 0, 0})));

    CHECK(perp_ideal(V({0, 0})).zero_set.empty()); // everything _|_ 0
    CHECK(perp_ideal(V({1, 1, 1})).zero_set == std::vector<std::size_t>{0, 1, 2});

    // membership agrees with orthogonality on samples
    FinDimSpace r3(3);
    Vec a = V({1, 0, 2});
    Rng rng(13);
    for (int i = 0; i < 1000; ++i) {
        Vec x = r3.random_element(rng);
        CHECK(d.contains(x) == is_orthogonal(r3, x, a));
    }
}

TEST_CASE("is_riesz_ideal passes on support ideals") {
    for (const auto& d : enumerate_ideals(3)) {
        LawReport r = is_riesz_ideal(d, 300, 21);
        INFO(d.str(), ": ", r.counterexample);
        CHECK(r.passed);
    }
}

TEST_CASE("the diagonal of R^2 is not solid") {
    // {(t,t)} is a linear subspace but fails the solidity condition
    auto member = [](const Vec& x) { return x[0] == x[1]; };
    auto sample = [](Rng& rng) {
        Rational t = random_rational(rng);
        return Vec{t, t};
    };
    LawReport r = check_solid(2, member, sample, 500, 2);
    CHECK_FALSE(r.passed);
    CHECK(!r.counterexample.empty());

    // the classical witness: |(1,0)| <= |(1,1)| but (1,0) is off-diagonal
    CHECK(member(V({1, 1})));
    CHECK_FALSE(member(V({1, 0})));
}

TEST_CASE("quotient reads off the zero-set coordinates") {
    Vec u = V({1, 2, 3});
    SupportIdeal d{3, {1}};
    Quotient q = quotient(3, u, d);
    CHECK_FALSE(q.zero_space);
    CHECK(q.dimension == 1);
    CHECK(q.kept == std::vector<std::size_t>{1});
    CHECK(q.unit == V({2}));
    CHECK(q.q.apply(V({5, 7, 9})) == V({7}));

    // kernel is exactly D
    FinDimSpace r3(3);
    FinDimSpace r1(1);
    Rng rng(8);
    for (int i = 0; i < 1000; ++i) {
        Vec x = r3.random_element(rng);
        CHECK((q.q.apply(x) == r1.zero()) == d.contains(x));
    }

    // identity when S is everything: D_S = {0}
    Quotient full = quotient(3, u, SupportIdeal{3, {0, 1, 2}});
    CHECK(full.q == FinHom::identity(3));

    // D = E (empty S) yields the flagged zero space
    Quotient zero = quotient(3, u, SupportIdeal{3, {}});
    CHECK(zero.zero_space);
    CHECK(zero.dimension == 0);
}

TEST_CASE("quotient map is a Riesz homomorphism") {
    FinDimSpace r4(4);
    FinDimSpace r2(2);
    Quotient q = quotient(4, r4.unit(), SupportIdeal{4, {1, 3}}); // R^4 / D_{1,3} = R^2
    Rng rng(14);
    for (int i = 0; i < 1000; ++i) {
        Vec x = r4.random_element(rng), y = r4.random_element(rng);
        CHECK(q.q.apply(r4.join(x, y)) == r2.join(q.q.apply(x), q.q.apply(y)));
        CHECK(q.q.apply(r4.meet(x, y)) == r2.meet(q.q.apply(x), q.q.apply(y)));
        CHECK(q.q.apply(r4.add(x, y)) == r2.add(q.q.apply(x), q.q.apply(y)));
    }
}

TEST_CASE("FinHom preserves lattice structure and the continuity bound") {
    FinDimSpace r3(3);
    FinDimSpace r2(2);
    FinHom h(3, {{2, Rational(1, 2)}, {0, Rational(3)}});
    Vec u = V({1, 2, 4});
    Vec u_prime = h.apply(u); // = (2, 3), making h unit-preserving by fiat
    CHECK(h.preserves_units(u, u_prime));
    CHECK_FALSE(h.preserves_units(u, V({1, 1})));

    Rng rng(19);
    for (int i = 0; i < 1000; ++i) {
        Vec x = r3.random_element(rng), y = r3.random_element(rng);
        Rational lam = random_rational(rng);
        CHECK(h.apply(r3.join(x, y)) == r2.join(h.apply(x), h.apply(y)));
        CHECK(h.apply(r3.meet(x, y)) == r2.meet(h.apply(x), h.apply(y)));
        CHECK(h.apply(r3.add(x, y)) == r2.add(h.apply(x), h.apply(y)));
        CHECK(h.apply(r3.scale(lam, x)) == r2.scale(lam, h.apply(x)));
        // |h(x)|_{u'} <= |h(u)|_{u'} |x|_u
        CHECK(r2.unit_norm(h.apply(x), u_prime) <=
              r2.unit_norm(h.apply(u), u_prime) * r3.unit_norm(x, u));
    }

    CHECK_THROWS_AS(FinHom(3, {{0, Rational(0)}}), std::invalid_argument);
    CHECK_THROWS_AS(FinHom(3, {{3, Rational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(h.apply(V({1, 2})), std::invalid_argument);
}

TEST_CASE("FinHom composition") {
    FinHom f(3, {{2, Rational(2)}, {1, Rational(1)}});        // R^3 -> R^2
    FinHom g(2, {{0, Rational(1, 2)}});                       // R^2 -> R^1
    FinHom gf = g.compose(f);                                 // R^3 -> R^1
    CHECK(gf.apply(V({1, 2, 3})) == Vec{Rational(3)});
    CHECK_THROWS_AS(f.compose(g), std::invalid_argument);
}

TEST_CASE("ideal enumeration and the n = 1 characterization") {
    CHECK(enumerate_ideals(1).size() == 2);
    CHECK(enumerate_ideals(2).size() == 4);
    CHECK(enumerate_ideals(3).size() == 8);
    CHECK_THROWS_AS(enumerate_ideals(13), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_ideals(0), std::invalid_argument);

    // exactly two ideals iff n = 1
    for (std::size_t n = 1; n <= 4; ++n)
        CHECK((enumerate_ideals(n).size() == 2) == (n == 1));
}

TEST_CASE("maximal ideals have one-dimensional quotients") {
    auto ms = maximal_ideals(3);
    CHECK(ms.size() == 3);
    for (const auto& m : ms) {
        CHECK(m.zero_set.size() == 1);
        CHECK(m.is_proper());
        CHECK(quotient(3, V({1, 1, 1}), m).dimension == 1);
    }
    CHECK(ms[0].zero_set == std::vector<std::size_t>{0});
    CHECK(ms[2].zero_set == std::vector<std::size_t>{2});
    auto m1 = maximal_ideals(1);
    CHECK(m1.size() == 1);
    CHECK(m1[0].zero_set == std::vector<std::size_t>{0});
}

TEST_CASE("separating_hom picks the first supported coordinate") {
    SpectrumPoint phi = separating_hom(V({0, 3, 0}), V({1, 2, 1}));
    CHECK(phi.index == 1);
    CHECK(phi.coeff == Rational(1, 2));
    CHECK(phi.eval(V({0, 3, 0})) == Rational(3, 2));
    CHECK(phi.eval(V({1, 2, 1})) == Rational(1));

    Vec u = V({1, 1, 1});
    SpectrumPoint same = separating_hom(u, u);
    CHECK(same.index == 0);
    CHECK(same.eval(u) == Rational(1));

    SpectrumPoint tail = separating_hom(V({0, 0, -5}), u);
    CHECK(tail.index == 2);
    CHECK(tail.eval(V({0, 0, -5})) == Rational(-5));

    CHECK_THROWS_AS(separating_hom(V({0, 0, 0}), u), precondition_error);
    CHECK_THROWS_AS(separating_hom(V({1, 0, 0}), V({1, 0, 1})), precondition_error);
}

TEST_CASE("the lex-plane axis is a proper nonzero ideal sampled solid") {
    // {(0, t)}: solid for the lex order on samples, while the lex plane
    // stays totally ordered and non-Archimedean.
    LexPlane lex;
    auto member = [](const LexElement& x) { return x.first.is_zero(); };
    Rng rng(4);
    for (int i = 0; i < 1000; ++i) {
        LexElement a{Rational(0), random_rational(rng)};
        // |x| <= |a| in the lex order forces x = (0, t) with |t| <= |second(|a|)|
        LexElement abs_a = abs_elem(lex, a);
        std::uniform_int_distribution<long long> num(-100, 100);
        LexElement x{Rational(0), Rational(num(rng), 100) * abs_a.second};
        CHECK(leq(lex, abs_elem(lex, x), abs_a));
        CHECK(member(x));
    }
    CHECK(lex.archimedean() == false);
}
