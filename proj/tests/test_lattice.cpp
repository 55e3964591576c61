#include <doctest.h>

#include <random>

#include "delpezzo/lattice.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace delpezzo;

TEST_CASE("intersection pairing on F_3") {
    const auto s = SurfaceModel::hirzebruch(3);
    const auto f = DivisorClass::f(s);
    const auto h = DivisorClass::h(s);
    CHECK(pair(f, f) == Rational(0));
    CHECK(pair(h - Rational(3) * f, h - Rational(3) * f) == Rational(-3));
    CHECK(pair(h, f) == Rational(1));
    CHECK(pair(h, h) == Rational(3));
    CHECK(self_intersection(DivisorClass::zero(s)) == Rational(0));
    CHECK(self_intersection(DivisorClass::negative_section(s)) == Rational(-3));
}

TEST_CASE("classes on different surfaces do not mix") {
    const auto a = DivisorClass::f(SurfaceModel::hirzebruch(3));
    const auto b = DivisorClass::f(SurfaceModel::hirzebruch(4));
    CHECK_THROWS_AS(pair(a, b), SurfaceMismatch);
    CHECK_THROWS_AS(a + b, SurfaceMismatch);
    CHECK_THROWS_AS(DivisorClass::h(SurfaceModel::projective_plane()), SurfaceMismatch);
    CHECK_THROWS_AS(DivisorClass(SurfaceModel::hirzebruch(1, 2), {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(DivisorClass::e(SurfaceModel::hirzebruch(1, 2), 3), std::out_of_range);
}

TEST_CASE("canonical classes") {
    const auto p2 = SurfaceModel::projective_plane();
    const auto kp = canonical_class(p2);
    CHECK(kp == Rational(-3) * DivisorClass::line(p2));
    CHECK(self_intersection(kp) == Rational(9));

    const auto f6 = SurfaceModel::hirzebruch(6);
    const auto k6 = canonical_class(f6);
    CHECK(k6 == DivisorClass(f6, {-2, 4}));
    CHECK(k6.str() == "-2h + 4f");
    CHECK(pair(k6, DivisorClass::f(f6)) == Rational(-2));

    for (int n = 2; n <= 10; ++n) {
        const auto s = SurfaceModel::hirzebruch(n);
        const auto k = canonical_class(s);
        const auto sec = DivisorClass::negative_section(s);
        CHECK(pair(k, sec) == Rational(n - 2));
        CHECK(pair(k + sec, sec) == Rational(-2));
    }
    for (int n = 0; n <= 8; ++n) {
        for (int k = 0; k <= 9; ++k) {
            const auto s = SurfaceModel::hirzebruch(n, k);
            CHECK(self_intersection(canonical_class(s)) == Rational(8 - k));
            DivisorClass expected = pullback(canonical_class(SurfaceModel::hirzebruch(n)), s);
            for (int j = 1; j <= k; ++j) expected += DivisorClass::e(s, j);
            CHECK(canonical_class(s) == expected);
        }
    }
}

TEST_CASE("pullback keeps coordinates and the pairing") {
    const auto base = SurfaceModel::hirzebruch(4);
    const auto up = SurfaceModel::hirzebruch(4, 1);
    const auto f = pullback(DivisorClass::f(base), up);
    CHECK(f == DivisorClass(up, {0, 1, 0}));
    CHECK(self_intersection(f) == Rational(0));
    CHECK(pair(pullback(DivisorClass::h(base), up), DivisorClass::e(up, 1)) == Rational(0));

    const auto kb = canonical_class(base);
    CHECK(pullback(kb, up) != canonical_class(up));
    CHECK(canonical_class(up) - pullback(kb, up) == DivisorClass::e(up, 1));

    CHECK_THROWS_AS(pullback(DivisorClass::f(up), base), SurfaceMismatch);
    CHECK_THROWS_AS(pullback(DivisorClass::f(base), SurfaceModel::hirzebruch(5, 1)), SurfaceMismatch);

    std::mt19937 rng(3);
    for (int i = 0; i < 200; ++i) {
        const auto s0 = SurfaceModel::hirzebruch(static_cast<int>(rng() % 8), static_cast<int>(rng() % 4));
        const auto s1 = SurfaceModel::hirzebruch(s0.n(), s0.k() + static_cast<int>(rng() % 4));
        const auto a = props::random_class(rng, s0);
        const auto b = props::random_class(rng, s0);
        CHECK(pair(pullback(a, s1), pullback(b, s1)) == pair(a, b));
        CHECK(pushforward(pullback(a, s1), s0) == a);
    }
}

TEST_CASE("pushforward drops exceptional coordinates") {
    const auto base = SurfaceModel::hirzebruch(2);
    const auto up = SurfaceModel::hirzebruch(2, 2);
    CHECK(pushforward(DivisorClass::e(up, 1), base) == DivisorClass::zero(base));
    CHECK(pushforward(DivisorClass(up, {1, 2, 3, 4}), base) == DivisorClass(base, {1, 2}));
    CHECK_THROWS_AS(pushforward(DivisorClass::f(base), up), SurfaceMismatch);
}

TEST_CASE("crepant pullback adds explicit exceptional terms") {
    const auto base = SurfaceModel::hirzebruch(3, 1);
    const auto up = SurfaceModel::hirzebruch(3, 3);
    const std::vector<Rational> e{Rational(1, 2), Rational(2, 3)};
    const auto d = crepant_pullback(DivisorClass(base, {1, 1, 1}), up, e);
    CHECK(d == DivisorClass(up, {1, 1, 1, Rational(1, 2), Rational(2, 3)}));
    CHECK(self_intersection(d) == self_intersection(DivisorClass(base, {1, 1, 1})) - Rational(1, 4) - Rational(4, 9));
    const std::vector<Rational> wrong{1};
    CHECK_THROWS_AS(crepant_pullback(DivisorClass(base, {1, 1, 1}), up, wrong), std::invalid_argument);
}

TEST_CASE("pairing is symmetric, bilinear and matches the hand expansion") {
    std::mt19937 rng(5);
    for (int i = 0; i < 300; ++i) {
        const auto s = SurfaceModel::hirzebruch(static_cast<int>(rng() % 10), static_cast<int>(rng() % 6));
        const auto a = props::random_class(rng, s);
        const auto b = props::random_class(rng, s);
        const auto c = props::random_class(rng, s);
        const Rational t = props::random_rational(rng, 5, 4);
        CHECK(pair(a, b) == pair(b, a));
        CHECK(pair(a + t * b, c) == pair(a, c) + t * pair(b, c));
        CHECK(pair(a, b) == oracle::fn_pair(s.n(), a.coeffs(), b.coeffs()));
    }
}

TEST_CASE("signature (1, rho - 1) under random unimodular changes of basis") {
    const auto out = props::lattice_signature(100, 101);
    CHECK_MESSAGE(out.ok, out.detail);
    CHECK(out.samples == 100);
    CHECK(inertia({{1, 0}, {0, -1}}) == Inertia{1, 1, 0});
    CHECK(inertia({{0, 1}, {1, 0}}) == Inertia{1, 1, 0});
    CHECK(inertia({{0, 0}, {0, 0}}) == Inertia{0, 0, 2});
    CHECK_THROWS_AS(inertia({{1, 2}, {3, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(inertia({{1, 2}}), std::invalid_argument);
}

TEST_CASE("projection formula on random class pairs") {
    const auto out = props::projection_formula(500, 202);
    CHECK_MESSAGE(out.ok, out.detail);
}

TEST_CASE("basis labels and descriptions") {
    const auto s = SurfaceModel::hirzebruch(6, 2);
    CHECK(s.basis_labels() == std::vector<std::string>{"h", "f", "e1", "e2"});
    CHECK(s.rank() == 4);
    CHECK(SurfaceModel::projective_plane().rank() == 1);
    CHECK(s.refines(SurfaceModel::hirzebruch(6)));
    CHECK_FALSE(SurfaceModel::hirzebruch(6).refines(s));
    CHECK(DivisorClass(s, {0, Rational(1, 2), -1, 0}).str() == "1/2f - e1");
    CHECK(DivisorClass::zero(s).str() == "0");
}
