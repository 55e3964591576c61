#include <doctest.h>

#include <algorithm>
#include <random>

#include "delpezzo/blowup.hpp"
#include "delpezzo/verifier.hpp"
#include "properties.hpp"

using namespace delpezzo;

namespace {

BlowupConfig fresh_points(int n, int k) {
    std::vector<PointSpec> pts;
    for (int id = 1; id <= k; ++id) pts.push_back({id, PointLocation::FreshFiber, 0});
    return {n, pts};
}

bool contains(const std::vector<DivisorClass>& family, const DivisorClass& c) {
    return std::find(family.begin(), family.end(), c) != family.end();
}

}  // namespace

TEST_CASE("point locations round-trip through their names") {
    for (auto loc : {PointLocation::FreshFiber, PointLocation::SameFiberAs, PointLocation::InfinitelyNearOnFiber,
                     PointLocation::InfinitelyNearOffFiber}) {
        CHECK(parse_point_location(to_string(loc)) == loc);
    }
    CHECK(to_string(PointLocation::FreshFiber) == "fresh");
    CHECK_THROWS_AS(parse_point_location("on_section"), std::invalid_argument);
}

TEST_CASE("configurations validate references") {
    CHECK_THROWS_AS(BlowupConfig(-1, {}), std::invalid_argument);
    CHECK_THROWS_AS(BlowupConfig(2, {{2, PointLocation::FreshFiber, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(BlowupConfig(2, {{1, PointLocation::SameFiberAs, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(BlowupConfig(2, {{1, PointLocation::FreshFiber, 0}, {2, PointLocation::SameFiberAs, 3}}),
                    std::invalid_argument);
    // depth one only: no point infinitely near an infinitely near point
    CHECK_THROWS_AS(BlowupConfig(2, {{1, PointLocation::FreshFiber, 0},
                                     {2, PointLocation::InfinitelyNearOffFiber, 1},
                                     {3, PointLocation::InfinitelyNearOffFiber, 2}}),
                    std::invalid_argument);
    // at most one point on each exceptional curve
    CHECK_THROWS_AS(BlowupConfig(2, {{1, PointLocation::FreshFiber, 0},
                                     {2, PointLocation::InfinitelyNearOffFiber, 1},
                                     {3, PointLocation::InfinitelyNearOnFiber, 1}}),
                    std::invalid_argument);
    CHECK_NOTHROW(BlowupConfig(2, {{1, PointLocation::FreshFiber, 0}, {2, PointLocation::SameFiberAs, 1}}));
}

TEST_CASE("moving points off the negative section") {
    const std::vector<RawPoint> one{{PointLocation::FreshFiber, 0, true}};
    const auto a = normalize_off_section(2, one);
    CHECK(a.n() == 3);
    CHECK(a.k() == 1);
    CHECK(a.points()[0].location == PointLocation::FreshFiber);

    const std::vector<RawPoint> none{{PointLocation::FreshFiber, 0, false}, {PointLocation::SameFiberAs, 1, false}};
    const auto b = normalize_off_section(5, none);
    CHECK(b == BlowupConfig(5, {{1, PointLocation::FreshFiber, 0}, {2, PointLocation::SameFiberAs, 1}}));

    const std::vector<RawPoint> two{{PointLocation::FreshFiber, 0, true}, {PointLocation::FreshFiber, 0, true}};
    const auto c = normalize_off_section(1, two);
    CHECK(c == fresh_points(3, 2));

    const std::vector<RawPoint> bad{{PointLocation::FreshFiber, 0, true}, {PointLocation::SameFiberAs, 1, false}};
    CHECK_THROWS_AS(normalize_off_section(1, bad), std::invalid_argument);
}

TEST_CASE("strict transforms") {
    const auto cfg = fresh_points(4, 2);
    const auto s = cfg.surface();
    const auto fiber = strict_transform(cfg, TrackedCurve::fiber_through(cfg, 1));
    CHECK(fiber == DivisorClass::f(s) - DivisorClass::e(s, 1));

    const auto section = strict_transform(cfg, TrackedCurve::negative_section(cfg));
    CHECK(section == DivisorClass::h(s) - Rational(4) * DivisorClass::f(s));

    const BlowupConfig near(3, {{1, PointLocation::FreshFiber, 0}, {2, PointLocation::InfinitelyNearOnFiber, 1}});
    const auto ns = near.surface();
    const auto nf = strict_transform(near, TrackedCurve::fiber_through(near, 1));
    CHECK(nf == DivisorClass::f(ns) - DivisorClass::e(ns, 1) - DivisorClass::e(ns, 2));
    CHECK(self_intersection(nf) == Rational(-2));

    const BlowupConfig off(3, {{1, PointLocation::FreshFiber, 0}, {2, PointLocation::InfinitelyNearOffFiber, 1}});
    CHECK(strict_transform(off, TrackedCurve::fiber_through(off, 1)) ==
          DivisorClass::f(off.surface()) - DivisorClass::e(off.surface(), 1));

    CHECK_THROWS_AS(strict_transform(cfg, TrackedCurve{1, 0, {1}}), std::invalid_argument);
    CHECK(strict_transform(BlowupConfig::plane(), TrackedCurve::plane_curve(2)) ==
          Rational(2) * DivisorClass::line(SurfaceModel::projective_plane()));
}

TEST_CASE("strict transforms push forward to the base class") {
    std::mt19937 rng(17);
    for (int i = 0; i < 200; ++i) {
        const int n = static_cast<int>(rng() % 7);
        const auto cfg = fresh_points(n, static_cast<int>(rng() % 5));
        TrackedCurve c{props::random_rational(rng, 6, 3), props::random_rational(rng, 6, 3), {}};
        for (int j = 0; j < cfg.k(); ++j) c.mults.push_back(props::random_rational(rng, 3, 2));
        const auto base = SurfaceModel::hirzebruch(n);
        CHECK(pushforward(strict_transform(cfg, c), base) ==
              c.alpha * DivisorClass::h(base) + c.beta * DivisorClass::f(base));
    }
}

TEST_CASE("test curve families") {
    const auto k0 = test_curve_family(fresh_points(5, 0));
    const auto s0 = SurfaceModel::hirzebruch(5);
    CHECK(k0 == std::vector<DivisorClass>{DivisorClass::negative_section(s0), DivisorClass::f(s0)});

    const auto s1 = SurfaceModel::hirzebruch(5, 1);
    const auto k1 = test_curve_family(fresh_points(5, 1));
    CHECK(k1 == std::vector<DivisorClass>{DivisorClass::negative_section(s1), DivisorClass::f(s1),
                                          DivisorClass::f(s1) - DivisorClass::e(s1, 1), DivisorClass::e(s1, 1)});

    const BlowupConfig off(2, {{1, PointLocation::FreshFiber, 0}, {2, PointLocation::InfinitelyNearOffFiber, 1}});
    const auto s2 = off.surface();
    const auto fam = test_curve_family(off);
    const auto e12 = DivisorClass::e(s2, 1) - DivisorClass::e(s2, 2);
    CHECK(contains(fam, e12));
    CHECK(self_intersection(e12) == Rational(-2));
}

TEST_CASE("anti-nefness") {
    const auto cfg = fresh_points(6, 0);
    const LogPair good(cfg, {{TrackedCurve::negative_section(cfg), Rational(2, 3)}});
    const auto d = good.log_canonical_class();
    CHECK(pair(d, DivisorClass::negative_section(cfg.surface())) == Rational(0));
    CHECK(pair(d, DivisorClass::f(cfg.surface())) == Rational(-4, 3));
    CHECK(is_anti_nef(good).status == Certainty::CertifiedYes);

    const auto f3 = fresh_points(3, 0);
    const LogPair bad(f3, {{TrackedCurve::negative_section(f3), Rational(1)},
                           {TrackedCurve{1, 3, {}}, Rational(1)},
                           {TrackedCurve{1, 3, {}}, Rational(1)}});
    const auto v = is_anti_nef(bad);
    REQUIRE(v.status == Certainty::No);
    REQUIRE(v.witness.has_value());
    CHECK(pair(bad.log_canonical_class(), *v.witness) > Rational(0));

    const auto two = fresh_points(6, 2);
    const LogPair unknown(two, {{TrackedCurve::negative_section(two), Rational(2, 3)}});
    CHECK(is_anti_nef(unknown).status == Certainty::Unknown);

    CHECK(is_anti_nef(LogPair(BlowupConfig::plane(), {})).status == Certainty::CertifiedYes);
}

TEST_CASE("every No verdict carries a checkable witness") {
    std::mt19937 rng(23);
    int no_count = 0;
    for (int i = 0; i < 200; ++i) {
        const int n = static_cast<int>(rng() % 7);
        const auto cfg = fresh_points(n, static_cast<int>(rng() % 3));
        std::vector<BoundaryTerm> b{{TrackedCurve::negative_section(cfg), props::random_unit(rng)}};
        for (int id = 1; id <= cfg.k(); ++id) {
            b.push_back({TrackedCurve::fiber_through(cfg, id), props::random_unit(rng)});
            b.push_back({ExceptionalComponent{id}, props::random_unit(rng)});
        }
        b.push_back({TrackedCurve{0, 1, std::vector<Rational>(cfg.k())}, props::random_unit(rng)});
        const LogPair p(cfg, b);
        const auto v = is_anti_nef(p);
        if (v.status == Certainty::No) {
            ++no_count;
            REQUIRE(v.witness.has_value());
            CHECK(pair(p.log_canonical_class(), *v.witness) > Rational(0));
        }
    }
    CHECK(no_count > 0);
}

TEST_CASE("volumes") {
    for (int n = 2; n <= 12; ++n) {
        const auto cfg = fresh_points(n, 0);
        const LogPair p(cfg, {{TrackedCurve::negative_section(cfg), Rational(1) - Rational(2, n)}});
        CHECK(volume(p) == Rational(n + 4) + Rational(4, n));
        for (int k = 1; k <= 4; ++k) {
            const auto ck = fresh_points(n, k);
            const LogPair pk(ck, {{TrackedCurve::negative_section(ck), Rational(1) - Rational(2, n)}});
            CHECK(volume(pk) == Rational(n + 4 - k) + Rational(4, n));
        }
    }
    CHECK(volume(LogPair(fresh_points(6, 0), {{TrackedCurve::negative_section(fresh_points(6, 0)),
                                                Rational(2, 3)}})) == Rational(32, 3));
    CHECK(volume(LogPair(BlowupConfig::plane(), {})) == Rational(9));
}

TEST_CASE("nef and big") {
    const auto cfg = fresh_points(6, 0);
    const LogPair good(cfg, {{TrackedCurve::negative_section(cfg), Rational(2, 3)}});
    CHECK(is_nef_and_big(good).status == Certainty::CertifiedYes);

    // k = (n+2)^2/n points on distinct fibers with (1 - 2/n) S_n'' has volume zero.
    for (auto [n, k] : {std::pair{2, 8}, std::pair{4, 9}}) {
        const LogPair edge = thm72_pair(n, k);
        CHECK(volume(edge) == Rational(0));
        CHECK(is_nef_and_big(edge).status == Certainty::No);
    }

    const auto two = fresh_points(6, 2);
    const LogPair unknown(two, {{TrackedCurve::negative_section(two), Rational(2, 3)}});
    CHECK(is_nef_and_big(unknown).status == Certainty::Unknown);
}

TEST_CASE("crepant pulls drop the volume by the squared exceptional coefficients") {
    const auto out = props::crepant_volume_drop(200, 303);
    CHECK_MESSAGE(out.ok, out.detail);
}

TEST_CASE("log pairs validate coefficients and exceptional references") {
    const auto cfg = fresh_points(2, 1);
    CHECK_THROWS_AS(LogPair(cfg, {{TrackedCurve::negative_section(cfg), Rational(3, 2)}}), std::invalid_argument);
    CHECK_THROWS_AS(LogPair(cfg, {{TrackedCurve::negative_section(cfg), Rational(-1, 2)}}), std::invalid_argument);
    CHECK_THROWS_AS(LogPair(cfg, {{ExceptionalComponent{2}, Rational(1, 2)}}), std::invalid_argument);
    const LogPair p(cfg, {{TrackedCurve::negative_section(cfg), Rational(1, 2)}, {ExceptionalComponent{1}, Rational(1, 3)}});
    CHECK(p.component_label(0) == "C1");
    CHECK(p.component_label(1) == "E1");
    CHECK(p.boundary_class() == Rational(1, 2) * cfg.negative_section() + Rational(1, 3) * cfg.exceptional_curve(1));
}

TEST_CASE("multiplicities along a fiber never exceed its intersection with the curve") {
    // For integer curves alpha h + beta f and a fiber F through a subset of
    // points, sum of multiplicities <= C.F = alpha is the bound the
    // certifiers rely on; check the lattice form of C.F' >= 0 when it holds.
    const BlowupConfig cfg(4, {{1, PointLocation::FreshFiber, 0}, {2, PointLocation::SameFiberAs, 1}});
    const auto fiber = strict_transform(cfg, TrackedCurve::fiber_through(cfg, 1));
    for (int alpha = 0; alpha <= 6; ++alpha) {
        for (int m1 = 0; m1 <= alpha; ++m1) {
            for (int m2 = 0; m1 + m2 <= alpha; ++m2) {
                const auto c = strict_transform(cfg, TrackedCurve{alpha, 1, {m1, m2}});
                CHECK(pair(c, fiber) == Rational(alpha - m1 - m2));
            }
        }
    }
}
