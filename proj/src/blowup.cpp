#include "delpezzo/blowup.hpp"

#include <algorithm>
#include <stdexcept>

namespace delpezzo {

std::string to_string(PointLocation loc) {
    switch (loc) {
        case PointLocation::FreshFiber: return "fresh";
        case PointLocation::SameFiberAs: return "same_fiber";
        case PointLocation::InfinitelyNearOnFiber: return "inf_near_on_fiber";
        case PointLocation::InfinitelyNearOffFiber: return "inf_near_off_fiber";
    }
    return "?";
}

PointLocation parse_point_location(std::string_view text) {
    if (text == "fresh") return PointLocation::FreshFiber;
    if (text == "same_fiber") return PointLocation::SameFiberAs;
    if (text == "inf_near_on_fiber") return PointLocation::InfinitelyNearOnFiber;
    if (text == "inf_near_off_fiber") return PointLocation::InfinitelyNearOffFiber;
    throw std::invalid_argument("unknown point location '" + std::string(text) + "'");
}

BlowupConfig BlowupConfig::plane() {
    BlowupConfig cfg;
    cfg.plane_ = true;
    return cfg;
}

BlowupConfig::BlowupConfig(int n, std::vector<PointSpec> points) : n_(n), points_(std::move(points)) {
    if (n < 0) throw std::invalid_argument("Hirzebruch index must be non-negative");
    std::vector<int> children(points_.size() + 1, 0);
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const PointSpec& p = points_[i];
        const int id = static_cast<int>(i) + 1;
        if (p.id != id) {
            throw std::invalid_argument("point ids must be 1..k in order; found " +
                                        std::to_string(p.id) + " at position " + std::to_string(id));
        }
        if (p.location == PointLocation::FreshFiber) continue;
        if (p.ref < 1 || p.ref >= id) {
            throw std::invalid_argument("point " + std::to_string(id) +
                                        " must reference an earlier point");
        }
        if (p.infinitely_near()) {
            if (points_[p.ref - 1].infinitely_near()) {
                throw std::invalid_argument("point " + std::to_string(id) +
                                            ": infinitely near points deeper than one level are "
                                            "not supported");
            }
            if (++children[p.ref] > 1) {
                throw std::invalid_argument("point " + std::to_string(p.ref) +
                                            " carries more than one infinitely near point");
            }
        }
    }
}

const PointSpec& BlowupConfig::point(int id) const {
    if (id < 1 || id > k()) throw std::out_of_range("no point " + std::to_string(id));
    return points_[id - 1];
}

SurfaceModel BlowupConfig::surface() const {
    return plane_ ? SurfaceModel::projective_plane() : SurfaceModel::hirzebruch(n_, k());
}

int BlowupConfig::fiber_root(int id) const {
    const PointSpec* p = &point(id);
    while (p->location != PointLocation::FreshFiber) p = &point(p->ref);
    return p->id;
}

std::optional<int> BlowupConfig::infinitely_near_child(int id) const {
    for (const auto& p : points_) {
        if (p.infinitely_near() && p.ref == id) return p.id;
    }
    return std::nullopt;
}

bool BlowupConfig::fiber_passes_through(int id, int other) const {
    if (fiber_root(id) != fiber_root(other)) return false;
    return point(other).location != PointLocation::InfinitelyNearOffFiber;
}

DivisorClass BlowupConfig::exceptional_curve(int id) const {
    const SurfaceModel s = surface();
    DivisorClass c = DivisorClass::e(s, id);
    if (auto child = infinitely_near_child(id)) c -= DivisorClass::e(s, *child);
    return c;
}

DivisorClass BlowupConfig::fiber_through(int id) const {
    return strict_transform(*this, TrackedCurve::fiber_through(*this, id));
}

DivisorClass BlowupConfig::negative_section() const {
    if (plane_) throw SurfaceMismatch("P2 has no negative section");
    return DivisorClass::negative_section(surface());
}

BlowupConfig normalize_off_section(int n, std::span<const RawPoint> raw_points) {
    int shift = 0;
    std::vector<PointSpec> points;
    points.reserve(raw_points.size());
    for (std::size_t i = 0; i < raw_points.size(); ++i) {
        const RawPoint& raw = raw_points[i];
        const int id = static_cast<int>(i) + 1;
        if (raw.location != PointLocation::FreshFiber) {
            if (raw.ref < 1 || raw.ref >= id) {
                throw std::invalid_argument("point " + std::to_string(id) +
                                            " must reference an earlier point");
            }
            if (raw_points[raw.ref - 1].on_section) {
                throw std::invalid_argument("point " + std::to_string(id) +
                                            " references a point on the negative section");
            }
        }
        if (raw.on_section) {
            if (raw.location != PointLocation::FreshFiber) {
                throw std::invalid_argument("point " + std::to_string(id) +
                                            " on the negative section must lie on its own fiber");
            }
            ++shift;
        }
        points.push_back({id, raw.location, raw.location == PointLocation::FreshFiber ? 0 : raw.ref});
    }
    return {n + shift, std::move(points)};
}

TrackedCurve TrackedCurve::negative_section(const BlowupConfig& cfg) {
    return {Rational(1), Rational(-cfg.n()), std::vector<Rational>(cfg.k())};
}

TrackedCurve TrackedCurve::fiber_through(const BlowupConfig& cfg, int id) {
    TrackedCurve c{Rational(0), Rational(1), std::vector<Rational>(cfg.k())};
    for (int other = 1; other <= cfg.k(); ++other) {
        if (cfg.fiber_passes_through(id, other)) c.mults[other - 1] = 1;
    }
    return c;
}

TrackedCurve TrackedCurve::plane_curve(int degree) { return {Rational(degree), Rational(0), {}}; }

DivisorClass strict_transform(const BlowupConfig& cfg, const TrackedCurve& c) {
    if (static_cast<int>(c.mults.size()) != cfg.k()) {
        throw std::invalid_argument("curve has " + std::to_string(c.mults.size()) +
                                    " multiplicities but the configuration has " +
                                    std::to_string(cfg.k()) + " points");
    }
    const SurfaceModel s = cfg.surface();
    if (cfg.is_plane()) {
        if (!c.beta.is_zero()) throw std::invalid_argument("curves on P2 have beta = 0");
        return c.alpha * DivisorClass::line(s);
    }
    DivisorClass d = c.alpha * DivisorClass::h(s) + c.beta * DivisorClass::f(s);
    for (int i = 1; i <= cfg.k(); ++i) d -= c.mults[i - 1] * DivisorClass::e(s, i);
    return d;
}

LogPair::LogPair(BlowupConfig config, std::vector<BoundaryTerm> boundary)
    : config_(std::move(config)), boundary_(std::move(boundary)) {
    for (std::size_t i = 0; i < boundary_.size(); ++i) {
        const auto& term = boundary_[i];
        if (term.coeff < Rational(0) || term.coeff > Rational(1)) {
            throw std::invalid_argument("boundary coefficient " + term.coeff.str() +
                                        " is outside [0, 1]");
        }
        if (const auto* ex = std::get_if<ExceptionalComponent>(&term.component)) {
            if (ex->id < 1 || ex->id > config_.k()) {
                throw std::invalid_argument("boundary references missing exceptional curve " +
                                            std::to_string(ex->id));
            }
        } else {
            (void)strict_transform(config_, std::get<TrackedCurve>(term.component));
        }
    }
}

DivisorClass LogPair::component_class(std::size_t index) const {
    const auto& comp = boundary_.at(index).component;
    if (const auto* ex = std::get_if<ExceptionalComponent>(&comp)) {
        return config_.exceptional_curve(ex->id);
    }
    return strict_transform(config_, std::get<TrackedCurve>(comp));
}

DivisorClass LogPair::boundary_class() const {
    DivisorClass total = DivisorClass::zero(surface());
    for (std::size_t i = 0; i < boundary_.size(); ++i) {
        total += boundary_[i].coeff * component_class(i);
    }
    return total;
}

DivisorClass LogPair::log_canonical_class() const {
    return canonical_class(surface()) + boundary_class();
}

std::string LogPair::component_label(std::size_t index) const {
    const auto& comp = boundary_.at(index).component;
    if (const auto* ex = std::get_if<ExceptionalComponent>(&comp)) {
        return "E" + std::to_string(ex->id);
    }
    return "C" + std::to_string(index + 1);
}

std::vector<DivisorClass> test_curve_family(const BlowupConfig& cfg) {
    const SurfaceModel s = cfg.surface();
    if (cfg.is_plane()) return {DivisorClass::line(s)};

    std::vector<DivisorClass> family;
    auto add = [&](DivisorClass c) {
        if (std::find(family.begin(), family.end(), c) == family.end()) {
            family.push_back(std::move(c));
        }
    };
    add(cfg.negative_section());
    add(DivisorClass::f(s));
    for (const auto& p : cfg.points()) {
        if (p.location == PointLocation::FreshFiber) add(cfg.fiber_through(p.id));
    }
    for (const auto& p : cfg.points()) add(cfg.exceptional_curve(p.id));
    return family;
}

std::string to_string(Certainty c) {
    switch (c) {
        case Certainty::CertifiedYes: return "CertifiedYes";
        case Certainty::No: return "No";
        case Certainty::Unknown: return "Unknown";
    }
    return "?";
}

NefVerdict is_anti_nef(const LogPair& p, std::span<const AntiNefCertifier> certifiers) {
    const DivisorClass d = p.log_canonical_class();
    for (const auto& curve : test_curve_family(p.config())) {
        Rational value = pair(d, curve);
        if (value > Rational(0)) {
            return {Certainty::No, curve,
                    "(K+Delta).(" + curve.str() + ") = " + value.str() + " > 0"};
        }
    }
    const BlowupConfig& cfg = p.config();
    if (cfg.is_plane()) {
        return {Certainty::CertifiedYes, std::nullopt, "the line class spans the curve cone of P2"};
    }
    if (cfg.k() == 0) {
        return {Certainty::CertifiedYes, std::nullopt,
                "S_n and f span the curve cone of F_" + std::to_string(cfg.n())};
    }
    for (const auto& certify : certifiers) {
        if (auto why = certify(p)) return {Certainty::CertifiedYes, std::nullopt, *why};
    }
    return {Certainty::Unknown, std::nullopt,
            "non-positive on the test family, but no certificate covers this configuration"};
}

Rational volume(const LogPair& p) { return self_intersection(p.log_canonical_class()); }

NefVerdict is_nef_and_big(const LogPair& p, std::span<const AntiNefCertifier> certifiers) {
    NefVerdict anti = is_anti_nef(p, certifiers);
    if (anti.status == Certainty::No) return anti;
    const Rational vol = volume(p);
    if (vol <= Rational(0)) {
        return {Certainty::No, std::nullopt,
                "(K+Delta)^2 = " + vol.str() + " is not positive, so -(K+Delta) is not nef and big"};
    }
    if (anti.status == Certainty::CertifiedYes) {
        anti.reason += "; volume " + vol.str() + " > 0";
    }
    return anti;
}

}  // namespace delpezzo
