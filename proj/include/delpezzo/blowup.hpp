#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "delpezzo/lattice.hpp"
#include "delpezzo/rational.hpp"

namespace delpezzo {

enum class PointLocation {
    FreshFiber,              ///< on a fiber containing no earlier point
    SameFiberAs,             ///< on the fiber through an earlier point, not on its exceptional curve
    InfinitelyNearOnFiber,   ///< on E_ref where it meets the strict transform of F_ref
    InfinitelyNearOffFiber,  ///< on E_ref away from the strict transform of F_ref
};

std::string to_string(PointLocation loc);
PointLocation parse_point_location(std::string_view text);

struct PointSpec {
    int id = 0;  ///< 1-based, blow-up order
    PointLocation location = PointLocation::FreshFiber;
    int ref = 0;  ///< earlier point id; unused for FreshFiber

    bool infinitely_near() const {
        return location == PointLocation::InfinitelyNearOnFiber ||
               location == PointLocation::InfinitelyNearOffFiber;
    }
    friend bool operator==(const PointSpec&, const PointSpec&) = default;
};

/// P^2, or F_n blown up at an ordered list of points, none of them on S_n.
///
/// Infinitely near points have depth one: they sit on the exceptional curve
/// of a point of F_n itself, and each point carries at most one of them.
class BlowupConfig {
public:
    static BlowupConfig plane();
    BlowupConfig(int n, std::vector<PointSpec> points);

    bool is_plane() const { return plane_; }
    int n() const { return n_; }
    int k() const { return static_cast<int>(points_.size()); }
    const std::vector<PointSpec>& points() const { return points_; }
    const PointSpec& point(int id) const;

    SurfaceModel surface() const;

    /// Id of the first point on the fiber carrying `id`.
    int fiber_root(int id) const;
    /// Point lying on E_id, if any.
    std::optional<int> infinitely_near_child(int id) const;
    /// Whether the strict transform of the fiber through point `id` passes
    /// through point `other` (at the level where `other` is blown up).
    bool fiber_passes_through(int id, int other) const;

    /// Class of the strict transform of E_id: e_id minus e_child.
    DivisorClass exceptional_curve(int id) const;
    /// Class of the strict transform of the fiber through point `id`.
    DivisorClass fiber_through(int id) const;
    /// Strict transform of S_n (h - n f; h when n = 0).
    DivisorClass negative_section() const;

    friend bool operator==(const BlowupConfig&, const BlowupConfig&) = default;

private:
    BlowupConfig() = default;

    bool plane_ = false;
    int n_ = 0;
    std::vector<PointSpec> points_;
};

/// A point as supplied before normalization; `on_section` marks points on S_n.
struct RawPoint {
    PointLocation location = PointLocation::FreshFiber;
    int ref = 0;
    bool on_section = false;
};

/// Moves every point lying on S_n off the section: blowing up p in S_n and
/// contracting the strict transform of F_p yields F_{n+1} blown up at a point
/// off S_{n+1}. Each flagged point raises n by one and becomes a fresh-fiber
/// point. Flagged points must be fresh, and no other point may reference one.
BlowupConfig normalize_off_section(int n, std::span<const RawPoint> raw_points);

/// A curve on the base surface tracked through the blow-ups.
///
/// base class alpha*h + beta*f (alpha*l on P^2); mults[i] is the multiplicity
/// of its strict transform at point i+1 at the moment that point is blown up.
struct TrackedCurve {
    Rational alpha;
    Rational beta;
    std::vector<Rational> mults;

    static TrackedCurve negative_section(const BlowupConfig& cfg);
    static TrackedCurve fiber_through(const BlowupConfig& cfg, int id);
    static TrackedCurve plane_curve(int degree);

    friend bool operator==(const TrackedCurve&, const TrackedCurve&) = default;
};

DivisorClass strict_transform(const BlowupConfig& cfg, const TrackedCurve& c);

/// Strict transform of the exceptional curve over a configured point.
struct ExceptionalComponent {
    int id = 0;
    friend bool operator==(const ExceptionalComponent&, const ExceptionalComponent&) = default;
};

using BoundaryComponent = std::variant<TrackedCurve, ExceptionalComponent>;

struct BoundaryTerm {
    BoundaryComponent component;
    Rational coeff;
};

/// Surface plus boundary with coefficients in [0, 1].
class LogPair {
public:
    LogPair(BlowupConfig config, std::vector<BoundaryTerm> boundary);

    const BlowupConfig& config() const { return config_; }
    const std::vector<BoundaryTerm>& boundary() const { return boundary_; }
    SurfaceModel surface() const { return config_.surface(); }

    DivisorClass component_class(std::size_t index) const;
    DivisorClass boundary_class() const;
    /// K + Delta.
    DivisorClass log_canonical_class() const;

    /// Label such as "C1" / "E2" used in reports.
    std::string component_label(std::size_t index) const;

private:
    BlowupConfig config_;
    std::vector<BoundaryTerm> boundary_;
};

/// Finitely many irreducible curves the pairing checks run against: S_n'',
/// a general fiber, strict transforms of fibers through configured points and
/// strict transforms of the exceptional curves. Deduplicated, in that order.
std::vector<DivisorClass> test_curve_family(const BlowupConfig& cfg);

enum class Certainty { CertifiedYes, No, Unknown };
std::string to_string(Certainty c);

struct NefVerdict {
    Certainty status = Certainty::Unknown;
    std::optional<DivisorClass> witness;  ///< set for No from a pairing failure
    std::string reason;
};

/// Extra anti-nefness arguments for blow-up patterns; returns a description of
/// the certificate when it applies.
using AntiNefCertifier = std::function<std::optional<std::string>(const LogPair&)>;

/// Three-valued anti-nefness of K + Delta.
NefVerdict is_anti_nef(const LogPair& p, std::span<const AntiNefCertifier> certifiers = {});

/// (K + Delta)^2.
Rational volume(const LogPair& p);

/// Whether -(K + Delta) is nef and big.
NefVerdict is_nef_and_big(const LogPair& p, std::span<const AntiNefCertifier> certifiers = {});

}  // namespace delpezzo
