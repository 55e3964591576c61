#include "delpezzo/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace delpezzo {

std::string ExtremalDescriptor::str() const {
    switch (kind) {
        case ExtremalKind::P2: return "(P2, 0)";
        case ExtremalKind::PCn: return "(PC_" + std::to_string(n) + ", 0)";
        case ExtremalKind::FnPair:
            if (n <= 2) return "(F_" + std::to_string(n) + ", 0)";
            return "(F_" + std::to_string(n) + ", " + (Rational(1) - Rational(2, n)).str() + " S_" +
                   std::to_string(n) + ")";
        case ExtremalKind::BlowupExample: {
            std::string s = "(F_" + std::to_string(n) + " blown up at " + std::to_string(k) +
                            (k == 1 ? " point" : " points");
            if (fibers == FiberPattern::SameFiber) s += " on one fiber";
            if (fibers == FiberPattern::DistinctFibers && k > 1) s += " on distinct fibers";
            if (recipe == BoundaryRecipe::SectionOnly && n > 2) {
                s += ", " + (Rational(1) - Rational(2, n)).str() + " S'";
            } else if (recipe == BoundaryRecipe::SectionAndFiber) {
                s += ", " + Rational(2 * n - 4, 2 * n - 1).str() + " S' + " +
                     Rational(n - 2, 2 * n - 1).str() + " F'";
            }
            return s + ")";
        }
    }
    return "?";
}

ExtremalDescriptor p2_extremal() { return {ExtremalKind::P2, 0, 0, FiberPattern::None, BoundaryRecipe::None}; }

ExtremalDescriptor fn_pair_extremal(int n) {
    return {ExtremalKind::FnPair, n, 0, FiberPattern::None,
            n > 2 ? BoundaryRecipe::SectionOnly : BoundaryRecipe::None};
}

ExtremalDescriptor pcn_extremal(int n) {
    return {ExtremalKind::PCn, n, 0, FiberPattern::None, BoundaryRecipe::SectionOnly};
}

ExtremalDescriptor blowup_extremal(int n, int k, FiberPattern fibers, BoundaryRecipe recipe) {
    return {ExtremalKind::BlowupExample, n, k, fibers, recipe};
}

LogPair instantiate(const ExtremalDescriptor& d) {
    if (d.kind == ExtremalKind::P2) return {BlowupConfig::plane(), {}};

    std::vector<PointSpec> points;
    if (d.kind == ExtremalKind::BlowupExample) {
        for (int id = 1; id <= d.k; ++id) {
            if (d.fibers == FiberPattern::SameFiber && id > 1) {
                points.push_back({id, PointLocation::SameFiberAs, 1});
            } else {
                points.push_back({id, PointLocation::FreshFiber, 0});
            }
        }
    }
    BlowupConfig cfg(d.n, std::move(points));
    std::vector<BoundaryTerm> boundary;
    switch (d.recipe) {
        case BoundaryRecipe::None: break;
        case BoundaryRecipe::SectionOnly:
            if (d.n > 2) {
                boundary.push_back({TrackedCurve::negative_section(cfg), Rational(1) - Rational(2, d.n)});
            }
            break;
        case BoundaryRecipe::SectionAndFiber:
            if (d.n < 2 || d.k < 1) throw std::invalid_argument("section-and-fiber recipe needs n >= 2");
            boundary.push_back({TrackedCurve::negative_section(cfg), Rational(2 * d.n - 4, 2 * d.n - 1)});
            boundary.push_back({TrackedCurve::fiber_through(cfg, 1), Rational(d.n - 2, 2 * d.n - 1)});
            break;
    }
    return {std::move(cfg), std::move(boundary)};
}

const BranchValue& BoundResult::branch(const std::string& label) const {
    for (const auto& b : branches) {
        if (b.label == label) return b;
    }
    throw std::out_of_range("no branch '" + label + "'");
}

std::int64_t floor_two_over(const Epsilon& eps) { return (Rational(2) / eps.value()).floor(); }

std::int64_t floor_same_fiber_index(const Epsilon& eps) {
    const Rational& e = eps.value();
    return ((Rational(3) + e) / (Rational(2) * e)).floor();
}

Rational hirzebruch_volume_bound(int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (n <= 1) return 8;
    return Rational(n + 4) + Rational(4, n);
}

Rational same_fiber_volume_bound(int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (n <= 1) return 6;
    return Rational(n) + Rational(5, 2) + Rational(9, 4 * n - 2);
}

namespace {

BoundResult combine(std::vector<BranchValue> branches) {
    BoundResult out;
    out.value = branches.front().value;
    for (const auto& b : branches) out.value = max(out.value, b.value);
    for (const auto& b : branches) {
        if (b.value != out.value) continue;
        for (const auto& x : b.extremals) {
            if (std::find(out.extremals.begin(), out.extremals.end(), x) == out.extremals.end()) {
                out.extremals.push_back(x);
            }
        }
    }
    out.branches = std::move(branches);
    return out;
}

int to_int(std::int64_t v) {
    if (v > 1'000'000) throw std::overflow_error("epsilon too small for this artifact");
    return static_cast<int>(v);
}

}  // namespace

BoundResult main_bound(const Epsilon& eps) {
    const int m = to_int(floor_two_over(eps));
    BranchValue plane{"P2", Rational(9), {p2_extremal()}};
    BranchValue hirz{"Hirzebruch", hirzebruch_volume_bound(m), {fn_pair_extremal(m), pcn_extremal(m)}};
    if (m == 2) {
        // a = 0 and a = 1 - 2/n coincide, and F_0, F_1 with empty boundary reach 8 too.
        hirz.extremals.push_back(fn_pair_extremal(0));
        hirz.extremals.push_back(fn_pair_extremal(1));
    }
    return combine({plane, hirz});
}

BoundResult rho3_bound(const Epsilon& eps) {
    const int m = to_int(floor_two_over(eps));
    BranchValue one_point{"Hirzebruch+1", hirzebruch_volume_bound(m) - 1,
                          {blowup_extremal(m, 1, FiberPattern::DistinctFibers, BoundaryRecipe::SectionOnly)}};
    return combine({one_point});
}

BoundResult rho4_bound(const Epsilon& eps) {
    const int m = to_int(floor_two_over(eps));
    const int q = to_int(floor_same_fiber_index(eps));
    BranchValue a{"A", hirzebruch_volume_bound(m) - 2,
                  {blowup_extremal(m, 2, FiberPattern::DistinctFibers, BoundaryRecipe::SectionOnly)}};
    BranchValue b{"B", same_fiber_volume_bound(q),
                  {blowup_extremal(q, 2, FiberPattern::SameFiber, BoundaryRecipe::SectionAndFiber)}};
    return combine({a, b});
}

Rational general_blowup_bound(int n, int k) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    return hirzebruch_volume_bound(n) - k;
}

int max_points(int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (n >= 4) return n + 4;
    if (n >= 2) return n + 5;
    return 7;
}

}  // namespace delpezzo
