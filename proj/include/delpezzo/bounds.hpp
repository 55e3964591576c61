#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "delpezzo/blowup.hpp"
#include "delpezzo/discrepancy.hpp"
#include "delpezzo/rational.hpp"

namespace delpezzo {

enum class ExtremalKind { P2, FnPair, PCn, BlowupExample };

enum class FiberPattern { None, DistinctFibers, SameFiber };

enum class BoundaryRecipe {
    None,
    SectionOnly,      ///< (1 - 2/n) S_n''
    SectionAndFiber,  ///< (2n-4)/(2n-1) S_n' + (n-2)/(2n-1) F'
};

/// A pair attaining one of the volume bounds.
///
/// PCn is listed for completeness; the artifact only models smooth surfaces,
/// so it instantiates as its minimal resolution (F_n, (1 - 2/n) S_n).
struct ExtremalDescriptor {
    ExtremalKind kind = ExtremalKind::P2;
    int n = 0;
    int k = 0;
    FiberPattern fibers = FiberPattern::None;
    BoundaryRecipe recipe = BoundaryRecipe::None;

    std::string str() const;
    friend bool operator==(const ExtremalDescriptor&, const ExtremalDescriptor&) = default;
};

ExtremalDescriptor p2_extremal();
ExtremalDescriptor fn_pair_extremal(int n);
ExtremalDescriptor pcn_extremal(int n);
ExtremalDescriptor blowup_extremal(int n, int k, FiberPattern fibers, BoundaryRecipe recipe);

/// The smooth log pair an extremal descriptor stands for.
LogPair instantiate(const ExtremalDescriptor& d);

struct BranchValue {
    std::string label;
    Rational value;
    std::vector<ExtremalDescriptor> extremals;
};

struct BoundResult {
    Rational value;
    std::vector<BranchValue> branches;
    /// Extremals of every branch whose value equals `value`.
    std::vector<ExtremalDescriptor> extremals;

    const BranchValue& branch(const std::string& label) const;
};

/// floor(2 / eps), computed on exact rationals.
std::int64_t floor_two_over(const Epsilon& eps);
/// floor((3 + eps) / (2 eps)).
std::int64_t floor_same_fiber_index(const Epsilon& eps);

/// Largest (K+Delta)^2 over pairs on F_n itself: n + 4 + 4/n, or 8 for n = 0, 1.
Rational hirzebruch_volume_bound(int n);
/// Largest volume over F_n blown up at two points of one fiber:
/// n + 5/2 + 9/(4n-2), or 6 for n = 0, 1.
Rational same_fiber_volume_bound(int n);

/// Optimal volume bound of epsilon-lc weak log del Pezzo surfaces:
/// max{9, m + 4 + 4/m} with m = floor(2/eps). The same number bounds
/// epsilon-lc log del Pezzo surfaces, also those of Picard number one, since
/// the extremal pairs P^2 and PC_n are of that kind.
BoundResult main_bound(const Epsilon& eps);

/// Bound when the minimal resolution has Picard number at least 3: m + 3 + 4/m.
BoundResult rho3_bound(const Epsilon& eps);

/// Bound when the minimal resolution has Picard number at least 4: the larger
/// of m + 2 + 4/m and q + 5/2 + 9/(4q - 2), q = floor((3 + eps)/(2 eps)).
BoundResult rho4_bound(const Epsilon& eps);

/// Volume bound for F_n blown up at k points off S_n on distinct fibers.
Rational general_blowup_bound(int n, int k);

/// Largest k for which such a blow-up can carry a weak log del Pezzo boundary.
int max_points(int n);

}  // namespace delpezzo
