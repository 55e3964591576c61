#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "delpezzo/blowup.hpp"
#include "delpezzo/rational.hpp"

namespace delpezzo {

/// The epsilon of epsilon-lc, in (0, 1].
class Epsilon {
public:
    explicit Epsilon(Rational value);
    const Rational& value() const { return value_; }

private:
    Rational value_;
};

class NotContractible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct DiscrepancyEntry {
    std::string label;
    Rational discrepancy;
};

enum class LcVerdict { EpsilonLC, Violated, Inconclusive };
std::string to_string(LcVerdict v);

struct DiscrepancyReport {
    std::vector<DiscrepancyEntry> entries;
    LcVerdict verdict = LcVerdict::Inconclusive;
    std::string violated;  ///< label of the first failing entry
    std::string note;
};

/// Multiplicity of boundary component `component` at configured point `point_id`,
/// measured on the surface where that point is blown up.
Rational multiplicity_at(const LogPair& p, std::size_t component, int point_id);

/// Discrepancy 1 - sum_j c_j mult_j(at) of the exceptional divisor of one
/// blow-up. `at` is a configured point id, or nullopt for a general point.
Rational blowup_discrepancy(const LogPair& p, std::optional<int> at);

/// Coefficient c with (K + c E + B).E = 0 for a curve E with E^2 < 0.
Rational contraction_crepant_coefficient(const Rational& k_dot_e, const Rational& e_sq,
                                         const Rational& boundary_dot_e);

/// Bounded-depth epsilon-lc check.
///
/// Records the discrepancy -c of every boundary component and of every
/// exceptional curve E_i on the surface, then blows up general points of
/// boundary components and their transversal crossings, iterating `depth`
/// times. The verdict is EpsilonLC only when every entry is at least
/// -1 + eps and the boundary is simple normal crossing as far as the tracked
/// data can tell; a failing entry gives Violated; anything else is
/// Inconclusive.
DiscrepancyReport epsilon_lc_check(const LogPair& p, const Epsilon& eps, int depth = 2);

}  // namespace delpezzo
