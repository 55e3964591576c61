#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "delpezzo/discrepancy.hpp"
#include "delpezzo/rational.hpp"

namespace delpezzo {

/// The constrained maximizations behind each volume estimate.
enum class CaseId {
    FnCase2,    ///< pairs on F_n itself
    Rho3,       ///< one blow-up
    Rho4Sub11,  ///< two blow-ups, distinct fibers
    Rho4Sub12,  ///< two blow-ups on one fiber
    Rho4Sub21,  ///< second point on E_1 and on the fiber; same problem as Sub12
    Rho4Sub22,  ///< second point on E_1 off the fiber
    GeneralK,   ///< k blow-ups on distinct fibers
};

std::string to_string(CaseId id);
/// Accepts the names produced by to_string ("Fn-Case2", "Rho4-Sub12", ...).
CaseId parse_case_id(std::string_view text);
std::vector<CaseId> all_cases();

struct Variable {
    std::string name;
    Rational lower;
    Rational upper;
};

/// sum_i coeffs[i] * x_i + constant <= 0.
struct LinearConstraint {
    std::string label;
    std::vector<Rational> coeffs;
    Rational constant;
};

using Assignment = std::vector<Rational>;

/// One maximization problem at fixed (eps, n, k).
///
/// Variables: a (coefficient of S_n), d_i (coefficients of fibers through the
/// blown-up points), e / e_j (exceptional discrepancy slack) and the
/// aggregates sA = sum d_i alpha_i, sB = sum d_i beta_i. The objective is
///   n(-2 + a + sA)^2 + 2(-2 + a + sA)(n - 2 - n a + sB) - sum e_j^2.
struct CaseSpec {
    CaseId id = CaseId::FnCase2;
    int n = 0;
    int k = 0;
    Rational epsilon;
    std::vector<Variable> variables;
    std::vector<LinearConstraint> constraints;
    Rational closed_form;
    Assignment extremal;

    int index_of(std::string_view name) const;
    Assignment assign(std::initializer_list<std::pair<std::string_view, Rational>> values) const;
};

/// k is only read for GeneralK.
CaseSpec make_case(CaseId id, const Epsilon& eps, int n, int k = 0);

Rational objective(const CaseSpec& spec, const Assignment& x);
const std::vector<LinearConstraint>& constraint_set(const CaseSpec& spec);
/// Labels of violated box bounds and constraints; empty when feasible.
std::vector<std::string> violations(const CaseSpec& spec, const Assignment& x);
inline bool is_feasible(const CaseSpec& spec, const Assignment& x) { return violations(spec, x).empty(); }

/// 1/16 up to three variables, 1/8 beyond.
Rational default_step(const CaseSpec& spec);

struct OptResult {
    std::optional<Rational> max_value;  ///< over feasible grid points; empty grid gives nullopt
    Assignment argmax;                  ///< lexicographically first grid maximizer
    std::uint64_t argmax_count = 0;
    std::uint64_t feasible_points = 0;
    std::uint64_t violations = 0;  ///< feasible grid points above the closed form
    Assignment first_violation;
    Rational closed_form;
    bool extremal_feasible = false;
    Rational extremal_value;
    bool attained_on_grid = false;
    bool attained_by_extremal = false;
    bool verified = false;

    /// max(grid max, extremal value when feasible).
    Rational best_value() const;
};

/// Exhaustive search over the grid lower + i*step of every variable box (each
/// upper end added when off-grid), followed by exact evaluation of the
/// documented maximizer.
OptResult grid_maximize(const CaseSpec& spec, const Rational& step);

/// n values the sweep visits for `id` at eps.
std::vector<int> admissible_n(CaseId id, const Epsilon& eps);

struct SweepEntry {
    CaseId id;
    int n = 0;
    int k = 0;
    OptResult result;
    std::string bound_label;
    Rational bound;  ///< closed-form bound at eps the case feeds into
    bool passed = false;
};

struct SweepReport {
    Rational epsilon;
    Rational step;
    std::vector<SweepEntry> entries;
    Rational global_max;  ///< best attained value over all entries
    Rational rho4_branch_a;
    Rational rho4_branch_b;
    bool passed = false;
};

/// Runs every case at every admissible n; GeneralK for each k in `general_ks`.
SweepReport verify_all(const Epsilon& eps, const Rational& step,
                       const std::vector<int>& general_ks = {1, 2});

}  // namespace delpezzo
