#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "delpezzo/blowup.hpp"
#include "delpezzo/rational.hpp"

namespace delpezzo {

/// Dimension of H^0(F_n, O(alpha h + beta f)).
std::int64_t h0(int n, int alpha, int beta);

/// Number of linear conditions imposed by points of multiplicities a_i.
std::int64_t conditions_count(std::span<const int> mults);

/// The general-position conditions on k points of F_n, n >= 2:
///   1. off S_n, pairwise on distinct fibers;
///   2. the point conditions on every linear system |C| are independent;
///   3. (n >= 4, k = n + 4) no curve ((beta+1)/2) h + beta f, beta < n/2,
///      has multiplicity (beta+1)/2 at every point;
///   4. (n = 3, k >= 7) no seven points lie on a curve of class h + f.
struct GeneralPositionSpec {
    int n = 0;
    int k = 0;
    std::array<bool, 4> conditions{};

    /// Every applicable condition assumed to hold.
    static GeneralPositionSpec assumed(int n, int k);
    /// Condition numbers are 1-based.
    bool applies(int condition) const;
    bool holds() const;
};

struct Check {
    std::string description;
    bool passed = false;
    std::optional<std::string> witness;
};

/// An equality case of the condition count that general position rules out.
struct EqualityEscape {
    int alpha = 0;
    int beta = 0;
    std::vector<int> mults;
    int condition = 0;  ///< general-position condition that excludes it
    std::string description;
};

struct VerificationReport {
    std::string subject;
    std::vector<Check> checks;
    std::vector<EqualityEscape> escapes;  ///< assumptions, not proven facts
    std::vector<std::string> notes;
    bool overall = false;

    void add(std::string description, bool passed, std::optional<std::string> witness = std::nullopt);
};

enum class ClaimOutcome { Strict, EqualityEscape, Fails };
std::string to_string(ClaimOutcome o);

/// Evaluation of "more conditions than sections" for one (alpha, beta).
struct ClaimReport {
    ClaimOutcome outcome = ClaimOutcome::Fails;
    std::string regime;        ///< "beta >= n", "n/2 <= beta < n" or "beta < n/2"
    Rational threshold;        ///< (n+2) alpha + (1 + 2/n) beta
    std::int64_t min_sum = 0;  ///< least integer sum of multiplicities above the threshold
    bool vacuous = false;      ///< min_sum exceeds k * alpha, the largest possible sum
    std::int64_t sections = 0;
    std::vector<int> balanced;              ///< minimizer of sum a_i^2 at min_sum
    std::int64_t balanced_conditions = 0;
    Rational relaxed_conditions;            ///< (min_sum^2 / k + min_sum) / 2
    std::optional<int> escape_condition;
};

/// Requires n >= 2, k >= 1, k n < (n+2)^2, 2 alpha >= beta + 1, beta >= 0.
ClaimReport claim_check(int n, int k, int alpha, int beta);

/// F_n (n >= 2) blown up at two points of one fiber F with boundary
/// (2n-4)/(2n-1) S_n' + (n-2)/(2n-1) F'.
LogPair thm71_pair(int n);
/// F_n blown up at k points on distinct fibers with boundary (1 - 2/n) S_n'.
LogPair thm72_pair(int n, int k);

VerificationReport verify_thm71(int n, int a_max = 50);
VerificationReport verify_thm72(int n, int k, int a_max = 50, int b_max = 50);
/// F_0 or F_1 blown up at k points: only the bound 8 - k > 0 iff k <= 7.
VerificationReport verify_example74(int n, int k);

/// Anti-nefness of thm71_pair(n) and of its relabelings.
AntiNefCertifier thm71_certifier();
/// Anti-nefness of thm72_pair(n, k): unconditional for k <= n + 2, and for
/// n + 2 < k < (n+2)^2/n when `general` holds for (n, k).
AntiNefCertifier thm72_certifier(GeneralPositionSpec general);

}  // namespace delpezzo
