#include "delpezzo/verifier.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "delpezzo/bounds.hpp"
#include "delpezzo/lattice.hpp"

namespace delpezzo {

std::int64_t h0(int n, int alpha, int beta) {
    if (alpha < 0 || beta < 0) throw std::invalid_argument("h0 needs alpha, beta >= 0");
    if (n < 0) throw std::invalid_argument("h0 needs n >= 0");
    const std::int64_t a = alpha;
    const std::int64_t b = beta;
    return (a + 1) * (b + 1) + a * (a + 1) / 2 * n;
}

std::int64_t conditions_count(std::span<const int> mults) {
    std::int64_t total = 0;
    for (int a : mults) {
        if (a < 0) throw std::invalid_argument("multiplicities must be non-negative");
        total += std::int64_t{a} * (a + 1) / 2;
    }
    return total;
}

GeneralPositionSpec GeneralPositionSpec::assumed(int n, int k) {
    GeneralPositionSpec g{n, k, {}};
    for (int c = 1; c <= 4; ++c) g.conditions[c - 1] = g.applies(c);
    return g;
}

bool GeneralPositionSpec::applies(int condition) const {
    switch (condition) {
        case 1:
        case 2: return true;
        case 3: return n >= 4 && k == n + 4;
        case 4: return n == 3 && k >= 7;
        default: throw std::out_of_range("general-position conditions are numbered 1 to 4");
    }
}

bool GeneralPositionSpec::holds() const {
    for (int c = 1; c <= 4; ++c) {
        if (applies(c) && !conditions[c - 1]) return false;
    }
    return true;
}

void VerificationReport::add(std::string description, bool passed, std::optional<std::string> witness) {
    checks.push_back({std::move(description), passed, std::move(witness)});
}

std::string to_string(ClaimOutcome o) {
    switch (o) {
        case ClaimOutcome::Strict: return "Strict";
        case ClaimOutcome::EqualityEscape: return "EqualityEscape";
        case ClaimOutcome::Fails: return "Fails";
    }
    return "?";
}

namespace {

std::string join(const std::vector<int>& values) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
    os << ")";
    return os.str();
}

std::vector<int> balanced_distribution(std::int64_t total, int k) {
    std::vector<int> a(static_cast<std::size_t>(k), static_cast<int>(total / k));
    for (std::int64_t i = 0; i < total % k; ++i) ++a[static_cast<std::size_t>(i)];
    return a;
}

bool all_equal_to(const std::vector<int>& a, int value) {
    return std::all_of(a.begin(), a.end(), [value](int x) { return x == value; });
}

}  // namespace

ClaimReport claim_check(int n, int k, int alpha, int beta) {
    if (n < 2) throw std::invalid_argument("claim_check needs n >= 2");
    if (k < 1) throw std::invalid_argument("claim_check needs k >= 1");
    if (std::int64_t{k} * n >= std::int64_t{n + 2} * (n + 2)) {
        throw std::invalid_argument("claim_check needs k < (n+2)^2/n");
    }
    if (beta < 0 || 2 * alpha < beta + 1) throw std::invalid_argument("claim_check needs 2 alpha >= beta + 1");

    ClaimReport r;
    if (beta >= n) {
        r.regime = "beta >= n";
    } else if (2 * beta >= n) {
        r.regime = "n/2 <= beta < n";
    } else {
        r.regime = "beta < n/2";
    }
    r.threshold = Rational(std::int64_t{n + 2} * alpha) + (Rational(1) + Rational(2, n)) * Rational(beta);
    r.min_sum = r.threshold.floor() + 1;
    r.sections = h0(n, alpha, beta);
    r.relaxed_conditions = (Rational(r.min_sum) * Rational(r.min_sum) / Rational(k) + Rational(r.min_sum)) / 2;

    // Multiplicity at p_i is at most C.F_{p_i} = alpha.
    if (r.min_sum > std::int64_t{k} * alpha) {
        r.vacuous = true;
        r.outcome = ClaimOutcome::Strict;
        return r;
    }
    r.balanced = balanced_distribution(r.min_sum, k);
    r.balanced_conditions = conditions_count(r.balanced);

    if (r.balanced_conditions > r.sections) {
        r.outcome = ClaimOutcome::Strict;
    } else if (r.balanced_conditions == r.sections) {
        const bool same_degree = n >= 4 && k == n + 4 && 2 * alpha == beta + 1 && 2 * beta < n && all_equal_to(r.balanced, alpha);
        const bool seven_ones = n == 3 && alpha == 1 && beta == 1 &&
                                std::count(r.balanced.begin(), r.balanced.end(), 1) == 7 &&
                                std::count(r.balanced.begin(), r.balanced.end(), 0) == k - 7;
        if (same_degree) {
            r.outcome = ClaimOutcome::EqualityEscape;
            r.escape_condition = 3;
        } else if (seven_ones) {
            r.outcome = ClaimOutcome::EqualityEscape;
            r.escape_condition = 2;
        } else {
            r.outcome = ClaimOutcome::Fails;
        }
    } else {
        r.outcome = ClaimOutcome::Fails;
    }
    return r;
}

LogPair thm71_pair(int n) {
    if (n < 2) throw std::invalid_argument("the two-point example needs n >= 2");
    return instantiate(blowup_extremal(n, 2, FiberPattern::SameFiber, BoundaryRecipe::SectionAndFiber));
}

LogPair thm72_pair(int n, int k) {
    if (n < 2) throw std::invalid_argument("the distinct-fiber example needs n >= 2");
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    return instantiate(blowup_extremal(n, k, FiberPattern::DistinctFibers, BoundaryRecipe::SectionOnly));
}

namespace {

std::string curve_str(const TrackedCurve& c) {
    std::ostringstream os;
    os << c.alpha << "h + " << c.beta << "f, mults (";
    for (std::size_t i = 0; i < c.mults.size(); ++i) os << (i ? "," : "") << c.mults[i];
    os << ")";
    return os.str();
}

Rational h_dot(int n, const Rational& alpha, const Rational& beta) { return Rational(n) * alpha + beta; }

// (K + Delta).C' on the lattice against -coeff * h.C + weight * sum of mults.
std::optional<std::string> reduction_mismatch(const LogPair& pair, int samples, int max_degree,
                                              const Rational& h_coeff, const Rational& mult_weight,
                                              std::uint32_t seed) {
    const BlowupConfig& cfg = pair.config();
    const DivisorClass kd = pair.log_canonical_class();
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> degree(0, max_degree);
    for (int s = 0; s < samples; ++s) {
        TrackedCurve c;
        const int alpha = degree(rng);
        c.alpha = alpha;
        c.beta = degree(rng);
        std::uniform_int_distribution<int> mult(0, alpha);
        for (int i = 0; i < cfg.k(); ++i) c.mults.push_back(mult(rng));
        const Rational lattice = delpezzo::pair(kd, strict_transform(cfg, c));
        Rational sum;
        for (const auto& m : c.mults) sum += m;
        const Rational displayed = -h_coeff * h_dot(cfg.n(), c.alpha, c.beta) + mult_weight * sum;
        if (lattice != displayed) {
            return curve_str(c) + ": lattice " + lattice.str() + ", formula " + displayed.str();
        }
    }
    return std::nullopt;
}

void finish(VerificationReport& r) {
    r.overall = !r.checks.empty() &&
                std::all_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.passed; });
}

bool is_fresh_distinct(const BlowupConfig& cfg) {
    return std::all_of(cfg.points().begin(), cfg.points().end(),
                       [](const PointSpec& p) { return p.location == PointLocation::FreshFiber; });
}

}  // namespace

VerificationReport verify_thm71(int n, int a_max) {
    if (n < 2) throw std::invalid_argument("verify_thm71 needs n >= 2");
    if (a_max < 0) throw std::invalid_argument("a_max must be non-negative");
    VerificationReport r;
    r.subject = "F_" + std::to_string(n) + " blown up at two points of one fiber";
    const LogPair pair = thm71_pair(n);

    const auto mismatch = reduction_mismatch(pair, 200, 12, Rational(2 * n + 2, 2 * n - 1),
                                             Rational(n + 1, 2 * n - 1), 7100u + static_cast<std::uint32_t>(n));
    r.add("(K+D).C' = -(2n+2)/(2n-1) h.C + (n+1)/(2n-1)(mult_p1 C + mult_p2 C) on 200 random curves",
          !mismatch, mismatch);

    const SurfaceModel base = SurfaceModel::hirzebruch(n);
    const DivisorClass hb = DivisorClass::h(base);
    const Rational h_section = delpezzo::pair(hb, DivisorClass::negative_section(base));
    r.add("S_n: mult_p1 + mult_p2 = 0 <= 2 h.S_n = " + (Rational(2) * h_section).str(),
          Rational(0) <= Rational(2) * h_section);
    const Rational h_fiber = delpezzo::pair(hb, DivisorClass::f(base));
    r.add("F: mult_p1 + mult_p2 = 2 <= 2 h.F = " + (Rational(2) * h_fiber).str(),
          Rational(2) <= Rational(2) * h_fiber);

    std::optional<std::string> failure;
    std::uint64_t cells = 0;
    for (int alpha = 0; alpha <= a_max && !failure; ++alpha) {
        for (int beta = 0; beta <= a_max && !failure; ++beta) {
            const std::int64_t bound = 2 * (std::int64_t{n} * alpha + beta);
            for (int m1 = 0; m1 <= alpha && !failure; ++m1) {
                for (int m2 = 0; m1 + m2 <= alpha; ++m2) {
                    ++cells;
                    if (m1 + m2 > bound) {
                        failure = "alpha=" + std::to_string(alpha) + " beta=" + std::to_string(beta) +
                                  " mults (" + std::to_string(m1) + "," + std::to_string(m2) + ")";
                        break;
                    }
                }
            }
        }
    }
    r.add("mult_p1 C + mult_p2 C <= 2 h.C for alpha h + beta f, 0 <= alpha, beta <= " + std::to_string(a_max) +
              ", mult_p1 + mult_p2 <= alpha (" + std::to_string(cells) + " cases)",
          !failure, failure);

    const Rational vol = volume(pair);
    const Rational expected = Rational(n) + Rational(5, 2) + Rational(9, 4 * n - 2);
    r.add("volume = n + 5/2 + 9/(4n-2) = " + expected.str(), vol == expected,
          vol == expected ? std::nullopt : std::optional<std::string>("lattice volume " + vol.str()));

    const AntiNefCertifier cert = thm71_certifier();
    const NefVerdict verdict = is_nef_and_big(pair, std::span<const AntiNefCertifier>(&cert, 1));
    r.add("-(K+D) nef and big", verdict.status == Certainty::CertifiedYes,
          verdict.status == Certainty::CertifiedYes ? std::nullopt
                                                    : std::optional<std::string>(to_string(verdict.status)));
    finish(r);
    return r;
}

VerificationReport verify_thm72(int n, int k, int a_max, int b_max) {
    if (n < 2) throw std::invalid_argument("verify_thm72 needs n >= 2");
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    if (a_max < 0 || b_max < 0) throw std::invalid_argument("grid bounds must be non-negative");
    VerificationReport r;
    r.subject = "F_" + std::to_string(n) + " blown up at " + std::to_string(k) + " points on distinct fibers";
    const std::int64_t kn = std::int64_t{k} * n;
    const std::int64_t square = std::int64_t{n + 2} * (n + 2);
    const Rational slope = Rational(1) + Rational(2, n);
    auto right_side = [&](int alpha, int beta) { return Rational(std::int64_t{n + 2} * alpha) + slope * beta; };

    if (kn >= square) {
        const Rational bound = general_blowup_bound(n, k);
        r.add("part (3): k >= (n+2)^2/n and the volume bound n + 4 + 4/n - k = " + bound.str() +
                  " <= 0, so no boundary makes the surface weak log del Pezzo",
              bound <= Rational(0));
        finish(r);
        return r;
    }

    const LogPair pair = thm72_pair(n, k);
    if (k > 0) {
        const auto mismatch =
            reduction_mismatch(pair, 200, 12, slope, Rational(1), 7200u + static_cast<std::uint32_t>(n * 64 + k));
        r.add("(K+D).C' = -(1+2/n) h.C + sum of mult_pi C on 200 random curves", !mismatch, mismatch);
    }
    const SurfaceModel base = SurfaceModel::hirzebruch(n);
    const DivisorClass hb = DivisorClass::h(base);
    r.add("Fact 1: C = S_n, 0 <= (1+2/n) h.S_n",
          Rational(0) <= slope * delpezzo::pair(hb, DivisorClass::negative_section(base)));
    r.add("Fact 2: C = F_pj, 1 <= (1+2/n) h.F", Rational(1) <= slope * delpezzo::pair(hb, DivisorClass::f(base)));

    const Rational vol = volume(pair);
    const Rational expected = general_blowup_bound(n, k);
    r.add("volume = n + 4 + 4/n - k = " + expected.str(), vol == expected,
          vol == expected ? std::nullopt : std::optional<std::string>("lattice volume " + vol.str()));

    if (k <= n + 2) {
        std::optional<std::string> failure;
        for (int alpha = 0; alpha <= a_max && !failure; ++alpha) {
            for (int beta = 0; beta <= b_max; ++beta) {
                const bool chain = std::int64_t{k} * alpha <= std::int64_t{n + 2} * alpha &&
                                   Rational(std::int64_t{n + 2} * alpha) <= right_side(alpha, beta);
                if (!chain) {
                    failure = "alpha=" + std::to_string(alpha) + " beta=" + std::to_string(beta);
                    break;
                }
            }
        }
        r.add("part (1), Fact 4: k alpha <= (n+2) alpha <= (1+2/n) h.C on the grid", !failure, failure);
    } else {
        r.notes.push_back("part (2) assumes the points are in general position");
        std::optional<std::string> fact3_failure;
        std::optional<std::string> claim_failure;
        std::optional<std::string> relaxation_failure;
        std::uint64_t fact3_cells = 0;
        std::uint64_t claim_cells = 0;
        const Rational k_cap = Rational(square, n);
        for (int alpha = 0; alpha <= a_max; ++alpha) {
            for (int beta = 0; beta <= b_max; ++beta) {
                const std::string cell = "alpha=" + std::to_string(alpha) + " beta=" + std::to_string(beta);
                if (2 * alpha <= beta) {
                    ++fact3_cells;
                    const bool chain = Rational(std::int64_t{k} * alpha) <= k_cap * alpha &&
                                       k_cap * alpha <= right_side(alpha, beta);
                    if (!chain && !fact3_failure) fact3_failure = cell;
                    continue;
                }
                ++claim_cells;
                const ClaimReport c = claim_check(n, k, alpha, beta);
                if (c.outcome == ClaimOutcome::Fails && !claim_failure) {
                    claim_failure = cell + " mults " + join(c.balanced) + ": " +
                                    std::to_string(c.balanced_conditions) + " conditions, " +
                                    std::to_string(c.sections) + " sections";
                }
                if (!c.vacuous && c.outcome == ClaimOutcome::Strict &&
                    c.relaxed_conditions < Rational(c.sections) && !relaxation_failure) {
                    relaxation_failure = cell + ": relaxed count " + c.relaxed_conditions.str() + " < " +
                                         std::to_string(c.sections) + " sections";
                }
                if (c.outcome == ClaimOutcome::EqualityEscape) {
                    EqualityEscape e{alpha, beta, c.balanced, *c.escape_condition, ""};
                    e.description = cell + ": mults " + join(c.balanced) + " give " +
                                    std::to_string(c.balanced_conditions) + " conditions = h0; excluded by " +
                                    "general-position condition (" + std::to_string(e.condition) + ")";
                    r.escapes.push_back(std::move(e));
                }
            }
        }
        r.add("part (2), Fact 3: k alpha <= (n+2)^2/n alpha <= (1+2/n) h.C when 2 alpha <= beta (" +
                  std::to_string(fact3_cells) + " cells)",
              !fact3_failure, fact3_failure);
        r.add("part (2), claim: sum a_i(a_i+1)/2 > h0 for the balanced multiplicities when 2 alpha >= beta + 1 (" +
                  std::to_string(claim_cells) + " cells)",
              !claim_failure, claim_failure);
        r.add("part (2), claim: (s^2/k + s)/2 >= h0 at the least admissible sum s", !relaxation_failure,
              relaxation_failure);
    }

    const AntiNefCertifier cert = thm72_certifier(GeneralPositionSpec::assumed(n, k));
    const NefVerdict verdict = is_nef_and_big(pair, std::span<const AntiNefCertifier>(&cert, 1));
    r.add("-(K+D) nef and big", verdict.status == Certainty::CertifiedYes,
          verdict.status == Certainty::CertifiedYes ? std::nullopt
                                                    : std::optional<std::string>(to_string(verdict.status)));
    finish(r);
    return r;
}

VerificationReport verify_example74(int n, int k) {
    if (n != 0 && n != 1) throw std::invalid_argument("verify_example74 needs n = 0 or 1");
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    VerificationReport r;
    r.subject = "F_" + std::to_string(n) + " blown up at " + std::to_string(k) + " points";
    const Rational bound = general_blowup_bound(n, k);
    const LogPair pair = instantiate(blowup_extremal(n, k, FiberPattern::DistinctFibers, BoundaryRecipe::None));
    r.add("volume of (X, 0) = 8 - k = " + bound.str(), volume(pair) == bound);
    r.add(k <= 7 ? "8 - k > 0 and k <= 7 agree: positive volume allowed"
                 : "8 - k <= 0: no boundary makes the surface weak log del Pezzo",
          (bound > Rational(0)) == (k <= 7));
    r.notes.push_back("existence for k <= 7 in general position is not certified");
    finish(r);
    return r;
}

AntiNefCertifier thm71_certifier() {
    return [](const LogPair& p) -> std::optional<std::string> {
        const BlowupConfig& cfg = p.config();
        if (cfg.is_plane() || cfg.n() < 2 || cfg.k() != 2) return std::nullopt;
        const auto& pts = cfg.points();
        if (pts[0].location != PointLocation::FreshFiber || pts[1].location != PointLocation::SameFiberAs ||
            pts[1].ref != 1) {
            return std::nullopt;
        }
        if (p.log_canonical_class() != thm71_pair(cfg.n()).log_canonical_class()) return std::nullopt;
        return "two points on one fiber: mult_p1 C + mult_p2 C <= C.F = alpha <= 2 h.C";
    };
}

AntiNefCertifier thm72_certifier(GeneralPositionSpec general) {
    return [general](const LogPair& p) -> std::optional<std::string> {
        const BlowupConfig& cfg = p.config();
        if (cfg.is_plane() || cfg.n() < 2 || !is_fresh_distinct(cfg)) return std::nullopt;
        const int n = cfg.n();
        const int k = cfg.k();
        if (p.log_canonical_class() != thm72_pair(n, k).log_canonical_class()) return std::nullopt;
        if (k <= n + 2) return "k <= n + 2: sum of mult_pi C <= k alpha <= (1+2/n) h.C";
        const bool below_cap = std::int64_t{k} * n < std::int64_t{n + 2} * (n + 2);
        if (below_cap && general.n == n && general.k == k && general.holds()) {
            return "n + 2 < k < (n+2)^2/n with points in general position";
        }
        return std::nullopt;
    };
}

}  // namespace delpezzo
