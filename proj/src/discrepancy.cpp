#include "delpezzo/discrepancy.hpp"

#include <variant>

namespace delpezzo {

Epsilon::Epsilon(Rational value) : value_(value) {
    if (value <= Rational(0) || value > Rational(1)) {
        throw std::invalid_argument("epsilon must lie in (0, 1], got " + value.str());
    }
}

std::string to_string(LcVerdict v) {
    switch (v) {
        case LcVerdict::EpsilonLC: return "EpsilonLC";
        case LcVerdict::Violated: return "Violated";
        case LcVerdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

Rational multiplicity_at(const LogPair& p, std::size_t component, int point_id) {
    const BlowupConfig& cfg = p.config();
    const PointSpec& pt = cfg.point(point_id);
    const auto& comp = p.boundary().at(component).component;
    if (const auto* ex = std::get_if<ExceptionalComponent>(&comp)) {
        return (pt.infinitely_near() && pt.ref == ex->id) ? Rational(1) : Rational(0);
    }
    return std::get<TrackedCurve>(comp).mults.at(point_id - 1);
}

Rational blowup_discrepancy(const LogPair& p, std::optional<int> at) {
    Rational a = 1;
    if (!at) return a;
    for (std::size_t i = 0; i < p.boundary().size(); ++i) {
        a -= p.boundary()[i].coeff * multiplicity_at(p, i, *at);
    }
    return a;
}

Rational contraction_crepant_coefficient(const Rational& k_dot_e, const Rational& e_sq,
                                         const Rational& boundary_dot_e) {
    if (e_sq >= Rational(0)) {
        throw NotContractible("a curve with self-intersection " + e_sq.str() +
                              " cannot be contracted");
    }
    return (k_dot_e + boundary_dot_e) / (-e_sq);
}

namespace {

bool known_smooth(const LogPair& p, std::size_t index) {
    const auto& comp = p.boundary()[index].component;
    if (std::holds_alternative<ExceptionalComponent>(comp)) return true;
    const auto& c = std::get<TrackedCurve>(comp);
    if (p.config().is_plane()) return c.alpha == Rational(1) || c.alpha == Rational(2);
    for (const auto& m : c.mults) {
        if (m != Rational(0) && m != Rational(1)) return false;
    }
    const bool fiber = c.alpha.is_zero() && c.beta == Rational(1);
    const bool section = c.alpha == Rational(1);
    return fiber || section;
}

struct Explorer {
    std::vector<DiscrepancyEntry>& out;

    // Blow up the meeting point of two curves with coefficients c1, c2 (c2 = 0
    // for a general point of one curve) and keep blowing up the new crossings.
    void crossing(const std::string& label, const Rational& c1, const Rational& c2, int depth_left) {
        const Rational ce = c1 + c2 - 1;
        out.push_back({label, -ce});
        if (depth_left <= 1) return;
        crossing("E[" + label + "|1]", c1, ce, depth_left - 1);
        crossing("E[" + label + "|2]", ce, c2, depth_left - 1);
    }
};

}  // namespace

DiscrepancyReport epsilon_lc_check(const LogPair& p, const Epsilon& eps, int depth) {
    if (depth < 0) throw std::invalid_argument("depth must be non-negative");
    DiscrepancyReport report;
    const Rational floor_value = Rational(-1) + eps.value();
    const std::size_t count = p.boundary().size();

    for (std::size_t i = 0; i < count; ++i) {
        report.entries.push_back({p.component_label(i), -p.boundary()[i].coeff});
    }
    for (int id = 1; id <= p.config().k(); ++id) {
        Rational coeff = 0;
        for (std::size_t i = 0; i < count; ++i) {
            const auto* ex = std::get_if<ExceptionalComponent>(&p.boundary()[i].component);
            if (ex && ex->id == id) coeff += p.boundary()[i].coeff;
        }
        report.entries.push_back({"E" + std::to_string(id) + " on X", -coeff});
    }
    report.entries.push_back({"E[general point]", Rational(1)});

    // Only components with positive coefficient matter for the boundary's shape.
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < count; ++i) {
        if (p.boundary()[i].coeff > Rational(0)) live.push_back(i);
    }
    std::vector<std::vector<Rational>> meet(count, std::vector<Rational>(count));
    for (std::size_t a : live)
        for (std::size_t b : live)
            if (a < b) meet[a][b] = meet[b][a] = pair(p.component_class(a), p.component_class(b));

    bool snc = true;
    std::string why;
    for (std::size_t i : live) {
        if (!known_smooth(p, i)) {
            snc = false;
            why = p.component_label(i) + " is not known to be smooth";
        }
    }
    for (std::size_t x = 0; x < live.size(); ++x) {
        for (std::size_t y = x + 1; y < live.size(); ++y) {
            const Rational& m = meet[live[x]][live[y]];
            if (m != Rational(0) && m != Rational(1)) {
                snc = false;
                why = p.component_label(live[x]) + " and " + p.component_label(live[y]) +
                      " meet with intersection number " + m.str();
            }
        }
    }
    auto shares_third = [&](std::size_t a, std::size_t b) {
        for (std::size_t c : live) {
            if (c == a || c == b) continue;
            if (meet[a][c] > Rational(0) && meet[b][c] > Rational(0)) return true;
        }
        return false;
    };

    Explorer explore{report.entries};
    for (std::size_t i : live) {
        if (depth > 0) {
            explore.crossing("E[" + p.component_label(i) + "]", p.boundary()[i].coeff, Rational(0),
                             depth);
        }
    }
    for (std::size_t x = 0; x < live.size(); ++x) {
        for (std::size_t y = x + 1; y < live.size(); ++y) {
            const std::size_t a = live[x];
            const std::size_t b = live[y];
            if (meet[a][b] != Rational(1)) continue;
            if (shares_third(a, b)) {
                snc = false;
                why = p.component_label(a) + " and " + p.component_label(b) +
                      " may meet a third component at their crossing";
                continue;
            }
            if (depth > 0) {
                explore.crossing("E[" + p.component_label(a) + "^" + p.component_label(b) + "]",
                                 p.boundary()[a].coeff, p.boundary()[b].coeff, depth);
            }
        }
    }

    for (const auto& entry : report.entries) {
        if (entry.discrepancy < floor_value) {
            report.verdict = LcVerdict::Violated;
            report.violated = entry.label;
            report.note = entry.label + " has discrepancy " + entry.discrepancy.str() + " < " +
                          floor_value.str();
            return report;
        }
    }
    if (!snc) {
        report.verdict = LcVerdict::Inconclusive;
        report.note = why;
        return report;
    }
    report.verdict = LcVerdict::EpsilonLC;
    report.note = "simple normal crossing boundary with coefficients at most 1 - epsilon";
    return report;
}

}  // namespace delpezzo
