#include "delpezzo/optimizer.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "delpezzo/bounds.hpp"

namespace delpezzo {

std::string to_string(CaseId id) {
    switch (id) {
        case CaseId::FnCase2: return "Fn-Case2";
        case CaseId::Rho3: return "Rho3";
        case CaseId::Rho4Sub11: return "Rho4-Sub11";
        case CaseId::Rho4Sub12: return "Rho4-Sub12";
        case CaseId::Rho4Sub21: return "Rho4-Sub21";
        case CaseId::Rho4Sub22: return "Rho4-Sub22";
        case CaseId::GeneralK: return "General-k";
    }
    return "?";
}

CaseId parse_case_id(std::string_view text) {
    for (CaseId id : all_cases()) {
        if (to_string(id) == text) return id;
    }
    throw std::invalid_argument("unknown case id '" + std::string(text) + "'");
}

std::vector<CaseId> all_cases() {
    return {CaseId::FnCase2,   CaseId::Rho3,      CaseId::Rho4Sub11, CaseId::Rho4Sub12,
            CaseId::Rho4Sub21, CaseId::Rho4Sub22, CaseId::GeneralK};
}

int CaseSpec::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < variables.size(); ++i) {
        if (variables[i].name == name) return static_cast<int>(i);
    }
    throw std::out_of_range("case " + to_string(id) + " has no variable '" + std::string(name) + "'");
}

Assignment CaseSpec::assign(std::initializer_list<std::pair<std::string_view, Rational>> values) const {
    Assignment x(variables.size());
    for (const auto& [name, value] : values) x[index_of(name)] = value;
    return x;
}

namespace {

// Builds a spec whose variables are declared in search order: a, sB, the d's,
// sA, then the e's. Constraints are written in terms of variable names.
class SpecBuilder {
public:
    SpecBuilder(CaseId id, const Epsilon& eps, int n, int k) {
        spec_.id = id;
        spec_.n = n;
        spec_.k = k;
        spec_.epsilon = eps.value();
    }

    void variable(std::string name, Rational lower, Rational upper) {
        spec_.variables.push_back({std::move(name), lower, upper});
    }

    void constraint(std::string label, std::initializer_list<std::pair<std::string, Rational>> terms,
                    Rational constant) {
        std::vector<std::pair<std::string, Rational>> t(terms);
        constraint(std::move(label), t, constant);
    }

    void constraint(std::string label, const std::vector<std::pair<std::string, Rational>>& terms,
                    Rational constant) {
        LinearConstraint c{std::move(label), std::vector<Rational>(spec_.variables.size()), constant};
        for (const auto& [name, coeff] : terms) c.coeffs[spec_.index_of(name)] += coeff;
        spec_.constraints.push_back(std::move(c));
    }

    CaseSpec& spec() { return spec_; }

private:
    CaseSpec spec_;
};

Rational hirzebruch_maximizer(int n) { return n >= 2 ? Rational(1) - Rational(2, n) : Rational(0); }

// Anti-nefness of K + Delta-bar against S_n and a fiber on F_n.
void add_base_constraints(SpecBuilder& b, int n) {
    b.constraint("(K+D).S_n = n-2-na+sB <= 0", {{"a", Rational(-n)}, {"sB", Rational(1)}}, Rational(n - 2));
    b.constraint("(K+D).f = -2+a+sA <= 0", {{"a", Rational(1)}, {"sA", Rational(1)}}, Rational(-2));
}

}  // namespace

CaseSpec make_case(CaseId id, const Epsilon& eps, int n, int k) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (id != CaseId::GeneralK) k = 0;
    if (k < 0) throw std::invalid_argument("k must be non-negative");

    const Rational coeff_max = Rational(1) - eps.value();
    const Rational aggregate_max = Rational(4 + n);
    const Rational slack_max = 2;

    SpecBuilder b(id, eps, n, k);
    auto d_name = [](int j) { return "d" + std::to_string(j); };
    auto e_name = [](int j) { return "e" + std::to_string(j); };
    const Rational a_star = hirzebruch_maximizer(n);

    b.variable("a", 0, coeff_max);
    b.variable("sB", 0, aggregate_max);

    switch (id) {
        case CaseId::FnCase2: {
            b.variable("sA", 0, aggregate_max);
            add_base_constraints(b, n);
            b.spec().closed_form = hirzebruch_volume_bound(n);
            b.spec().extremal = b.spec().assign({{"a", a_star}});
            break;
        }
        case CaseId::Rho3: {
            b.variable("d1", 0, coeff_max);
            b.variable("sA", 0, aggregate_max);
            b.variable("e", 0, slack_max);
            add_base_constraints(b, n);
            b.constraint("sA >= 1-e-d1", {{"sA", Rational(-1)}, {"e", Rational(-1)}, {"d1", Rational(-1)}},
                         Rational(1));
            b.constraint("sB >= d1", {{"d1", Rational(1)}, {"sB", Rational(-1)}}, Rational(0));
            b.spec().closed_form = hirzebruch_volume_bound(n) - 1;
            b.spec().extremal = b.spec().assign({{"a", a_star}, {"e", Rational(1)}});
            break;
        }
        case CaseId::Rho4Sub11: {
            b.variable("d1", 0, coeff_max);
            b.variable("d2", 0, coeff_max);
            b.variable("sA", 0, aggregate_max);
            b.variable("e1", 0, slack_max);
            b.variable("e2", 0, slack_max);
            add_base_constraints(b, n);
            b.constraint("sA >= 1-e1-d1", {{"sA", Rational(-1)}, {"e1", Rational(-1)}, {"d1", Rational(-1)}},
                         Rational(1));
            b.constraint("sA >= 1-e2-d2", {{"sA", Rational(-1)}, {"e2", Rational(-1)}, {"d2", Rational(-1)}},
                         Rational(1));
            b.constraint("sB >= d1+d2", {{"d1", Rational(1)}, {"d2", Rational(1)}, {"sB", Rational(-1)}},
                         Rational(0));
            b.spec().closed_form = hirzebruch_volume_bound(n) - 2;
            b.spec().extremal = b.spec().assign({{"a", a_star}, {"e1", Rational(1)}, {"e2", Rational(1)}});
            break;
        }
        case CaseId::Rho4Sub12:
        case CaseId::Rho4Sub21: {
            b.variable("d1", 0, coeff_max);
            b.variable("sA", 0, aggregate_max);
            b.variable("e1", 0, slack_max);
            b.variable("e2", 0, slack_max);
            add_base_constraints(b, n);
            b.constraint("sA >= 2-e1-e2-2d1",
                         {{"sA", Rational(-1)}, {"e1", Rational(-1)}, {"e2", Rational(-1)}, {"d1", Rational(-2)}},
                         Rational(2));
            b.constraint("sB >= d1", {{"d1", Rational(1)}, {"sB", Rational(-1)}}, Rational(0));
            b.constraint("(K+D).F'' = -2+a+sA+e1+e2 <= 0",
                         {{"a", Rational(1)}, {"sA", Rational(1)}, {"e1", Rational(1)}, {"e2", Rational(1)}},
                         Rational(-2));
            b.spec().closed_form = same_fiber_volume_bound(n);
            if (n >= 2) {
                const Rational a = Rational(2 * n - 4, 2 * n - 1);
                const Rational d1 = a / 2;
                const Rational e = Rational(1) - d1;
                b.spec().extremal = b.spec().assign({{"a", a}, {"d1", d1}, {"sB", d1}, {"e1", e}, {"e2", e}});
            } else {
                b.spec().extremal = b.spec().assign({{"e1", Rational(1)}, {"e2", Rational(1)}});
            }
            break;
        }
        case CaseId::Rho4Sub22: {
            b.variable("d1", 0, coeff_max);
            b.variable("sA", 0, aggregate_max);
            b.variable("e1", 0, slack_max);
            b.variable("e2", 0, slack_max);
            add_base_constraints(b, n);
            b.constraint("sA >= (2-e1-e2-d1)/2",
                         {{"sA", Rational(-1)}, {"e1", Rational(-1, 2)}, {"e2", Rational(-1, 2)},
                          {"d1", Rational(-1, 2)}},
                         Rational(1));
            b.constraint("sB >= d1", {{"d1", Rational(1)}, {"sB", Rational(-1)}}, Rational(0));
            b.spec().closed_form = hirzebruch_volume_bound(n) - 2;
            b.spec().extremal = b.spec().assign({{"a", a_star}, {"e1", Rational(1)}, {"e2", Rational(1)}});
            break;
        }
        case CaseId::GeneralK: {
            for (int j = 1; j <= k; ++j) b.variable(d_name(j), 0, coeff_max);
            b.variable("sA", 0, aggregate_max);
            for (int j = 1; j <= k; ++j) b.variable(e_name(j), 0, slack_max);
            add_base_constraints(b, n);
            std::vector<std::pair<std::string, Rational>> sum_d{{"sB", Rational(-1)}};
            for (int j = 1; j <= k; ++j) {
                b.constraint("sA >= 1-" + e_name(j) + "-" + d_name(j),
                             std::vector<std::pair<std::string, Rational>>{
                                 {"sA", Rational(-1)}, {e_name(j), Rational(-1)}, {d_name(j), Rational(-1)}},
                             Rational(1));
                sum_d.emplace_back(d_name(j), Rational(1));
            }
            if (k > 0) b.constraint("sB >= sum of d_j", sum_d, Rational(0));
            b.spec().closed_form = general_blowup_bound(n, k);
            Assignment x(b.spec().variables.size());
            x[b.spec().index_of("a")] = a_star;
            for (int j = 1; j <= k; ++j) x[b.spec().index_of(e_name(j))] = 1;
            b.spec().extremal = std::move(x);
            break;
        }
    }
    return std::move(b.spec());
}

namespace {

bool is_penalty(const std::string& name) { return !name.empty() && name[0] == 'e'; }

}  // namespace

Rational objective(const CaseSpec& spec, const Assignment& x) {
    if (x.size() != spec.variables.size()) {
        throw std::invalid_argument("assignment has " + std::to_string(x.size()) + " values, case " +
                                    to_string(spec.id) + " has " + std::to_string(spec.variables.size()) +
                                    " variables");
    }
    const Rational n = spec.n;
    const Rational a = x[spec.index_of("a")];
    const Rational along_fiber = Rational(-2) + a + x[spec.index_of("sA")];
    const Rational along_section = n - 2 - n * a + x[spec.index_of("sB")];
    Rational v = n * along_fiber * along_fiber + Rational(2) * along_fiber * along_section;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (is_penalty(spec.variables[i].name)) v -= x[i] * x[i];
    }
    return v;
}

const std::vector<LinearConstraint>& constraint_set(const CaseSpec& spec) { return spec.constraints; }

std::vector<std::string> violations(const CaseSpec& spec, const Assignment& x) {
    if (x.size() != spec.variables.size()) throw std::invalid_argument("assignment size mismatch");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Variable& v = spec.variables[i];
        if (x[i] < v.lower || x[i] > v.upper) {
            out.push_back(v.name + " in [" + v.lower.str() + ", " + v.upper.str() + "]");
        }
    }
    for (const auto& c : spec.constraints) {
        Rational lhs = c.constant;
        for (std::size_t i = 0; i < x.size(); ++i) lhs += c.coeffs[i] * x[i];
        if (lhs > Rational(0)) out.push_back(c.label);
    }
    return out;
}

Rational default_step(const CaseSpec& spec) {
    return spec.variables.size() <= 3 ? Rational(1, 16) : Rational(1, 8);
}

Rational OptResult::best_value() const {
    Rational best = max_value.value_or(extremal_value);
    if (extremal_feasible) best = max(best, extremal_value);
    return best;
}

namespace {

using i64 = std::int64_t;

i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

i64 checked_int(const Rational& r) {
    if (!r.is_integer()) throw std::logic_error("expected an integer after scaling");
    return r.num();
}

struct Row {
    std::vector<i64> coeffs;
    i64 constant = 0;
};

// Exhaustive enumeration on integer numerators over a common denominator L.
// Variables are visited in declaration order; rows are checked as soon as
// their last variable is fixed, which restricts that variable to an interval.
class GridSearch {
public:
    GridSearch(const CaseSpec& spec, const Rational& step) : spec_(spec) {
        const std::size_t nv = spec.variables.size();
        i64 L = step.den();
        for (const auto& v : spec.variables) {
            L = std::lcm(L, v.lower.den());
            L = std::lcm(L, v.upper.den());
        }
        if (L > (i64{1} << 20)) throw std::overflow_error("grid denominator too large");
        L_ = L;
        const i64 stride = checked_int(step * Rational(L));
        values_.resize(nv);
        for (std::size_t i = 0; i < nv; ++i) {
            const i64 lo = checked_int(spec.variables[i].lower * Rational(L));
            const i64 hi = checked_int(spec.variables[i].upper * Rational(L));
            for (i64 v = lo; v <= hi; v += stride) values_[i].push_back(v);
            if (!values_[i].empty() && values_[i].back() != hi) values_[i].push_back(hi);
        }

        rows_at_.resize(nv);
        for (const auto& c : spec.constraints) {
            i64 D = c.constant.den();
            for (const auto& r : c.coeffs) D = std::lcm(D, r.den());
            Row row;
            row.coeffs.resize(nv);
            int last = -1;
            for (std::size_t i = 0; i < nv; ++i) {
                row.coeffs[i] = checked_int(c.coeffs[i] * Rational(D));
                if (row.coeffs[i] != 0) last = static_cast<int>(i);
            }
            row.constant = checked_int(c.constant * Rational(D) * Rational(L));
            if (last < 0) {
                if (row.constant > 0) constant_infeasible_ = true;
                continue;
            }
            rows_at_[last].push_back(std::move(row));
        }

        ia_ = spec.index_of("a");
        isa_ = spec.index_of("sA");
        isb_ = spec.index_of("sB");
        core_depth_ = std::max({ia_, isa_, isb_});
        penalty_.resize(nv);
        for (std::size_t i = 0; i < nv; ++i) penalty_[i] = is_penalty(spec.variables[i].name);

        const Rational scaled_bound = spec.closed_form * Rational(L) * Rational(L);
        threshold_ = scaled_bound.floor();
        x_.assign(nv, 0);
        idx_.assign(nv, 0);
        closed_leaf_ = nv > 0 && penalty_[nv - 1] && !values_[nv - 1].empty() && values_[nv - 1].front() >= 0 &&
                       static_cast<int>(nv - 1) > core_depth_;
    }

    void run() {
        if (constant_infeasible_ || values_.empty()) return;
        for (const auto& v : values_) {
            if (v.empty()) return;
        }
        descend(0, 0, 0);
    }

    OptResult result() const {
        OptResult r;
        r.closed_form = spec_.closed_form;
        r.feasible_points = feasible_;
        r.violations = violations_;
        if (has_best_) {
            r.max_value = Rational(best_) / Rational(L_ * L_);
            r.argmax = to_assignment(best_idx_);
            r.argmax_count = best_count_;
            r.attained_on_grid = *r.max_value == spec_.closed_form;
        }
        if (violations_ > 0) r.first_violation = to_assignment(first_violation_idx_);
        return r;
    }

private:
    Assignment to_assignment(const std::vector<std::size_t>& idx) const {
        Assignment a(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) a[i] = Rational(values_[i][idx[i]], L_);
        return a;
    }

    void descend(std::size_t depth, i64 core, i64 penalty_sum) {
        const auto& vals = values_[depth];
        i64 lo = vals.front();
        i64 hi = vals.back();
        for (const Row& row : rows_at_[depth]) {
            i64 rest = row.constant;
            for (std::size_t i = 0; i < depth; ++i) rest += row.coeffs[i] * x_[i];
            const i64 c = row.coeffs[depth];
            // c * x + rest <= 0
            if (c > 0) {
                hi = std::min(hi, floor_div(-rest, c));
            } else {
                lo = std::max(lo, ceil_div(rest, -c));
            }
        }
        if (lo > hi) return;
        auto first = std::lower_bound(vals.begin(), vals.end(), lo);
        auto last = std::upper_bound(first, vals.end(), hi);
        const bool leaf = depth + 1 == values_.size();
        if (leaf && closed_leaf_) {
            visit_range(core - penalty_sum, first - vals.begin(), last - vals.begin());
            return;
        }
        const bool at_core = static_cast<int>(depth) == core_depth_;
        const i64 n = spec_.n;
        for (auto it = first; it != last; ++it) {
            const i64 v = *it;
            x_[depth] = v;
            idx_[depth] = static_cast<std::size_t>(it - vals.begin());
            i64 c = core;
            if (at_core) {
                const i64 along_fiber = x_[ia_] + x_[isa_] - 2 * L_;
                const i64 along_section = (n - 2) * L_ - n * x_[ia_] + x_[isb_];
                c = n * along_fiber * along_fiber + 2 * along_fiber * along_section;
            }
            const i64 p = penalty_[depth] ? penalty_sum + v * v : penalty_sum;
            if (leaf) {
                visit(c - p);
            } else {
                descend(depth + 1, c, p);
            }
        }
    }

    // Leaf variable is a non-negative penalty: value - v^2 strictly decreases
    // along the range, so the first index is the maximizer and the violating
    // points form a prefix.
    void visit_range(i64 value, std::ptrdiff_t first, std::ptrdiff_t last) {
        const auto& vals = values_.back();
        idx_.back() = static_cast<std::size_t>(first);
        const std::uint64_t before = violations_;
        visit(value - vals[first] * vals[first]);
        feasible_ += static_cast<std::uint64_t>(last - first - 1);
        const i64 room = value - threshold_;
        if (violations_ == before || room <= 0) return;
        auto end = std::partition_point(vals.begin() + first + 1, vals.begin() + last,
                                        [room](i64 v) { return v * v < room; });
        violations_ += static_cast<std::uint64_t>(end - (vals.begin() + first + 1));
    }

    void visit(i64 value) {
        ++feasible_;
        if (!has_best_ || value > best_) {
            has_best_ = true;
            best_ = value;
            best_idx_ = idx_;
            best_count_ = 1;
        } else if (value == best_) {
            ++best_count_;
        }
        if (value > threshold_) {
            if (violations_ == 0) first_violation_idx_ = idx_;
            ++violations_;
        }
    }

    const CaseSpec& spec_;
    i64 L_ = 1;
    std::vector<std::vector<i64>> values_;
    std::vector<std::vector<Row>> rows_at_;
    bool constant_infeasible_ = false;
    int ia_ = 0, isa_ = 0, isb_ = 0, core_depth_ = 0;
    std::vector<bool> penalty_;
    i64 threshold_ = 0;
    bool closed_leaf_ = false;

    std::vector<i64> x_;
    std::vector<std::size_t> idx_;
    bool has_best_ = false;
    i64 best_ = 0;
    std::vector<std::size_t> best_idx_;
    std::uint64_t best_count_ = 0;
    std::uint64_t feasible_ = 0;
    std::uint64_t violations_ = 0;
    std::vector<std::size_t> first_violation_idx_;
};

}  // namespace

OptResult grid_maximize(const CaseSpec& spec, const Rational& step) {
    if (step <= Rational(0)) throw std::invalid_argument("grid step must be positive");
    GridSearch search(spec, step);
    search.run();
    OptResult r = search.result();

    r.extremal_feasible = is_feasible(spec, spec.extremal);
    r.extremal_value = objective(spec, spec.extremal);
    r.attained_by_extremal = r.extremal_feasible && r.extremal_value == spec.closed_form;
    const bool extremal_sound = !r.extremal_feasible || r.extremal_value <= spec.closed_form;
    r.verified = r.violations == 0 && extremal_sound && (r.attained_on_grid || r.attained_by_extremal);
    return r;
}

std::vector<int> admissible_n(CaseId id, const Epsilon& eps) {
    std::int64_t top = floor_two_over(eps);
    if (id == CaseId::Rho4Sub12 || id == CaseId::Rho4Sub21) {
        top = std::min(top, floor_same_fiber_index(eps));
    }
    std::vector<int> ns;
    for (std::int64_t n = 0; n <= top; ++n) ns.push_back(static_cast<int>(n));
    return ns;
}

SweepReport verify_all(const Epsilon& eps, const Rational& step, const std::vector<int>& general_ks) {
    SweepReport report;
    report.epsilon = eps.value();
    report.step = step;
    const int m = static_cast<int>(floor_two_over(eps));
    const BoundResult main = main_bound(eps);
    const BoundResult rho3 = rho3_bound(eps);
    const BoundResult rho4 = rho4_bound(eps);
    report.rho4_branch_a = rho4.branch("A").value;
    report.rho4_branch_b = rho4.branch("B").value;

    auto run = [&](CaseId id, int n, int k, std::string label, Rational bound) {
        CaseSpec spec = make_case(id, eps, n, k);
        SweepEntry entry{id, n, k, grid_maximize(spec, step), std::move(label), bound, false};
        entry.passed = entry.result.verified && entry.result.best_value() <= bound &&
                       spec.closed_form <= bound;
        report.entries.push_back(std::move(entry));
    };

    for (CaseId id : all_cases()) {
        if (id == CaseId::GeneralK) continue;
        for (int n : admissible_n(id, eps)) {
            switch (id) {
                case CaseId::FnCase2: run(id, n, 0, "main bound, Hirzebruch branch", main.branch("Hirzebruch").value); break;
                case CaseId::Rho3: run(id, n, 0, "rho >= 3 bound", rho3.value); break;
                case CaseId::Rho4Sub11:
                case CaseId::Rho4Sub22: run(id, n, 0, "rho >= 4 bound, branch A", report.rho4_branch_a); break;
                case CaseId::Rho4Sub12:
                case CaseId::Rho4Sub21: run(id, n, 0, "rho >= 4 bound, branch B", report.rho4_branch_b); break;
                case CaseId::GeneralK: break;
            }
        }
    }
    for (int k : general_ks) {
        for (int n : admissible_n(CaseId::GeneralK, eps)) {
            run(CaseId::GeneralK, n, k, "general blow-up bound at n = " + std::to_string(m),
                general_blowup_bound(m, k));
        }
    }

    report.passed = !report.entries.empty();
    bool first = true;
    for (const auto& e : report.entries) {
        report.passed = report.passed && e.passed;
        const Rational best = e.result.best_value();
        report.global_max = first ? best : max(report.global_max, best);
        first = false;
    }
    return report;
}

}  // namespace delpezzo
