#include "delpezzo/lattice.hpp"

#include <sstream>
#include <utility>

namespace delpezzo {

SurfaceModel SurfaceModel::projective_plane() { return {SurfaceKind::ProjectivePlane, 0, 0}; }

SurfaceModel SurfaceModel::hirzebruch(int n, int k) {
    if (n < 0) throw std::invalid_argument("Hirzebruch index must be non-negative");
    if (k < 0) throw std::invalid_argument("number of blown-up points must be non-negative");
    return {SurfaceKind::HirzebruchBlowup, n, k};
}

std::vector<std::string> SurfaceModel::basis_labels() const {
    if (is_plane()) return {"l"};
    std::vector<std::string> labels{"h", "f"};
    for (int i = 1; i <= k_; ++i) labels.push_back("e" + std::to_string(i));
    return labels;
}

Rational SurfaceModel::gram(int i, int j) const {
    if (i < 0 || j < 0 || i >= rank() || j >= rank()) {
        throw std::out_of_range("basis index out of range");
    }
    if (is_plane()) return 1;
    if (i > j) std::swap(i, j);
    if (i == 0 && j == 0) return n_;
    if (i == 0 && j == 1) return 1;
    if (i == 1 && j == 1) return 0;
    if (i >= 2 && i == j) return -1;
    return 0;
}

std::vector<std::vector<Rational>> SurfaceModel::gram_matrix() const {
    std::vector<std::vector<Rational>> g(rank(), std::vector<Rational>(rank()));
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) g[i][j] = gram(i, j);
    return g;
}

bool SurfaceModel::refines(const SurfaceModel& base) const {
    if (kind_ != base.kind_) return false;
    if (is_plane()) return true;
    return n_ == base.n_ && k_ >= base.k_;
}

std::string SurfaceModel::describe() const {
    if (is_plane()) return "P2";
    std::string s = "F" + std::to_string(n_);
    if (k_ > 0) s += " blown up at " + std::to_string(k_) + " point" + (k_ == 1 ? "" : "s");
    return s;
}

DivisorClass::DivisorClass(SurfaceModel surface, std::vector<Rational> coeffs)
    : surface_(surface), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != surface_.rank()) {
        throw std::invalid_argument("class has " + std::to_string(coeffs_.size()) +
                                    " coordinates but " + surface_.describe() + " has rank " +
                                    std::to_string(surface_.rank()));
    }
}

DivisorClass DivisorClass::zero(const SurfaceModel& surface) {
    return {surface, std::vector<Rational>(surface.rank())};
}

DivisorClass DivisorClass::basis(const SurfaceModel& surface, int index) {
    if (index < 0 || index >= surface.rank()) throw std::out_of_range("basis index out of range");
    DivisorClass d = zero(surface);
    d.coeffs_[index] = 1;
    return d;
}

DivisorClass DivisorClass::line(const SurfaceModel& plane) {
    if (!plane.is_plane()) throw SurfaceMismatch("the line class exists only on P2");
    return basis(plane, 0);
}

DivisorClass DivisorClass::h(const SurfaceModel& surface) {
    if (surface.is_plane()) throw SurfaceMismatch("h is not a class on P2");
    return basis(surface, 0);
}

DivisorClass DivisorClass::f(const SurfaceModel& surface) {
    if (surface.is_plane()) throw SurfaceMismatch("f is not a class on P2");
    return basis(surface, 1);
}

DivisorClass DivisorClass::e(const SurfaceModel& surface, int point_id) {
    if (surface.is_plane() || point_id < 1 || point_id > surface.k()) {
        throw std::out_of_range("no exceptional class e" + std::to_string(point_id) + " on " +
                                surface.describe());
    }
    return basis(surface, point_id + 1);
}

DivisorClass DivisorClass::negative_section(const SurfaceModel& surface) {
    return h(surface) - Rational(surface.n()) * f(surface);
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& rhs) {
    if (surface_ != rhs.surface_) {
        throw SurfaceMismatch("cannot add classes on " + surface_.describe() + " and " +
                              rhs.surface_.describe());
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& rhs) {
    if (surface_ != rhs.surface_) {
        throw SurfaceMismatch("cannot subtract classes on " + surface_.describe() + " and " +
                              rhs.surface_.describe());
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

std::string DivisorClass::str() const {
    auto labels = surface_.basis_labels();
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) out << "-";
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        if (mag != Rational(1)) out << mag;
        out << labels[i];
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

Rational pair(const DivisorClass& a, const DivisorClass& b) {
    const SurfaceModel& s = a.surface();
    if (s != b.surface()) {
        throw SurfaceMismatch("cannot intersect classes on " + s.describe() + " and " +
                              b.surface().describe());
    }
    if (s.is_plane()) return a[0] * b[0];
    // (x h + y f + sum z_i e_i).(x' h + y' f + sum z'_i e_i)
    Rational total = Rational(s.n()) * a[0] * b[0] + a[0] * b[1] + a[1] * b[0];
    for (int i = 2; i < s.rank(); ++i) total -= a[i] * b[i];
    return total;
}

DivisorClass canonical_class(const SurfaceModel& surface) {
    if (surface.is_plane()) return Rational(-3) * DivisorClass::line(surface);
    std::vector<Rational> c(surface.rank(), Rational(1));
    c[0] = -2;
    c[1] = surface.n() - 2;
    return {surface, std::move(c)};
}

DivisorClass pullback(const DivisorClass& d, const SurfaceModel& to) {
    if (!to.refines(d.surface())) {
        throw SurfaceMismatch(to.describe() + " is not a blow-up of " + d.surface().describe());
    }
    std::vector<Rational> c = d.coeffs();
    c.resize(to.rank());
    return {to, std::move(c)};
}

DivisorClass pushforward(const DivisorClass& d, const SurfaceModel& to) {
    if (!d.surface().refines(to)) {
        throw SurfaceMismatch(d.surface().describe() + " does not blow down to " + to.describe());
    }
    std::vector<Rational> c(d.coeffs().begin(), d.coeffs().begin() + to.rank());
    return {to, std::move(c)};
}

DivisorClass crepant_pullback(const DivisorClass& base, const SurfaceModel& to,
                              std::span<const Rational> exceptional_coeffs) {
    DivisorClass out = pullback(base, to);
    const int added = to.rank() - base.surface().rank();
    if (static_cast<int>(exceptional_coeffs.size()) != added) {
        throw std::invalid_argument("expected " + std::to_string(added) +
                                    " exceptional coefficients");
    }
    const int first = base.surface().k() + 1;
    for (int j = 0; j < added; ++j) {
        out += exceptional_coeffs[j] * DivisorClass::e(to, first + j);
    }
    return out;
}

Inertia inertia(std::vector<std::vector<Rational>> m) {
    const std::size_t size = m.size();
    for (const auto& row : m) {
        if (row.size() != size) throw std::invalid_argument("matrix is not square");
    }
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (m[i][j] != m[j][i]) throw std::invalid_argument("matrix is not symmetric");

    // Symmetric elimination: each step applies the same row and column
    // operation, so the result stays congruent to the input.
    Inertia result;
    std::size_t remaining = size;
    std::vector<std::size_t> active(size);
    for (std::size_t i = 0; i < size; ++i) active[i] = i;

    auto add_multiple = [&](std::size_t dst, std::size_t src, const Rational& c) {
        for (std::size_t t = 0; t < size; ++t) m[dst][t] += c * m[src][t];
        for (std::size_t t = 0; t < size; ++t) m[t][dst] += c * m[t][src];
    };

    while (remaining > 0) {
        std::size_t pivot = size;
        for (std::size_t idx = 0; idx < remaining; ++idx) {
            if (!m[active[idx]][active[idx]].is_zero()) {
                pivot = idx;
                break;
            }
        }
        if (pivot == size) {
            // Zero diagonal: find an off-diagonal entry and fold it in.
            bool found = false;
            for (std::size_t a = 0; a < remaining && !found; ++a) {
                for (std::size_t b = a + 1; b < remaining && !found; ++b) {
                    if (!m[active[a]][active[b]].is_zero()) {
                        add_multiple(active[a], active[b], Rational(1));
                        found = true;
                    }
                }
            }
            if (!found) {
                result.zero += static_cast<int>(remaining);
                break;
            }
            continue;
        }
        std::size_t p = active[pivot];
        const Rational d = m[p][p];
        for (std::size_t idx = 0; idx < remaining; ++idx) {
            std::size_t r = active[idx];
            if (r == p || m[r][p].is_zero()) continue;
            add_multiple(r, p, -m[r][p] / d);
        }
        (d.sign() > 0 ? result.positive : result.negative) += 1;
        active[pivot] = active[remaining - 1];
        --remaining;
    }
    return result;
}

}  // namespace delpezzo
