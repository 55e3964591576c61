#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "delpezzo/rational.hpp"

namespace delpezzo {

/// Raised when two classes living on different surfaces are combined.
class SurfaceMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class SurfaceKind { ProjectivePlane, HirzebruchBlowup };

/// A smooth rational surface given by its Picard lattice.
///
/// Either P^2 (basis {l}) or the Hirzebruch surface F_n blown up at k points
/// (basis {h, f, e_1, ..., e_k}, e_i the total transform of the i-th
/// exceptional curve). The intersection form is
///   l.l = 1;  h.h = n, h.f = 1, f.f = 0, e_i.e_j = -delta_ij, e_i.h = e_i.f = 0.
class SurfaceModel {
public:
    static SurfaceModel projective_plane();
    static SurfaceModel hirzebruch(int n, int k = 0);

    SurfaceKind kind() const { return kind_; }
    bool is_plane() const { return kind_ == SurfaceKind::ProjectivePlane; }
    int n() const { return n_; }
    int k() const { return k_; }
    int rank() const { return is_plane() ? 1 : k_ + 2; }

    std::vector<std::string> basis_labels() const;
    Rational gram(int i, int j) const;
    std::vector<std::vector<Rational>> gram_matrix() const;

    /// True when this surface is obtained from `base` by blowing up further
    /// points (or is equal to it).
    bool refines(const SurfaceModel& base) const;

    std::string describe() const;

    friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;

private:
    SurfaceModel(SurfaceKind kind, int n, int k) : kind_(kind), n_(n), k_(k) {}

    SurfaceKind kind_;
    int n_;
    int k_;
};

/// Element of Pic(S) (x) Q, as coordinates over the surface basis.
class DivisorClass {
public:
    DivisorClass(SurfaceModel surface, std::vector<Rational> coeffs);

    static DivisorClass zero(const SurfaceModel& surface);
    /// Basis vector by 0-based position.
    static DivisorClass basis(const SurfaceModel& surface, int index);

    static DivisorClass line(const SurfaceModel& plane);
    static DivisorClass h(const SurfaceModel& surface);
    static DivisorClass f(const SurfaceModel& surface);
    /// Total transform e_i of the i-th exceptional curve, 1-based.
    static DivisorClass e(const SurfaceModel& surface, int point_id);
    /// The class h - n f of the negative section S_n (or of S_0 = h).
    static DivisorClass negative_section(const SurfaceModel& surface);

    const SurfaceModel& surface() const { return surface_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }

    DivisorClass& operator+=(const DivisorClass& rhs);
    DivisorClass& operator-=(const DivisorClass& rhs);
    DivisorClass& operator*=(const Rational& scalar);

    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Rational& s, DivisorClass a) { return a *= s; }
    friend DivisorClass operator*(DivisorClass a, const Rational& s) { return a *= s; }
    friend DivisorClass operator-(DivisorClass a) { return a *= Rational(-1); }

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

    /// Human-readable form such as "-2h + 4f + e1".
    std::string str() const;

private:
    SurfaceModel surface_;
    std::vector<Rational> coeffs_;
};

/// Intersection number of two classes on the same surface.
Rational pair(const DivisorClass& a, const DivisorClass& b);

inline Rational self_intersection(const DivisorClass& d) { return pair(d, d); }

/// K = -3l on P^2, K = -2h + (n-2)f + sum e_j on a blow-up of F_n.
DivisorClass canonical_class(const SurfaceModel& surface);

/// Total transform to a refinement: existing coordinates kept, new e_j = 0.
DivisorClass pullback(const DivisorClass& d, const SurfaceModel& to);

/// Push-forward to a surface with fewer blown-up points: drops trailing e_j.
DivisorClass pushforward(const DivisorClass& d, const SurfaceModel& to);

/// pullback(base, to) + sum_j coeffs[j] e_{base.k + 1 + j}: rewrites a class
/// on the base after blowing up, with explicit exceptional coefficients.
DivisorClass crepant_pullback(const DivisorClass& base, const SurfaceModel& to,
                              std::span<const Rational> exceptional_coeffs);

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sylvester inertia of a symmetric rational matrix by congruence
/// diagonalization. Throws std::invalid_argument if the matrix is not square
/// and symmetric.
Inertia inertia(std::vector<std::vector<Rational>> matrix);

}  // namespace delpezzo
