#pragma once

#include <optional>

#include "kakeya/poly.hpp"
#include "kakeya/projective.hpp"

namespace kakeya {

/// A positive multiplicity, or INFINITE when a line lies inside the
/// hypersurface (identically-zero restriction).
struct MultResult {
    bool infinite = false;
    unsigned value = 0;

    static MultResult inf() { return {true, 0}; }
    static MultResult finite(unsigned v) { return {false, v}; }
    bool at_least(unsigned k) const { return infinite || value >= k; }

    friend bool operator==(const MultResult& a, const MultResult& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
    std::string str() const { return infinite ? "INFINITE" : std::to_string(value); }
};

/// Least total degree of a nonzero term of g(x + p); 0 iff g(p) != 0.
MultResult multiplicity(const MultiPoly& g, std::span<const Scalar> p);

/// Order of vanishing at t = 0 of g restricted to the line, measured at the
/// line's canonical base point; INFINITE iff the line lies in V(g).
MultResult intersection_multiplicity(const MultiPoly& g, const AffLine& l);

/// At a smooth point p of V(g): does the linear part of the local expansion
/// divide the quadratic part? (A zero quadratic part counts as divisible.)
bool is_flexy_point(const MultiPoly& g, std::span<const Scalar> p);

/// All F_p-rational directions v with I_p(line(p,v), V(g)) >= k, INFINITE
/// included, by exhausting normalized directions. Sorted by normalized
/// coordinates. g must live over a prime field.
std::vector<ProjDirection> contact_directions(const MultiPoly& g, std::span<const Scalar> p,
                                              unsigned k);

/// Finite-sample funny-curve scan over F_q: a center p0 such that every
/// smooth F_q-point of C has its tangent line through p0. A pass is a
/// necessary condition only, never a proof of the closed-field statement.
struct FunnyScan {
    std::optional<ProjPoint> center;
    bool degree_too_small = false;  // deg C < 2: every point qualifies trivially
    bool no_smooth_points = false;  // vacuous scan
};
FunnyScan is_funny_over_fq(const MultiPoly& C, std::uint64_t q);

/// Multiplicity of G at a projective point, computed in the affine chart of
/// the point's first nonzero coordinate. G must be homogeneous and nonzero.
unsigned proj_multiplicity(const MultiPoly& G, const ProjPoint& P);

/// Search for a point of multiplicity deg G: coordinate points always, all
/// of P^n(F_q) when an enumeration field is supplied.
struct ConeScan {
    std::optional<ProjPoint> vertex;
    bool degree_one = false;  // every point of a hyperplane qualifies
};
ConeScan detect_cone(const MultiPoly& G, std::optional<std::uint64_t> enum_q = std::nullopt);

/// Necessary-condition checks, over F_q, for the extreme type-1 shape:
/// cone + unique singular point at infinity of multiplicity d-1 + a
/// non-flexy smooth point + no funny center. Finite-field evidence only.
struct DiagnosisReport {
    unsigned d = 0;
    std::uint64_t q = 0;
    bool finite_sample = true;
    bool irreducibility_assumed = true;

    bool cone_detected = false;
    std::optional<ProjPoint> vertex;

    std::vector<ProjPoint> singular_points;
    bool unique_singular = false;

    unsigned singular_multiplicity = 0;
    bool singular_mult_is_d_minus_1 = false;

    std::uint64_t smooth_points = 0;
    std::uint64_t nonflexy_smooth_points = 0;
    bool has_nonflexy_smooth_point = false;

    bool no_funny_center = true;
    std::optional<ProjPoint> funny_center;

    bool pass() const {
        return cone_detected && unique_singular && singular_mult_is_d_minus_1 &&
               has_nonflexy_smooth_point && no_funny_center;
    }
};
DiagnosisReport diagnose_type1_extreme(const MultiPoly& g, std::uint64_t q);

/// Transport a polynomial to F_q; the identity if it already lives there.
MultiPoly to_fq(const MultiPoly& g, std::uint64_t q);

}  // namespace kakeya
