#pragma once

#include "kakeya/kakeyasets.hpp"
#include "kakeya/parse.hpp"

namespace kakeya {

/// A subvariety X of A^N cut out by generators, a polynomial coordinate map
/// to A^n, and a rational witness-line family over an open set of target
/// directions. Direction parameters form a chart of P^{n-1}: the direction
/// of parameter tuple u is [D_1(u) : ... : D_n(u)].
struct CoverSpec {
    std::string name;
    VarSet ambient_vars;   // N coordinates on A^N
    VarSet target_vars;    // n coordinates on A^n
    VarSet param_vars;     // direction parameters
    std::vector<MultiPoly> generators;        // cut out X, in ambient_vars
    std::vector<MultiPoly> projection;        // n maps A^N -> A^n, in ambient_vars
    std::vector<MultiPoly> direction_coords;  // n forms in param_vars
    std::vector<MultiPoly> guard_vanish;      // U: these vanish ...
    std::vector<MultiPoly> guard_nonvanish;   // ... and these do not
    std::vector<RationalExpr> witness_base;   // N coordinates, in param_vars
    std::vector<RationalExpr> witness_dir;    // N coordinates, in param_vars
    std::vector<MultiPoly> denominators;      // declared denominators, param_vars
};

struct CoverReport {
    std::string mode;
    std::string name;
    std::vector<bool> generator_identities;
    std::vector<std::string> residuals;  // canonical residual per generator ("0" on pass)
    bool direction_match = false;
    std::uint64_t q = 0;
    std::uint64_t directions_checked = 0;
    bool pass = false;
    std::string fail_note;
    double seconds = 0.0;
};

/// Substitute the witness line into every generator over Q with the
/// direction parameters adjoined as variables; pass iff each residual is
/// the zero polynomial after clearing the declared denominators, and the
/// projected direction is projectively equal to the direction coordinates
/// as a polynomial identity. Errors: DenominatorUndeclared, NonLineImage.
CoverReport verify_cover_symbolic(const CoverSpec& spec);

/// Instantiate the witness for every F_q-direction in U (guards satisfied,
/// denominators nonzero): all q line points satisfy every generator and the
/// projected points form a line in the required direction. EmptyDomain when
/// U(F_q) is empty.
CoverReport verify_cover_exhaustive(const CoverSpec& spec, std::uint64_t q,
                                    const VerifyOptions& opts = {});

/// X = V(a_i + b^2 - c_i^2) in A^{2n-1} -> A^n forgetting the c's.
CoverSpec build_squares_cover(unsigned n);

/// The G(1,4) slice: V(z - xy, ay - b + a, -bx + c) in A^6 -> A^3 via
/// (a,b,c,x,y,z) -> (a - x + y, b - z, c), directions [al : 1 : ga], al != 0.
CoverSpec build_g14_cover();

/// |{(a_1..a_{n-1}, b) : a_i + b^2 is a square for all i}| by brute force;
/// equals q ((q+1)/2)^{n-1}.
std::uint64_t census_squares_image(unsigned n, std::uint64_t q);

}  // namespace kakeya
