#pragma once

#include <optional>
#include <utility>

#include "kakeya/grid.hpp"
#include "kakeya/parse.hpp"
#include "kakeya/projective.hpp"

namespace kakeya {

/// R union {g != 0}: an open part plus marked points plus closed pieces
/// (each piece a generator list contributing its vanishing locus).
/// Membership: x in E iff g(x) != 0, or x is a marked point, or all
/// generators of some piece vanish at x.
class ConstructibleSet {
public:
    ConstructibleSet(MultiPoly open_part, std::vector<std::vector<Scalar>> closed_points,
                     std::vector<std::vector<MultiPoly>> closed_pieces, bool type1);

    const VarSet& vars() const { return open_part_.vars(); }
    std::size_t ambient_dim() const { return vars().size(); }
    const MultiPoly& open_part() const { return open_part_; }
    const std::vector<std::vector<Scalar>>& closed_points() const { return closed_points_; }
    const std::vector<std::vector<MultiPoly>>& closed_pieces() const { return closed_pieces_; }
    bool type1() const { return type1_; }

    bool member(std::span<const Scalar> x) const;

    /// Instantiate a Q-coefficient set over F_q.
    ConstructibleSet reduce(std::uint64_t q) const;

    std::string name;  // label for reports and files

private:
    MultiPoly open_part_;
    std::vector<std::vector<Scalar>> closed_points_;
    std::vector<std::vector<MultiPoly>> closed_pieces_;
    bool type1_;
};

/// One case of a piecewise direction -> line witness family. Guards are
/// vanish/nonvanish conditions on normalized direction coordinates; the
/// first matching case wins. Witness coordinates may divide by the declared
/// denominators.
struct CaseRule {
    std::vector<MultiPoly> guard_vanish;
    std::vector<MultiPoly> guard_nonvanish;
    std::vector<RationalExpr> base;
    std::vector<RationalExpr> dir;
    std::vector<MultiPoly> denominators;
};

struct KakeyaCertificate {
    VarSet dir_vars;
    std::vector<CaseRule> cases;
};

struct VerifyOptions {
    unsigned threads = 1;
    std::uint64_t budget = 100'000'000;  // membership probes
    bool record_witnesses = true;
};

/// Outcome of one verification run. pass iff failing_direction is absent;
/// failure_kind distinguishes a missing witness, an uncovered direction, a
/// vanished denominator, a witness-line containment failure, and a witness
/// direction mismatch. seconds is wall clock and is excluded from canonical
/// JSON output.
struct VerificationReport {
    std::string mode;
    bool pass = false;
    std::uint64_t q = 0;
    std::uint64_t directions_checked = 0;
    std::string failure_kind;
    std::optional<std::string> failing_direction;
    std::vector<std::pair<std::string, std::string>> witness_map;
    double seconds = 0.0;
};

/// Blind exhaustive verification: for every direction of P^{n-1}(F_q),
/// search all lines in that direction (bases on the transversal coordinate
/// hyperplane of the leading coordinate) for one contained in E.
VerificationReport verify_kakeya_exhaustive(const ConstructibleSet& E, std::uint64_t q,
                                            const VerifyOptions& opts = {});

/// Certificate verification: guard coverage of every direction plus
/// containment of each instantiated witness line.
VerificationReport verify_certificate(const ConstructibleSet& E, const KakeyaCertificate& cert,
                                      std::uint64_t q, const VerifyOptions& opts = {});

/// E = A^n - V(Z_gens), swept exhaustively. An empty generator list means
/// Z is empty, so E is everything.
VerificationReport verify_open_complement_criterion(const std::vector<MultiPoly>& Z_gens,
                                                    unsigned n, std::uint64_t q,
                                                    const VerifyOptions& opts = {});

// --- built-in examples ---

/// {q_pt} union {L != 0} for a hyperplane V(L) through q_pt.
ConstructibleSet build_hyperplane_example(unsigned n, const MultiPoly& L,
                                          std::span<const Scalar> q_pt);

/// {vertex} union {x1 x3 - x2^2 != 0} in A^3.
ConstructibleSet build_quadric_cone_example();

/// The two-point cone example over the cuspidal curve y^{d-1} z = x^d,
/// with its three-case certificate.
std::pair<ConstructibleSet, KakeyaCertificate> build_cusp_cone_example(unsigned d);

/// The double-cone example: vertex + (X cap X') + {G != 0}, with the
/// two-case certificate (cone ruling through the vertex off C, ruling of
/// the translated cone through C-directions).
std::pair<ConstructibleSet, KakeyaCertificate> build_double_cone_example(unsigned n, unsigned d);

}  // namespace kakeya
