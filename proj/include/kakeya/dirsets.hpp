#pragma once

#include "kakeya/kakeyasets.hpp"
#include "kakeya/linalg.hpp"
#include "kakeya/projective.hpp"

namespace kakeya {

/// The rational points of Delta(V(f)) over F_q: directions of lines
/// contained in the hypersurface, with per-direction line counts.
struct DirectionSet {
    std::size_t ncoords = 0;  // ambient N; directions live in P^{N-1}
    std::uint64_t q = 0;
    std::vector<ProjDirection> members;  // sorted by normalized coordinates
    std::vector<std::uint64_t> line_counts;  // aligned with members
};

/// All lines {p + t v} inside V(f), bases ranging over the transversal of
/// v's leading coordinate; exhaustive and duplicate-free.
std::vector<AffLine> lines_in_direction(const MultiPoly& f, const ProjDirection& v,
                                        std::uint64_t q);

/// Delta(V(f))(F_q) by exhaustion over all normalized directions.
DirectionSet direction_set(const MultiPoly& f, std::uint64_t q, const VerifyOptions& opts = {});

/// |Delta| against the finite-field surrogate of "dim Delta = n-1":
/// 2 |Delta| >= q^{n-1}, n = N-1. The surrogate never claims the
/// closed-field statement; the note says so.
struct KakeyaSubvarietyReport {
    std::uint64_t q = 0;
    unsigned n = 0;  // dim X for a hypersurface in A^N
    std::uint64_t delta_size = 0;
    std::uint64_t threshold_power = 0;  // q^{n-1}
    bool surrogate_holds = false;
    bool finite_sample = true;
    std::string note;
};
KakeyaSubvarietyReport kakeya_subvariety_report(const MultiPoly& f, std::uint64_t q,
                                                const VerifyOptions& opts = {});

/// Dimension of the space of degree <= d polynomials in N variables that
/// vanish on the line l, computed as the kernel of the (d+1) x dim S_d
/// coefficient system. Equals C(N+d, N) - d - 1; the system has rank d+1.
unsigned hypersurfaces_containing_line_dim(unsigned N, unsigned d, const AffLine& l);

std::uint64_t binomial_u64(unsigned n, unsigned k);

/// Count of lines through v = [0:1:0:...:0] inside V(sum x_{i+1} x_1^{d-i})
/// over F_q; must be q^{N-1-d}.
std::uint64_t small_t_example_count(unsigned N, unsigned d, std::uint64_t q);

/// Linear projection away from a center at infinity onto the coordinate
/// hyperplane {x_j = 0}, realized on affine coordinates by an (N-1) x N
/// matrix. The center must be off that hyperplane.
struct LinearProjection {
    ProjPoint center;        // direction coordinates of the center
    std::size_t dropped;     // index j of the target hyperplane V(x_j)
    Matrix matrix;
};
LinearProjection make_projection(const ProjPoint& center, std::size_t target_coord);

/// Image of a direction; CenterOnDirection when v is the center itself.
ProjDirection project_direction(const LinearProjection& pi, const ProjDirection& v);

/// Image of an affine line (a line again whenever the direction misses the
/// center).
AffLine project_line(const LinearProjection& pi, const AffLine& l);

/// Image of a direction set, normalized and deduplicated.
DirectionSet project_direction_set(const DirectionSet& delta, const LinearProjection& pi);

}  // namespace kakeya
