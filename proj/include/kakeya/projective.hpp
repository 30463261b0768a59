#pragma once

#include <span>
#include <string>
#include <vector>

#include "kakeya/field.hpp"
#include "kakeya/grid.hpp"

namespace kakeya {

/// Point of projective space with homogeneous Scalar coordinates,
/// normalized so the first nonzero coordinate is 1. Equality is
/// coordinate equality.
class ProjPoint {
public:
    explicit ProjPoint(std::vector<Scalar> coords);
    static ProjPoint from_fq(const FqVec& v, const FieldCtx& ctx);

    const std::vector<Scalar>& coords() const { return coords_; }
    std::size_t ncoords() const { return coords_.size(); }
    std::size_t leading_index() const { return lead_; }
    FqVec to_fq() const;

    friend bool operator==(const ProjPoint& a, const ProjPoint& b);
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b);  // lex on coordinates

    std::string str() const;

private:
    std::vector<Scalar> coords_;
    std::size_t lead_;
};

using ProjDirection = ProjPoint;

/// Affine parametrized line p + t v, stored canonically: dir normalized as
/// a ProjDirection and the base slid along the line so its leading-dir
/// coordinate is 0. Two equal lines have equal representations.
class AffLine {
public:
    AffLine(std::vector<Scalar> base, ProjDirection dir);
    AffLine(std::vector<Scalar> base, std::vector<Scalar> dir_coords);

    const std::vector<Scalar>& base() const { return base_; }
    const ProjDirection& dir() const { return dir_; }
    std::size_t ambient_dim() const { return base_.size(); }

    std::vector<Scalar> point_at(const Scalar& t) const;

    friend bool operator==(const AffLine& a, const AffLine& b);
    friend bool operator!=(const AffLine& a, const AffLine& b) { return !(a == b); }

    std::string str() const;

private:
    std::vector<Scalar> base_;
    ProjDirection dir_;
};

std::string scalar_vec_str(std::span<const Scalar> v);  // "(a,b,c)"

/// Parse "a,b,c" into Scalars (integer or num/den literals).
std::vector<Scalar> parse_point_csv(std::string_view csv, const FieldCtx& ctx);

}  // namespace kakeya
