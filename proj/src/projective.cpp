#include "kakeya/projective.hpp"

#include <sstream>

namespace kakeya {

ProjPoint::ProjPoint(std::vector<Scalar> coords) : coords_(std::move(coords)), lead_(0) {
    while (lead_ < coords_.size() && coords_[lead_].is_zero()) ++lead_;
    if (lead_ == coords_.size()) throw ZeroDirection("all homogeneous coordinates are zero");
    Scalar inv = coords_[lead_].inv();
    for (auto& c : coords_) c *= inv;
}

ProjPoint ProjPoint::from_fq(const FqVec& v, const FieldCtx& ctx) {
    std::vector<Scalar> coords;
    coords.reserve(v.size());
    for (auto a : v) coords.push_back(Scalar::from_int(ctx, a));
    return ProjPoint(std::move(coords));
}

FqVec ProjPoint::to_fq() const {
    FqVec v;
    v.reserve(coords_.size());
    for (const auto& c : coords_) v.push_back(static_cast<std::uint32_t>(c.fp_value()));
    return v;
}

bool operator==(const ProjPoint& a, const ProjPoint& b) {
    if (a.coords_.size() != b.coords_.size()) return false;
    for (std::size_t i = 0; i < a.coords_.size(); ++i)
        if (a.coords_[i] != b.coords_[i]) return false;
    return true;
}

bool operator<(const ProjPoint& a, const ProjPoint& b) {
    if (a.coords_.size() != b.coords_.size())
        throw DimensionMismatch("comparing projective points of different spaces");
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
        int c = a.coords_[i].cmp(b.coords_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string ProjPoint::str() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) out << (i ? ":" : "") << coords_[i].str();
    out << "]";
    return out.str();
}

AffLine::AffLine(std::vector<Scalar> base, ProjDirection dir)
    : base_(std::move(base)), dir_(std::move(dir)) {
    if (base_.size() != dir_.ncoords())
        throw DimensionMismatch("line base and direction have different lengths");
    // Slide the base so that its coordinate along the leading direction
    // entry is 0; this is the unique transversal representative.
    const std::size_t j = dir_.leading_index();
    Scalar t = base_[j];
    for (std::size_t i = 0; i < base_.size(); ++i) base_[i] -= t * dir_.coords()[i];
}

AffLine::AffLine(std::vector<Scalar> base, std::vector<Scalar> dir_coords)
    : AffLine(std::move(base), ProjDirection(std::move(dir_coords))) {}

std::vector<Scalar> AffLine::point_at(const Scalar& t) const {
    std::vector<Scalar> p = base_;
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += t * dir_.coords()[i];
    return p;
}

bool operator==(const AffLine& a, const AffLine& b) {
    return a.dir_ == b.dir_ && a.base_ == b.base_;
}

std::string AffLine::str() const {
    std::ostringstream out;
    out << scalar_vec_str(base_) << " + t*" << scalar_vec_str(dir_.coords());
    return out.str();
}

std::string scalar_vec_str(std::span<const Scalar> v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i].str();
    out << ")";
    return out.str();
}

std::vector<Scalar> parse_point_csv(std::string_view csv, const FieldCtx& ctx) {
    std::vector<Scalar> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        if (comma == std::string_view::npos) comma = csv.size();
        std::string item(csv.substr(start, comma - start));
        std::erase(item, ' ');
        if (item.empty()) throw UsageError("empty coordinate in point '" + std::string(csv) + "'");
        out.push_back(Scalar::from_string(ctx, item));
        if (comma == csv.size()) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace kakeya
