#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "octobil/bilinear_map.hpp"
#include "octobil/pattern.hpp"

namespace octobil {

/// Exact linear span of {f(e_i, e_j)} over all basis pairs of a coordinate
/// subdomain. The basis is the unique reduced row-echelon basis of the span.
struct ImageSpan {
    int dimension = 0;
    Matrix basis;              // dimension x k rows in reduced echelon form
    std::vector<int> pivots;   // pivot column per basis row, increasing
};

/// Span over the full domain.
ImageSpan image_span(const BilinearMap& map);

/// Span over the coordinate subdomain selected by index lists into the
/// parent's domains.
ImageSpan image_span(const BilinearMap& map, const std::vector<int>& a_indices,
                     const std::vector<int>& b_indices);

/// A catalog map restricted to coordinate subspaces of its domains, with the
/// codomain compressed onto the exact image span. Nonsingularity is inherited
/// from the parent on the restricted domain.
class RestrictedMap {
public:
    RestrictedMap(MapPtr parent, SubspacePattern a_pattern, SubspacePattern b_pattern);

    const MapPtr& parent() const { return parent_; }
    const SubspacePattern& a_pattern() const { return a_pattern_; }
    const SubspacePattern& b_pattern() const { return b_pattern_; }

    int r() const { return static_cast<int>(a_indices_.size()); }
    int s() const { return static_cast<int>(b_indices_.size()); }
    int k() const { return span_.dimension; }
    const ImageSpan& codomain_span() const { return span_; }

    /// Restricted coordinates -> parent coordinates (zero elsewhere).
    std::vector<Rational> embed_a(std::span<const Rational> x) const;
    std::vector<Rational> embed_b(std::span<const Rational> y) const;

    /// Parent-codomain output of the restricted evaluation (length parent k).
    std::vector<Rational> evaluate_raw(std::span<const Rational> x, std::span<const Rational> y) const;

    /// Compressed output in codomain-span coordinates (length k()). The raw
    /// output always lies in the span, so reading pivot coordinates is exact.
    std::vector<Rational> evaluate(std::span<const Rational> x, std::span<const Rational> y) const;

    /// Compressed coordinates -> parent codomain vector.
    std::vector<Rational> expand(std::span<const Rational> compressed) const;

    /// The compressed map as a standalone BilinearMap (id: parent[a;b]).
    MapPtr as_bilinear_map() const;

private:
    MapPtr parent_;
    SubspacePattern a_pattern_, b_pattern_;
    std::vector<int> a_indices_, b_indices_;
    ImageSpan span_;
};

/// One row of the restriction table: declared patterns, computed dimensions
/// and the dimensions claimed for that construction, compared side by side.
struct RestrictionRow {
    std::string row_id;
    SubspacePattern a_pattern, b_pattern;
    int computed_r = 0, computed_s = 0, computed_k = 0;
    int claimed_r = 0, claimed_s = 0, claimed_k = 0;
    bool match = false;
    std::string note;
    std::shared_ptr<const RestrictedMap> map;
};

/// The seven tabulated restrictions of main_f (rows r1..r7). Every row is
/// computed from its declared slot patterns and compared against the claimed
/// triple; mismatches are reported in the row, never silently corrected. For
/// a mismatching row the note records which alternative b0 slot shape, if
/// any, reproduces the claimed triple.
std::vector<RestrictionRow> newnbl_table();

/// The alternative-embedding variant of row r5 (b0 read as a real-plus-complex
/// slot), which reproduces the claimed triple; nullopt if it no longer does.
std::optional<RestrictionRow> newnbl_r5_alternative();

}  // namespace octobil
