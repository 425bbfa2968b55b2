#pragma once

#include <string>
#include <vector>

#include "octobil/bilinear_map.hpp"

namespace octobil {

/// Upper-bound record: a nonsingular bilinear map R^r x R^s -> R^k exists,
/// witnessed by the named source construction.
struct BoundEntry {
    int r = 0, s = 0, k = 0;
    std::string source;   // construction id, possibly with a restriction pattern
    std::string notes;
};

/// "k xi_n admits >= s independent sections", derived from a bound entry
/// with n = r - 1.
struct SectionsEntry {
    int k = 0;
    int n = 0;
    int s = 0;
    std::string source;
};

/// Necessary conditions only: false if r > k or s > k, false if r = s = k
/// with k outside {1,2,4,8}; true says "not excluded", not "exists".
/// Throws std::invalid_argument on nonpositive input.
bool admissible(int r, int s, int k);

/// A registered, verified construction usable as a bound source.
struct RegisteredSource {
    std::string id;
    MapPtr map;
    std::string notes;
};

/// Registry of verified constructions and the bound queries over them.
/// Registration (and a fuzz + rank verification pass over every source) runs
/// once, on first access; queries are pure and thread-safe afterwards.
class BoundsRegistry {
public:
    static const BoundsRegistry& instance();

    /// Minimum k over all applicable sources: poly_mul gives r+s-1 always,
    /// complex_poly_mul gives r+s-2 for even r,s, and every registered map
    /// with domain dims >= (r,s) contributes the exact image-span dimension
    /// of its leading-coordinate restriction. Ties break to the smaller k,
    /// then the lexicographically smaller source id.
    BoundEntry best_upper_bound(int r, int s) const;

    const std::vector<RegisteredSource>& sources() const { return sources_; }

    /// Section counts derived from the tabulated restriction rows, in table
    /// order (rows r1..r4, the r5 alternative embedding, r6).
    std::vector<SectionsEntry> section_table() const;

    BoundsRegistry(const BoundsRegistry&) = delete;
    BoundsRegistry& operator=(const BoundsRegistry&) = delete;

private:
    BoundsRegistry();

    struct PrefixSpanCache;
    int prefix_span(const RegisteredSource& src, int r, int s) const;

    std::vector<RegisteredSource> sources_;
    std::vector<BoundEntry> table_entries_;  // the tabulated restriction rows
    mutable std::unique_ptr<PrefixSpanCache> cache_;
};

/// Emits the section count for a verified bound entry (k xi_{r-1} has >= s
/// sections). Throws std::invalid_argument if the entry has no source or
/// nonpositive dimensions.
SectionsEntry sections_from_map(const BoundEntry& entry);

}  // namespace octobil
