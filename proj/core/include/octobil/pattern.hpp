#pragma once

#include <string>
#include <vector>

namespace octobil {

/// Shape of one algebra slot of a restricted domain. Each shape carries a
/// fixed list of coordinate indices into the 8-dimensional slot, aligned with
/// the Cayley-Dickson halves: the first doubling half is coords 0..3, the
/// second is 4..7, and the complex line of a half is its first two coords.
enum class SlotShape {
    Zero,                    // {}            dim 0, token "0"
    Real,                    // {0}           dim 1, token "r"
    Complex,                 // {0,1}         dim 2, token "z"
    Quaternion,              // {0,1,2,3}     dim 4, token "q"
    Octonion,                // {0..7}        dim 8, token "o"
    RealQuaternion,          // {0,4,5,6,7}   dim 5, token "rq"
    RealComplex,             // {0,4,5}       dim 3, token "rz"
    RealComplexQuaternion,   // {0,2,3,4..7}  dim 7, token "rzq"
};

struct SlotPattern {
    SlotShape shape = SlotShape::Octonion;

    int dim() const;
    const std::vector<int>& indices() const;
    std::string token() const;

    static SlotPattern parse(const std::string& token);
    static const std::vector<SlotShape>& all_shapes();

    friend bool operator==(const SlotPattern& a, const SlotPattern& b) { return a.shape == b.shape; }
};

/// Per-slot restriction of one domain factor, e.g. "o,o,o,0".
struct SubspacePattern {
    std::vector<SlotPattern> slots;

    int dim() const;
    /// Coordinate indices into the full domain, slots laid out contiguously.
    std::vector<int> coordinate_indices(int slot_width) const;
    std::string str() const;

    static SubspacePattern parse(const std::string& csv);
    static SubspacePattern full(int slot_count, int slot_width = 8);

    friend bool operator==(const SubspacePattern& a, const SubspacePattern& b) { return a.slots == b.slots; }
};

}  // namespace octobil
