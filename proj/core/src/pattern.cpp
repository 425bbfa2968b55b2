#include "octobil/pattern.hpp"

#include <stdexcept>

namespace octobil {

namespace {

struct ShapeInfo {
    SlotShape shape;
    const char* token;
    std::vector<int> indices;
};

const std::vector<ShapeInfo>& shape_table() {
    static const std::vector<ShapeInfo> table = {
        {SlotShape::Zero, "0", {}},
        {SlotShape::Real, "r", {0}},
        {SlotShape::Complex, "z", {0, 1}},
        {SlotShape::Quaternion, "q", {0, 1, 2, 3}},
        {SlotShape::Octonion, "o", {0, 1, 2, 3, 4, 5, 6, 7}},
        {SlotShape::RealQuaternion, "rq", {0, 4, 5, 6, 7}},
        {SlotShape::RealComplex, "rz", {0, 4, 5}},
        {SlotShape::RealComplexQuaternion, "rzq", {0, 2, 3, 4, 5, 6, 7}},
    };
    return table;
}

const ShapeInfo& info(SlotShape s) {
    for (const auto& e : shape_table())
        if (e.shape == s) return e;
    throw std::logic_error("SlotPattern: unknown shape");
}

}  // namespace

int SlotPattern::dim() const { return static_cast<int>(info(shape).indices.size()); }

const std::vector<int>& SlotPattern::indices() const { return info(shape).indices; }

std::string SlotPattern::token() const { return info(shape).token; }

SlotPattern SlotPattern::parse(const std::string& token) {
    for (const auto& e : shape_table())
        if (token == e.token) return SlotPattern{e.shape};
    throw std::invalid_argument("SlotPattern: unknown token '" + token +
                                "' (expected 0, r, z, q, o, rq, rz or rzq)");
}

const std::vector<SlotShape>& SlotPattern::all_shapes() {
    static const std::vector<SlotShape> shapes = [] {
        std::vector<SlotShape> v;
        for (const auto& e : shape_table()) v.push_back(e.shape);
        return v;
    }();
    return shapes;
}

int SubspacePattern::dim() const {
    int d = 0;
    for (const auto& s : slots) d += s.dim();
    return d;
}

std::vector<int> SubspacePattern::coordinate_indices(int slot_width) const {
    std::vector<int> out;
    for (size_t s = 0; s < slots.size(); ++s) {
        for (int i : slots[s].indices()) {
            if (i >= slot_width)
                throw std::invalid_argument("SubspacePattern: slot shape '" + slots[s].token() +
                                            "' does not fit a width-" + std::to_string(slot_width) +
                                            " slot");
            out.push_back(static_cast<int>(s) * slot_width + i);
        }
    }
    return out;
}

std::string SubspacePattern::str() const {
    std::string out;
    for (size_t i = 0; i < slots.size(); ++i) {
        if (i) out += ',';
        out += slots[i].token();
    }
    return out;
}

SubspacePattern SubspacePattern::parse(const std::string& csv) {
    SubspacePattern p;
    std::string tok;
    for (size_t i = 0; i <= csv.size(); ++i) {
        if (i == csv.size() || csv[i] == ',') {
            if (tok.empty()) throw std::invalid_argument("SubspacePattern: empty slot token");
            p.slots.push_back(SlotPattern::parse(tok));
            tok.clear();
        } else {
            tok += csv[i];
        }
    }
    if (p.slots.empty()) throw std::invalid_argument("SubspacePattern: no slots");
    return p;
}

SubspacePattern SubspacePattern::full(int slot_count, int slot_width) {
    SlotShape shape;
    switch (slot_width) {
        case 1: shape = SlotShape::Real; break;
        case 2: shape = SlotShape::Complex; break;
        case 4: shape = SlotShape::Quaternion; break;
        case 8: shape = SlotShape::Octonion; break;
        default:
            throw std::invalid_argument("SubspacePattern::full: slot width must be 1, 2, 4 or 8");
    }
    SubspacePattern p;
    p.slots.assign(static_cast<size_t>(slot_count), SlotPattern{shape});
    return p;
}

}  // namespace octobil
