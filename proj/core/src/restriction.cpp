#include "octobil/restriction.hpp"

#include <stdexcept>

#include "octobil/catalog.hpp"

namespace octobil {

namespace {

std::vector<int> full_indices(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i;
    return v;
}

// Collects f(e_i, e_j) for the selected basis pairs from the parent tensor.
ImageSpan span_from_tensor(const BilinearMap& map, const std::vector<int>& a_indices,
                           const std::vector<int>& b_indices) {
    const Tensor& t = map.tensor();
    std::vector<int> a_pos(static_cast<size_t>(map.r()), -1);
    std::vector<int> b_pos(static_cast<size_t>(map.s()), -1);
    for (size_t p = 0; p < a_indices.size(); ++p) a_pos[static_cast<size_t>(a_indices[p])] = static_cast<int>(p);
    for (size_t p = 0; p < b_indices.size(); ++p) b_pos[static_cast<size_t>(b_indices[p])] = static_cast<int>(p);

    // dense k-vectors per selected (i, j)
    const size_t pairs = a_indices.size() * b_indices.size();
    std::vector<std::vector<Rational>> vecs(pairs);
    for (const auto& e : t.entries) {
        const int pi = a_pos[static_cast<size_t>(e.i)];
        const int pj = b_pos[static_cast<size_t>(e.j)];
        if (pi < 0 || pj < 0) continue;
        auto& v = vecs[static_cast<size_t>(pi) * b_indices.size() + static_cast<size_t>(pj)];
        if (v.empty()) v.assign(static_cast<size_t>(map.k()), Rational(0));
        v[static_cast<size_t>(e.t)] = e.value;
    }

    IncrementalSpan span(map.k());
    for (const auto& v : vecs) {
        if (v.empty()) continue;
        if (span.dimension() == map.k()) break;
        span.add(v);
    }
    return {span.dimension(), span.basis(), span.pivots()};
}

}  // namespace

ImageSpan image_span(const BilinearMap& map) {
    return span_from_tensor(map, full_indices(map.r()), full_indices(map.s()));
}

ImageSpan image_span(const BilinearMap& map, const std::vector<int>& a_indices,
                     const std::vector<int>& b_indices) {
    for (int i : a_indices)
        if (i < 0 || i >= map.r()) throw std::invalid_argument("image_span: a index out of range");
    for (int j : b_indices)
        if (j < 0 || j >= map.s()) throw std::invalid_argument("image_span: b index out of range");
    return span_from_tensor(map, a_indices, b_indices);
}

RestrictedMap::RestrictedMap(MapPtr parent, SubspacePattern a_pattern, SubspacePattern b_pattern)
    : parent_(std::move(parent)), a_pattern_(std::move(a_pattern)), b_pattern_(std::move(b_pattern)) {
    const auto& as = parent_->a_slots();
    const auto& bs = parent_->b_slots();
    if (static_cast<int>(a_pattern_.slots.size()) != as.count)
        throw std::invalid_argument("RestrictedMap: a pattern has " +
                                    std::to_string(a_pattern_.slots.size()) + " slots, map '" +
                                    parent_->id() + "' has " + std::to_string(as.count));
    if (static_cast<int>(b_pattern_.slots.size()) != bs.count)
        throw std::invalid_argument("RestrictedMap: b pattern has " +
                                    std::to_string(b_pattern_.slots.size()) + " slots, map '" +
                                    parent_->id() + "' has " + std::to_string(bs.count));
    a_indices_ = a_pattern_.coordinate_indices(as.width);
    b_indices_ = b_pattern_.coordinate_indices(bs.width);
    if (a_indices_.empty() || b_indices_.empty())
        throw std::invalid_argument("RestrictedMap: empty restricted domain");
    span_ = span_from_tensor(*parent_, a_indices_, b_indices_);
}

std::vector<Rational> RestrictedMap::embed_a(std::span<const Rational> x) const {
    if (x.size() != a_indices_.size())
        throw std::invalid_argument("RestrictedMap::embed_a: dimension mismatch");
    std::vector<Rational> out(static_cast<size_t>(parent_->r()));
    for (size_t p = 0; p < a_indices_.size(); ++p) out[static_cast<size_t>(a_indices_[p])] = x[p];
    return out;
}

std::vector<Rational> RestrictedMap::embed_b(std::span<const Rational> y) const {
    if (y.size() != b_indices_.size())
        throw std::invalid_argument("RestrictedMap::embed_b: dimension mismatch");
    std::vector<Rational> out(static_cast<size_t>(parent_->s()));
    for (size_t p = 0; p < b_indices_.size(); ++p) out[static_cast<size_t>(b_indices_[p])] = y[p];
    return out;
}

std::vector<Rational> RestrictedMap::evaluate_raw(std::span<const Rational> x,
                                                  std::span<const Rational> y) const {
    return parent_->evaluate(embed_a(x), embed_b(y));
}

std::vector<Rational> RestrictedMap::evaluate(std::span<const Rational> x,
                                              std::span<const Rational> y) const {
    auto raw = evaluate_raw(x, y);
    std::vector<Rational> out(static_cast<size_t>(k()));
    for (size_t i = 0; i < span_.pivots.size(); ++i)
        out[i] = raw[static_cast<size_t>(span_.pivots[i])];
    return out;
}

std::vector<Rational> RestrictedMap::expand(std::span<const Rational> compressed) const {
    if (static_cast<int>(compressed.size()) != k())
        throw std::invalid_argument("RestrictedMap::expand: dimension mismatch");
    std::vector<Rational> out(static_cast<size_t>(parent_->k()));
    for (int i = 0; i < k(); ++i) {
        if (compressed[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < parent_->k(); ++j)
            out[static_cast<size_t>(j)] += compressed[static_cast<size_t>(i)] * span_.basis(i, j);
    }
    return out;
}

MapPtr RestrictedMap::as_bilinear_map() const {
    auto self = std::make_shared<RestrictedMap>(*this);
    auto eval = [self](std::span<const Rational> x, std::span<const Rational> y) {
        return self->evaluate(x, y);
    };
    const std::string id =
        parent_->id() + "[a=" + a_pattern_.str() + ";b=" + b_pattern_.str() + "]";
    return std::make_shared<BilinearMap>(id, SlotStructure{1, r()}, SlotStructure{1, s()}, k(),
                                         std::move(eval),
                                         "restriction of " + parent_->id() + " compressed onto its image span");
}

namespace {

struct RowSpec {
    const char* row_id;
    const char* a;
    const char* b;
    int cr, cs, ck;
};

RestrictionRow build_row(const MapPtr& parent, const RowSpec& spec) {
    RestrictionRow row;
    row.row_id = spec.row_id;
    row.a_pattern = SubspacePattern::parse(spec.a);
    row.b_pattern = SubspacePattern::parse(spec.b);
    row.claimed_r = spec.cr;
    row.claimed_s = spec.cs;
    row.claimed_k = spec.ck;
    row.map = std::make_shared<RestrictedMap>(parent, row.a_pattern, row.b_pattern);
    row.computed_r = row.map->r();
    row.computed_s = row.map->s();
    row.computed_k = row.map->k();
    row.match = row.computed_r == row.claimed_r && row.computed_s == row.claimed_s &&
                row.computed_k == row.claimed_k;
    return row;
}

// Scans alternative shapes for the b0 slot and reports any that reproduces
// the claimed triple.
std::string scan_b0_alternatives(const MapPtr& parent, const RestrictionRow& row) {
    for (SlotShape shape : SlotPattern::all_shapes()) {
        SubspacePattern alt = row.b_pattern;
        alt.slots[0] = SlotPattern{shape};
        if (alt == row.b_pattern) continue;
        RestrictedMap m(parent, row.a_pattern, alt);
        if (m.r() == row.claimed_r && m.s() == row.claimed_s && m.k() == row.claimed_k) {
            return "claimed triple is reproduced with b0 read as '" + alt.slots[0].token() +
                   "' (b=" + alt.str() + ")";
        }
    }
    return "no single-slot b0 alternative reproduces the claimed triple";
}

}  // namespace

std::vector<RestrictionRow> newnbl_table() {
    const MapPtr parent = builtin("main_f");
    static const RowSpec specs[] = {
        {"r1", "o,o,o,0", "o,o,o,o", 24, 32, 47},
        {"r2", "rq,o,o,0", "rq,o,o,o", 21, 29, 43},
        {"r3", "rz,o,o,0", "rz,o,o,o", 19, 27, 41},
        {"r4", "rz,o,o,0", "rzq,o,o,o", 19, 31, 45},
        {"r5", "rzq,o,o,0", "rq,o,o,o", 23, 27, 45},
        {"r6", "rq,o,o,o", "rq,o,o,o", 29, 29, 51},
        {"r7", "z,o,o,o", "z,o,o,o", 26, 26, 48},
    };
    std::vector<RestrictionRow> rows;
    for (const auto& spec : specs) {
        RestrictionRow row = build_row(parent, spec);
        if (!row.match) {
            row.note = "computed (" + std::to_string(row.computed_r) + "," +
                       std::to_string(row.computed_s) + "," + std::to_string(row.computed_k) +
                       ") differs from claimed (" + std::to_string(row.claimed_r) + "," +
                       std::to_string(row.claimed_s) + "," + std::to_string(row.claimed_k) +
                       ") under the slot-aligned reading of the declared patterns; " +
                       scan_b0_alternatives(parent, row);
        } else if (row.row_id == "r6") {
            row.note = "implies an immersion of RP^28 into R^50";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::optional<RestrictionRow> newnbl_r5_alternative() {
    const MapPtr parent = builtin("main_f");
    RestrictionRow row = build_row(parent, {"r5alt", "rzq,o,o,0", "rz,o,o,o", 23, 27, 45});
    if (!row.match) return std::nullopt;
    row.note = "row r5 with b0 read as a real-plus-complex slot; matches the claimed triple";
    return row;
}

}  // namespace octobil
