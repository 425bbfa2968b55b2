#include "octobil/bounds.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "octobil/catalog.hpp"
#include "octobil/restriction.hpp"
#include "octobil/rng.hpp"
#include "octobil/verification.hpp"

namespace octobil {

bool admissible(int r, int s, int k) {
    if (r < 1 || s < 1 || k < 1) throw std::invalid_argument("admissible: dimensions must be >= 1");
    if (r > k || s > k) return false;
    if (r == k && s == k && !(k == 1 || k == 2 || k == 4 || k == 8)) return false;
    return true;
}

namespace {

// registration-time verification budget
constexpr uint64_t kRegFuzzTrials = 64;
constexpr uint64_t kRegRankSamples = 3;
constexpr int64_t kRegBound = 3;

void verify_source(const MapPtr& map) {
    const auto fz = fuzz_nonsingularity(*map, kRegFuzzTrials, kDefaultSeed, kRegBound);
    if (!fz.passed())
        throw std::logic_error("BoundsRegistry: source '" + map->id() + "' failed fuzz verification");
    for (Side side : {Side::Left, Side::Right}) {
        const auto rk = rank_profile(*map, side, kRegRankSamples, kDefaultSeed, kRegBound);
        if (!rk.passed())
            throw std::logic_error("BoundsRegistry: source '" + map->id() + "' failed rank verification");
    }
    // skew-linearity: f(-x, y) = -f(x, y) on a sampled pair (forced by bilinearity)
    CounterRng rng(kDefaultSeed, 0x5EC7);
    std::vector<Rational> x(static_cast<size_t>(map->r())), y(static_cast<size_t>(map->s()));
    for (auto& c : x) c = Rational(static_cast<long long>(rng.uniform(-kRegBound, kRegBound)));
    for (auto& c : y) c = Rational(static_cast<long long>(rng.uniform(-kRegBound, kRegBound)));
    std::vector<Rational> neg(x);
    for (auto& c : neg) c = -c;
    const auto lhs = map->evaluate(neg, y);
    auto rhs = map->evaluate(x, y);
    for (auto& c : rhs) c = -c;
    if (lhs != rhs)
        throw std::logic_error("BoundsRegistry: source '" + map->id() + "' is not skew-linear");
}

}  // namespace

struct BoundsRegistry::PrefixSpanCache {
    struct SourceState {
        // f(e_i, e_j) as sparse k-vectors, built once from the tensor
        bool cells_ready = false;
        std::vector<std::vector<std::pair<int, Rational>>> cells;  // index i * S + j

        std::map<std::pair<int, int>, int> dims;        // (r, s) -> span dim
        std::map<int, std::pair<int, IncrementalSpan>> sweeps;  // r -> (s reached, state)
    };

    std::mutex mtx;
    std::map<std::string, SourceState> states;
};

BoundsRegistry::BoundsRegistry() : cache_(std::make_unique<PrefixSpanCache>()) {
    auto add = [this](const std::string& id, const MapPtr& map, const std::string& notes) {
        verify_source(map);
        sources_.push_back({id, map, notes});
        sources_.push_back({id + "^T", transpose(map), notes.empty() ? "" : notes + " (transposed)"});
    };

    for (const char* id : {"real_mul", "complex_mul", "quaternion_mul", "octonion_mul", "lam_map",
                           "adem_map", "f1", "f2", "f3", "main_f"})
        add(id, builtin(id), "");

    for (const auto& row : newnbl_table()) {
        const auto m = row.map->as_bilinear_map();
        add("newnbl_" + row.row_id, m, row.note);
        // always the computed triple, never the claimed one
        table_entries_.push_back(
            {row.computed_r, row.computed_s, row.computed_k, "newnbl_" + row.row_id, row.note});
    }
    if (auto alt = newnbl_r5_alternative()) {
        const auto m = alt->map->as_bilinear_map();
        add("newnbl_r5alt", m, alt->note);
        table_entries_.push_back(
            {alt->computed_r, alt->computed_s, alt->computed_k, "newnbl_r5alt", alt->note});
    }
}

const BoundsRegistry& BoundsRegistry::instance() {
    static BoundsRegistry registry;
    return registry;
}

int BoundsRegistry::prefix_span(const RegisteredSource& src, int r, int s) const {
    std::lock_guard<std::mutex> lock(cache_->mtx);
    auto& st = cache_->states[src.id];

    if (const auto it = st.dims.find({r, s}); it != st.dims.end()) return it->second;

    const int S = src.map->s();
    const int K = src.map->k();
    if (!st.cells_ready) {
        st.cells.assign(static_cast<size_t>(src.map->r()) * static_cast<size_t>(S), {});
        for (const auto& e : src.map->tensor().entries)
            st.cells[static_cast<size_t>(e.i) * S + static_cast<size_t>(e.j)].emplace_back(e.t, e.value);
        st.cells_ready = true;
    }

    auto sweep_it = st.sweeps.find(r);
    if (sweep_it == st.sweeps.end())
        sweep_it = st.sweeps.emplace(r, std::pair<int, IncrementalSpan>(0, IncrementalSpan(K))).first;
    auto& [reached, span] = sweep_it->second;

    std::vector<Rational> dense(static_cast<size_t>(K));
    while (reached < s) {
        const int j = reached;
        if (span.dimension() < K) {
            for (int i = 0; i < r; ++i) {
                const auto& cell = st.cells[static_cast<size_t>(i) * S + static_cast<size_t>(j)];
                if (cell.empty()) continue;
                std::fill(dense.begin(), dense.end(), Rational(0));
                for (const auto& [t, v] : cell) dense[static_cast<size_t>(t)] = v;
                span.add(dense);
            }
        }
        ++reached;
        st.dims[{r, reached}] = span.dimension();
    }
    return st.dims.at({r, s});
}

BoundEntry BoundsRegistry::best_upper_bound(int r, int s) const {
    if (r < 1 || s < 1) throw std::invalid_argument("best_upper_bound: r, s must be >= 1");

    BoundEntry best{r, s, r + s - 1,
                    "poly_mul(" + std::to_string(r) + "," + std::to_string(s) + ")",
                    "real polynomial multiplication"};
    bool best_trimmed = false;
    // ties go to the smaller k, then exact-dimension sources over trimmed
    // ones, then the lexicographically smaller id
    auto consider = [&](int k, bool trimmed, const std::string& id, const std::string& notes) {
        const bool better = k != best.k        ? k < best.k
                            : trimmed != best_trimmed ? !trimmed
                                                      : id < best.source;
        if (better) {
            best.k = k;
            best.source = id;
            best.notes = notes;
            best_trimmed = trimmed;
        }
    };

    if (r % 2 == 0 && s % 2 == 0)
        consider(r + s - 2, false,
                 "complex_poly_mul(" + std::to_string(r) + "," + std::to_string(s) + ")",
                 "complex polynomial multiplication");

    for (const auto& src : sources_) {
        if (src.map->r() < r || src.map->s() < s) continue;
        const int k = prefix_span(src, r, s);
        const bool trimmed = src.map->r() > r || src.map->s() > s;
        consider(k, trimmed, src.id,
                 trimmed ? "leading " + std::to_string(r) + "x" + std::to_string(s) +
                               " coordinate restriction" + (src.notes.empty() ? "" : "; " + src.notes)
                         : src.notes);
    }

    if (!admissible(best.r, best.s, best.k))
        throw std::logic_error("best_upper_bound: produced an inadmissible entry");
    return best;
}

std::vector<SectionsEntry> BoundsRegistry::section_table() const {
    static const char* order[] = {"newnbl_r1", "newnbl_r2", "newnbl_r3",
                                  "newnbl_r4", "newnbl_r5alt", "newnbl_r6"};
    std::vector<SectionsEntry> out;
    for (const char* id : order) {
        for (const auto& e : table_entries_) {
            if (e.source == id) {
                out.push_back(sections_from_map(e));
                break;
            }
        }
    }
    return out;
}

SectionsEntry sections_from_map(const BoundEntry& entry) {
    if (entry.r < 1 || entry.s < 1 || entry.k < 1)
        throw std::invalid_argument("sections_from_map: dimensions must be >= 1");
    if (entry.source.empty())
        throw std::invalid_argument("sections_from_map: entry has no verified source");
    return {entry.k, entry.r - 1, entry.s, entry.source};
}

}  // namespace octobil
