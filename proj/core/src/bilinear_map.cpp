#include "octobil/bilinear_map.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace octobil {

void Tensor::validate() const {
    if (r <= 0 || s <= 0 || k <= 0)
        throw std::invalid_argument("Tensor: dimensions must be positive");
    const Entry* prev = nullptr;
    for (const auto& e : entries) {
        if (e.t < 0 || e.t >= k || e.i < 0 || e.i >= r || e.j < 0 || e.j >= s)
            throw std::invalid_argument("Tensor: index out of range");
        if (e.value.is_zero()) throw std::invalid_argument("Tensor: zero entry stored");
        if (prev) {
            auto ka = std::tuple(prev->t, prev->i, prev->j);
            auto kb = std::tuple(e.t, e.i, e.j);
            if (!(ka < kb))
                throw std::invalid_argument("Tensor: entries not strictly sorted by (t,i,j)");
        }
        prev = &e;
    }
}

std::vector<Rational> Tensor::apply(std::span<const Rational> x, std::span<const Rational> y) const {
    if (static_cast<int>(x.size()) != r || static_cast<int>(y.size()) != s)
        throw std::invalid_argument("Tensor::apply: dimension mismatch");
    std::vector<Rational> out(static_cast<size_t>(k));
    for (const auto& e : entries) {
        const Rational& xi = x[static_cast<size_t>(e.i)];
        if (xi.is_zero()) continue;
        const Rational& yj = y[static_cast<size_t>(e.j)];
        if (yj.is_zero()) continue;
        out[static_cast<size_t>(e.t)] += e.value * xi * yj;
    }
    return out;
}

bool operator==(const Tensor& a, const Tensor& b) {
    if (a.r != b.r || a.s != b.s || a.k != b.k || a.entries.size() != b.entries.size()) return false;
    for (size_t n = 0; n < a.entries.size(); ++n) {
        const auto& ea = a.entries[n];
        const auto& eb = b.entries[n];
        if (ea.t != eb.t || ea.i != eb.i || ea.j != eb.j || ea.value != eb.value) return false;
    }
    return true;
}

BilinearMap::BilinearMap(std::string id, SlotStructure a_slots, SlotStructure b_slots, int k,
                         Evaluator eval, std::string description)
    : id_(std::move(id)),
      a_slots_(a_slots),
      b_slots_(b_slots),
      k_(k),
      eval_(std::move(eval)),
      description_(std::move(description)),
      cache_(std::make_unique<TensorCache>()) {
    if (r() <= 0 || s() <= 0 || k_ <= 0)
        throw std::invalid_argument("BilinearMap: dimensions must be positive");
}

std::vector<Rational> BilinearMap::evaluate(std::span<const Rational> x,
                                            std::span<const Rational> y) const {
    if (static_cast<int>(x.size()) != r())
        throw std::invalid_argument("BilinearMap::evaluate: |x| != r for map " + id_);
    if (static_cast<int>(y.size()) != s())
        throw std::invalid_argument("BilinearMap::evaluate: |y| != s for map " + id_);
    auto out = eval_(x, y);
    if (static_cast<int>(out.size()) != k_)
        throw std::logic_error("BilinearMap::evaluate: evaluator returned wrong dimension");
    return out;
}

const Tensor& BilinearMap::tensor() const {
    std::call_once(cache_->once, [this] {
        Tensor t;
        t.r = r();
        t.s = s();
        t.k = k_;
        std::vector<Rational> ei(static_cast<size_t>(r())), ej(static_cast<size_t>(s()));
        for (int i = 0; i < r(); ++i) {
            ei[static_cast<size_t>(i)] = Rational(1);
            for (int j = 0; j < s(); ++j) {
                ej[static_cast<size_t>(j)] = Rational(1);
                auto v = eval_(ei, ej);
                for (int tt = 0; tt < k_; ++tt)
                    if (!v[static_cast<size_t>(tt)].is_zero())
                        t.entries.push_back({tt, i, j, v[static_cast<size_t>(tt)]});
                ej[static_cast<size_t>(j)] = Rational(0);
            }
            ei[static_cast<size_t>(i)] = Rational(0);
        }
        std::sort(t.entries.begin(), t.entries.end(), [](const Tensor::Entry& a, const Tensor::Entry& b) {
            return std::tuple(a.t, a.i, a.j) < std::tuple(b.t, b.i, b.j);
        });
        t.validate();
        cache_->value = std::move(t);
    });
    return *cache_->value;
}

Matrix BilinearMap::fixed_left_matrix(std::span<const Rational> x) const {
    if (static_cast<int>(x.size()) != r())
        throw std::invalid_argument("fixed_left_matrix: |x| != r");
    Matrix m(k_, s());
    std::vector<Rational> ej(static_cast<size_t>(s()));
    for (int j = 0; j < s(); ++j) {
        ej[static_cast<size_t>(j)] = Rational(1);
        auto col = eval_(x, ej);
        for (int t = 0; t < k_; ++t) m(t, j) = std::move(col[static_cast<size_t>(t)]);
        ej[static_cast<size_t>(j)] = Rational(0);
    }
    return m;
}

Matrix BilinearMap::fixed_right_matrix(std::span<const Rational> y) const {
    if (static_cast<int>(y.size()) != s())
        throw std::invalid_argument("fixed_right_matrix: |y| != s");
    Matrix m(k_, r());
    std::vector<Rational> ei(static_cast<size_t>(r()));
    for (int i = 0; i < r(); ++i) {
        ei[static_cast<size_t>(i)] = Rational(1);
        auto col = eval_(ei, y);
        for (int t = 0; t < k_; ++t) m(t, i) = std::move(col[static_cast<size_t>(t)]);
        ei[static_cast<size_t>(i)] = Rational(0);
    }
    return m;
}

std::shared_ptr<const BilinearMap> BilinearMap::from_tensor(Tensor t, std::string id) {
    t.validate();
    auto shared = std::make_shared<Tensor>(std::move(t));
    auto eval = [shared](std::span<const Rational> x, std::span<const Rational> y) {
        return shared->apply(x, y);
    };
    return std::make_shared<BilinearMap>(std::move(id), SlotStructure{1, shared->r},
                                         SlotStructure{1, shared->s}, shared->k, std::move(eval),
                                         "tensor-defined map");
}

MapPtr quotient_project(const MapPtr& map, std::vector<Rational> z) {
    if (static_cast<int>(z.size()) != map->k())
        throw std::invalid_argument("quotient_project: |z| != k");
    int pivot = -1;
    Rational best;
    for (int i = 0; i < map->k(); ++i) {
        Rational a = z[static_cast<size_t>(i)].abs();
        if (!a.is_zero() && (pivot < 0 || a > best)) {
            pivot = i;
            best = a;
        }
    }
    if (pivot < 0) throw std::invalid_argument("quotient_project: z must be nonzero");

    auto zs = std::make_shared<std::vector<Rational>>(std::move(z));
    auto parent = map;
    const int p = pivot;
    auto eval = [parent, zs, p](std::span<const Rational> x, std::span<const Rational> y) {
        auto v = parent->evaluate(x, y);
        const Rational lambda = v[static_cast<size_t>(p)] / (*zs)[static_cast<size_t>(p)];
        std::vector<Rational> out;
        out.reserve(v.size() - 1);
        for (size_t t = 0; t < v.size(); ++t) {
            if (static_cast<int>(t) == p) continue;
            out.push_back(v[t] - lambda * (*zs)[t]);
        }
        return out;
    };
    return std::make_shared<BilinearMap>("quotient(" + parent->id() + ")", SlotStructure{1, parent->r()},
                                         SlotStructure{1, parent->s()}, parent->k() - 1, std::move(eval),
                                         "projection of " + parent->id() + " along a codomain vector");
}

MapPtr transpose(const MapPtr& map) {
    auto parent = map;
    auto eval = [parent](std::span<const Rational> x, std::span<const Rational> y) {
        return parent->evaluate(y, x);
    };
    return std::make_shared<BilinearMap>(parent->id() + "^T", parent->b_slots(), parent->a_slots(),
                                         parent->k(), std::move(eval),
                                         "transpose of " + parent->id());
}

}  // namespace octobil
