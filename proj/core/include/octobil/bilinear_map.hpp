#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "octobil/linalg.hpp"
#include "octobil/rational.hpp"

namespace octobil {

/// Coordinate form of a bilinear map: c[t][i][j] with only nonzero entries
/// stored, sorted by (t, i, j).
struct Tensor {
    struct Entry {
        int t, i, j;
        Rational value;
    };

    int r = 0, s = 0, k = 0;
    std::vector<Entry> entries;

    /// Throws std::invalid_argument on out-of-range indices, duplicates,
    /// unsorted entries or zero values.
    void validate() const;

    std::vector<Rational> apply(std::span<const Rational> x, std::span<const Rational> y) const;

    friend bool operator==(const Tensor& a, const Tensor& b);
};

/// How a domain or codomain splits into algebra slots: `count` blocks of
/// `width` coordinates each (width 8 for octonion slots, 1 for plain reals).
struct SlotStructure {
    int width = 1;
    int count = 0;
    int dim() const { return width * count; }
};

/// A bilinear map R^r x R^s -> R^k given by an exact evaluator over algebra
/// operations, with a lazily cached structure-constant tensor. Immutable after
/// construction; share via shared_ptr.
class BilinearMap {
public:
    using Evaluator =
        std::function<std::vector<Rational>(std::span<const Rational>, std::span<const Rational>)>;

    BilinearMap(std::string id, SlotStructure a_slots, SlotStructure b_slots, int k,
                Evaluator eval, std::string description = "");

    const std::string& id() const { return id_; }
    int r() const { return a_slots_.dim(); }
    int s() const { return b_slots_.dim(); }
    int k() const { return k_; }
    const SlotStructure& a_slots() const { return a_slots_; }
    const SlotStructure& b_slots() const { return b_slots_; }
    const std::string& description() const { return description_; }

    /// Exact evaluation; throws std::invalid_argument on dimension mismatch.
    std::vector<Rational> evaluate(std::span<const Rational> x, std::span<const Rational> y) const;

    /// Structure constants; computed once on first use (race-safe).
    const Tensor& tensor() const;

    /// Matrix of y -> f(x, y), size k x s; column j = evaluate(x, e_j).
    Matrix fixed_left_matrix(std::span<const Rational> x) const;
    /// Matrix of x -> f(x, y), size k x r; column i = evaluate(e_i, y).
    Matrix fixed_right_matrix(std::span<const Rational> y) const;

    /// Map evaluating through the given tensor.
    static std::shared_ptr<const BilinearMap> from_tensor(Tensor t, std::string id = "from_tensor");

private:
    std::string id_;
    SlotStructure a_slots_, b_slots_;
    int k_;
    Evaluator eval_;
    std::string description_;

    struct TensorCache {
        std::once_flag once;
        std::optional<Tensor> value;
    };
    std::unique_ptr<TensorCache> cache_;
};

using MapPtr = std::shared_ptr<const BilinearMap>;

/// pi o map, where pi projects R^k along z onto the coordinate complement of
/// the pivot coordinate of z (largest |value|, ties to the lowest index).
/// The caller asserts L(z) meets the image only at 0; z must be nonzero.
MapPtr quotient_project(const MapPtr& map, std::vector<Rational> z);

/// f^T(y, x) = f(x, y); swaps the domain factors.
MapPtr transpose(const MapPtr& map);

}  // namespace octobil
