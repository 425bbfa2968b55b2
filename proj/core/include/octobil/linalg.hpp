#pragma once

#include <optional>
#include <span>
#include <vector>

#include "octobil/rational.hpp"

namespace octobil {

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    std::span<const Rational> row(int i) const { return {data_.data() + static_cast<size_t>(i) * cols_, static_cast<size_t>(cols_)}; }
    std::span<Rational> row(int i) { return {data_.data() + static_cast<size_t>(i) * cols_, static_cast<size_t>(cols_)}; }

    Matrix transposed() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    int rows_, cols_;
    std::vector<Rational> data_;
};

/// Exact rank via fraction-free (Bareiss) elimination over integers.
/// Rows are scaled by their denominator lcm first, so no rational blow-up.
int rank(const Matrix& m);

/// Maintains the unique reduced row-echelon basis of the span of all vectors
/// added so far. The final basis depends only on the span, not on insertion
/// order, so parallel or reordered accumulation gives identical results.
class IncrementalSpan {
public:
    explicit IncrementalSpan(int width) : width_(width) {}

    /// Adds a vector; returns true if the span dimension grew.
    bool add(std::span<const Rational> v);

    int dimension() const { return static_cast<int>(rows_.size()); }
    int width() const { return width_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Basis rows in reduced echelon form, pivot columns in increasing order.
    Matrix basis() const;

    /// True iff v lies in the current span (v is not added).
    bool contains(std::span<const Rational> v) const;

private:
    int width_;
    std::vector<std::vector<Rational>> rows_;  // kept reduced, ordered by pivot column
    std::vector<int> pivots_;
};

/// Basis of the exact nullspace {y : m y = 0}. Each vector is scaled to
/// coprime integers with the first nonzero entry positive.
std::vector<std::vector<Rational>> nullspace(const Matrix& m);

/// Solves a x = b exactly; std::nullopt if inconsistent. When the system is
/// underdetermined, free variables are set to zero.
std::optional<std::vector<Rational>> solve(const Matrix& a, std::span<const Rational> b);

/// Finds x with x a = b (a row-space solve); std::nullopt if inconsistent.
std::optional<std::vector<Rational>> solve_left(const Matrix& a, std::span<const Rational> b);

}  // namespace octobil
