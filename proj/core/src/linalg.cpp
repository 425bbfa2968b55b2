#include "octobil/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace octobil {

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

int rank(const Matrix& m) {
    const int nr = m.rows(), nc = m.cols();
    if (nr == 0 || nc == 0) return 0;

    // Integer copy: scale each row by the lcm of its denominators.
    std::vector<std::vector<mpz_class>> a(static_cast<size_t>(nr), std::vector<mpz_class>(static_cast<size_t>(nc)));
    for (int i = 0; i < nr; ++i) {
        mpz_class l(1);
        for (int j = 0; j < nc; ++j) {
            mpz_class d = m(i, j).den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
            l = l / g * d;
        }
        for (int j = 0; j < nc; ++j)
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] = m(i, j).num() * (l / m(i, j).den());
    }

    // Bareiss fraction-free elimination; all intermediate entries stay integral.
    int r = 0;
    mpz_class prev(1);
    for (int col = 0; col < nc && r < nr; ++col) {
        int piv = -1;
        for (int i = r; i < nr; ++i) {
            if (a[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(r)]);
        const mpz_class& p = a[static_cast<size_t>(r)][static_cast<size_t>(col)];
        for (int i = r + 1; i < nr; ++i) {
            auto& rowi = a[static_cast<size_t>(i)];
            const auto& rowr = a[static_cast<size_t>(r)];
            const mpz_class f = rowi[static_cast<size_t>(col)];
            for (int j = col; j < nc; ++j) {
                mpz_class t = rowi[static_cast<size_t>(j)] * p - f * rowr[static_cast<size_t>(j)];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                rowi[static_cast<size_t>(j)] = std::move(t);
            }
        }
        prev = p;
        ++r;
    }
    return r;
}

bool IncrementalSpan::add(std::span<const Rational> v) {
    if (static_cast<int>(v.size()) != width_)
        throw std::invalid_argument("IncrementalSpan::add: width mismatch");
    std::vector<Rational> w(v.begin(), v.end());
    for (size_t k = 0; k < rows_.size(); ++k) {
        const int p = pivots_[k];
        if (w[static_cast<size_t>(p)].is_zero()) continue;
        const Rational f = w[static_cast<size_t>(p)];
        for (int j = 0; j < width_; ++j) w[static_cast<size_t>(j)] -= f * rows_[k][static_cast<size_t>(j)];
    }
    int p = -1;
    for (int j = 0; j < width_; ++j) {
        if (!w[static_cast<size_t>(j)].is_zero()) {
            p = j;
            break;
        }
    }
    if (p < 0) return false;

    const Rational inv = Rational(1) / w[static_cast<size_t>(p)];
    for (int j = 0; j < width_; ++j) w[static_cast<size_t>(j)] *= inv;

    // reduce existing rows against the new one, keep rows sorted by pivot
    for (size_t k = 0; k < rows_.size(); ++k) {
        const Rational f = rows_[k][static_cast<size_t>(p)];
        if (f.is_zero()) continue;
        for (int j = 0; j < width_; ++j) rows_[k][static_cast<size_t>(j)] -= f * w[static_cast<size_t>(j)];
    }
    const auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(w));
    return true;
}

Matrix IncrementalSpan::basis() const {
    Matrix b(static_cast<int>(rows_.size()), width_);
    for (size_t i = 0; i < rows_.size(); ++i)
        for (int j = 0; j < width_; ++j) b(static_cast<int>(i), j) = rows_[i][static_cast<size_t>(j)];
    return b;
}

bool IncrementalSpan::contains(std::span<const Rational> v) const {
    if (static_cast<int>(v.size()) != width_)
        throw std::invalid_argument("IncrementalSpan::contains: width mismatch");
    std::vector<Rational> w(v.begin(), v.end());
    for (size_t k = 0; k < rows_.size(); ++k) {
        const int p = pivots_[k];
        if (w[static_cast<size_t>(p)].is_zero()) continue;
        const Rational f = w[static_cast<size_t>(p)];
        for (int j = 0; j < width_; ++j) w[static_cast<size_t>(j)] -= f * rows_[k][static_cast<size_t>(j)];
    }
    for (const auto& c : w)
        if (!c.is_zero()) return false;
    return true;
}

namespace {

struct Rref {
    Matrix m;                 // reduced row-echelon form
    std::vector<int> pivots;  // pivot column per nonzero row
};

Rref rref(Matrix a) {
    const int nr = a.rows(), nc = a.cols();
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < nc && r < nr; ++col) {
        int piv = -1;
        for (int i = r; i < nr; ++i) {
            if (!a(i, col).is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < nc; ++j) std::swap(a(piv, j), a(r, j));
        const Rational inv = Rational(1) / a(r, col);
        for (int j = col; j < nc; ++j) a(r, j) *= inv;
        for (int i = 0; i < nr; ++i) {
            if (i == r || a(i, col).is_zero()) continue;
            const Rational f = a(i, col);
            for (int j = col; j < nc; ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(col);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

void normalize_to_coprime_ints(std::vector<Rational>& v) {
    mpz_class l(1), g(0);
    for (const auto& c : v) {
        mpz_class d = c.den(), t;
        mpz_gcd(t.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        l = l / t * d;
    }
    for (auto& c : v) c *= Rational(mpq_class(l));
    for (const auto& c : v) {
        mpz_class n = c.num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (g != 0) {
        const Rational inv(mpq_class(mpz_class(1), g));
        for (auto& c : v) c *= inv;
    }
    for (const auto& c : v) {
        if (c.is_zero()) continue;
        if (c.sign() < 0)
            for (auto& x : v) x = -x;
        break;
    }
}

}  // namespace

std::vector<std::vector<Rational>> nullspace(const Matrix& m) {
    const int nc = m.cols();
    Rref rr = rref(m);
    std::vector<bool> is_pivot(static_cast<size_t>(nc), false);
    for (int p : rr.pivots) is_pivot[static_cast<size_t>(p)] = true;

    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < nc; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<Rational> v(static_cast<size_t>(nc));
        v[static_cast<size_t>(free)] = Rational(1);
        for (size_t r = 0; r < rr.pivots.size(); ++r)
            v[static_cast<size_t>(rr.pivots[r])] = -rr.m(static_cast<int>(r), free);
        normalize_to_coprime_ints(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const Matrix& a, std::span<const Rational> b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("solve: rhs size mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[static_cast<size_t>(i)];
    }
    Rref rr = rref(std::move(aug));
    for (size_t r = 0; r < rr.pivots.size(); ++r)
        if (rr.pivots[r] == a.cols()) return std::nullopt;  // row [0 ... 0 | 1]
    std::vector<Rational> x(static_cast<size_t>(a.cols()));
    for (size_t r = 0; r < rr.pivots.size(); ++r)
        x[static_cast<size_t>(rr.pivots[r])] = rr.m(static_cast<int>(r), a.cols());
    return x;
}

std::optional<std::vector<Rational>> solve_left(const Matrix& a, std::span<const Rational> b) {
    return solve(a.transposed(), b);
}

}  // namespace octobil
