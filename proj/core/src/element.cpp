#include "octobil/element.hpp"

#include <stdexcept>

namespace octobil {

namespace {

void require_level(int level) {
    if (!Element::valid_level(level))
        throw std::invalid_argument("Element: level must be one of 1,2,4,8");
}

void require_same_level(const Element& a, const Element& b) {
    if (a.level() != b.level())
        throw std::invalid_argument("Element: level mismatch");
}

// (a,b)(c,d) = (ac - conj(d)b, da + b conj(c)), recursing on half-width blocks.
void mul_rec(size_t n, const Rational* x, const Rational* y, Rational* out) {
    if (n == 1) {
        out[0] = x[0] * y[0];
        return;
    }
    const size_t h = n / 2;
    const Rational* a = x;
    const Rational* b = x + h;
    const Rational* c = y;
    const Rational* d = y + h;

    std::vector<Rational> t1(h), t2(h), cj(h);

    mul_rec(h, a, c, t1.data());             // ac
    cj[0] = d[0];
    for (size_t i = 1; i < h; ++i) cj[i] = -d[i];
    mul_rec(h, cj.data(), b, t2.data());     // conj(d) b
    for (size_t i = 0; i < h; ++i) out[i] = t1[i] - t2[i];

    mul_rec(h, d, a, t1.data());             // da
    cj[0] = c[0];
    for (size_t i = 1; i < h; ++i) cj[i] = -c[i];
    mul_rec(h, b, cj.data(), t2.data());     // b conj(c)
    for (size_t i = 0; i < h; ++i) out[h + i] = t1[i] + t2[i];
}

}  // namespace

Element::Element(int level) : level_(level), coords_(static_cast<size_t>(level)) {
    require_level(level);
}

Element::Element(int level, std::vector<Rational> coords) : level_(level), coords_(std::move(coords)) {
    require_level(level);
    if (coords_.size() != static_cast<size_t>(level))
        throw std::invalid_argument("Element: coordinate count must equal level");
}

Element::Element(int level, std::initializer_list<long long> ints) : level_(level) {
    require_level(level);
    if (ints.size() != static_cast<size_t>(level))
        throw std::invalid_argument("Element: coordinate count must equal level");
    coords_.reserve(ints.size());
    for (long long v : ints) coords_.emplace_back(v);
}

Element Element::unit(int level, int index) {
    require_level(level);
    if (index < 0 || index >= level)
        throw std::invalid_argument("Element::unit: index out of range");
    Element e(level);
    e.coords_[static_cast<size_t>(index)] = Rational(1);
    return e;
}

bool Element::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

Element& Element::operator+=(const Element& o) {
    require_same_level(*this, o);
    for (size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

Element& Element::operator-=(const Element& o) {
    require_same_level(*this, o);
    for (size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

Element& Element::operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
}

Element operator-(const Element& a) {
    Element r(a.level_);
    for (size_t i = 0; i < a.coords_.size(); ++i) r.coords_[i] = -a.coords_[i];
    return r;
}

bool operator==(const Element& a, const Element& b) {
    if (a.level_ != b.level_) return false;
    return a.coords_ == b.coords_;
}

void mul_coords(std::span<const Rational> x, std::span<const Rational> y, std::span<Rational> out) {
    if (x.size() != y.size() || x.size() != out.size())
        throw std::invalid_argument("mul_coords: size mismatch");
    if (!Element::valid_level(static_cast<int>(x.size())))
        throw std::invalid_argument("mul_coords: width must be one of 1,2,4,8");
    mul_rec(x.size(), x.data(), y.data(), out.data());
}

Element mul(const Element& x, const Element& y) {
    require_same_level(x, y);
    Element r(x.level());
    mul_rec(static_cast<size_t>(x.level()), x.coords().data(), y.coords().data(), &r[0]);
    return r;
}

Element conj(const Element& x) {
    Element r = x;
    for (int i = 1; i < x.level(); ++i) r[i] = -r[i];
    return r;
}

Rational norm(const Element& x) {
    Rational s;
    for (const auto& c : x.coords()) s += c * c;
    return s;
}

Rational inner(const Element& x, const Element& y) {
    require_same_level(x, y);
    Rational s;
    for (int i = 0; i < x.level(); ++i) s += x[i] * y[i];
    return s;
}

Element commutator(const Element& x, const Element& y) {
    return mul(x, y) - mul(y, x);
}

Element associator(const Element& x, const Element& y, const Element& z) {
    return mul(x, mul(y, z)) - mul(mul(x, y), z);
}

Element trace(const Element& x) {
    return x + conj(x);
}

Element embed(const Element& x, int target_level) {
    require_level(target_level);
    if (target_level < x.level())
        throw std::invalid_argument("embed: target level below element level");
    std::vector<Rational> coords(static_cast<size_t>(target_level));
    for (int i = 0; i < x.level(); ++i) coords[static_cast<size_t>(i)] = x[i];
    return Element(target_level, std::move(coords));
}

}  // namespace octobil
