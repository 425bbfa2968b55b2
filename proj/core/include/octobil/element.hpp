#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "octobil/rational.hpp"

namespace octobil {

/// An element of a level-d algebra in the Cayley-Dickson tower
/// R (1) < C (2) < H (4) < K (8), with exact rational coordinates.
/// Coordinate 0 is the real unit coordinate.
///
/// Doubling convention used throughout: (a,b)(c,d) = (ac - conj(d)b, da + b conj(c)),
/// with the first half of the coordinate block holding the first pair slot.
class Element {
public:
    static bool valid_level(int level) { return level == 1 || level == 2 || level == 4 || level == 8; }

    explicit Element(int level);
    Element(int level, std::vector<Rational> coords);
    Element(int level, std::initializer_list<long long> ints);

    /// Basis element e_index at the given level.
    static Element unit(int level, int index);
    static Element zero(int level) { return Element(level); }
    /// The multiplicative identity e_0.
    static Element one(int level) { return unit(level, 0); }

    int level() const { return level_; }
    const Rational& operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
    Rational& operator[](int i) { return coords_[static_cast<size_t>(i)]; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Rational& s);

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Rational& s, Element a) { return a *= s; }
    friend Element operator*(Element a, const Rational& s) { return a *= s; }
    friend Element operator-(const Element& a);
    friend bool operator==(const Element& a, const Element& b);

private:
    int level_;
    std::vector<Rational> coords_;
};

/// Cayley-Dickson product. Levels must match.
Element mul(const Element& x, const Element& y);

/// Conjugation: real coordinate kept, all others negated.
Element conj(const Element& x);

/// N(x) = sum of squared coordinates.
Rational norm(const Element& x);

/// Standard dot product of the coordinate vectors. Levels must match.
Rational inner(const Element& x, const Element& y);

/// xy - yx.
Element commutator(const Element& x, const Element& y);

/// (x,y,z) = x(yz) - (xy)z.
Element associator(const Element& x, const Element& y, const Element& z);

/// x + conj(x) = 2<x,e0> e0.
Element trace(const Element& x);

/// Zero-pads coordinates up to target_level; an algebra homomorphism onto its image.
Element embed(const Element& x, int target_level);

/// Raw-coordinate product used by map evaluators: out[0..n) = x*y where n is a
/// power of two <= 8 and the inputs are coordinate blocks of that width.
void mul_coords(std::span<const Rational> x, std::span<const Rational> y, std::span<Rational> out);

}  // namespace octobil
