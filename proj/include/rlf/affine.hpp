#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rlf/rational.hpp"

namespace rlf {

// Column vector over Z.
struct Vec2 {
    long long x = 0, y = 0;
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline long long cross(const Vec2& u, const Vec2& v) {
    return Rat::checked_add(Rat::checked_mul(u.x, v.y), -Rat::checked_mul(u.y, v.x));
}

// 2x2 integer matrix, row major.
struct Mat2 {
    long long a = 1, b = 0, c = 0, d = 1;

    static Mat2 identity() { return {}; }

    long long det() const {
        return Rat::checked_add(Rat::checked_mul(a, d), -Rat::checked_mul(b, c));
    }
    long long trace() const { return Rat::checked_add(a, d); }

    // Valid only for det = +-1; stays integral.
    Mat2 inverse() const;

    friend Mat2 operator*(const Mat2& m, const Mat2& n) {
        using R = Rat;
        return {R::checked_add(R::checked_mul(m.a, n.a), R::checked_mul(m.b, n.c)),
                R::checked_add(R::checked_mul(m.a, n.b), R::checked_mul(m.b, n.d)),
                R::checked_add(R::checked_mul(m.c, n.a), R::checked_mul(m.d, n.c)),
                R::checked_add(R::checked_mul(m.c, n.b), R::checked_mul(m.d, n.d))};
    }
    friend Vec2 operator*(const Mat2& m, const Vec2& v) {
        using R = Rat;
        return {R::checked_add(R::checked_mul(m.a, v.x), R::checked_mul(m.b, v.y)),
                R::checked_add(R::checked_mul(m.c, v.x), R::checked_mul(m.d, v.y))};
    }
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

struct RatVec2 {
    Rat x, y;
    RatVec2 mod1() const { return {x.mod1(), y.mod1()}; }
    friend RatVec2 operator+(const RatVec2& u, const RatVec2& v) { return {u.x + v.x, u.y + v.y}; }
    friend RatVec2 operator-(const RatVec2& u, const RatVec2& v) { return {u.x - v.x, u.y - v.y}; }
    RatVec2 operator-() const { return {-x, -y}; }
    friend RatVec2 operator*(const Mat2& m, const RatVec2& v) {
        return {Rat(m.a) * v.x + Rat(m.b) * v.y, Rat(m.c) * v.x + Rat(m.d) * v.y};
    }
    friend bool operator==(const RatVec2&, const RatVec2&) = default;
};

inline Rat cross(const RatVec2& u, const RatVec2& v) { return u.x * v.y - u.y * v.x; }
inline Rat cross(const Vec2& u, const RatVec2& v) { return Rat(u.x) * v.y - Rat(u.y) * v.x; }
inline Rat cross(const RatVec2& u, const Vec2& v) { return u.x * Rat(v.y) - u.y * Rat(v.x); }
inline RatVec2 to_rat(const Vec2& v) { return {Rat(v.x), Rat(v.y)}; }

// Affine self-map x -> Mx + t of T^2 = R^2/Z^2, with M in GL(2,Z) and t
// rational mod 1. Composition closed, so these form a group; it carries the
// real structures, Dehn twists and all conjugating maps used in this library.
struct AffineClass {
    Mat2 m;
    RatVec2 t;

    AffineClass() = default;
    AffineClass(const Mat2& mm, const RatVec2& tt);

    static AffineClass identity() { return {}; }
    static AffineClass translation(const RatVec2& t) { return {Mat2::identity(), t}; }

    AffineClass inverse() const;

    // Composition f*g = f after g: x -> M_f (M_g x + t_g) + t_f.
    friend AffineClass operator*(const AffineClass& f, const AffineClass& g) {
        return {f.m * g.m, (f.m * g.t + f.t).mod1()};
    }
    friend bool operator==(const AffineClass&, const AffineClass&) = default;

    RatVec2 apply(const RatVec2& p) const { return (m * p + t); }

    std::string str() const;
};

inline AffineClass compose(const AffineClass& f, const AffineClass& g) { return f * g; }
inline AffineClass inverse(const AffineClass& f) { return f.inverse(); }

// phi o f o phi^{-1}.
AffineClass conjugate(const AffineClass& phi, const AffineClass& f);

// Orientation-reversing involution test: det M = -1, M^2 = I, Mt + t = 0 mod Z^2.
bool is_real_structure(const AffineClass& f);

// Smith normal form U*A*V = D, U,V unimodular, D = diag(d1,d2), d1 | d2, di >= 0.
struct Snf {
    Mat2 u, d, v;
};
Snf smith_normal_form(const Mat2& a);

// One fixed circle of an involution: {base + tau * direction} mod Z^2.
struct FixedCircle {
    Vec2 direction;  // primitive, sign-normalized
    RatVec2 base;    // canonical rational point on the circle
    friend bool operator==(const FixedCircle&, const FixedCircle&) = default;
};

struct FixedSetReport {
    int component_count = 0; // 0, 1 or 2 on the torus
    std::vector<FixedCircle> components;
};

// Exact fixed-point set of a real structure, via (M - I)x = -t over Z^2.
// Throws NotInvolution on anything else.
FixedSetReport fixed_components(const AffineClass& c);

// Same matrix and translation difference in (I - M)R^2 + Z^2.
// Throws NotInvolution unless both are real structures.
bool isotopic_structures(const AffineClass& c, const AffineClass& cprime);

// Primitive integer eigenvector of M for eigenvalue eps = +-1, sign-normalized
// (first nonzero entry positive). Requires M to be a det -1 involution matrix.
Vec2 primitive_eigenvector(const Mat2& m, int eps);

inline Vec2 sign_normalize(Vec2 v) {
    if (v.x < 0 || (v.x == 0 && v.y < 0)) { v.x = -v.x; v.y = -v.y; }
    return v;
}

// The three canonical real structures, indexed by real component count.
//   k=2: (diag(1,-1), 0)      k=1: ([[0,1],[1,0]], 0)      k=0: (diag(1,-1), (1/2,0))
AffineClass canonical_structure(int components);

struct StructureClass {
    int components = 0;        // conjugacy class = component count on the torus
    AffineClass to_canonical;  // det +1 map phi with phi*c*phi^{-1} == canonical_structure(components)
};

// Classifies a real structure up to det(+1) affine conjugacy and produces an
// exact conjugating witness onto the canonical representative.
StructureClass classify_structure(const AffineClass& c);

// True iff some det(+1) affine map conjugates c onto cprime.
bool structures_conjugate(const AffineClass& c, const AffineClass& cprime);

} // namespace rlf
