#include "rlf/curves.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "rlf/errors.hpp"

namespace rlf {

namespace {

bool is_primitive(const Vec2& v) {
    if (v.x == 0 && v.y == 0) return false;
    return std::gcd(v.x < 0 ? -v.x : v.x, v.y < 0 ? -v.y : v.y) == 1;
}

// x, y with p*x + q*y = gcd(p, q)
void ext_gcd(long long p, long long q, long long& x, long long& y) {
    if (q == 0) { x = (p < 0 ? -1 : 1); y = 0; return; }
    long long x1, y1;
    ext_gcd(q, p % q, x1, y1);
    x = y1;
    y = x1 - (p / q) * y1;
}

long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

} // namespace

CurveClass::CurveClass(Vec2 vec, Rat offset) {
    if (!is_primitive(vec))
        throw InvariantViolation("CurveClass: class vector must be primitive");
    v = sign_normalize(vec);
    s = offset.mod1();
}

std::string CurveClass::str() const {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")@" + s.str();
}

Vec2 frame_complement(const Vec2& v) {
    long long x, y;
    ext_gcd(v.x, v.y, x, y);
    // v.x * x + v.y * y = 1, so b0 = (-y, x) has det[v b0] = 1
    Vec2 b{-y, x};
    // reduce along v: unique representative with 0 <= <b,v> < |v|^2
    long long n2 = v.x * v.x + v.y * v.y;
    long long k = floor_div(b.x * v.x + b.y * v.y, n2);
    b = {b.x - k * v.x, b.y - k * v.y};
    assert(cross(v, b) == 1);
    return b;
}

RatVec2 base_point(const CurveClass& k) {
    Vec2 b = frame_complement(k.v);
    return {k.s * Rat(b.x), k.s * Rat(b.y)};
}

const char* action_name(ActionType a) {
    switch (a) {
        case ActionType::PointwiseFixed: return "fixed";
        case ActionType::Reflection: return "reflection";
        case ActionType::Antipodal: return "antipodal";
    }
    return "?";
}

Mat2 dehn_twist_matrix(const Vec2& a) {
    if (!is_primitive(a)) throw InvariantViolation("dehn_twist: class vector must be primitive");
    long long p = a.x, q = a.y;
    return {1 + p * q, -p * p, q * q, 1 - p * q};
}

AffineClass dehn_twist(const CurveClass& k) {
    // translation s*a supports the twist along the geodesic L_s itself, which
    // keeps t_a o c an exact involution for every invariant curve
    return {dehn_twist_matrix(k.v), RatVec2{k.s * Rat(k.v.x), k.s * Rat(k.v.y)}.mod1()};
}

std::optional<OffsetTransform> offset_transform(const AffineClass& c, const Vec2& v) {
    if (!is_real_structure(c)) throw NotInvolution("offset_transform: not a real structure");
    if (!is_primitive(v)) throw InvariantViolation("offset_transform: non-primitive vector");
    Vec2 vn = sign_normalize(v);
    Vec2 mv = c.m * vn;
    if (!(mv == vn) && !(mv == Vec2{-vn.x, -vn.y})) return std::nullopt;
    Vec2 b = frame_complement(vn);
    long long eps = cross(vn, to_rat(c.m * b)).num; // = eigenvalue * det(M)
    assert(eps == 1 || eps == -1);
    return OffsetTransform{static_cast<int>(eps), cross(vn, c.t).mod1()};
}

bool is_invariant_curve(const AffineClass& c, const CurveClass& k) {
    auto tr = offset_transform(c, k.v);
    if (!tr) return false;
    Rat image = (Rat(tr->eps) * k.s + tr->delta).mod1();
    return image == k.s;
}

ActionType curve_action(const AffineClass& c, const CurveClass& k) {
    if (!is_invariant_curve(c, k))
        throw InvariantViolation("curve_action: curve " + k.str() + " is not invariant");
    Vec2 mv = c.m * k.v;
    int eigen = (mv == k.v) ? 1 : -1;
    if (eigen == -1) return ActionType::Reflection;
    // parameter map on the circle is tau -> tau + s*alpha + <t, b>
    Vec2 b = frame_complement(k.v);
    Rat alpha = cross(to_rat(c.m * b), b);
    Rat delta = (k.s * alpha + cross(c.t, b)).mod1();
    if (delta.is_zero()) return ActionType::PointwiseFixed;
    if (delta == Rat(1, 2)) return ActionType::Antipodal;
    throw Error("curve_action: restriction is not an involution, delta = " + delta.str());
}

std::vector<InvariantCurveClass> invariant_curve_classes(const AffineClass& c) {
    if (!is_real_structure(c)) throw NotInvolution("invariant_curve_classes: not a real structure");
    std::vector<InvariantCurveClass> out;

    for (int eigen : {+1, -1}) {
        Vec2 v = primitive_eigenvector(c.m, eigen);
        Rat delta = cross(v, c.t).mod1();
        if (eigen == -1) {
            // offset map is s -> s + delta: either every offset or none
            if (delta.is_zero())
                out.push_back({CurveClass(v, Rat(0)), ActionType::Reflection, std::nullopt});
            continue;
        }
        // offset map is s -> -s + delta: two isolated invariant offsets
        Rat s0 = (delta / Rat(2)).mod1();
        Rat s1 = (s0 + Rat(1, 2)).mod1();
        if (s1 < s0) std::swap(s0, s1);
        CurveClass k0(v, s0), k1(v, s1);
        ActionType a0 = curve_action(c, k0), a1 = curve_action(c, k1);
        bool twins = (a0 == a1);
        out.push_back({k0, a0, twins ? std::optional<int>(0) : std::nullopt});
        out.push_back({k1, a1, twins ? std::optional<int>(1) : std::nullopt});
    }

    std::sort(out.begin(), out.end(), [](const InvariantCurveClass& a, const InvariantCurveClass& b) {
        return a.curve < b.curve;
    });
    return out;
}

InvariantCurveClass classify_curve(const AffineClass& c, const CurveClass& k) {
    ActionType act = curve_action(c, k); // throws when not invariant
    for (const auto& cls : invariant_curve_classes(c)) {
        if (!(cls.curve.v == k.v)) continue;
        if (cls.action == ActionType::Reflection && act == ActionType::Reflection) return cls;
        if (cls.curve.s == k.s) return cls;
    }
    throw Error("classify_curve: invariant curve missing from class list");
}

bool are_twins(const AffineClass& c, const InvariantCurveClass& k1, const InvariantCurveClass& k2) {
    InvariantCurveClass c1 = classify_curve(c, k1.curve);
    InvariantCurveClass c2 = classify_curve(c, k2.curve);
    if (c1 == c2) return false;
    return c1.curve.v == c2.curve.v && c1.action == c2.action;
}

std::optional<AffineClass> twin_swap_map(const AffineClass& c) {
    if (!is_real_structure(c)) throw NotInvolution("twin_swap_map: not a real structure");
    Vec2 v = primitive_eigenvector(c.m, +1);
    Vec2 b = frame_complement(v);
    long long alpha = cross(to_rat(c.m * b), b).num;
    if (alpha % 2 != 0) return std::nullopt; // one-component structures have no twins
    AffineClass r = AffineClass::translation(RatVec2{Rat(b.x, 2), Rat(b.y, 2)}.mod1());
    assert(conjugate(r, c) == c);
    return r;
}

AffineClass half_rotation_map(const AffineClass& c) {
    if (auto r = twin_swap_map(c)) return *r;
    Vec2 v = primitive_eigenvector(c.m, +1);
    return AffineClass::translation(RatVec2{Rat(v.x, 2), Rat(v.y, 2)}.mod1());
}

CurveClass apply_map_to_curve(const AffineClass& phi, const CurveClass& k) {
    Vec2 image = sign_normalize(phi.m * k.v);
    Rat offset = cross(image, phi.apply(base_point(k))).mod1();
    return CurveClass(image, offset);
}

} // namespace rlf
