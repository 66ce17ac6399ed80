#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rlf/affine.hpp"

namespace rlf {

// Essential simple closed curve on T^2: a primitive class vector v (gcd 1,
// first nonzero entry positive) and the geodesic representative
//   L_s = { tau*v + s*b(v) }  mod Z^2,
// where b(v) is the canonical complement with det[v b] = +1 and s is the
// offset mod 1. Curves are unoriented.
struct CurveClass {
    Vec2 v;
    Rat s; // in [0,1)

    CurveClass() : v{1, 0}, s(0) {}
    CurveClass(Vec2 vec, Rat offset);

    friend bool operator==(const CurveClass&, const CurveClass&) = default;
    friend bool operator<(const CurveClass& a, const CurveClass& b) {
        if (a.v.x != b.v.x) return a.v.x < b.v.x;
        if (a.v.y != b.v.y) return a.v.y < b.v.y;
        return a.s < b.s;
    }
    std::string str() const;
};

// Canonical unimodular complement: det[v b] = +1 with 0 <= <b,v> < |v|^2.
Vec2 frame_complement(const Vec2& v);

// A rational point on the geodesic of k.
RatVec2 base_point(const CurveClass& k);

enum class ActionType { PointwiseFixed, Reflection, Antipodal };

const char* action_name(ActionType a);

// Equivariant isotopy class of a c-invariant curve. twin_index is set exactly
// when the class has a partner of the same action type swapped by an
// R_{1/2}-type map commuting with c.
struct InvariantCurveClass {
    CurveClass curve;
    ActionType action = ActionType::PointwiseFixed;
    std::optional<int> twin_index; // 0 or 1
    friend bool operator==(const InvariantCurveClass&, const InvariantCurveClass&) = default;
};

// Right-handed Dehn twist along k: matrix T_a v = v + <v,a> a with
// <u,v> = u1 v2 - u2 v1, translation s*a so the twist is supported along the
// actual geodesic L_s. Independent of the sign of a.
AffineClass dehn_twist(const CurveClass& k);
Mat2 dehn_twist_matrix(const Vec2& a);

// Action of a real structure c on the offset coordinate of geodesics in a
// primitive class v: s -> eps*s + delta if M v = +-v, nothing otherwise.
struct OffsetTransform {
    int eps = 1; // +1 or -1
    Rat delta;
};
std::optional<OffsetTransform> offset_transform(const AffineClass& c, const Vec2& v);

// True iff c maps the geodesic of k to itself setwise.
bool is_invariant_curve(const AffineClass& c, const CurveClass& k);

// Restriction type of c on an invariant geodesic. Throws InvariantViolation
// when the curve is not invariant, NotInvolution when c is not a structure.
ActionType curve_action(const AffineClass& c, const CurveClass& k);

// Complete finite list of equivariant isotopy classes of c-invariant
// essential curves, ordered by (class vector lex, offset). Counts follow the
// component count of c: three classes for k in {1,2}, two for k = 0.
std::vector<InvariantCurveClass> invariant_curve_classes(const AffineClass& c);

// Canonical class of an invariant curve within invariant_curve_classes(c).
// Reflection classes collapse every offset to the single stored class.
InvariantCurveClass classify_curve(const AffineClass& c, const CurveClass& k);

bool are_twins(const AffineClass& c, const InvariantCurveClass& k1, const InvariantCurveClass& k2);

// The R_{1/2}-type translation commuting with c that exchanges its twin
// classes; empty when c has one real component (no twins exist).
std::optional<AffineClass> twin_swap_map(const AffineClass& c);

// A half-period translation commuting with c: the twin swap when twins exist,
// otherwise the v+/2 rotation (which fixes every class).
AffineClass half_rotation_map(const AffineClass& c);

// Image curve under an affine map: vector M*v sign-normalized, offset
// transported through the frame convention.
CurveClass apply_map_to_curve(const AffineClass& phi, const CurveClass& k);

} // namespace rlf
