#include "rlf/affine.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "rlf/errors.hpp"

namespace rlf {

Mat2 Mat2::inverse() const {
    long long dt = det();
    if (dt != 1 && dt != -1)
        throw Error("Mat2::inverse: determinant must be +-1, got " + std::to_string(dt));
    // adj / det with det = +-1 is adj * det
    return {dt * d, dt * -b, dt * -c, dt * a};
}

AffineClass::AffineClass(const Mat2& mm, const RatVec2& tt) : m(mm), t(tt.mod1()) {
    long long dt = m.det();
    if (dt != 1 && dt != -1)
        throw Error("AffineClass: matrix must be unimodular, det = " + std::to_string(dt));
}

AffineClass AffineClass::inverse() const {
    Mat2 mi = m.inverse();
    return {mi, (-(mi * t)).mod1()};
}

std::string AffineClass::str() const {
    return "[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" + std::to_string(m.c) +
           "," + std::to_string(m.d) + "]] + (" + t.x.str() + "," + t.y.str() + ")";
}

AffineClass conjugate(const AffineClass& phi, const AffineClass& f) {
    return phi * f * phi.inverse();
}

bool is_real_structure(const AffineClass& f) {
    if (f.m.det() != -1) return false;
    return (f * f) == AffineClass::identity();
}

namespace {

void swap_rows(Mat2& m) { std::swap(m.a, m.c); std::swap(m.b, m.d); }
void swap_cols(Mat2& m) { std::swap(m.a, m.b); std::swap(m.c, m.d); }

// row1 -= q * row0  /  row0 -= q * row1, and column analogues
void row_sub(Mat2& m, int dst, long long q) {
    using R = Rat;
    if (dst == 1) {
        m.c = R::checked_add(m.c, -R::checked_mul(q, m.a));
        m.d = R::checked_add(m.d, -R::checked_mul(q, m.b));
    } else {
        m.a = R::checked_add(m.a, -R::checked_mul(q, m.c));
        m.b = R::checked_add(m.b, -R::checked_mul(q, m.d));
    }
}
void col_sub(Mat2& m, int dst, long long q) {
    using R = Rat;
    if (dst == 1) {
        m.b = R::checked_add(m.b, -R::checked_mul(q, m.a));
        m.d = R::checked_add(m.d, -R::checked_mul(q, m.c));
    } else {
        m.a = R::checked_add(m.a, -R::checked_mul(q, m.b));
        m.c = R::checked_add(m.c, -R::checked_mul(q, m.d));
    }
}

} // namespace

Snf smith_normal_form(const Mat2& a) {
    Snf s{Mat2::identity(), a, Mat2::identity()};
    Mat2& d = s.d;

    auto abs64 = [](long long x) { return x < 0 ? -x : x; };
    auto bring_min_pivot = [&]() {
        // smallest nonzero magnitude into position (0,0); false when d == 0
        long long entries[4] = {d.a, d.b, d.c, d.d};
        int best = -1;
        for (int i = 0; i < 4; ++i)
            if (entries[i] != 0 && (best == -1 || abs64(entries[i]) < abs64(entries[best])))
                best = i;
        if (best == -1) return false;
        if (best >= 2) { swap_rows(d); swap_rows(s.u); }
        if (best % 2 == 1) { swap_cols(d); swap_cols(s.v); }
        return true;
    };

    if (bring_min_pivot()) {
        for (;;) {
            // remainder reductions target row 1 / column 1 only, so the two
            // passes cannot dirty each other's zeros
            if (d.c != 0) {
                long long q = d.c / d.a;
                row_sub(d, 1, q);
                row_sub(s.u, 1, q);
            }
            if (d.b != 0) {
                long long q = d.b / d.a;
                col_sub(d, 1, q);
                col_sub(s.v, 1, q);
            }
            if (d.b == 0 && d.c == 0) {
                if (d.d != 0 && d.d % d.a != 0) {
                    // fold row 1 into row 0 so the gcd lands in the pivot
                    row_sub(d, 0, -1);
                    row_sub(s.u, 0, -1);
                } else {
                    break;
                }
            }
            bring_min_pivot();
        }
    }
    if (d.a < 0) { d.a = -d.a; d.b = -d.b; s.u.a = -s.u.a; s.u.b = -s.u.b; }
    if (d.d < 0) { d.c = -d.c; d.d = -d.d; s.u.c = -s.u.c; s.u.d = -s.u.d; }

    assert(s.u * a * s.v == d);
    assert(s.u.det() == 1 || s.u.det() == -1);
    assert(s.v.det() == 1 || s.v.det() == -1);
    return s;
}

Vec2 primitive_eigenvector(const Mat2& m, int eps) {
    Mat2 a = m;
    a.a -= eps;
    a.d -= eps;
    Vec2 v;
    if (a.a != 0 || a.b != 0) v = {a.b, -a.a};
    else if (a.c != 0 || a.d != 0) v = {a.d, -a.c};
    else throw Error("primitive_eigenvector: matrix is +-identity");
    long long g = std::gcd(v.x < 0 ? -v.x : v.x, v.y < 0 ? -v.y : v.y);
    v = {v.x / g, v.y / g};
    if (!((m * v) == Vec2{eps * v.x, eps * v.y}))
        throw Error("primitive_eigenvector: no eigenvector for eps");
    return sign_normalize(v);
}

namespace {

long long lcm_den(const RatVec2& p) { return std::lcm(p.x.den, p.y.den); }

// Canonical rational point on the circle {p + tau * dir}: smallest coordinate
// denominators, ties by lexicographic order. Scanned at twice the resolution
// of p along the primitive direction.
RatVec2 canonical_base_point(const RatVec2& p, const Vec2& dir) {
    long long L = 2 * lcm_den(p);
    RatVec2 best = p.mod1();
    long long best_den = lcm_den(best);
    for (long long j = 0; j < L; ++j) {
        Rat tau(j, L);
        RatVec2 q = (p + RatVec2{tau * Rat(dir.x), tau * Rat(dir.y)}).mod1();
        long long qd = lcm_den(q);
        if (qd < best_den || (qd == best_den && (q.x < best.x || (q.x == best.x && q.y < best.y))))
            { best = q; best_den = qd; }
    }
    return best;
}

} // namespace

FixedSetReport fixed_components(const AffineClass& c) {
    if (!is_real_structure(c)) throw NotInvolution("fixed_components: not a real structure");

    // Solve (M - I) x = -t over the torus through the Smith form.
    Mat2 a = c.m;
    a.a -= 1;
    a.d -= 1;
    Snf s = smith_normal_form(a);
    // D y = -U t with x = V y
    RatVec2 rhs = -(s.u * c.t);
    long long d1 = s.d.a;
    // involutions have rank(M - I) = 1 exactly
    assert(d1 > 0 && s.d.d == 0);

    FixedSetReport report;
    if (!rhs.y.mod1().is_zero()) return report; // free involution, empty real part

    Vec2 dir = sign_normalize({s.v.b, s.v.d});
    std::vector<RatVec2> bases;
    for (long long j = 0; j < d1; ++j) {
        Rat y1 = ((rhs.x + Rat(j)) / Rat(d1)).mod1();
        RatVec2 base{y1 * Rat(s.v.a), y1 * Rat(s.v.c)};
        bases.push_back(canonical_base_point(base, dir));
    }
    std::sort(bases.begin(), bases.end(), [](const RatVec2& p, const RatVec2& q) {
        return p.x < q.x || (p.x == q.x && p.y < q.y);
    });
    for (const auto& b : bases) report.components.push_back({dir, b});
    report.component_count = static_cast<int>(report.components.size());
    if (report.component_count > 2)
        throw Error("fixed_components: impossible component count");
    return report;
}

bool isotopic_structures(const AffineClass& c, const AffineClass& cprime) {
    if (!is_real_structure(c) || !is_real_structure(cprime))
        throw NotInvolution("isotopic_structures: inputs must be real structures");
    if (!(c.m == cprime.m)) return false;
    // (I - M) has rank 1; t difference must lie in its column line mod Z^2
    Mat2 a{1 - c.m.a, -c.m.b, -c.m.c, 1 - c.m.d};
    Vec2 w;
    if (a.a != 0 || a.c != 0) w = {a.a, a.c};
    else w = {a.b, a.d};
    long long g = std::gcd(w.x < 0 ? -w.x : w.x, w.y < 0 ? -w.y : w.y);
    assert(g != 0);
    w = {w.x / g, w.y / g};
    RatVec2 diff = (c.t - cprime.t).mod1();
    return cross(diff, w).mod1().is_zero();
}

AffineClass canonical_structure(int components) {
    switch (components) {
        case 2: return {Mat2{1, 0, 0, -1}, {Rat(0), Rat(0)}};
        case 1: return {Mat2{0, 1, 1, 0}, {Rat(0), Rat(0)}};
        case 0: return {Mat2{1, 0, 0, -1}, {Rat(1, 2), Rat(0)}};
        default: throw Error("canonical_structure: component count must be 0, 1 or 2");
    }
}

StructureClass classify_structure(const AffineClass& c) {
    if (!is_real_structure(c)) throw NotInvolution("classify_structure: not a real structure");

    Vec2 vp = primitive_eigenvector(c.m, +1);
    Vec2 vm = primitive_eigenvector(c.m, -1);
    long long idx = cross(vp, vm);
    if (idx < 0) { vm = {-vm.x, -vm.y}; idx = -idx; }
    assert(idx == 1 || idx == 2);

    AffineClass phi0;
    Mat2 target;
    if (idx == 1) {
        // basis (v+, v-) diagonalizes; P columns v+, v- with det +1
        Mat2 p{vp.x, vm.x, vp.y, vm.y};
        if (p.det() == -1) { p.b = -p.b; p.d = -p.d; }
        phi0 = AffineClass{p.inverse(), {Rat(0), Rat(0)}};
        target = Mat2{1, 0, 0, -1};
    } else {
        // index-2 eigenlattice: (v+ +- v-)/2 form a basis conjugating to the swap
        if ((vp.x + vm.x) % 2 != 0 || (vp.y + vm.y) % 2 != 0)
            throw Error("classify_structure: eigenlattice index is not 2");
        Vec2 p1{(vp.x + vm.x) / 2, (vp.y + vm.y) / 2};
        Vec2 p2{(vp.x - vm.x) / 2, (vp.y - vm.y) / 2};
        Mat2 p{p1.x, p2.x, p1.y, p2.y};
        if (p.det() == -1) { std::swap(p.a, p.b); std::swap(p.c, p.d); }
        phi0 = AffineClass{p.inverse(), {Rat(0), Rat(0)}};
        target = Mat2{0, 1, 1, 0};
    }

    AffineClass c1 = conjugate(phi0, c);
    assert(c1.m == target);

    StructureClass out;
    AffineClass tau;
    if (idx == 1) {
        // translation freedom (0, 2s), first coordinate of t decides the class
        Rat t1 = c1.t.x;
        if (t1.is_zero()) out.components = 2;
        else if (t1 == Rat(1, 2)) out.components = 0;
        else throw Error("classify_structure: unexpected translation " + c1.str());
        RatVec2 tk = canonical_structure(out.components).t;
        tau = AffineClass::translation({Rat(0), (tk.y - c1.t.y) / Rat(2)});
    } else {
        out.components = 1;
        // (I - S)(x,0) = (x,-x); x = -t1 lands the translation on 0
        tau = AffineClass::translation({-c1.t.x, Rat(0)});
    }
    out.to_canonical = tau * phi0;
    if (!(conjugate(out.to_canonical, c) == canonical_structure(out.components)))
        throw Error("classify_structure: canonicalization failed for " + c.str());
    assert(out.to_canonical.m.det() == 1);
    return out;
}

bool structures_conjugate(const AffineClass& c, const AffineClass& cprime) {
    return classify_structure(c).components == classify_structure(cprime).components;
}

} // namespace rlf
