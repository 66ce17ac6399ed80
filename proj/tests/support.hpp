#pragma once

// Shared generators and independent oracles for the test suites. Oracles use
// brute force over rational grids and never call the production algorithm
// they check.

#include <random>
#include <vector>

#include "rlf/curves.hpp"

namespace rlf::test {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5a1ebc1dULL);
    return gen;
}

inline long long rand_int(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng());
}

// Random element of GL(2,Z) as a short product of elementary generators.
inline Mat2 random_unimodular(int factors = 5, bool orientation_preserving = false) {
    Mat2 m = Mat2::identity();
    for (int i = 0; i < factors; ++i) {
        switch (rand_int(0, 3)) {
            case 0: m = m * Mat2{1, rand_int(-2, 2), 0, 1}; break;
            case 1: m = m * Mat2{1, 0, rand_int(-2, 2), 1}; break;
            case 2: m = m * Mat2{0, 1, 1, 0}; break;
            default: m = m * Mat2{-1, 0, 0, 1}; break;
        }
    }
    if (orientation_preserving && m.det() == -1) m = m * Mat2{0, 1, 1, 0};
    return m;
}

inline Rat random_rat(long long max_den = 6) {
    long long d = rand_int(1, max_den);
    return Rat(rand_int(0, d - 1), d);
}

inline AffineClass random_affine(bool orientation_preserving = false, long long max_den = 6) {
    return {random_unimodular(5, orientation_preserving), {random_rat(max_den), random_rat(max_den)}};
}

// All involution matrices with det -1 and entries bounded by h.
inline std::vector<Mat2> involution_matrices(long long h) {
    std::vector<Mat2> out;
    for (long long a = -h; a <= h; ++a)
        for (long long b = -h; b <= h; ++b)
            for (long long c = -h; c <= h; ++c)
                for (long long d = -h; d <= h; ++d) {
                    Mat2 m{a, b, c, d};
                    if (m.det() != -1) continue;
                    if (m * m == Mat2::identity()) out.push_back(m);
                }
    return out;
}

// Random real structure sampled directly from bounded-height involution
// matrices with a random compatible translation: t must solve (M + I)t = 0
// mod Z^2, whose solution set is t0 + ker, explored on a denominator grid.
inline AffineClass random_real_structure(long long h = 2, long long grid = 6) {
    static std::vector<Mat2> mats = involution_matrices(2);
    static std::vector<Mat2> mats3 = involution_matrices(3);
    const auto& pool = (h <= 2) ? mats : mats3;
    for (;;) {
        const Mat2& m = pool[static_cast<size_t>(rand_int(0, static_cast<long long>(pool.size()) - 1))];
        // rejection sample a compatible translation on the grid
        for (int tries = 0; tries < 40; ++tries) {
            RatVec2 t{Rat(rand_int(0, grid - 1), grid), Rat(rand_int(0, grid - 1), grid)};
            AffineClass c{m, t};
            if (is_real_structure(c)) return c;
        }
    }
}

// Random valid real code: a random real structure with one of its invariant
// curve classes.
inline std::pair<AffineClass, CurveClass> random_valid_pair(long long h = 2) {
    AffineClass c = random_real_structure(h);
    auto classes = invariant_curve_classes(c);
    const auto& pick = classes[static_cast<size_t>(rand_int(0, static_cast<long long>(classes.size()) - 1))];
    return {c, pick.curve};
}

// Independent fixed-set oracle: counts solutions of c(x) = x on the (1/L)Z^2
// grid; each fixed circle carries exactly L grid points once L clears every
// denominator in sight.
inline int grid_fixed_circle_count(const AffineClass& c, long long L = 24) {
    long long hits = 0;
    for (long long i = 0; i < L; ++i)
        for (long long j = 0; j < L; ++j) {
            RatVec2 p{Rat(i, L), Rat(j, L)};
            if (c.apply(p).mod1() == p) ++hits;
        }
    if (hits % L != 0) throw std::runtime_error("grid oracle: grid too coarse");
    return static_cast<int>(hits / L);
}

// Independent isotopy oracle: searches for a conjugating translation on a
// denominator grid (same matrix involutions are isotopic iff translation
// conjugate).
inline bool grid_translation_conjugate(const AffineClass& c, const AffineClass& cprime,
                                       long long L = 24) {
    if (!(c.m == cprime.m)) return false;
    for (long long i = 0; i < L; ++i)
        for (long long j = 0; j < L; ++j) {
            AffineClass tau = AffineClass::translation({Rat(i, L), Rat(j, L)});
            if (conjugate(tau, c) == cprime) return true;
        }
    return false;
}

// Independent circle-map oracle: the parameter map tau -> eps*tau + delta of
// c restricted to the geodesic of k, recovered from two sampled points.
struct CircleMap {
    int eps;
    Rat delta;
};

inline CircleMap sampled_circle_map(const AffineClass& c, const CurveClass& k) {
    Vec2 b = frame_complement(k.v);
    auto point = [&](const Rat& tau) {
        return RatVec2{tau * Rat(k.v.x) + k.s * Rat(b.x), tau * Rat(k.v.y) + k.s * Rat(b.y)};
    };
    auto param_of = [&](const RatVec2& p) {
        // coordinates in the basis (v, b): tau = cross(p, b), offset = cross(v, p)
        if (!(cross(k.v, p).mod1() == k.s))
            throw std::runtime_error("sampled_circle_map: image leaves the geodesic");
        return cross(p, b).mod1();
    };
    Rat t0 = param_of(c.apply(point(Rat(0))).mod1());
    Rat t1 = param_of(c.apply(point(Rat(1, 7))).mod1());
    for (int eps : {1, -1}) {
        Rat delta = (t0 - Rat(eps) * Rat(0)).mod1();
        if ((Rat(eps) * Rat(1, 7) + delta).mod1() == t1) return {eps, delta};
    }
    throw std::runtime_error("sampled_circle_map: map is not affine on the circle");
}

} // namespace rlf::test
