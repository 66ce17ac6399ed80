#include <doctest.h>

#include "rlf/affine.hpp"
#include "rlf/errors.hpp"
#include "support.hpp"

using namespace rlf;
using namespace rlf::test;

namespace {
const AffineClass kConj{Mat2{1, 0, 0, -1}, {Rat(0), Rat(0)}};        // 2 components
const AffineClass kSwap{Mat2{0, 1, 1, 0}, {Rat(0), Rat(0)}};         // 1 component
const AffineClass kFree{Mat2{1, 0, 0, -1}, {Rat(1, 2), Rat(0)}};     // 0 components
const AffineClass kRHalf = AffineClass::translation({Rat(0), Rat(1, 2)});
} // namespace

TEST_CASE("rational arithmetic basics") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-1, 2).mod1() == Rat(1, 2));
    CHECK(Rat(7, 3).mod1() == Rat(1, 3));
    CHECK((Rat(1, 2) + Rat(1, 3)) == Rat(5, 6));
    CHECK((Rat(1, 2) * Rat(2, 3)) == Rat(1, 3));
    CHECK(Rat::parse("3/4") == Rat(3, 4));
    CHECK(Rat::parse("-2") == Rat(-2));
    CHECK(Rat(5, 10).str() == "1/2");
    CHECK(Rat(3).str() == "3");
    CHECK_THROWS(Rat(1, 0));
    CHECK_THROWS(Rat::parse("x"));
}

TEST_CASE("compose: identity, involution square, matrix product") {
    AffineClass f = random_affine();
    CHECK(compose(AffineClass::identity(), f) == f);
    CHECK(compose(f, AffineClass::identity()) == f);

    CHECK(compose(kConj, kConj) == AffineClass::identity());

    AffineClass twist{Mat2{1, -1, 0, 1}, {Rat(0), Rat(0)}};
    AffineClass expect{Mat2{1, 1, 0, -1}, {Rat(0), Rat(0)}};
    CHECK(compose(twist, kConj) == expect);
}

TEST_CASE("compose is associative with neutral element") {
    for (int i = 0; i < 200; ++i) {
        AffineClass f = random_affine(), g = random_affine(), h = random_affine();
        CHECK((f * g) * h == f * (g * h));
    }
}

TEST_CASE("inverse") {
    CHECK(inverse(AffineClass::identity()) == AffineClass::identity());
    CHECK(inverse(kFree) == kFree); // involutions are self-inverse

    AffineClass twist{Mat2{1, -1, 0, 1}, {Rat(0), Rat(0)}};
    AffineClass expect{Mat2{1, 1, 0, 1}, {Rat(0), Rat(0)}};
    CHECK(inverse(twist) == expect);

    for (int i = 0; i < 200; ++i) {
        AffineClass f = random_affine();
        CHECK(f * f.inverse() == AffineClass::identity());
        CHECK(f.inverse() * f == AffineClass::identity());
    }
}

TEST_CASE("is_real_structure") {
    CHECK(is_real_structure(kConj));
    CHECK(is_real_structure(kFree)); // the (x+1/2, -y) model
    CHECK(is_real_structure(AffineClass{Mat2{1, 1, 0, -1}, {Rat(0), Rat(0)}}));
    CHECK_FALSE(is_real_structure(AffineClass{Mat2{1, 1, 0, 1}, {Rat(0), Rat(0)}}));
    CHECK_FALSE(is_real_structure(AffineClass{Mat2{1, 0, 0, -1}, {Rat(1, 3), Rat(0)}}));
}

TEST_CASE("smith normal form: pinned cases") {
    Snf s = smith_normal_form(Mat2::identity());
    CHECK(s.d == Mat2::identity());

    s = smith_normal_form(Mat2{0, 0, 0, 2});
    CHECK(s.d == Mat2{2, 0, 0, 0});

    s = smith_normal_form(Mat2{0, 1, 0, -2});
    CHECK(s.d == Mat2{1, 0, 0, 0});
}

TEST_CASE("smith normal form: random matrices satisfy the contract") {
    for (int i = 0; i < 500; ++i) {
        Mat2 a{rand_int(-9, 9), rand_int(-9, 9), rand_int(-9, 9), rand_int(-9, 9)};
        Snf s = smith_normal_form(a);
        CHECK(s.u * a * s.v == s.d);
        CHECK((s.u.det() == 1 || s.u.det() == -1));
        CHECK((s.v.det() == 1 || s.v.det() == -1));
        CHECK(s.d.b == 0);
        CHECK(s.d.c == 0);
        CHECK(s.d.a >= 0);
        CHECK(s.d.d >= 0);
        if (s.d.a != 0) CHECK(s.d.d % s.d.a == 0);
        else CHECK(s.d.d == 0);
    }
}

TEST_CASE("fixed_components: canonical structures") {
    FixedSetReport r = fixed_components(kConj);
    REQUIRE(r.component_count == 2);
    CHECK(r.components[0].direction == Vec2{1, 0});
    CHECK(r.components[0].base == RatVec2{Rat(0), Rat(0)});      // y = 0
    CHECK(r.components[1].base == RatVec2{Rat(0), Rat(1, 2)});   // y = 1/2

    CHECK(fixed_components(kFree).component_count == 0); // Klein bottle quotient

    r = fixed_components(kSwap);
    REQUIRE(r.component_count == 1);
    CHECK(r.components[0].direction == Vec2{1, 1}); // the diagonal
    CHECK(r.components[0].base == RatVec2{Rat(0), Rat(0)});

    r = fixed_components(AffineClass{Mat2{1, 1, 0, -1}, {Rat(0), Rat(0)}});
    REQUIRE(r.component_count == 1); // congruence (y, -2y) = (0,0)
    CHECK(r.components[0].direction == Vec2{1, 0});

    CHECK_THROWS_AS(fixed_components(random_affine(true)), NotInvolution);
}

TEST_CASE("fixed_components agrees with the grid oracle") {
    for (int i = 0; i < 100; ++i) {
        AffineClass c = random_real_structure();
        long long L = std::lcm(24LL, std::lcm(c.t.x.den, c.t.y.den));
        CHECK(fixed_components(c).component_count == grid_fixed_circle_count(c, L));
    }
}

TEST_CASE("fixed circles are pointwise fixed") {
    for (int i = 0; i < 100; ++i) {
        AffineClass c = random_real_structure();
        for (const FixedCircle& circ : fixed_components(c).components) {
            for (int j = 0; j < 5; ++j) {
                Rat tau(j, 5);
                RatVec2 p = (circ.base + RatVec2{tau * Rat(circ.direction.x),
                                                 tau * Rat(circ.direction.y)}).mod1();
                CHECK(c.apply(p).mod1() == p);
            }
        }
    }
}

TEST_CASE("conjugation preserves fixed component count") {
    for (int i = 0; i < 200; ++i) {
        AffineClass c = random_real_structure();
        AffineClass phi = random_affine();
        AffineClass cc = conjugate(phi, c);
        CHECK(is_real_structure(cc));
        CHECK(fixed_components(cc).component_count == fixed_components(c).component_count);
    }
}

TEST_CASE("conjugate: pinned examples") {
    AffineClass f = random_affine();
    CHECK(conjugate(AffineClass::identity(), f) == f);

    // R_{1/2} commutes with the standard conjugation
    CHECK(conjugate(kRHalf, kConj) == kConj);

    CHECK(conjugate(kSwap, kConj) == AffineClass{Mat2{-1, 0, 0, 1}, {Rat(0), Rat(0)}});
}

TEST_CASE("isotopic_structures: pinned examples and equivalence laws") {
    AffineClass third{Mat2{1, 0, 0, -1}, {Rat(0), Rat(1, 3)}};
    CHECK(isotopic_structures(kConj, third));
    CHECK_FALSE(isotopic_structures(kConj, kFree));
    CHECK(isotopic_structures(kConj, kConj));
    CHECK_THROWS_AS(isotopic_structures(kConj, random_affine(true)), NotInvolution);

    for (int i = 0; i < 80; ++i) {
        AffineClass a = random_real_structure(), b = random_real_structure(),
                    c = random_real_structure();
        CHECK(isotopic_structures(a, a));
        CHECK(isotopic_structures(a, b) == isotopic_structures(b, a));
        if (isotopic_structures(a, b) && isotopic_structures(b, c))
            CHECK(isotopic_structures(a, c));
        if (isotopic_structures(a, b))
            CHECK(fixed_components(a).component_count == fixed_components(b).component_count);
    }
}

TEST_CASE("isotopic_structures agrees with the translation-search oracle") {
    for (int i = 0; i < 60; ++i) {
        AffineClass a = random_real_structure(2, 4);
        AffineClass b = random_real_structure(2, 4);
        if (!(a.m == b.m)) continue;
        CHECK(isotopic_structures(a, b) == grid_translation_conjugate(a, b, 16));
    }
}

TEST_CASE("classify_structure: canonical representatives and random conjugates") {
    for (int k : {0, 1, 2}) {
        StructureClass cls = classify_structure(canonical_structure(k));
        CHECK(cls.components == k);
    }
    // pairwise non-conjugate
    CHECK_FALSE(structures_conjugate(kConj, kSwap));
    CHECK_FALSE(structures_conjugate(kConj, kFree));
    CHECK_FALSE(structures_conjugate(kSwap, kFree));

    for (int i = 0; i < 300; ++i) {
        int k = static_cast<int>(rand_int(0, 2));
        AffineClass phi = random_affine();
        AffineClass c = conjugate(phi, canonical_structure(k));
        StructureClass cls = classify_structure(c);
        CHECK(cls.components == k);
        CHECK(conjugate(cls.to_canonical, c) == canonical_structure(k));
        CHECK(cls.to_canonical.m.det() == 1);
    }
}

TEST_CASE("exactly three classes over a bounded generating set") {
    bool seen[3] = {false, false, false};
    for (const Mat2& m : involution_matrices(2)) {
        for (long long i = 0; i < 4; ++i)
            for (long long j = 0; j < 4; ++j) {
                AffineClass c{m, {Rat(i, 4), Rat(j, 4)}};
                if (!is_real_structure(c)) continue;
                StructureClass cls = classify_structure(c);
                REQUIRE(cls.components >= 0);
                REQUIRE(cls.components <= 2);
                seen[cls.components] = true;
                CHECK(conjugate(cls.to_canonical, c) == canonical_structure(cls.components));
            }
    }
    CHECK(seen[0]);
    CHECK(seen[1]);
    CHECK(seen[2]);
}
