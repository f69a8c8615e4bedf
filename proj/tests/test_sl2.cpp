#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gencluster/sl2.hpp"
#include "gencluster/typec.hpp"

using namespace gencluster;

namespace {

// chi of a product of labels
LaurentPoly product_character(const Sl2Ring& ring, const std::vector<SimpleLabelA1>& labs) {
    LaurentPoly out = LaurentPoly::constant(ring.table(), 1);
    for (const auto& lab : labs) out = out * ring.simple_character(lab);
    return out;
}

}  // namespace

TEST_CASE("kr_character reference values") {
    Sl2Ring r2(2);
    auto chi = r2.kr_character({0, 1});
    CHECK(chi == r2.y(0) + LaurentPoly::variable(r2.table(), 1, -1));
    CHECK(chi.num_terms() == 2);

    CHECK(r2.kr_character({0, 0}).is_one());
    CHECK(r2.kr_character({1, 0}).is_one());

    Sl2Ring r3(3);
    auto y = [&](int res, int e) { return LaurentPoly::variable(r3.table(), res / 2, e); };
    auto expect = y(0, 1) * y(2, 1) + y(0, 1) * y(4, -1) + y(2, -1) * y(4, -1);
    CHECK(r3.kr_character({0, 2}) == expect);

    CHECK_THROWS_AS(r2.kr_character({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(r3.kr_character({1, 3}), std::invalid_argument);

    // index wrap: d is only defined mod l
    CHECK(r3.kr_character({4, 2}) == r3.kr_character({1, 2}));
}

TEST_CASE("z_character and frobenius_character") {
    Sl2Ring r2(2);
    Mono top = Mono::var(0) * Mono::var(1);
    LaurentPoly z2 = LaurentPoly::monomial(r2.table(), top, 1) +
                     LaurentPoly::monomial(r2.table(), top.inverse(), 1);
    CHECK(r2.z_character() == z2);

    Sl2Ring r3(3);
    CHECK(r3.z_character().num_terms() == 2);
    CHECK(r3.z_character().coeff(Mono::var(0) * Mono::var(1) * Mono::var(2)) == 1);

    // z is not any KR character (term counts 2 vs k+1 with the k=1 terms distinct)
    for (int l = 2; l <= 4; ++l) {
        Sl2Ring r(l);
        for (int d = 0; d < l; ++d)
            for (int k = 0; k < l; ++k) CHECK(r.z_character() != r.kr_character({d, k}));
    }

    CHECK(r2.frobenius_character(0).is_one());
    CHECK(r2.frobenius_character(1) == r2.z_character());
    LaurentPoly f2 = LaurentPoly::monomial(r2.table(), top.pow(2), 1) +
                     LaurentPoly::constant(r2.table(), 1) +
                     LaurentPoly::monomial(r2.table(), top.pow(-2), 1);
    CHECK(r2.frobenius_character(2) == f2);

    // frobenius = Chebyshev S_a evaluated at z
    for (int l = 2; l <= 4; ++l) {
        Sl2Ring r(l);
        for (int a = 0; a <= 8; ++a)
            CHECK(r.frobenius_character(a) == chebyshev_S(a, r.z_character()));
    }
}

TEST_CASE("string crossing") {
    // l=2: the two diameters cross
    CHECK(kr_strings_cross(2, {0, 1}, {1, 1}));
    CHECK_FALSE(kr_strings_cross(2, {0, 1}, {0, 1}));

    // l=3: unit strings at adjacent residues cross, nested/adjacent diagonals don't
    CHECK(kr_strings_cross(3, {0, 1}, {1, 1}));
    CHECK_FALSE(kr_strings_cross(3, {0, 2}, {1, 1}));
    // Y0 and Y4 at l=3: as Theta-orbits the diagonals cross, matching
    // chi(L(Y0)) chi(L(Y4)) = chi(L(Y0Y4)) + 1 (Y0Y4 is the cyclic string d=2)
    CHECK(kr_strings_cross(3, {0, 1}, {2, 1}));

    // k=0 strings are sides of the polygon and never cross anything
    for (int d = 0; d < 3; ++d)
        for (int d2 = 0; d2 < 3; ++d2)
            for (int k = 0; k < 3; ++k) CHECK_FALSE(kr_strings_cross(3, {d, 0}, {d2, k}));

    // crossing <=> the tensor product of the two KR simples is not simple
    for (int l = 2; l <= 4; ++l) {
        Sl2Ring r(l);
        for (int d1 = 0; d1 < l; ++d1)
            for (int k1 = 1; k1 < l; ++k1)
                for (int d2 = 0; d2 < l; ++d2)
                    for (int k2 = 1; k2 < l; ++k2) {
                        KRString s1{d1, k1}, s2{d2, k2};
                        auto dec = r.decompose({SimpleLabelA1{{s1}, 0}, SimpleLabelA1{{s2}, 0}});
                        bool simple = dec.size() == 1 && dec[0].second == 1;
                        CHECK(simple == !kr_strings_cross(l, s1, s2));
                    }
    }
}

TEST_CASE("factor_dominant") {
    Sl2Ring r2(2);
    // m = Y_bold
    auto lab = r2.factor_dominant(Mono::var(0) * Mono::var(1));
    CHECK(lab.strings.empty());
    CHECK(lab.a == 1);

    // m = Y0^2: two equal diameters
    lab = r2.factor_dominant(Mono::var(0, 2));
    CHECK(lab.a == 0);
    CHECK(lab.strings == std::vector<KRString>{{0, 1}, {0, 1}});

    Sl2Ring r3(3);
    // Y0 Y2^2 Y4: one Frobenius peel, remainder Y2
    lab = r3.factor_dominant(Mono::var(0) * Mono::var(1, 2) * Mono::var(2));
    CHECK(lab.a == 1);
    CHECK(lab.strings == std::vector<KRString>{{1, 1}});

    // Y0 Y2^2: greedy longest string first, remainder is the unit string at d=1
    lab = r3.factor_dominant(Mono::var(0) * Mono::var(1, 2));
    CHECK(lab.a == 0);
    CHECK(lab.strings == std::vector<KRString>{{1, 1}, {0, 2}});

    CHECK_THROWS_AS(r2.factor_dominant(Mono::var(0, -1)), std::invalid_argument);
}

TEST_CASE("simple_character") {
    Sl2Ring r2(2);
    CHECK(r2.simple_character({}).is_one());

    SimpleLabelA1 lab{{{0, 1}}, 1};
    CHECK(r2.simple_character(lab) == r2.kr_character({0, 1}) * r2.z_character());

    // Lemma carac at l=2: chi(L(Y0)) chi(L(Y2)) = chi(z) + 2
    auto lhs = r2.kr_character({0, 1}) * r2.kr_character({1, 1});
    CHECK(lhs == r2.z_character() + LaurentPoly::constant(r2.table(), 2));
}

TEST_CASE("decompose reference values") {
    Sl2Ring r2(2);
    SimpleLabelA1 ly0{{{0, 1}}, 0}, ly2{{{1, 1}}, 0};

    auto dec = r2.decompose({ly0});
    REQUIRE(dec.size() == 1);
    CHECK(dec[0].first == ly0);
    CHECK(dec[0].second == 1);

    // L(Y0) (x) L(Y2) = z + 2 * trivial
    dec = r2.decompose({ly0, ly2});
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].first == SimpleLabelA1{{}, 0});
    CHECK(dec[0].second == 2);
    CHECK(dec[1].first == SimpleLabelA1{{}, 1});
    CHECK(dec[1].second == 1);

    // l=3, Lemma carac: L(Y0Y2) (x) L(Y2Y4) = L(Y2) (x) z + 1 + L(Y2)^(x)2
    Sl2Ring r3(3);
    dec = r3.decompose({SimpleLabelA1{{{0, 2}}, 0}, SimpleLabelA1{{{1, 2}}, 0}});
    REQUIRE(dec.size() == 3);
    CHECK(dec[0].first == SimpleLabelA1{{}, 0});
    CHECK(dec[0].second == 1);
    CHECK(dec[1].first == SimpleLabelA1{{{1, 1}, {1, 1}}, 0});
    CHECK(dec[1].second == 1);
    CHECK(dec[2].first == SimpleLabelA1{{{1, 1}}, 1});
    CHECK(dec[2].second == 1);
}

TEST_CASE("decompose is conservative on random products") {
    std::mt19937 rng(20260824);
    for (int l = 2; l <= 5; ++l) {
        Sl2Ring r(l);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<SimpleLabelA1> product;
            int factors = 1 + static_cast<int>(rng() % 3);
            for (int f = 0; f < factors; ++f) {
                // random dominant monomial, factored into a valid label
                Mono m;
                for (int v = 0; v < l; ++v) m = m * Mono::var(v, static_cast<int>(rng() % 3));
                product.push_back(r.factor_dominant(m));
            }
            auto dec = r.decompose(product);
            LaurentPoly sum = LaurentPoly::zero(r.table());
            for (const auto& [lab, mult] : dec) {
                CHECK(mult > 0);
                sum += r.simple_character(lab) * mult;
            }
            CHECK(sum == product_character(r, product));

            // single-label decomposition returns the label itself
            for (const auto& lab : product) {
                auto single = r.decompose({lab});
                REQUIRE(single.size() == 1);
                CHECK(single[0].first == lab);
                CHECK(single[0].second == 1);
            }
        }
    }
}

TEST_CASE("T-system holds for k <= l-2") {
    for (int l = 2; l <= 6; ++l) {
        Sl2Ring r(l);
        LaurentPoly one = LaurentPoly::constant(r.table(), 1);
        for (int k = 0; k <= l - 2; ++k)
            for (int d = 0; d < l; ++d) {
                auto lhs = r.standard_character(d, k + 1) * r.standard_character(d + 1, k + 1);
                auto rhs = r.standard_character(d + 1, k) * r.standard_character(d, k + 2) + one;
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("Lemma carac identity") {
    for (int l = 2; l <= 6; ++l) {
        Sl2Ring r(l);
        auto mid = r.kr_character({1, l - 2});  // L(Y2...Y_{2(l-2)})
        auto lhs = r.kr_character({0, l - 1}) * r.kr_character({1, l - 1});
        auto rhs = mid * r.z_character() + LaurentPoly::constant(r.table(), 1) + mid * mid;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("index shift invariance") {
    std::mt19937 rng(7);
    for (int l = 2; l <= 4; ++l) {
        Sl2Ring r(l);
        // shift is a ring map commuting with the characters
        for (int d = 0; d < l; ++d)
            for (int k = 0; k < l; ++k)
                CHECK(r.shift(r.kr_character({d, k}), 1) == r.kr_character({d + 1, k}));
        CHECK(r.shift(r.z_character(), 1) == r.z_character());
        CHECK(r.shift(r.frobenius_character(3), 1) == r.frobenius_character(3));

        for (int trial = 0; trial < 20; ++trial) {
            Mono m;
            for (int v = 0; v < l; ++v) m = m * Mono::var(v, static_cast<int>(rng() % 3));
            auto lab = r.factor_dominant(m);
            CHECK(r.simple_character(r.shift(lab, 1)) == r.shift(r.simple_character(lab), 1));
        }
    }
}

TEST_CASE("label JSON round trip") {
    Sl2Ring r3(3);
    SimpleLabelA1 lab{{{1, 1}, {1, 1}, {0, 2}}, 2};
    auto j = r3.label_to_json(lab);
    CHECK(j["strings"].size() == 2);  // multiplicity grouping
    CHECK(r3.label_from_json(j) == lab);

    // crossing strings rejected on input
    nlohmann::json bad = {{"l", 3},
                          {"strings", {{{"d", 0}, {"k", 1}}, {{"d", 1}, {"k", 1}}}},
                          {"frobenius", 0}};
    CHECK_THROWS_AS(r3.label_from_json(bad), std::invalid_argument);

    CHECK(r3.label_to_string(SimpleLabelA1{}) == "1");
}
