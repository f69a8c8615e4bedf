#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "gencluster/sl3.hpp"

using namespace gencluster;

namespace {

// apply an exponent-vector map (e1,e2) -> f(e1,e2) to every term
LaurentPoly map_exps(const LaurentPoly& p,
                     std::pair<int, int> (*f)(int, int)) {
    LaurentPoly out = LaurentPoly::zero(p.table());
    for (const auto& [m, c] : p.terms()) {
        auto [e1, e2] = f(m.exp(0), m.exp(1));
        out.add_term(Mono::var(0, e1) * Mono::var(1, e2), c);
    }
    return out;
}

Int coeff_sum(const LaurentPoly& p) {
    Int s = 0;
    for (const auto& [m, c] : p.terms()) s += c;
    return s;
}

// the unique dominant monomial of a character, requiring uniqueness
Mono unique_dominant(const Sl3RingL2& r, const LaurentPoly& p) {
    const Mono* found = nullptr;
    for (const auto& [m, c] : p.terms())
        if (r.is_dominant(m)) {
            REQUIRE(found == nullptr);
            REQUIRE(c == 1);
            found = &m;
        }
    REQUIRE(found != nullptr);
    return *found;
}

}  // namespace

TEST_CASE("printed fundamental characters") {
    Sl3RingL2 r;
    auto chi10 = r.chi_single(1, 0);
    CHECK(chi10.num_terms() == 3);
    CHECK(chi10 == r.y(1, 0) + r.y(2, 1) * LaurentPoly::variable(r.table(), 1, -1) +
                       LaurentPoly::variable(r.table(), 3, -1));

    auto pair01 = r.chi_pair(0, 1);
    CHECK(pair01.num_terms() == 7);
    CHECK(pair01.coeff(Mono::var(2) * Mono::var(3, -1)) == 2);
    CHECK(coeff_sum(pair01) == 8);

    auto bold1 = r.chi_bold(1);
    CHECK(bold1 == LaurentPoly::monomial(r.table(), Mono::var(0) * Mono::var(1), 1) +
                       LaurentPoly::monomial(
                           r.table(), Mono::var(2) * Mono::var(3) * Mono::var(0, -1) * Mono::var(1, -1), 1) +
                       LaurentPoly::monomial(r.table(), Mono::var(2, -1) * Mono::var(3, -1), 1));
}

TEST_CASE("tau generates the character table") {
    Sl3RingL2 r;
    // tau maps the printed chi(L(Y_{1,0})) to the printed chi(L(Y_{2,1}))
    CHECK(r.tau(r.chi_single(1, 0)) == r.chi_single(2, 1));
    CHECK(r.tau(r.chi_bold(1)) == r.chi_bold(2));
    CHECK(r.tau(r.chi_bold(2)) == r.chi_bold(1));

    // tau^4 = id on everything in the table
    auto tau4 = [&](const LaurentPoly& p) { return r.tau(r.tau(r.tau(r.tau(p)))); };
    for (int n : {0, 2})
        for (int j : {1, 3}) {
            CHECK(tau4(r.chi_single(1, n)) == r.chi_single(1, n));
            CHECK(tau4(r.chi_single(2, j)) == r.chi_single(2, j));
            CHECK(tau4(r.chi_pair(n, j)) == r.chi_pair(n, j));
        }

    // each fundamental-type character has its label as unique dominant monomial
    for (int n : {0, 2}) {
        CHECK(unique_dominant(r, r.chi_single(1, n)) == Mono::var(n / 2));
        CHECK(unique_dominant(r, r.chi_single(2, n + 1)) == Mono::var(2 + n / 2));
        for (int j : {1, 3})
            CHECK(unique_dominant(r, r.chi_pair(n, j)) ==
                  Mono::var(n / 2) * Mono::var(2 + (j - 1) / 2));
    }
    CHECK(unique_dominant(r, r.chi_bold(1)) == Mono::var(0) * Mono::var(1));
    CHECK(unique_dominant(r, r.chi_bold(2)) == Mono::var(2) * Mono::var(3));
}

TEST_CASE("classical sl3 characters") {
    auto table = sl3_weight_table();
    CHECK(sl3_character({0, 0}).is_one());
    CHECK(sl3_character({1, 0}) ==
          LaurentPoly::variable(table, 0) +
              LaurentPoly::monomial(table, Mono::var(1) * Mono::var(0, -1), 1) +
              LaurentPoly::variable(table, 1, -1));

    // adjoint: 8-dimensional, zero weight twice
    auto adj = sl3_character({1, 1});
    CHECK(adj.num_terms() == 7);
    CHECK(adj.coeff(Mono::unit()) == 2);
    CHECK(coeff_sum(adj) == 8);

    // dimension formula and Weyl symmetry
    for (long long a1 = 0; a1 <= 4; ++a1)
        for (long long a2 = 0; a2 <= 4; ++a2) {
            auto chi = sl3_character({a1, a2});
            CHECK(coeff_sum(chi) == (a1 + 1) * (a2 + 1) * (a1 + a2 + 2) / 2);
            // simple reflections on weight coordinates
            CHECK(map_exps(chi, +[](int e1, int e2) {
                      return std::pair<int, int>{-e1, e1 + e2};
                  }) == chi);
            CHECK(map_exps(chi, +[](int e1, int e2) {
                      return std::pair<int, int>{e1 + e2, -e2};
                  }) == chi);
        }
}

TEST_CASE("S polynomials") {
    auto c = sl3_S_table();
    CHECK(sl3_S_polynomial({0, 0}).is_one());
    CHECK(sl3_S_polynomial({1, 0}) == LaurentPoly::variable(c, 0));
    CHECK(sl3_S_polynomial({0, 1}) == LaurentPoly::variable(c, 1));
    // V(w1) x V(w2) = V(w1+w2) + V(0); V(w1)^2 = V(2w1) + V(w2)
    CHECK(sl3_S_polynomial({1, 1}) ==
          LaurentPoly::monomial(c, Mono::var(0) * Mono::var(1), 1) - LaurentPoly::constant(c, 1));
    CHECK(sl3_S_polynomial({2, 0}) ==
          LaurentPoly::monomial(c, Mono::var(0, 2), 1) - LaurentPoly::variable(c, 1));

    // defining property: S_{a1,a2}(chi(1,0), chi(0,1)) = chi(a1,a2)
    std::map<int, LaurentPoly> bind{{0, sl3_character({1, 0})}, {1, sl3_character({0, 1})}};
    for (long long a1 = 0; a1 <= 4; ++a1)
        for (long long a2 = 0; a1 + a2 <= 4; ++a2)
            CHECK(sl3_S_polynomial({a1, a2}).substitute(bind, sl3_weight_table()) ==
                  sl3_character({a1, a2}));
}

TEST_CASE("Frobenius pullbacks") {
    Sl3RingL2 r;
    CHECK(r.frobenius_character(0, 0).is_one());
    CHECK(r.frobenius_character(1, 0) == r.chi_bold(1));
    CHECK(r.frobenius_character(0, 1) == r.chi_bold(2));
    CHECK(r.frobenius_character(1, 1) ==
          r.chi_bold(1) * r.chi_bold(2) - LaurentPoly::constant(r.table(), 1));

    // equals S_{k,l} evaluated at the bold characters
    std::map<int, LaurentPoly> bind{{0, r.chi_bold(1)}, {1, r.chi_bold(2)}};
    for (long long k = 0; k <= 3; ++k)
        for (long long l = 0; k + l <= 3; ++l)
            CHECK(sl3_S_polynomial({k, l}).substitute(bind, r.table()) ==
                  r.frobenius_character(k, l));
}

TEST_CASE("Lemma caracA2") {
    Sl3RingL2 r;
    for (long long k = 0; k <= 4; ++k)
        for (long long l = 0; k + l <= 4; ++l) {
            auto prod = r.chi_single(1, 0).pow(static_cast<unsigned>(k)) *
                        r.chi_pair(0, 1).pow(static_cast<unsigned>(l));
            // unique dominant monomial Y10^{k+l} Y21^l
            const Mono* found = nullptr;
            for (const auto& [m, c] : prod.terms())
                if (r.is_dominant(m)) {
                    REQUIRE(found == nullptr);
                    CHECK(c == 1);
                    found = &m;
                }
            if (k + l == 0) continue;
            REQUIRE(found != nullptr);
            CHECK(*found == Mono::var(0, static_cast<int>(k + l)) *
                                Mono::var(2, static_cast<int>(l)));
            // hence the product is the simple character of its factorization
            CHECK(prod == r.simple_character(r.factor_dominant(*found)));
        }
}

TEST_CASE("Proposition relGc identities") {
    Sl3RingL2 r;
    LaurentPoly one = LaurentPoly::constant(r.table(), 1);
    for (int i : {0, 2})
        for (int j : {1, 3}) {
            CHECK(r.chi_single(1, i) * r.chi_single(2, j) == r.chi_pair(i, j) + one);

            auto c1 = r.chi_single(1, i);
            CHECK(r.chi_pair(i, 1) * r.chi_pair(i, 3) ==
                  c1.pow(3) + c1.pow(2) * r.chi_bold(2) + c1 * r.chi_bold(1) + one);

            auto c2 = r.chi_single(2, j);
            CHECK(r.chi_pair(0, j) * r.chi_pair(2, j) ==
                  c2.pow(3) + c2.pow(2) * r.chi_bold(1) + c2 * r.chi_bold(2) + one);
        }
}

TEST_CASE("factor_dominant and canonical labels") {
    Sl3RingL2 r;
    auto lab = r.factor_dominant(Mono::unit());
    CHECK(lab == SimpleLabelA2L2{1, 0, 0, 0, 0});

    // pure pair factor: smallest admissible tag
    lab = r.factor_dominant(Mono::var(0) * Mono::var(2));
    CHECK(lab == SimpleLabelA2L2{1, 0, 1, 0, 0});
    lab = r.factor_dominant(Mono::var(1) * Mono::var(3));
    CHECK(lab == SimpleLabelA2L2{7, 0, 1, 0, 0});

    // Frobenius peel: Y10 Y12 Y21 -> Fr(1,0) x L(Y21)
    lab = r.factor_dominant(Mono::var(0) * Mono::var(1) * Mono::var(2));
    CHECK(lab == SimpleLabelA2L2{2, 1, 0, 1, 0});

    // decG case (i) with a = b = 1: Y10^2 Y21
    lab = r.factor_dominant(Mono::var(0, 2) * Mono::var(2));
    CHECK(lab == SimpleLabelA2L2{1, 1, 1, 0, 0});
    // case (ii): Y10 Y21^2
    lab = r.factor_dominant(Mono::var(0) * Mono::var(2, 2));
    CHECK(lab == SimpleLabelA2L2{2, 1, 1, 0, 0});
    // case (viii): Y12 Y23^3
    lab = r.factor_dominant(Mono::var(1) * Mono::var(3, 3));
    CHECK(lab == SimpleLabelA2L2{8, 2, 1, 0, 0});

    CHECK_THROWS_AS(r.factor_dominant(Mono::var(0, -1)), std::invalid_argument);

    // distinct cases with the same (a,b) have distinct leading dominant monomials
    auto lead1 = r.simple_character({1, 1, 1, 0, 0}).leading().first;
    auto lead2 = r.simple_character({2, 1, 1, 0, 0}).leading().first;
    CHECK(lead1 != lead2);
}

TEST_CASE("decompose_l2 reference values") {
    Sl3RingL2 r;
    SimpleLabelA2L2 ly10{1, 1, 0, 0, 0};
    SimpleLabelA2L2 ly21{2, 1, 0, 0, 0};

    // first relGc identity
    auto dec = r.decompose({ly10, ly21});
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].first == SimpleLabelA2L2{1, 0, 0, 0, 0});
    CHECK(dec[0].second == 1);
    CHECK(dec[1].first == SimpleLabelA2L2{1, 0, 1, 0, 0});
    CHECK(dec[1].second == 1);

    // second relGc identity: L(Y10Y21) x L(Y10Y23)
    dec = r.decompose({SimpleLabelA2L2{1, 0, 1, 0, 0}, SimpleLabelA2L2{3, 0, 1, 0, 0}});
    REQUIRE(dec.size() == 4);
    CHECK(dec[0].first == SimpleLabelA2L2{1, 0, 0, 0, 0});  // trivial
    CHECK(dec[1].first == SimpleLabelA2L2{1, 3, 0, 0, 0});  // L(Y10)^3
    CHECK(dec[2].first == SimpleLabelA2L2{1, 2, 0, 0, 1});  // L(Y10)^2 x Fr(0,1)
    CHECK(dec[3].first == SimpleLabelA2L2{1, 1, 0, 1, 0});  // L(Y10) x Fr(1,0)
    for (const auto& [lab, mult] : dec) CHECK(mult == 1);

    // a single label decomposes to itself
    for (const auto& lab :
         {SimpleLabelA2L2{6, 2, 1, 0, 0}, SimpleLabelA2L2{4, 1, 2, 1, 1}, ly10}) {
        auto single = r.decompose({lab});
        REQUIRE(single.size() == 1);
        CHECK(single[0].first == lab);
        CHECK(single[0].second == 1);
    }
}

TEST_CASE("decompose_l2 conservativity and tau equivariance") {
    Sl3RingL2 r;
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<SimpleLabelA2L2> product;
        int factors = 1 + static_cast<int>(rng() % 2);
        for (int f = 0; f < factors; ++f) {
            Mono m;
            for (int v = 0; v < 4; ++v) m = m * Mono::var(v, static_cast<int>(rng() % 3));
            product.push_back(r.factor_dominant(m));
        }
        LaurentPoly chi = LaurentPoly::constant(r.table(), 1);
        for (const auto& lab : product) chi = chi * r.simple_character(lab);

        auto dec = r.decompose(product);
        LaurentPoly sum = LaurentPoly::zero(r.table());
        for (const auto& [lab, mult] : dec) {
            CHECK(mult > 0);
            sum += r.simple_character(lab) * mult;
        }
        CHECK(sum == chi);

        // tau permutes simple classes: tau(chi(L(m))) is again a simple character,
        // the one labelled by its leading (dominant) monomial
        for (const auto& lab : product) {
            auto rotated = r.tau(r.simple_character(lab));
            auto [top, c] = rotated.leading();
            CHECK(c == 1);
            CHECK(r.simple_character(r.factor_dominant(top)) == rotated);
        }
    }
}

TEST_CASE("G2 seed") {
    GenSeed g2 = g2_initial_seed();
    CHECK(g2.rank() == 2);
    CHECK(validate(g2.B).ok());

    auto graph = enumerate_exchange_graph(g2);
    CHECK(graph.complete);
    CHECK(graph.nodes.size() == 8);
    CHECK(graph.num_variables == 8);
    // every node has exactly one mu_1 and one mu_2 edge: a single 8-cycle
    CHECK(graph.edges.size() == 8);

    // theta_2 exchange from the initial cluster: x2 x2' = x1^3 + l2 x1^2 + l1 x1 + 1
    GenSeed s2 = mutate(g2, 1);
    auto x1 = g2.x[0];
    auto l1 = LaurentPoly::variable(g2.table, g2.lambda_position(0));
    auto l2 = LaurentPoly::variable(g2.table, g2.lambda_position(1));
    CHECK(s2.x[1] * g2.x[1] ==
          x1.pow(3) + l2 * x1.pow(2) + l1 * x1 + LaurentPoly::constant(g2.table, 1));

    // (mu1 mu2)^4 = identity on the seed
    GenSeed s = g2;
    for (int t = 0; t < 4; ++t) s = mutate(mutate(s, 0), 1);
    CHECK(cluster_key(s.x) == cluster_key(g2.x));
}

TEST_CASE("conjecture seed") {
    // l = 2: rank 2, same cluster set as G2 up to the lambda relabeling
    GenSeed c2 = conjecture_seed(2);
    CHECK(c2.rank() == 2);
    CHECK(c2.B.b == std::vector<std::vector<long long>>{{0, -3}, {1, 0}});
    auto graph = enumerate_exchange_graph(c2);
    CHECK(graph.complete);
    CHECK(graph.nodes.size() == 8);
    CHECK(graph.num_variables == 8);

    // compare variables after swapping lambda1 <-> lambda2 in the conjecture seed
    std::map<int, LaurentPoly> swap{
        {c2.lambda_position(0), LaurentPoly::variable(c2.table, c2.lambda_position(1))},
        {c2.lambda_position(1), LaurentPoly::variable(c2.table, c2.lambda_position(0))}};
    std::set<std::string> conj_vars, g2_vars;
    for (const auto& node : graph.nodes)
        for (const auto& x : node.seed.x)
            conj_vars.insert(x.substitute(swap, c2.table).to_string());
    auto g2_graph = enumerate_exchange_graph(g2_initial_seed());
    for (const auto& node : g2_graph.nodes)
        for (const auto& x : node.seed.x) g2_vars.insert(x.to_string());
    CHECK(conj_vars == g2_vars);

    // l = 3, 4: valid infinite-type seeds with the cubic tail
    for (int l : {3, 4}) {
        GenSeed c = conjecture_seed(l);
        CHECK(c.rank() == 2 * l - 2);
        auto report = validate(c.B);
        CHECK(report.ok());
        CHECK(report.symmetrizer.back() == 3);
        for (int r = 0; r < c.rank(); ++r) CHECK(c.B.b[r][c.rank() - 1] % 3 == 0);

        // short random mutation sequences stay Laurent
        std::mt19937 rng(99 + l);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<int> seq;
            for (int t = 0; t < 6; ++t) seq.push_back(static_cast<int>(rng() % c.rank()));
            CHECK(check_laurent(c, seq).all_exact);
        }
    }
    CHECK_THROWS_AS(conjecture_seed(1), std::invalid_argument);
}
