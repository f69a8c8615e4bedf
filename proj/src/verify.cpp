#include "gencluster/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "gencluster/sl2.hpp"
#include "gencluster/sl3.hpp"
#include "gencluster/typec.hpp"

namespace gencluster {

namespace {

void fail(VerifyReport& rep, const std::string& msg) {
    if (rep.failures.size() < 50) rep.failures.push_back(msg);
}

// all CS triangulations by flip closure
std::vector<CSTriangulation> all_triangulations(int n) {
    auto key = [](const CSTriangulation& t) {
        auto sorted = t.orbits;
        std::sort(sorted.begin(), sorted.end());
        std::string k;
        for (const auto& o : sorted) k += orbit_to_string(o, t.n) + ";";
        return k;
    };
    std::vector<CSTriangulation> out{initial_triangulation(n)};
    std::set<std::string> seen{key(out[0])};
    for (size_t i = 0; i < out.size(); ++i) {
        CSTriangulation t = out[i];
        for (int pos = 0; pos < n; ++pos) {
            CSTriangulation f = flip(t, pos);
            if (seen.insert(key(f)).second) out.push_back(f);
        }
    }
    return out;
}

// exponent vectors with given length and sum <= bound
void enumerate_exponents(int length, long long bound,
                         std::vector<long long>& cur,
                         const std::function<void(const std::vector<long long>&)>& emit) {
    if (static_cast<int>(cur.size()) == length) {
        emit(cur);
        return;
    }
    for (long long e = 0; e <= bound; ++e) {
        cur.push_back(e);
        enumerate_exponents(length, bound - e, cur, emit);
        cur.pop_back();
    }
}

}  // namespace

nlohmann::json VerifyReport::to_json() const {
    return {{"theorem", theorem},
            {"l", l},
            {"bound", bound},
            {"variables_checked", variables_checked},
            {"relations_checked", relations_checked},
            {"standard_checked", standard_checked},
            {"simple_checked", simple_checked},
            {"ok", ok()},
            {"failures", failures}};
}

VerifyReport verify_phi(int l, long long degree_bound) {
    VerifyReport rep;
    rep.theorem = "phi";
    rep.l = l;
    rep.bound = degree_bound;

    const int n = l - 1;
    TypeCModel model(n);
    Sl2Ring ring(l);

    // dictionary: orbit (a, a+2m) -> W_eps(m-1, eps^{a+2}); sides -> 1
    auto string_of = [&](const Orbit& o) {
        return KRString{(o.a / 2 + 1) % l, o.m - 1};
    };
    auto chi_orbit = [&](const Orbit& o) {
        return ring.kr_character(string_of(o));
    };

    // substitution images: small variables -> fundamental classes,
    // initial cluster variables -> their KR classes, lambda -> z
    std::map<int, LaurentPoly> bind_small;
    for (int k = 0; k <= n; ++k) bind_small[k] = chi_orbit(model.small_orbit(k));
    auto image_small = [&](const LaurentPoly& p) {
        return p.substitute(bind_small, ring.table());
    };
    std::map<int, LaurentPoly> bind_init;
    for (int k = 1; k <= n; ++k)
        bind_init[k - 1] = chi_orbit(make_orbit(n, 4 * n + 2, 2 * k));
    bind_init[n] = ring.z_character();
    auto image_init = [&](const LaurentPoly& p) {
        return p.substitute(bind_init, ring.table());
    };

    // (a) variables and lambda
    for (const auto& o : model.all_orbits()) {
        ++rep.variables_checked;
        if (chi_orbit(o) != image_small(model.express_in_small(o)))
            fail(rep, "variable image mismatch at " + orbit_to_string(o, n));
    }
    if (image_small(model.lambda_in_small()) != ring.z_character())
        fail(rep, "lambda does not map to z");

    // (b) exchange relations at every flip of every triangulation
    for (const auto& t : all_triangulations(n))
        for (int pos = 0; pos < n; ++pos) {
            auto id = model.exchange_relation(t, pos);
            ++rep.relations_checked;
            if (chi_orbit(id.out) * chi_orbit(id.in) != image_init(id.rhs))
                fail(rep, "flip relation image fails at " + orbit_to_string(id.out, n) +
                              " -> " + orbit_to_string(id.in, n));
        }
    // diameter family (gexc2)
    for (int u = 0; u <= 2 * n; u += 2)
        for (int w = 0; w <= 2 * n; w += 2) {
            if (u == w) continue;
            ++rep.relations_checked;
            auto xuw = chi_orbit(make_orbit(n, u, w));
            auto xuwb = chi_orbit(make_orbit(n, u, bar_vertex(w, n)));
            auto lhs = chi_orbit(make_orbit(n, u, bar_vertex(u, n))) *
                       chi_orbit(make_orbit(n, w, bar_vertex(w, n)));
            if (lhs != xuw * xuw + xuwb * xuwb + ring.z_character() * xuw * xuwb)
                fail(rep, "diameter relation image fails at u=" + std::to_string(u) +
                              " w=" + std::to_string(w));
        }
    // rel2 family, all rotations
    for (int shift = 0; shift < 4 * n + 4; shift += 2)
        for (int k = 1; k < n; ++k)
            for (int d = 0; d < k; ++d) {
                auto x = [&](int a, int b) {
                    return chi_orbit(make_orbit(n, a + shift, b + shift));
                };
                int b2n = 4 * n + 2, b2d = 2 * d + 2 * n + 2;
                ++rep.relations_checked;
                auto lhs = x(b2n, 2 * k) * x(2 * d, b2d);
                auto rhs = ring.z_character() * x(b2n, 2 * d) * x(2 * d, 2 * k) +
                           x(b2n, 2 * d) * x(2 * k, b2d) + x(2 * d, 2 * k) * x(b2d, b2n);
                if (lhs != rhs)
                    fail(rep, "rel2 image fails at shift=" + std::to_string(shift) +
                                  " k=" + std::to_string(k) + " d=" + std::to_string(d));
            }

    // (c) basis S <-> standard classes: monomials in smalls are injective
    {
        std::set<std::string> images;
        std::vector<long long> cur;
        enumerate_exponents(n + 1, degree_bound, cur, [&](const std::vector<long long>& e) {
            LaurentPoly img = LaurentPoly::constant(ring.table(), 1);
            for (int k = 0; k <= n; ++k)
                img = img * chi_orbit(model.small_orbit(k)).pow(static_cast<unsigned>(e[k]));
            ++rep.standard_checked;
            if (!images.insert(img.to_string()).second)
                fail(rep, "standard images collide at a small monomial");
        });
    }

    // (d) basis B <-> simple classes
    {
        std::set<std::string> images;
        for (const auto& m : model.cluster_monomials(degree_bound)) {
            for (long long e = 0; (n + 1) * e + model.degree(m) <= degree_bound; ++e) {
                ++rep.simple_checked;
                // through the cluster algebra: expand in smalls, then substitute
                LaurentPoly cluster_side = chebyshev_S(static_cast<int>(e), model.lambda_in_small());
                for (const auto& [o, mult] : m.mult)
                    cluster_side =
                        cluster_side * model.express_in_small(o).pow(static_cast<unsigned>(mult));
                LaurentPoly route1 = image_small(cluster_side);
                // through the classification: the simple class of the label
                SimpleLabelA1 lab;
                lab.a = e;
                for (const auto& [o, mult] : m.mult)
                    for (long long t = 0; t < mult; ++t) lab.strings.push_back(string_of(o));
                std::sort(lab.strings.begin(), lab.strings.end());
                LaurentPoly route2 = ring.simple_character(lab);
                if (route1 != route2) fail(rep, "simple image mismatch for a cluster monomial");
                if (!images.insert(route1.to_string()).second)
                    fail(rep, "simple images collide");
            }
        }
    }

    // ring-homomorphism spot check on random basis pairs
    {
        auto monos = model.cluster_monomials(std::min<long long>(degree_bound, 4));
        std::mt19937 rng(20240811);
        std::uniform_int_distribution<size_t> pick(0, monos.size() - 1);
        for (int t = 0; t < 20; ++t) {
            const auto& m1 = monos[pick(rng)];
            const auto& m2 = monos[pick(rng)];
            LaurentPoly p1 = model.expand_in_small(m1), p2 = model.expand_in_small(m2);
            ++rep.relations_checked;
            if (image_small(p1 * p2) != image_small(p1) * image_small(p2))
                fail(rep, "phi is not multiplicative on a random pair");
        }
    }
    return rep;
}

VerifyReport verify_eta(long long degree_bound) {
    VerifyReport rep;
    rep.theorem = "eta";
    rep.l = 2;
    rep.bound = degree_bound;

    Sl3RingL2 ring;
    GenSeed g2 = g2_initial_seed();

    std::map<int, LaurentPoly> bind{{0, ring.chi_single(1, 0)},
                                    {1, ring.chi_pair(0, 3)},
                                    {g2.lambda_position(0), ring.chi_bold(1)},
                                    {g2.lambda_position(1), ring.chi_bold(2)}};
    auto image = [&](const LaurentPoly& p) { return p.substitute(bind, ring.table()); };

    // the 8-cycle (x1,x2) -mu2- (x1,x8) -mu1- (x7,x8) -mu2- ... with the
    // printed dictionary eta(x_i)
    std::vector<LaurentPoly> expected_new{
        ring.chi_pair(0, 1),   // x8
        ring.chi_single(2, 1), // x7
        ring.chi_pair(2, 1),   // x6
        ring.chi_single(1, 2), // x5
        ring.chi_pair(2, 3),   // x4
        ring.chi_single(2, 3), // x3
        ring.chi_pair(0, 3),   // x2 again
        ring.chi_single(1, 0), // x1 again
    };
    // closed-form relGc right-hand sides for edge classification
    std::vector<LaurentPoly> linear_rhs, cubic_rhs;
    LaurentPoly one = LaurentPoly::constant(ring.table(), 1);
    for (int i : {0, 2})
        for (int j : {1, 3}) linear_rhs.push_back(ring.chi_pair(i, j) + one);
    for (int i : {0, 2}) {
        auto c1 = ring.chi_single(1, i);
        cubic_rhs.push_back(c1.pow(3) + c1.pow(2) * ring.chi_bold(2) + c1 * ring.chi_bold(1) + one);
    }
    for (int j : {1, 3}) {
        auto c2 = ring.chi_single(2, j);
        cubic_rhs.push_back(c2.pow(3) + c2.pow(2) * ring.chi_bold(1) + c2 * ring.chi_bold(2) + one);
    }

    GenSeed s = g2;
    std::vector<LaurentPoly> current_img{ring.chi_single(1, 0), ring.chi_pair(0, 3)};
    // cluster variable polynomials x1..x8 and their images, collected on the walk
    std::map<std::string, LaurentPoly> poly_of{{"x1", s.x[0]}, {"x2", s.x[1]}};
    std::vector<std::pair<LaurentPoly, LaurentPoly>> clusters;
    const char* new_names[8] = {"x8", "x7", "x6", "x5", "x4", "x3", "x2", "x1"};
    for (int step = 0; step < 8; ++step) {
        int k = step % 2 == 0 ? 1 : 0;
        auto [up, um] = exchange_monomials(s, k);
        LaurentPoly theta = exchange_polynomial(s, k, up, um);
        GenSeed s2 = mutate(s, k);
        ++rep.variables_checked;
        if (image(s2.x[k]) != expected_new[step])
            fail(rep, std::string("dictionary image mismatch at ") + new_names[step]);
        ++rep.relations_checked;
        LaurentPoly edge_rhs = image(theta);
        if (current_img[k] * expected_new[step] != edge_rhs)
            fail(rep, "exchange relation image fails at step " + std::to_string(step));
        const auto& family = k == 1 ? cubic_rhs : linear_rhs;
        if (std::find(family.begin(), family.end(), edge_rhs) == family.end())
            fail(rep, "edge image is not a relGc instance at step " + std::to_string(step));
        current_img[k] = expected_new[step];
        poly_of[new_names[step]] = s2.x[k];
        s = s2;
        clusters.emplace_back(s.x[0], s.x[1]);
    }
    if (cluster_key(s.x) != cluster_key(g2.x)) fail(rep, "8-cycle does not close");

    // clusters <-> the eight decG patterns: each cluster image is a
    // (single, pair) fundamental combination matching exactly one case tag
    std::set<int> tags_seen;
    std::vector<std::tuple<int, LaurentPoly, LaurentPoly>> tagged_clusters;
    for (const auto& [xa, xb] : clusters) {
        LaurentPoly ia = image(xa), ib = image(xb);
        int tag_found = 0;
        for (int t = 1; t <= 8; ++t) {
            auto [single, pair] = Sl3RingL2::case_factors(t);
            auto cs = ring.chi_single(single.first, single.second);
            auto cp = ring.chi_pair(pair.first, pair.second);
            if ((ia == cs && ib == cp) || (ia == cp && ib == cs)) {
                tag_found = t;
                break;
            }
        }
        if (tag_found == 0) {
            fail(rep, "cluster does not match a decG pattern");
            continue;
        }
        tags_seen.insert(tag_found);
        bool a_is_single = ia == ring.chi_single(Sl3RingL2::case_factors(tag_found).first.first,
                                                 Sl3RingL2::case_factors(tag_found).first.second);
        tagged_clusters.emplace_back(tag_found, a_is_single ? xa : xb, a_is_single ? xb : xa);
    }
    if (tags_seen.size() != 8) fail(rep, "the eight clusters do not cover all decG patterns");

    // (c) basis E <-> standard classes
    {
        std::set<std::string> images;
        std::vector<LaurentPoly> gens{image(poly_of["x1"]), image(poly_of["x3"]),
                                      image(poly_of["x5"]), image(poly_of["x7"])};
        std::vector<long long> cur;
        enumerate_exponents(4, degree_bound, cur, [&](const std::vector<long long>& e) {
            LaurentPoly img = LaurentPoly::constant(ring.table(), 1);
            for (int k = 0; k < 4; ++k) img = img * gens[k].pow(static_cast<unsigned>(e[k]));
            ++rep.standard_checked;
            if (!images.insert(img.to_string()).second)
                fail(rep, "standard images collide at a fundamental monomial");
        });
    }

    // (d) basis H <-> simple classes: S_{a1,a2}(lambda1,lambda2) * cluster monomial.
    // Images of products are taken factorwise (image is a ring map and the
    // factor images were checked by substitution above), which keeps the
    // character arithmetic small.
    {
        std::map<int, LaurentPoly> bold_bind{{0, ring.chi_bold(1)}, {1, ring.chi_bold(2)}};
        std::map<std::pair<long long, long long>, LaurentPoly> s_at_bolds;
        std::map<std::string, std::string> image_of_label;
        for (const auto& [tag, xs, xp] : tagged_clusters) {
            const LaurentPoly img_s = image(xs), img_p = image(xp);
            std::vector<LaurentPoly> s_pows{LaurentPoly::constant(ring.table(), 1)};
            std::vector<LaurentPoly> p_pows{LaurentPoly::constant(ring.table(), 1)};
            for (long long p = 1; p <= degree_bound; ++p) {
                s_pows.push_back(s_pows.back() * img_s);
                p_pows.push_back(p_pows.back() * img_p);
            }
            for (long long p = 0; p <= degree_bound; ++p)
                for (long long q = 0; p + q <= degree_bound; ++q)
                    for (long long a1 = 0; p + q + a1 <= degree_bound; ++a1)
                        for (long long a2 = 0; p + q + a1 + a2 <= degree_bound; ++a2) {
                            SimpleLabelA2L2 lab =
                                ring.canonicalize(SimpleLabelA2L2{tag, p, q, a1, a2});
                            std::string lab_key = ring.label_to_string(lab);
                            if (image_of_label.count(lab_key)) continue;
                            ++rep.simple_checked;
                            auto sit = s_at_bolds.find({a1, a2});
                            if (sit == s_at_bolds.end())
                                sit = s_at_bolds
                                          .emplace(std::make_pair(a1, a2),
                                                   sl3_S_polynomial({a1, a2})
                                                       .substitute(bold_bind, ring.table()))
                                          .first;
                            LaurentPoly route1 = sit->second * s_pows[p] * p_pows[q];
                            LaurentPoly route2 = ring.simple_character(lab);
                            if (route1 != route2)
                                fail(rep, "simple image mismatch for " + lab_key);
                            image_of_label[lab_key] = route1.to_string();
                        }
        }
        std::set<std::string> images;
        for (const auto& [lab, img] : image_of_label)
            if (!images.insert(img).second) fail(rep, "simple images collide at " + lab);
    }

    // ring-homomorphism spot check on random pairs of cluster variables
    {
        std::vector<LaurentPoly> vars;
        for (const auto& [name, p] : poly_of) vars.push_back(p);
        std::mt19937 rng(20240811);
        std::uniform_int_distribution<size_t> pick(0, vars.size() - 1);
        for (int t = 0; t < 20; ++t) {
            const auto& p1 = vars[pick(rng)];
            const auto& p2 = vars[pick(rng)];
            ++rep.relations_checked;
            if (image(p1 * p2) != image(p1) * image(p2))
                fail(rep, "eta is not multiplicative on a random pair");
        }
    }
    return rep;
}

}  // namespace gencluster
