#include "gencluster/sl3.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gencluster {

namespace {

LaurentPoly from_terms(const VarTablePtr& table,
                       std::initializer_list<std::pair<std::vector<std::pair<int, int>>, int>> terms) {
    LaurentPoly out = LaurentPoly::zero(table);
    for (const auto& [exps, c] : terms) {
        Mono m;
        for (const auto& [pos, e] : exps) m = m * Mono::var(pos, e);
        out.add_term(m, c);
    }
    return out;
}

}  // namespace

VarTablePtr sl3_weight_table() {
    static VarTablePtr table = make_table({"y1", "y2"});
    return table;
}

LaurentPoly sl3_character(const Sl3Weight& w) {
    if (w.a1 < 0 || w.a2 < 0) throw std::invalid_argument("weight coordinates must be >= 0");
    // Gelfand-Tsetlin patterns for top row (a1+a2, a2, 0); weight mu has
    // mu_1 = m11, mu_2 = (m12+m22) - m11, mu_3 = |top| - (m12+m22), and the
    // monomial is y1^{mu_1-mu_2} y2^{mu_2-mu_3}.
    long long l1 = w.a1 + w.a2, l2 = w.a2, l3 = 0;
    LaurentPoly out = LaurentPoly::zero(sl3_weight_table());
    for (long long m12 = l2; m12 <= l1; ++m12)
        for (long long m22 = l3; m22 <= l2; ++m22)
            for (long long m11 = m22; m11 <= m12; ++m11) {
                long long r2 = m12 + m22;
                long long w1 = m11, w2 = r2 - m11, w3 = l1 + l2 + l3 - r2;
                Mono m = Mono::var(0, static_cast<int>(w1 - w2)) *
                         Mono::var(1, static_cast<int>(w2 - w3));
                out.add_term(m, 1);
            }
    return out;
}

VarTablePtr sl3_S_table() {
    static VarTablePtr table = make_table({"c1", "c2"});
    return table;
}

LaurentPoly sl3_S_polynomial(const Sl3Weight& w) {
    static std::map<Sl3Weight, LaurentPoly> memo;
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;

    // c1^{a1} c2^{a2} minus the lower constituents of V(w1)^{a1} x V(w2)^{a2},
    // read off the classical characters by dominant peeling; the constituents
    // have strictly smaller a1 + a2, so the recursion terminates.
    LaurentPoly p = LaurentPoly::monomial(
        sl3_S_table(),
        Mono::var(0, static_cast<int>(w.a1)) * Mono::var(1, static_cast<int>(w.a2)), 1);
    LaurentPoly rem = sl3_character({1, 0}).pow(static_cast<unsigned>(w.a1)) *
                          sl3_character({0, 1}).pow(static_cast<unsigned>(w.a2)) -
                      sl3_character(w);
    while (!rem.is_zero()) {
        auto [m, c] = rem.leading();
        Sl3Weight lower{m.exp(0), m.exp(1)};
        if (lower.a1 < 0 || lower.a2 < 0 || c < 0)
            throw std::logic_error("classical peeling left a non-dominant leading term");
        p -= sl3_S_polynomial(lower) * c;
        rem -= sl3_character(lower) * c;
    }
    memo.emplace(w, p);
    return p;
}

Sl3RingL2::Sl3RingL2() {
    table_ = make_table({"Y10", "Y12", "Y21", "Y23"});
    // Printed characters: positions 0 = Y_{1,0}, 1 = Y_{1,2}, 2 = Y_{2,1}, 3 = Y_{2,3}.
    singles_[0] = from_terms(table_, {{{{0, 1}}, 1}, {{{2, 1}, {1, -1}}, 1}, {{{3, -1}}, 1}});
    singles_[2] = from_terms(table_, {{{{2, 1}}, 1}, {{{1, 1}, {3, -1}}, 1}, {{{0, -1}}, 1}});
    pairs_[0] = from_terms(table_, {{{{0, 1}, {2, 1}}, 1},
                                    {{{0, 1}, {1, 1}, {3, -1}}, 1},
                                    {{{2, 2}, {1, -1}}, 1},
                                    {{{2, 1}, {3, -1}}, 2},
                                    {{{2, 1}, {0, -1}, {1, -1}}, 1},
                                    {{{1, 1}, {3, -2}}, 1},
                                    {{{0, -1}, {3, -1}}, 1}});
    bold_[0] = from_terms(table_, {{{{0, 1}, {1, 1}}, 1},
                                   {{{2, 1}, {3, 1}, {0, -1}, {1, -1}}, 1},
                                   {{{2, -1}, {3, -1}}, 1}});
    bold_[1] = from_terms(table_, {{{{2, 1}, {3, 1}}, 1},
                                   {{{0, 1}, {1, 1}, {2, -1}, {3, -1}}, 1},
                                   {{{0, -1}, {1, -1}}, 1}});
    // The remaining fundamental-type characters are tau-images of the printed
    // ones; tau(chi(L(Y_{1,0}))) = chi(L(Y_{2,1})) is checked in the tests.
    singles_[1] = tau(tau(singles_[0]));  // chi(L(Y_{1,2}))
    singles_[3] = tau(tau(singles_[2]));  // chi(L(Y_{2,3}))
    pairs_[2] = tau(pairs_[0]);           // chi(L(Y_{1,2}Y_{2,1}))
    pairs_[3] = tau(pairs_[2]);           // chi(L(Y_{1,2}Y_{2,3}))
    pairs_[1] = tau(pairs_[3]);           // chi(L(Y_{1,0}Y_{2,3}))
}

int Sl3RingL2::var_index(int i, int n) const {
    int r = ((n % 4) + 4) % 4;
    if (i == 1 && r % 2 == 0) return r / 2;
    if (i == 2 && r % 2 == 1) return 2 + (r - 1) / 2;
    throw std::invalid_argument("Y index parity must match the Dynkin node");
}

LaurentPoly Sl3RingL2::y(int i, int n) const {
    return LaurentPoly::variable(table_, var_index(i, n));
}

LaurentPoly Sl3RingL2::chi_single(int i, int n) const { return singles_[var_index(i, n)]; }

LaurentPoly Sl3RingL2::chi_pair(int n1, int n2) const {
    var_index(1, n1);
    var_index(2, n2);
    int r1 = ((n1 % 4) + 4) % 4, r2 = ((n2 % 4) + 4) % 4;
    return pairs_[(r1 / 2) * 2 + (r2 - 1) / 2];
}

LaurentPoly Sl3RingL2::chi_bold(int i) const {
    if (i != 1 && i != 2) throw std::invalid_argument("bold index must be 1 or 2");
    return bold_[i - 1];
}

LaurentPoly Sl3RingL2::tau(const LaurentPoly& p) const {
    // positions: Y10 -> Y21, Y21 -> Y12, Y12 -> Y23, Y23 -> Y10
    static const int perm[4] = {2, 3, 1, 0};
    LaurentPoly out = LaurentPoly::zero(table_);
    for (const auto& [m, c] : p.terms()) {
        Mono t;
        for (const auto& [pos, e] : m.exps) t = t * Mono::var(perm[pos], e);
        out.add_term(t, c);
    }
    return out;
}

LaurentPoly Sl3RingL2::frobenius_character(long long k, long long l) const {
    if (k < 0 || l < 0) throw std::invalid_argument("Frobenius powers must be >= 0");
    LaurentPoly out = LaurentPoly::zero(table_);
    const LaurentPoly classical = sl3_character({k, l});
    for (const auto& [m, c] : classical.terms()) {
        int e1 = m.exp(0), e2 = m.exp(1);
        Mono t = Mono::var(0, e1) * Mono::var(1, e1) * Mono::var(2, e2) * Mono::var(3, e2);
        out.add_term(t, c);
    }
    return out;
}

bool Sl3RingL2::is_dominant(const Mono& m) const {
    for (const auto& [pos, e] : m.exps)
        if (e < 0) return false;
    return true;
}

std::pair<std::pair<int, int>, std::pair<int, int>> Sl3RingL2::case_factors(int tag) {
    switch (tag) {
        case 1: return {{1, 0}, {0, 1}};
        case 2: return {{2, 1}, {0, 1}};
        case 3: return {{1, 0}, {0, 3}};
        case 4: return {{2, 3}, {0, 3}};
        case 5: return {{1, 2}, {2, 1}};
        case 6: return {{2, 1}, {2, 1}};
        case 7: return {{1, 2}, {2, 3}};
        case 8: return {{2, 3}, {2, 3}};
        default: throw std::invalid_argument("case tag must be in 1..8");
    }
}

SimpleLabelA2L2 Sl3RingL2::canonicalize(SimpleLabelA2L2 lab) const {
    auto [single, pair] = case_factors(lab.case_tag);
    if (lab.a < 0 || lab.b < 0 || lab.k < 0 || lab.l < 0)
        throw std::invalid_argument("label multiplicities must be >= 0");
    if (lab.a == 0 && lab.b == 0) {
        lab.case_tag = 1;
    } else if (lab.b == 0) {
        for (int t = 1; t <= 8; ++t)
            if (case_factors(t).first == single) { lab.case_tag = t; break; }
    } else if (lab.a == 0) {
        for (int t = 1; t <= 8; ++t)
            if (case_factors(t).second == pair) { lab.case_tag = t; break; }
    }
    return lab;
}

SimpleLabelA2L2 Sl3RingL2::factor_dominant(const Mono& m) const {
    if (!is_dominant(m)) throw std::invalid_argument("monomial is not dominant");
    long long e[4] = {0, 0, 0, 0};
    for (const auto& [pos, ex] : m.exps) e[pos] = ex;

    SimpleLabelA2L2 lab;
    lab.k = std::min(e[0], e[1]);
    lab.l = std::min(e[2], e[3]);
    e[0] -= lab.k;
    e[1] -= lab.k;
    e[2] -= lab.l;
    e[3] -= lab.l;
    // Now e[0]e[1] = 0 and e[2]e[3] = 0: the remainder is l-acyclic and fits
    // one of the eight patterns.
    int n1 = e[0] > 0 ? 0 : 2;
    int n2 = e[2] > 0 ? 1 : 3;
    long long p = e[0] + e[1], q = e[2] + e[3];
    std::pair<int, int> single = p >= q ? std::pair<int, int>{1, n1} : std::pair<int, int>{2, n2};
    lab.a = p >= q ? p - q : q - p;
    lab.b = std::min(p, q);
    for (int t = 1; t <= 8; ++t)
        if (case_factors(t).first == single && case_factors(t).second == std::pair<int, int>{n1, n2}) {
            lab.case_tag = t;
            break;
        }
    return canonicalize(lab);
}

LaurentPoly Sl3RingL2::simple_character(const SimpleLabelA2L2& lab) const {
    auto [single, pair] = case_factors(lab.case_tag);
    LaurentPoly out = frobenius_character(lab.k, lab.l);
    out = out * chi_single(single.first, single.second).pow(static_cast<unsigned>(lab.a));
    out = out * chi_pair(pair.first, pair.second).pow(static_cast<unsigned>(lab.b));
    return out;
}

std::vector<std::pair<SimpleLabelA2L2, Int>> Sl3RingL2::decompose(
    const std::vector<SimpleLabelA2L2>& product) const {
    LaurentPoly chi = LaurentPoly::constant(table_, 1);
    for (const auto& lab : product) chi = chi * simple_character(lab);

    std::vector<std::pair<SimpleLabelA2L2, Int>> out;
    while (!chi.is_zero()) {
        const Mono* top = nullptr;
        Int c = 0;
        for (const auto& [m, coef] : chi.terms())
            if (is_dominant(m)) { top = &m; c = coef; break; }
        if (top == nullptr) throw std::logic_error("nonzero remainder without dominant monomial");
        if (c < 0) throw std::logic_error("negative multiplicity in decomposition");
        SimpleLabelA2L2 lab = factor_dominant(*top);
        chi -= simple_character(lab) * c;
        out.emplace_back(lab, c);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::string Sl3RingL2::label_to_string(const SimpleLabelA2L2& lab) const {
    auto [single, pair] = case_factors(lab.case_tag);
    auto yname = [](int i, int n) {
        return "Y" + std::to_string(i) + "," + std::to_string(n);
    };
    std::string out;
    auto append = [&](const std::string& part) {
        if (!out.empty()) out += " (x) ";
        out += part;
    };
    if (lab.a > 0)
        append("L(" + yname(single.first, single.second) + ")^" + std::to_string(lab.a));
    if (lab.b > 0)
        append("L(" + yname(1, pair.first) + " " + yname(2, pair.second) + ")^" +
               std::to_string(lab.b));
    if (lab.k > 0 || lab.l > 0)
        append("Fr(" + std::to_string(lab.k) + "," + std::to_string(lab.l) + ")");
    if (out.empty()) out = "1";
    return out;
}

nlohmann::json Sl3RingL2::label_to_json(const SimpleLabelA2L2& lab) const {
    return {{"case", lab.case_tag}, {"a", lab.a}, {"b", lab.b}, {"k", lab.k}, {"l", lab.l}};
}

SimpleLabelA2L2 Sl3RingL2::label_from_json(const nlohmann::json& j) const {
    SimpleLabelA2L2 lab;
    lab.case_tag = j.at("case").get<int>();
    lab.a = j.value("a", 0LL);
    lab.b = j.value("b", 0LL);
    lab.k = j.value("k", 0LL);
    lab.l = j.value("l", 0LL);
    case_factors(lab.case_tag);
    return canonicalize(lab);
}

GenSeed g2_initial_seed() {
    ExchangeMatrix B{2, {{0, 3}, {-1, 0}}, {1, 3}};
    // theta_2 = u^3 + lambda_2 u^2 v + lambda_1 u v^2 + v^3: the tuple order
    // (1, lambda_1, lambda_2, 1) is forced by the character identities.
    CoeffTuple p{{TropMonomial::one(2), TropMonomial::one(2)},
                 {TropMonomial::one(2), TropMonomial{{1, 0}}, TropMonomial{{0, 1}},
                  TropMonomial::one(2)}};
    return initial_seed(B, p, {"x1", "x2"}, {"lambda1", "lambda2"});
}

ExchangeMatrix conjecture_matrix(int l) {
    if (l < 2) throw std::invalid_argument("l must be >= 2");
    int n = 2 * l - 2;
    ExchangeMatrix B;
    B.n = n;
    B.b.assign(n, std::vector<long long>(n, 0));
    // Generic band (0-based): b[r][r-2] = -1, b[r][r-1] = 1, b[r][r+1] = -1,
    // b[r][r+2] = 1; tail overrides couple the last two rows to the cubic
    // direction n-1.
    for (int r = 0; r < n; ++r) {
        if (r >= 2) B.b[r][r - 2] = -1;
        if (r >= 1) B.b[r][r - 1] = 1;
        if (r + 1 < n) B.b[r][r + 1] = -1;
        if (r + 2 < n) B.b[r][r + 2] = 1;
    }
    if (n >= 3) {
        B.b[n - 3][n - 2] = -2;
        B.b[n - 3][n - 1] = 3;
        B.b[n - 2][n - 3] = 2;
    }
    B.b[n - 2][n - 1] = -3;
    B.d.assign(n, 1);
    B.d[n - 1] = 3;
    return B;
}

GenSeed conjecture_seed(int l) {
    ExchangeMatrix B = conjecture_matrix(l);
    auto report = validate(B);
    if (!report.ok()) throw std::logic_error("conjecture matrix failed validation");
    int n = B.n;
    CoeffTuple p(n);
    for (int r = 0; r + 1 < n; ++r) p[r] = {TropMonomial::one(2), TropMonomial::one(2)};
    p[n - 1] = {TropMonomial::one(2), TropMonomial{{1, 0}}, TropMonomial{{0, 1}},
                TropMonomial::one(2)};
    std::vector<std::string> vars;
    for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    return initial_seed(B, p, vars, {"lambda1", "lambda2"});
}

}  // namespace gencluster
