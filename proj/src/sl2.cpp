#include "gencluster/sl2.hpp"

#include <algorithm>
#include <stdexcept>

#include "gencluster/typec.hpp"

namespace gencluster {

namespace {

int mod(int v, int m) {
    int r = v % m;
    return r < 0 ? r + m : r;
}

}  // namespace

bool kr_strings_cross(int l, const KRString& s1, const KRString& s2) {
    // Diagonal [2d-2, 2d+2k] of P_{2l}; the polygon is the type-C model at
    // n = l-1 (even vertices mod 4l), and the diagonal is a Theta-orbit since
    // d is only defined mod l.
    int n = l - 1;
    auto orb = [&](const KRString& s) {
        return make_orbit(n, mod(2 * s.d - 2, 4 * l), mod(2 * s.d + 2 * s.k, 4 * l));
    };
    return crossing(n, orb(s1), orb(s2));
}

Sl2Ring::Sl2Ring(int l) : l_(l) {
    if (l < 2) throw std::invalid_argument("l must be >= 2");
    std::vector<std::string> names;
    for (int k = 0; k < l; ++k) names.push_back("Y" + std::to_string(2 * k));
    table_ = make_table(std::move(names));
}

int Sl2Ring::var_of_residue(int residue) const {
    int r = mod(residue, 2 * l_);
    if (r % 2 != 0) throw std::invalid_argument("Y index must be even");
    return r / 2;
}

LaurentPoly Sl2Ring::y(int residue) const {
    return LaurentPoly::variable(table_, var_of_residue(residue));
}

LaurentPoly Sl2Ring::standard_character(int d, int k) const {
    if (k < 0) throw std::invalid_argument("string length must be >= 0");
    LaurentPoly out = LaurentPoly::zero(table_);
    for (int j = 0; j <= k; ++j) {
        Mono m;
        for (int i = 0; i < k - j; ++i) m = m * Mono::var(var_of_residue(2 * (d + i)));
        for (int i = k - j; i < k; ++i) m = m * Mono::var(var_of_residue(2 * (d + i + 1)), -1);
        out.add_term(m, 1);
    }
    return out;
}

LaurentPoly Sl2Ring::kr_character(const KRString& s) const {
    if (s.k >= l_) throw std::invalid_argument("KR string length must satisfy 0 <= k < l");
    return standard_character(s.d, s.k);
}

LaurentPoly Sl2Ring::z_character() const {
    Mono top;
    for (int k = 0; k < l_; ++k) top = top * Mono::var(k);
    LaurentPoly out = LaurentPoly::zero(table_);
    out.add_term(top, 1);
    out.add_term(top.inverse(), 1);
    return out;
}

LaurentPoly Sl2Ring::frobenius_character(long long a) const {
    if (a < 0) throw std::invalid_argument("Frobenius power must be >= 0");
    LaurentPoly out = LaurentPoly::zero(table_);
    for (long long j = 0; j <= a; ++j) {
        Mono m;
        for (int k = 0; k < l_; ++k) m = m * Mono::var(k, static_cast<int>(a - 2 * j));
        out.add_term(m, 1);
    }
    return out;
}

bool Sl2Ring::is_dominant(const Mono& m) const {
    for (const auto& [pos, e] : m.exps)
        if (e < 0) return false;
    return true;
}

SimpleLabelA1 Sl2Ring::factor_dominant(const Mono& m) const {
    if (!is_dominant(m)) throw std::invalid_argument("monomial is not dominant");
    std::vector<long long> e(l_, 0);
    for (const auto& [pos, ex] : m.exps) e[pos] = ex;

    SimpleLabelA1 label;
    label.a = *std::min_element(e.begin(), e.end());
    for (auto& v : e) v -= label.a;

    // Strings are maximal *cyclic* runs per skyline level: residues are mod l,
    // so a string may wrap (Y0 Y4 at l = 3 is the single string starting at
    // d = 2, not two unit strings). The acyclic part has a gap at every level,
    // so runs never close up.
    long long levels = *std::max_element(e.begin(), e.end());
    for (long long h = 1; h <= levels; ++h) {
        for (int d0 = 0; d0 < l_; ++d0) {
            if (e[d0] < h || e[(d0 + l_ - 1) % l_] >= h) continue;
            int len = 0;
            for (int idx = d0; len < l_ && e[idx] >= h; idx = (idx + 1) % l_) ++len;
            label.strings.push_back(KRString{d0, len});
        }
    }
    std::sort(label.strings.begin(), label.strings.end());
    for (size_t i = 0; i < label.strings.size(); ++i)
        for (size_t j = i + 1; j < label.strings.size(); ++j)
            if (kr_strings_cross(l_, label.strings[i], label.strings[j]))
                throw std::logic_error("crossing strings in dominant factorization");
    return label;
}

LaurentPoly Sl2Ring::simple_character(const SimpleLabelA1& label) const {
    LaurentPoly out = frobenius_character(label.a);
    for (const auto& s : label.strings) out = out * kr_character(s);
    return out;
}

std::vector<std::pair<SimpleLabelA1, Int>> Sl2Ring::decompose(
    const std::vector<SimpleLabelA1>& product) const {
    LaurentPoly chi = LaurentPoly::constant(table_, 1);
    for (const auto& lab : product) chi = chi * simple_character(lab);

    std::vector<std::pair<SimpleLabelA1, Int>> out;
    while (!chi.is_zero()) {
        const Mono* top = nullptr;
        Int c = 0;
        for (const auto& [m, coef] : chi.terms())
            if (is_dominant(m)) { top = &m; c = coef; break; }
        if (top == nullptr) throw std::logic_error("nonzero remainder without dominant monomial");
        if (c < 0) throw std::logic_error("negative multiplicity in decomposition");
        SimpleLabelA1 lab = factor_dominant(*top);
        chi -= simple_character(lab) * c;
        out.emplace_back(std::move(lab), c);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

LaurentPoly Sl2Ring::shift(const LaurentPoly& p, int s) const {
    LaurentPoly out = LaurentPoly::zero(table_);
    for (const auto& [m, c] : p.terms()) {
        Mono sm;
        for (const auto& [pos, e] : m.exps) sm = sm * Mono::var(mod(pos + s, l_), e);
        out.add_term(sm, c);
    }
    return out;
}

SimpleLabelA1 Sl2Ring::shift(const SimpleLabelA1& label, int s) const {
    SimpleLabelA1 out = label;
    for (auto& str : out.strings) str.d = mod(str.d + s, l_);
    std::sort(out.strings.begin(), out.strings.end());
    return out;
}

std::string Sl2Ring::label_to_string(const SimpleLabelA1& label) const {
    std::string out;
    for (const auto& s : label.strings) {
        if (!out.empty()) out += " (x) ";
        out += "W(" + std::to_string(s.k) + "," + std::to_string(2 * s.d) + ")";
    }
    if (label.a > 0) {
        if (!out.empty()) out += " (x) ";
        out += "Fr^" + std::to_string(label.a);
    }
    if (out.empty()) out = "1";
    return out;
}

nlohmann::json Sl2Ring::label_to_json(const SimpleLabelA1& label) const {
    nlohmann::json strings = nlohmann::json::array();
    for (size_t i = 0; i < label.strings.size();) {
        size_t j = i;
        while (j < label.strings.size() && label.strings[j] == label.strings[i]) ++j;
        strings.push_back({{"d", label.strings[i].d},
                           {"k", label.strings[i].k},
                           {"mult", j - i}});
        i = j;
    }
    return {{"l", l_}, {"strings", strings}, {"frobenius", label.a}};
}

SimpleLabelA1 Sl2Ring::label_from_json(const nlohmann::json& j) const {
    if (j.at("l").get<int>() != l_) throw std::invalid_argument("label level mismatch");
    SimpleLabelA1 label;
    label.a = j.value("frobenius", 0LL);
    if (label.a < 0) throw std::invalid_argument("negative Frobenius power");
    for (const auto& s : j.value("strings", nlohmann::json::array())) {
        KRString str{mod(s.at("d").get<int>(), l_), s.at("k").get<int>()};
        if (str.k < 0 || str.k >= l_) throw std::invalid_argument("bad string length");
        long long mult = s.value("mult", 1LL);
        if (mult < 0) throw std::invalid_argument("negative multiplicity");
        for (long long t = 0; t < mult; ++t) label.strings.push_back(str);
    }
    std::sort(label.strings.begin(), label.strings.end());
    for (size_t i = 0; i < label.strings.size(); ++i)
        for (size_t j2 = i + 1; j2 < label.strings.size(); ++j2)
            if (kr_strings_cross(l_, label.strings[i], label.strings[j2]))
                throw std::invalid_argument("label strings cross");
    return label;
}

}  // namespace gencluster
