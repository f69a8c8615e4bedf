#include "gencluster/laurent.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace gencluster {

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
        auto [it, inserted] = index_.emplace(names_[i], i);
        if (!inserted) throw LaurentError("duplicate variable name: " + names_[i]);
    }
}

int VarTable::index(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

VarTablePtr make_table(std::vector<std::string> names) {
    return std::make_shared<const VarTable>(std::move(names));
}

Mono Mono::var(int position, int exponent) {
    Mono m;
    if (exponent != 0) m.exps.emplace_back(position, exponent);
    return m;
}

int Mono::exp(int position) const {
    for (const auto& [p, e] : exps)
        if (p == position) return e;
    return 0;
}

long long Mono::total_degree() const {
    long long d = 0;
    for (const auto& [p, e] : exps) d += e;
    return d;
}

Mono Mono::operator*(const Mono& other) const {
    Mono out;
    out.exps.reserve(exps.size() + other.exps.size());
    size_t i = 0, j = 0;
    while (i < exps.size() || j < other.exps.size()) {
        if (j == other.exps.size() || (i < exps.size() && exps[i].first < other.exps[j].first)) {
            out.exps.push_back(exps[i++]);
        } else if (i == exps.size() || other.exps[j].first < exps[i].first) {
            out.exps.push_back(other.exps[j++]);
        } else {
            int e = exps[i].second + other.exps[j].second;
            if (e != 0) out.exps.emplace_back(exps[i].first, e);
            ++i, ++j;
        }
    }
    return out;
}

Mono Mono::inverse() const {
    Mono out = *this;
    for (auto& [p, e] : out.exps) e = -e;
    return out;
}

Mono Mono::pow(long long k) const {
    Mono out;
    if (k == 0) return out;
    out.exps = exps;
    for (auto& [p, e] : out.exps) e = static_cast<int>(e * k);
    return out;
}

bool Mono::divides_nonneg(const Mono& other) const {
    // every exponent of *this must be <= matching exponent of other... for Laurent
    // monomials in the polynomial-shifted sense used by divide_exact.
    size_t j = 0;
    for (const auto& [p, e] : exps) {
        while (j < other.exps.size() && other.exps[j].first < p) {
            if (other.exps[j].second < 0) return false;
            ++j;
        }
        int oe = (j < other.exps.size() && other.exps[j].first == p) ? other.exps[j].second : 0;
        if (e > oe) return false;
        if (j < other.exps.size() && other.exps[j].first == p) ++j;
    }
    return true;
}

int grlex_compare(const Mono& a, const Mono& b) {
    long long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db ? 1 : -1;
    size_t i = 0, j = 0;
    while (i < a.exps.size() || j < b.exps.size()) {
        int pa = i < a.exps.size() ? a.exps[i].first : INT32_MAX;
        int pb = j < b.exps.size() ? b.exps[j].first : INT32_MAX;
        int p = std::min(pa, pb);
        int ea = pa == p ? a.exps[i].second : 0;
        int eb = pb == p ? b.exps[j].second : 0;
        if (ea != eb) return ea > eb ? 1 : -1;
        if (pa == p) ++i;
        if (pb == p) ++j;
    }
    return 0;
}

bool MonoGrlexGreater::operator()(const Mono& a, const Mono& b) const {
    return grlex_compare(a, b) > 0;
}

LaurentPoly LaurentPoly::constant(VarTablePtr table, Int c) {
    LaurentPoly p(std::move(table));
    if (c != 0) p.terms_.emplace(Mono::unit(), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::variable(VarTablePtr table, int position, int exponent) {
    if (!table || position < 0 || position >= table->size())
        throw LaurentError("variable position out of range");
    LaurentPoly p(std::move(table));
    p.terms_.emplace(Mono::var(position, exponent), Int(1));
    return p;
}

LaurentPoly LaurentPoly::monomial(VarTablePtr table, Mono m, Int c) {
    LaurentPoly p(std::move(table));
    if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_unit() && terms_.begin()->second == 1;
}

Int LaurentPoly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::check_same_table(const LaurentPoly& other) const {
    if (table_ == other.table_) return;
    if (table_ && other.table_ && *table_ == *other.table_) return;
    throw LaurentError("incompatible variable tables");
}

void LaurentPoly::add_term(const Mono& m, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    check_same_table(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    check_same_table(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    LaurentPoly out = *this;
    out += other;
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
    LaurentPoly out = *this;
    out -= other;
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

LaurentPoly LaurentPoly::operator*(const Int& c) const {
    LaurentPoly out(table_);
    if (c == 0) return out;
    out.terms_ = terms_;
    for (auto& [m, cc] : out.terms_) cc *= c;
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    check_same_table(other);
    LaurentPoly out(table_);
    // iterate over the smaller factor
    const LaurentPoly* a = this;
    const LaurentPoly* b = &other;
    if (a->terms_.size() > b->terms_.size()) std::swap(a, b);
    for (const auto& [ma, ca] : a->terms_)
        for (const auto& [mb, cb] : b->terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly result = constant(table_, 1);
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1u) result *= base;
        base = (k >>= 1) ? base * base : base;
    }
    return result;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    check_same_table(divisor);
    if (divisor.is_zero()) throw LaurentError("division by zero polynomial");
    LaurentPoly quotient(table_);
    if (is_zero()) return quotient;

    if (divisor.terms_.size() == 1) {
        const auto& [dm, dc] = *divisor.terms_.begin();
        Mono inv = dm.inverse();
        for (const auto& [m, c] : terms_) {
            if (c % dc != 0) throw LaurentError("not Laurent-divisible");
            quotient.terms_.emplace(m * inv, c / dc);
        }
        return quotient;
    }

    // Shift numerator, divisor AND the prospective quotient into the polynomial
    // ring: for each variable v the minimum degree of an exact quotient is
    // min_v(p) - min_v(q), because the lowest deg_v slices of quotient and
    // divisor multiply without cancellation. Grlex is then well founded and the
    // leading monomial strictly decreases each step, so the loop terminates.
    auto min_degs = [](const LaurentPoly& p) {
        std::map<int, int> mins;  // variables appearing anywhere, with min exponent
        for (const auto& [m, c] : p.terms_)
            for (const auto& [pos, e] : m.exps) mins.emplace(pos, INT32_MAX);
        for (auto& [pos, mn] : mins)
            for (const auto& [m, c] : p.terms_) mn = std::min(mn, m.exp(pos));
        return mins;
    };
    std::map<int, int> mn_p = min_degs(*this);
    std::map<int, int> mn_q = min_degs(divisor);

    Mono shift_d, shift_q;  // divisor and quotient corrections
    for (const auto& [pos, mn] : mn_q)
        if (mn < 0) shift_d.exps.emplace_back(pos, -mn);
    {
        std::map<int, int> all = mn_p;
        for (const auto& [pos, mn] : mn_q) all.emplace(pos, 0);
        for (const auto& [pos, mnp] : all) {
            auto qit = mn_q.find(pos);
            int mnq = qit == mn_q.end() ? 0 : qit->second;
            if (mnp - mnq < 0) shift_q.exps.emplace_back(pos, -(mnp - mnq));
        }
    }
    Mono shift_n = shift_d * shift_q;

    LaurentPoly rem(table_);
    for (const auto& [m, c] : terms_) rem.terms_.emplace(m * shift_n, c);
    LaurentPoly den(table_);
    for (const auto& [m, c] : divisor.terms_) den.terms_.emplace(m * shift_d, c);

    const auto& [lead_dm, lead_dc] = *den.terms_.begin();
    Mono unshift = shift_q.inverse();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms_.begin();
        if (rc % lead_dc != 0 || !lead_dm.divides_nonneg(rm))
            throw LaurentError("not Laurent-divisible");
        Mono qm = rm.divide(lead_dm);
        Int qc = rc / lead_dc;
        quotient.add_term(qm * unshift, qc);
        LaurentPoly piece = LaurentPoly::monomial(table_, qm, qc) * den;
        rem -= piece;
    }
    return quotient;
}

LaurentPoly LaurentPoly::substitute(const std::map<int, LaurentPoly>& bindings,
                                    const VarTablePtr& target) const {
    for (const auto& [pos, val] : bindings) {
        if (pos < 0 || pos >= table_->size()) throw LaurentError("binding position out of range");
        if (!(val.table_ == target) && !(val.table_ && *val.table_ == *target))
            throw LaurentError("incompatible variable tables");
    }
    // Common-denominator scheme: negative exponents of bound variables are cleared
    // by multiplying through with binding^max_neg, then one exact division at the end.
    std::map<int, int> max_neg;
    for (const auto& [m, c] : terms_)
        for (const auto& [pos, e] : m.exps)
            if (e < 0 && bindings.count(pos)) {
                auto [it, ins] = max_neg.emplace(pos, -e);
                if (!ins) it->second = std::max(it->second, -e);
            }

    auto map_unbound = [&](int pos) {
        int t = target->index(table_->name(pos));
        if (t < 0) throw LaurentError("unbound variable missing from target table: " + table_->name(pos));
        return t;
    };

    LaurentPoly numerator(target);
    for (const auto& [m, c] : terms_) {
        LaurentPoly term = LaurentPoly::constant(target, c);
        Mono passthrough;
        for (const auto& [pos, e] : m.exps) {
            auto bit = bindings.find(pos);
            if (bit == bindings.end()) {
                passthrough = passthrough * Mono::var(map_unbound(pos), e);
            } else {
                auto nit = max_neg.find(pos);
                int shift = nit == max_neg.end() ? 0 : nit->second;
                int ee = e + shift;
                if (ee > 0) term *= bit->second.pow(static_cast<unsigned>(ee));
            }
        }
        // variables absent from the term but carrying a global shift
        for (const auto& [pos, shift] : max_neg)
            if (m.exp(pos) == 0 && shift > 0) term *= bindings.at(pos).pow(static_cast<unsigned>(shift));
        if (!passthrough.is_unit()) term *= LaurentPoly::monomial(target, passthrough, 1);
        numerator += term;
    }
    if (max_neg.empty()) return numerator;

    LaurentPoly denom = LaurentPoly::constant(target, 1);
    for (const auto& [pos, shift] : max_neg) denom *= bindings.at(pos).pow(static_cast<unsigned>(shift));
    try {
        return numerator.divide_exact(denom);
    } catch (const LaurentError&) {
        throw LaurentError("non-Laurent substitution");
    }
}

std::pair<Mono, Int> LaurentPoly::leading() const {
    if (is_zero()) throw LaurentError("zero polynomial");
    return *terms_.begin();
}

bool LaurentPoly::operator==(const LaurentPoly& other) const {
    check_same_table(other);
    return terms_ == other.terms_;
}

std::string mono_to_string(const Mono& m, const VarTable& table) {
    if (m.is_unit()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [pos, e] : m.exps) {
        if (!first) os << "*";
        first = false;
        os << table.name(pos);
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (m.is_unit()) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << mono_to_string(m, *table_);
        }
    }
    return os.str();
}

nlohmann::json LaurentPoly::to_json() const {
    nlohmann::json j;
    j["vars"] = table_->names();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : terms_) {
        nlohmann::json exps = nlohmann::json::object();
        for (const auto& [pos, e] : m.exps) exps[table_->name(pos)] = e;
        terms.push_back({{"exps", exps}, {"coef", c.str()}});
    }
    j["terms"] = std::move(terms);
    return j;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
    auto table = make_table(j.at("vars").get<std::vector<std::string>>());
    LaurentPoly p(table);
    for (const auto& t : j.at("terms")) {
        Mono m;
        for (const auto& [name, e] : t.at("exps").items()) {
            int pos = table->index(name);
            if (pos < 0) throw LaurentError("unknown variable in term: " + name);
            if (e.get<int>() != 0) m.exps.emplace_back(pos, e.get<int>());
        }
        std::sort(m.exps.begin(), m.exps.end());
        p.add_term(m, Int(t.at("coef").get<std::string>()));
    }
    return p;
}

}  // namespace gencluster
