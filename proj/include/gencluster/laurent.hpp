#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace gencluster {

using Int = boost::multiprecision::cpp_int;

struct LaurentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ordered list of distinct variable names shared by all polynomials of one ring.
class VarTable {
public:
    explicit VarTable(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    // -1 if absent
    int index(const std::string& name) const;

    bool operator==(const VarTable& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_table(std::vector<std::string> names);

// Sparse exponent vector, entries sorted by variable position, exponents nonzero.
struct Mono {
    std::vector<std::pair<int, int>> exps;

    static Mono unit() { return Mono{}; }
    static Mono var(int position, int exponent = 1);

    int exp(int position) const;
    long long total_degree() const;
    bool is_unit() const { return exps.empty(); }

    Mono operator*(const Mono& other) const;
    Mono inverse() const;
    Mono pow(long long k) const;
    // componentwise nonnegative difference requirement: this / other, any exponents allowed
    Mono divide(const Mono& other) const { return *this * other.inverse(); }
    // true if other/this has only nonnegative exponents
    bool divides_nonneg(const Mono& other) const;

    bool operator==(const Mono& other) const { return exps == other.exps; }
    bool operator!=(const Mono& other) const { return !(*this == other); }
};

// Graded lexicographic, greater-first: higher total exponent sum wins, ties broken
// lexicographically by position (larger exponent at the first differing position wins).
struct MonoGrlexGreater {
    bool operator()(const Mono& a, const Mono& b) const;
};

// Returns <0, 0, >0 like strcmp, with "greater in grlex" mapped to >0.
int grlex_compare(const Mono& a, const Mono& b);

class LaurentPoly {
public:
    using TermMap = std::map<Mono, Int, MonoGrlexGreater>;

    LaurentPoly() = default;
    explicit LaurentPoly(VarTablePtr table) : table_(std::move(table)) {}

    static LaurentPoly zero(VarTablePtr table) { return LaurentPoly(std::move(table)); }
    static LaurentPoly constant(VarTablePtr table, Int c);
    static LaurentPoly variable(VarTablePtr table, int position, int exponent = 1);
    static LaurentPoly monomial(VarTablePtr table, Mono m, Int c);

    const VarTablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    size_t num_terms() const { return terms_.size(); }
    Int coeff(const Mono& m) const;

    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator-(const LaurentPoly& other) const;
    LaurentPoly operator*(const LaurentPoly& other) const;
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const LaurentPoly& other) { return *this = *this * other; }
    LaurentPoly operator*(const Int& c) const;

    LaurentPoly pow(unsigned k) const;

    // Exact division; throws LaurentError("not Laurent-divisible") when no Laurent
    // quotient exists, LaurentError on zero divisor.
    LaurentPoly divide_exact(const LaurentPoly& divisor) const;

    // Replace variables by polynomials over `target` (positions of *this* table).
    // Unbound variables must exist in target under the same name.
    LaurentPoly substitute(const std::map<int, LaurentPoly>& bindings,
                           const VarTablePtr& target) const;

    // Leading term under grlex; throws LaurentError("zero polynomial") on 0.
    std::pair<Mono, Int> leading() const;

    bool operator==(const LaurentPoly& other) const;
    bool operator!=(const LaurentPoly& other) const { return !(*this == other); }

    // Deterministic human-readable form, terms in grlex order.
    std::string to_string() const;

    nlohmann::json to_json() const;
    static LaurentPoly from_json(const nlohmann::json& j);

    void add_term(const Mono& m, const Int& c);  // accumulate, dropping zeros

private:
    VarTablePtr table_;
    TermMap terms_;

    void check_same_table(const LaurentPoly& other) const;
};

std::string mono_to_string(const Mono& m, const VarTable& table);

}  // namespace gencluster
