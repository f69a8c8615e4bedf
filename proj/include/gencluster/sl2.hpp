#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "gencluster/laurent.hpp"

namespace gencluster {

// KR string for sl2 at a 2l-th root setting: the module
// L(Y_{2d} Y_{2d+2} ... Y_{2(d+k-1)}) = W_eps(k, eps^{2d}), with 0 <= k <= l-1.
// Its attached diagonal in P_{2l} is [2d-2, 2d+2k].
struct KRString {
    int d = 0;
    int k = 0;

    bool operator==(const KRString& other) const { return d == other.d && k == other.k; }
    bool operator<(const KRString& other) const {
        return std::tie(k, d) < std::tie(other.k, other.d);
    }
};

// Label of a simple object: tensor product of pairwise non-crossing KR strings
// (with multiplicity, kept as repeats in sorted order) times the Frobenius
// pullback L(Y_bold^a).
struct SimpleLabelA1 {
    std::vector<KRString> strings;
    long long a = 0;

    bool operator==(const SimpleLabelA1& other) const {
        return strings == other.strings && a == other.a;
    }
    bool operator<(const SimpleLabelA1& other) const {
        return std::tie(a, strings) < std::tie(other.a, other.strings);
    }
};

// True iff the attached diagonals of s1 and s2 cross in the open interior of
// P_{2l}. Equal diagonals, shared endpoints, and k = 0 sides never cross.
bool kr_strings_cross(int l, const KRString& s1, const KRString& s2);

// The eps-character ring for g = sl2 at a primitive root with eps^2 of order l.
// Variables Y_0, Y_2, ..., Y_{2l-2}; Y indices are even residues mod 2l.
class Sl2Ring {
public:
    explicit Sl2Ring(int l);

    int l() const { return l_; }
    const VarTablePtr& table() const { return table_; }

    // The variable Y_residue (residue even, reduced mod 2l).
    LaurentPoly y(int residue) const;

    // The (k+1)-term ladder sum of the specialised KR module W_eps(k, eps^{2d})
    // for any k >= 0 (its class, simple or not); indices reduce mod 2l.
    LaurentPoly standard_character(int d, int k) const;

    // chi_eps of the *simple* W_eps(k, eps^{2d}); throws unless 0 <= k < l.
    LaurentPoly kr_character(const KRString& s) const;

    // chi_eps(z_1) = Y_0 Y_2 ... Y_{2l-2} + its inverse.
    LaurentPoly z_character() const;

    // chi_eps(L(Y_bold^a)) = sum_{j=0}^{a} Y_bold^{a-2j}; equals S_a(z).
    LaurentPoly frobenius_character(long long a) const;

    bool is_dominant(const Mono& m) const;

    // Unique factorization of a dominant monomial into Frobenius power times a
    // non-crossing multiset of strings (greedy maximal strings on the l-acyclic
    // part). Throws on non-dominant input; crossing output is a fatal logic
    // error (it would contradict the classification of simples).
    SimpleLabelA1 factor_dominant(const Mono& m) const;

    LaurentPoly simple_character(const SimpleLabelA1& label) const;

    // Decomposes a tensor product of simples into simple classes by dominant
    // monomial peeling. Multiplicities are positive; a negative coefficient on
    // a dominant leading term is fatal.
    std::vector<std::pair<SimpleLabelA1, Int>> decompose(
        const std::vector<SimpleLabelA1>& product) const;

    // Ring map Y_{2k} -> Y_{2k+2s} (Theta-rotation); a ring automorphism.
    LaurentPoly shift(const LaurentPoly& p, int s) const;
    SimpleLabelA1 shift(const SimpleLabelA1& label, int s) const;

    std::string label_to_string(const SimpleLabelA1& label) const;
    nlohmann::json label_to_json(const SimpleLabelA1& label) const;
    SimpleLabelA1 label_from_json(const nlohmann::json& j) const;

private:
    int l_;
    VarTablePtr table_;

    int var_of_residue(int residue) const;  // residue -> position, validates parity
};

}  // namespace gencluster
