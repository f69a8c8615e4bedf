#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "gencluster/seed.hpp"

namespace gencluster {

// Highest weight a1*w1 + a2*w2 of a simple sl3 module.
struct Sl3Weight {
    long long a1 = 0;
    long long a2 = 0;

    bool operator==(const Sl3Weight& other) const { return a1 == other.a1 && a2 == other.a2; }
    bool operator<(const Sl3Weight& other) const {
        return std::tie(a1, a2) < std::tie(other.a1, other.a2);
    }
};

// Classical character of V(a1 w1 + a2 w2) in Z[y1^{\pm}, y2^{\pm}], computed by
// Gelfand-Tsetlin pattern enumeration over the shared 2-variable table below.
VarTablePtr sl3_weight_table();
LaurentPoly sl3_character(const Sl3Weight& w);

// S_{a1,a2}: the polynomial expressing [V(a1 w1 + a2 w2)] in the fundamental
// classes c1 = [V(w1)], c2 = [V(w2)], over the table {c1, c2}.
VarTablePtr sl3_S_table();
LaurentPoly sl3_S_polynomial(const Sl3Weight& w);

// Label of a simple object for sl3 at l = 2: one of the eight tensor-product
// patterns with multiplicities (a, b), times the Frobenius pullback
// L(Y1^k Y2^l). Kept canonical: degenerate labels (a or b zero) use the
// smallest admissible case tag.
struct SimpleLabelA2L2 {
    int case_tag = 1;  // 1..8 for patterns (i)..(viii)
    long long a = 0;   // multiplicity of the one-variable factor
    long long b = 0;   // multiplicity of the two-variable factor
    long long k = 0;   // Frobenius power on Y1
    long long l = 0;   // Frobenius power on Y2

    bool operator==(const SimpleLabelA2L2& other) const {
        return std::tie(case_tag, a, b, k, l) ==
               std::tie(other.case_tag, other.a, other.b, other.k, other.l);
    }
    bool operator<(const SimpleLabelA2L2& other) const {
        return std::tie(k, l, case_tag, a, b) <
               std::tie(other.k, other.l, other.case_tag, other.a, other.b);
    }
};

// The eps-character ring for g = sl3 at l = 2: variables Y_{1,0}, Y_{1,2},
// Y_{2,1}, Y_{2,3} (second index mod 4, parity matching the node).
class Sl3RingL2 {
public:
    Sl3RingL2();

    const VarTablePtr& table() const { return table_; }

    // The variable Y_{i,n}; throws if n's parity does not match node i.
    LaurentPoly y(int i, int n) const;

    LaurentPoly chi_single(int i, int n) const;    // chi(L(Y_{i,n}))
    LaurentPoly chi_pair(int n1, int n2) const;    // chi(L(Y_{1,n1} Y_{2,n2}))
    LaurentPoly chi_bold(int i) const;             // chi(L(Y_bold_i))

    // The symmetry Y_{1,0} -> Y_{2,1} -> Y_{1,2} -> Y_{2,3} -> Y_{1,0}
    // (index rotation composed with the diagram flip); a ring automorphism
    // permuting the fundamental-type characters.
    LaurentPoly tau(const LaurentPoly& p) const;

    // chi(L(Y1^k Y2^l)) = classical character with y1 -> Y1, y2 -> Y2.
    LaurentPoly frobenius_character(long long k, long long l) const;

    bool is_dominant(const Mono& m) const;

    // The (single, pair) factors of a case tag, as ((i, n), (n1, n2)).
    static std::pair<std::pair<int, int>, std::pair<int, int>> case_factors(int tag);

    SimpleLabelA2L2 canonicalize(SimpleLabelA2L2 lab) const;

    // k, l = the Frobenius powers; the acyclic remainder always matches one of
    // the eight patterns. Throws on non-dominant input.
    SimpleLabelA2L2 factor_dominant(const Mono& m) const;

    LaurentPoly simple_character(const SimpleLabelA2L2& lab) const;

    // Dominant-monomial peeling into simple classes; multiplicities positive.
    std::vector<std::pair<SimpleLabelA2L2, Int>> decompose(
        const std::vector<SimpleLabelA2L2>& product) const;

    std::string label_to_string(const SimpleLabelA2L2& lab) const;
    nlohmann::json label_to_json(const SimpleLabelA2L2& lab) const;
    SimpleLabelA2L2 label_from_json(const nlohmann::json& j) const;

private:
    VarTablePtr table_;
    LaurentPoly singles_[4];  // chi(L(Y_{1,0})), chi(L(Y_{1,2})), chi(L(Y_{2,1})), chi(L(Y_{2,3}))
    LaurentPoly pairs_[4];    // chi(L(Y_{1,n1}Y_{2,n2})) for (n1,n2) = (0,1),(0,3),(2,1),(2,3)
    LaurentPoly bold_[2];

    int var_index(int i, int n) const;
};

// The G2 generalised seed: B = [[0,3],[-1,0]], d = (1,3),
// theta_2 = u^3 + lambda_2 u^2 v + lambda_1 u v^2 + v^3.
GenSeed g2_initial_seed();

// The conjectural rank-(2l-2) seed; l = 2 gives the G2 seed. The result is
// validated; a validation failure throws.
GenSeed conjecture_seed(int l);

// The conjecture's exchange matrix alone (rank 2l-2, d = (1,...,1,3)).
ExchangeMatrix conjecture_matrix(int l);

}  // namespace gencluster
