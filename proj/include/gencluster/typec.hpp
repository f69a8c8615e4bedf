#pragma once

#include <map>
#include <string>
#include <vector>

#include "gencluster/seed.hpp"

namespace gencluster {

// Theta-orbit of diagonals of P_{2n+2}. Vertices are even residues mod 4n+4;
// bar(v) = v + 2n + 2. Canonical form: b = a + 2m mod 4n+4 with 1 <= m <= n+1
// and a minimal over the orbit {[a,b],[bar a,bar b]}. m = 1 is a side (unit
// variable), m = n+1 a diameter.
struct Orbit {
    int a = 0;
    int m = 1;

    bool operator==(const Orbit& other) const { return a == other.a && m == other.m; }
    bool operator<(const Orbit& other) const {
        return std::tie(m, a) < std::tie(other.m, other.a);
    }
};

int bar_vertex(int v, int n);

// Canonicalizes an arbitrary even vertex pair; throws on invalid input (odd
// vertices or a == b).
Orbit make_orbit(int n, int a, int b);

inline bool is_side(const Orbit& o) { return o.m == 1; }
inline bool is_diameter(const Orbit& o, int n) { return o.m == n + 1; }
inline bool is_small(const Orbit& o) { return o.m == 2; }

// Card O_ab = m - 1, the number of Theta-orbits of vertices on the smallest arc.
inline int card_O(const Orbit& o) { return o.m - 1; }

// Display form like "x_{2,0~}"; parse accepts "a,b" with optional "~" suffixes.
std::string orbit_to_string(const Orbit& o, int n);
Orbit orbit_from_string(int n, const std::string& text);

// True iff some diagonal of o1 crosses some diagonal of o2 in the open interior.
bool crossing(int n, const Orbit& o1, const Orbit& o2);

// A CS triangulation as an ordered list of n orbits; the order aligns with the
// mutation directions of the matching seed.
struct CSTriangulation {
    int n = 0;
    std::vector<Orbit> orbits;

    bool operator==(const CSTriangulation& other) const {
        return n == other.n && orbits == other.orbits;
    }
};

// Non-crossing, exactly one diameter, exactly n orbits, no sides.
bool valid_triangulation(const CSTriangulation& t);

CSTriangulation initial_triangulation(int n);

// Replaces the orbit at `pos` by the unique other orbit completing a CS
// triangulation. flip(flip(t, pos), pos) == t.
CSTriangulation flip(const CSTriangulation& t, int pos);

// Seed of Definition dCn (n >= 2) or the rank-1 convention (n = 1).
GenSeed typec_initial_seed(int n);

// Expansion context: orbit -> Laurent expansion in the initial cluster,
// computed once by a lockstep BFS over (triangulation, seed) pairs.
class TypeCModel {
public:
    explicit TypeCModel(int n);

    int n() const { return n_; }
    const GenSeed& initial_seed() const { return seed0_; }
    size_t num_triangulations() const { return num_triangulations_; }

    // Sides give 1. Every genuine orbit is reachable in finite type.
    LaurentPoly variable_expansion(const Orbit& o) const;
    LaurentPoly lambda() const;  // the coefficient generator as a LaurentPoly

    // All non-side orbits, sorted.
    const std::vector<Orbit>& all_orbits() const { return all_orbits_; }

    // x_orb * x_orb' = rhs for the flip at `pos` of t; checks the identity.
    struct ExchangeIdentity {
        Orbit out, in;
        LaurentPoly lhs, rhs;
    };
    ExchangeIdentity exchange_relation(const CSTriangulation& t, int pos) const;

    // --- small-variable basis machinery ---

    // Table with the n+1 small variables s_k = x_{2k,2k+4}, k in [0, n].
    const VarTablePtr& small_table() const { return small_table_; }
    Orbit small_orbit(int k) const;  // the orbit of s_k

    // Polynomial in the small variables; input orbit may be any orbit or a side.
    LaurentPoly express_in_small(const Orbit& o) const;
    LaurentPoly lambda_in_small() const;

    // A monomial of M: lambda^e * prod orbits^mult (orbits pairwise non-crossing).
    struct ClusterMonomial {
        long long e = 0;
        std::map<Orbit, long long> mult;

        bool operator==(const ClusterMonomial& other) const {
            return e == other.e && mult == other.mult;
        }
    };
    long long degree(const ClusterMonomial& m) const;  // (n+1)e + sum mult*CardO

    Mono phi(const ClusterMonomial& m) const;   // throws on crossing orbits
    ClusterMonomial psi(const Mono& s) const;   // total on monomials in smalls

    LaurentPoly expand(const ClusterMonomial& m) const;  // in initial variables
    LaurentPoly expand_in_small(const ClusterMonomial& m) const;

    // All elements of M_0 (e = 0) with degree <= bound, deterministic order.
    std::vector<ClusterMonomial> cluster_monomials(long long bound) const;

private:
    int n_;
    GenSeed seed0_;
    size_t num_triangulations_ = 0;
    std::vector<Orbit> all_orbits_;
    std::map<Orbit, LaurentPoly> expansion_;
    VarTablePtr small_table_;
    mutable std::map<Orbit, LaurentPoly> small_cache_;
};

// Chebyshev-like polynomials: S_0 = 1, S_1 = u, S_{k+1} = u S_k - S_{k-1},
// evaluated at the polynomial u.
LaurentPoly chebyshev_S(int k, const LaurentPoly& u);

// The basis B = {S_k(lambda) * m, m in M_0} up to degree bound, expanded in
// the initial variables, sorted and checked pairwise distinct.
std::vector<LaurentPoly> basis_B(const TypeCModel& model, long long bound);

}  // namespace gencluster
