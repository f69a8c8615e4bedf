#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gencluster/laurent.hpp"

namespace gencluster {

// Skew-symmetrizable exchange matrix with column divisors d.
struct ExchangeMatrix {
    int n = 0;
    std::vector<std::vector<long long>> b;  // n x n
    std::vector<long long> d;               // positive, d[k] | b[j][k] for all j

    long long beta(int j, int k) const { return b[j][k] / d[k]; }
    bool operator==(const ExchangeMatrix& other) const {
        return n == other.n && b == other.b && d == other.d;
    }
};

struct ValidationReport {
    bool skew_symmetrizable = false;
    bool column_divisible = false;
    std::vector<long long> symmetrizer;  // D-tilde witness when skew-symmetrizable
    std::vector<std::string> failures;

    bool ok() const { return skew_symmetrizable && column_divisible; }
};

ValidationReport validate(const ExchangeMatrix& B);

// Mutation rule for the matrix alone; d is carried over unchanged.
ExchangeMatrix mutate_matrix(const ExchangeMatrix& B, int k);

// Exponent vector over the tropical generators lambda_1..lambda_m.
struct TropMonomial {
    std::vector<long long> exps;

    static TropMonomial one(int m) { return TropMonomial{std::vector<long long>(m, 0)}; }
    TropMonomial operator*(const TropMonomial& other) const;
    TropMonomial pow(long long k) const;
    bool operator==(const TropMonomial& other) const { return exps == other.exps; }
};

// Tropical sum: componentwise minimum.
TropMonomial trop_add(const TropMonomial& a, const TropMonomial& b);

// One tuple per direction; tuple i has length d[i]+1.
using CoeffTuple = std::vector<std::vector<TropMonomial>>;

CoeffTuple mutate_coeffs(const CoeffTuple& p, const ExchangeMatrix& B, int k);

// Generalised seed. Cluster variables are Laurent polynomials over a table
// holding the initial variables followed by the tropical generators.
struct GenSeed {
    std::vector<LaurentPoly> x;
    ExchangeMatrix B;
    CoeffTuple p;
    VarTablePtr table;   // initial vars then lambda generators
    int num_lambda = 0;  // trailing lambda positions in table

    int rank() const { return B.n; }
    int lambda_position(int i) const { return table->size() - num_lambda + i; }

    bool operator==(const GenSeed& other) const;
};

// Seed with x_i = t_i over a fresh table {var_names..., lambda_names...}.
GenSeed initial_seed(const ExchangeMatrix& B, const CoeffTuple& p,
                     std::vector<std::string> var_names,
                     std::vector<std::string> lambda_names);

// Exchange polynomial value theta_k[p_k](u, v) in the seed's ring.
LaurentPoly exchange_polynomial(const GenSeed& seed, int k,
                                const LaurentPoly& u, const LaurentPoly& v);

// The monomials u_k^+ / u_k^- of the mutation rule.
std::pair<LaurentPoly, LaurentPoly> exchange_monomials(const GenSeed& seed, int k);

GenSeed mutate(const GenSeed& seed, int k);

// Canonical key identifying a cluster as an unordered set of variables.
std::string cluster_key(const std::vector<LaurentPoly>& x);

struct ExchangeGraph {
    struct Node {
        std::string key;
        GenSeed seed;
    };
    struct Edge {
        std::string from, to;
        int direction;
    };
    std::vector<Node> nodes;  // sorted by key
    std::vector<Edge> edges;  // deduplicated, sorted
    bool complete = false;    // closure finished within limits
    size_t num_variables = 0; // distinct cluster variables over all nodes

    const Node* find(const std::string& key) const;
};

struct EnumerateLimits {
    size_t max_nodes = 100000;
    int max_depth = 64;
};

ExchangeGraph enumerate_exchange_graph(const GenSeed& seed, EnumerateLimits limits = {});

struct LaurentCheckReport {
    bool all_exact = true;
    std::vector<size_t> support_sizes;  // per step, size of the new variable
};

// Applies the sequence (0-based directions); divide_exact failures are the finding.
LaurentCheckReport check_laurent(const GenSeed& seed, const std::vector<int>& sequence);

nlohmann::json seed_to_json(const GenSeed& seed);
GenSeed seed_from_json(const nlohmann::json& j);

std::string graph_to_dot(const ExchangeGraph& g);
nlohmann::json graph_to_json(const ExchangeGraph& g);

}  // namespace gencluster
