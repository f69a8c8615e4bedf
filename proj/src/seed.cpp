#include "gencluster/seed.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace gencluster {

namespace {

using Rational = std::pair<Int, Int>;  // num/den, den > 0

Rational reduce(Int num, Int den) {
    if (den < 0) { num = -num; den = -den; }
    Int g = boost::multiprecision::gcd(boost::multiprecision::abs(num), den);
    if (g > 1) { num /= g; den /= g; }
    return {num, den};
}

}  // namespace

ValidationReport validate(const ExchangeMatrix& B) {
    ValidationReport r;
    const int n = B.n;

    r.column_divisible = true;
    for (int k = 0; k < n; ++k) {
        if (k >= static_cast<int>(B.d.size()) || B.d[k] <= 0) {
            r.column_divisible = false;
            r.failures.push_back("d[" + std::to_string(k + 1) + "] not positive");
            continue;
        }
        for (int j = 0; j < n; ++j)
            if (B.b[j][k] % B.d[k] != 0) {
                r.column_divisible = false;
                r.failures.push_back("d[" + std::to_string(k + 1) + "] does not divide b[" +
                                     std::to_string(j + 1) + "][" + std::to_string(k + 1) + "]");
            }
    }

    // Propagate the ratio dt_j/dt_i = -b_ij/b_ji over nonzero entries.
    std::vector<Rational> dt(n, {Int(0), Int(1)});
    std::vector<int> comp(n, -1);
    bool ok = true;
    for (int s = 0; s < n && ok; ++s) {
        if (comp[s] >= 0) continue;
        dt[s] = {Int(1), Int(1)};
        comp[s] = s;
        std::deque<int> q{s};
        while (!q.empty() && ok) {
            int i = q.front();
            q.pop_front();
            for (int j = 0; j < n; ++j) {
                bool zi = B.b[i][j] == 0, zj = B.b[j][i] == 0;
                if (zi && zj) continue;
                if (zi != zj || (B.b[i][j] > 0) == (B.b[j][i] > 0)) {
                    ok = false;
                    r.failures.push_back("sign pattern violation at (" + std::to_string(i + 1) +
                                         "," + std::to_string(j + 1) + ")");
                    break;
                }
                // dt_i * b_ij = -dt_j * b_ji
                Rational want = reduce(dt[i].first * Int(-B.b[i][j]), dt[i].second * Int(B.b[j][i]));
                if (want.first <= 0) {
                    ok = false;
                    r.failures.push_back("no positive symmetrizer");
                    break;
                }
                if (comp[j] < 0) {
                    comp[j] = comp[s];
                    dt[j] = want;
                    q.push_back(j);
                } else if (dt[j] != want) {
                    ok = false;
                    r.failures.push_back("inconsistent symmetrizer ratios");
                    break;
                }
            }
        }
    }
    if (ok) {
        Int lcm_den = 1;
        for (int i = 0; i < n; ++i) lcm_den = boost::multiprecision::lcm(lcm_den, dt[i].second);
        std::vector<Int> scaled(n);
        Int g = 0;
        for (int i = 0; i < n; ++i) {
            scaled[i] = dt[i].first * (lcm_den / dt[i].second);
            g = boost::multiprecision::gcd(g, scaled[i]);
        }
        r.symmetrizer.resize(n);
        for (int i = 0; i < n; ++i)
            r.symmetrizer[i] = static_cast<long long>(scaled[i] / (g == 0 ? Int(1) : g));
        r.skew_symmetrizable = true;
    }
    return r;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& B, int k) {
    const int n = B.n;
    if (k < 0 || k >= n) throw std::out_of_range("mutation index out of range");
    ExchangeMatrix out = B;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == k || j == k)
                out.b[i][j] = -B.b[i][j];
            else
                out.b[i][j] = B.b[i][j] +
                              (std::abs(B.b[i][k]) * B.b[k][j] + B.b[i][k] * std::abs(B.b[k][j])) / 2;
        }
    return out;
}

TropMonomial TropMonomial::operator*(const TropMonomial& other) const {
    TropMonomial out = *this;
    for (size_t i = 0; i < out.exps.size(); ++i) out.exps[i] += other.exps[i];
    return out;
}

TropMonomial TropMonomial::pow(long long k) const {
    TropMonomial out = *this;
    for (auto& e : out.exps) e *= k;
    return out;
}

TropMonomial trop_add(const TropMonomial& a, const TropMonomial& b) {
    TropMonomial out = a;
    for (size_t i = 0; i < out.exps.size(); ++i) out.exps[i] = std::min(out.exps[i], b.exps[i]);
    return out;
}

CoeffTuple mutate_coeffs(const CoeffTuple& p, const ExchangeMatrix& B, int k) {
    if (k < 0 || k >= B.n) throw std::out_of_range("mutation index out of range");
    const int m = p.empty() || p[0].empty() ? 0 : static_cast<int>(p[0][0].exps.size());
    CoeffTuple out(p.size());
    // reversal in direction k
    out[k].assign(p[k].rbegin(), p[k].rend());
    for (int i = 0; i < B.n; ++i) {
        if (i == k) continue;
        const long long beta_ki = B.beta(k, i);
        const TropMonomial factor =
            (B.b[k][i] >= 0 ? p[k][B.d[k]] : p[k][0]).pow(beta_ki);
        // ratios p'_{i,r}/p'_{i,r-1}; base fixed by tropical normalization
        std::vector<TropMonomial> cum;
        cum.push_back(TropMonomial::one(m));
        for (size_t r = 1; r < p[i].size(); ++r) {
            TropMonomial ratio = p[i][r] * p[i][r - 1].pow(-1) * factor;
            cum.push_back(cum.back() * ratio);
        }
        TropMonomial norm = cum[0];
        for (const auto& c : cum) norm = trop_add(norm, c);
        out[i].clear();
        for (const auto& c : cum) out[i].push_back(c * norm.pow(-1));
    }
    return out;
}

bool GenSeed::operator==(const GenSeed& other) const {
    return x == other.x && B == other.B && p == other.p;
}

GenSeed initial_seed(const ExchangeMatrix& B, const CoeffTuple& p,
                     std::vector<std::string> var_names,
                     std::vector<std::string> lambda_names) {
    GenSeed s;
    s.B = B;
    s.p = p;
    s.num_lambda = static_cast<int>(lambda_names.size());
    std::vector<std::string> names = std::move(var_names);
    for (auto& l : lambda_names) names.push_back(std::move(l));
    s.table = make_table(std::move(names));
    for (int i = 0; i < B.n; ++i) s.x.push_back(LaurentPoly::variable(s.table, i));
    return s;
}

static LaurentPoly trop_to_poly(const GenSeed& seed, const TropMonomial& t) {
    Mono m;
    for (size_t i = 0; i < t.exps.size(); ++i)
        if (t.exps[i] != 0)
            m.exps.emplace_back(seed.lambda_position(static_cast<int>(i)),
                                static_cast<int>(t.exps[i]));
    return LaurentPoly::monomial(seed.table, m, 1);
}

LaurentPoly exchange_polynomial(const GenSeed& seed, int k,
                                const LaurentPoly& u, const LaurentPoly& v) {
    const long long dk = seed.B.d[k];
    LaurentPoly acc = LaurentPoly::zero(seed.table);
    for (long long r = 0; r <= dk; ++r) {
        LaurentPoly term = trop_to_poly(seed, seed.p[k][r]);
        term *= u.pow(static_cast<unsigned>(r));
        term *= v.pow(static_cast<unsigned>(dk - r));
        acc += term;
    }
    return acc;
}

std::pair<LaurentPoly, LaurentPoly> exchange_monomials(const GenSeed& seed, int k) {
    LaurentPoly up = LaurentPoly::constant(seed.table, 1);
    LaurentPoly um = LaurentPoly::constant(seed.table, 1);
    for (int j = 0; j < seed.rank(); ++j) {
        long long bj = seed.B.beta(j, k);
        if (bj > 0) up *= seed.x[j].pow(static_cast<unsigned>(bj));
        if (bj < 0) um *= seed.x[j].pow(static_cast<unsigned>(-bj));
    }
    return {up, um};
}

GenSeed mutate(const GenSeed& seed, int k) {
    if (k < 0 || k >= seed.rank()) throw std::out_of_range("mutation index out of range");
    auto [up, um] = exchange_monomials(seed, k);
    LaurentPoly theta = exchange_polynomial(seed, k, up, um);
    GenSeed out = seed;
    out.x[k] = theta.divide_exact(seed.x[k]);
    out.B = mutate_matrix(seed.B, k);
    out.p = mutate_coeffs(seed.p, seed.B, k);
    return out;
}

std::string cluster_key(const std::vector<LaurentPoly>& x) {
    std::vector<std::string> parts;
    parts.reserve(x.size());
    for (const auto& xi : x) parts.push_back(xi.to_string());
    std::sort(parts.begin(), parts.end());
    std::string key;
    for (const auto& p : parts) {
        key += p;
        key += ';';
    }
    return key;
}

const ExchangeGraph::Node* ExchangeGraph::find(const std::string& key) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), key,
                               [](const Node& n, const std::string& k) { return n.key < k; });
    return it != nodes.end() && it->key == key ? &*it : nullptr;
}

ExchangeGraph enumerate_exchange_graph(const GenSeed& seed, EnumerateLimits limits) {
    ExchangeGraph g;
    std::map<std::string, GenSeed> seen;
    std::set<std::pair<std::string, std::string>> edge_set;
    std::deque<std::pair<std::string, int>> frontier;  // key, depth

    std::string key0 = cluster_key(seed.x);
    seen.emplace(key0, seed);
    frontier.emplace_back(key0, 0);
    g.complete = true;

    std::vector<ExchangeGraph::Edge> edges;
    while (!frontier.empty()) {
        auto [key, depth] = frontier.front();
        frontier.pop_front();
        if (depth >= limits.max_depth) {
            g.complete = false;
            continue;
        }
        GenSeed current = seen.at(key);
        for (int k = 0; k < current.rank(); ++k) {
            GenSeed next = mutate(current, k);
            std::string nkey = cluster_key(next.x);
            auto [a, b] = std::minmax(key, nkey);
            if (edge_set.emplace(a, b).second)
                edges.push_back({a, b, k});
            if (!seen.count(nkey)) {
                if (seen.size() >= limits.max_nodes) {
                    g.complete = false;
                    continue;
                }
                seen.emplace(nkey, std::move(next));
                frontier.emplace_back(nkey, depth + 1);
            }
        }
    }

    std::set<std::string> variables;
    for (auto& [key, s] : seen) {
        for (const auto& xi : s.x) variables.insert(xi.to_string());
        g.nodes.push_back({key, std::move(s)});
    }
    g.num_variables = variables.size();
    std::sort(edges.begin(), edges.end(), [](const auto& e1, const auto& e2) {
        return std::tie(e1.from, e1.to, e1.direction) < std::tie(e2.from, e2.to, e2.direction);
    });
    g.edges = std::move(edges);
    return g;
}

LaurentCheckReport check_laurent(const GenSeed& seed, const std::vector<int>& sequence) {
    LaurentCheckReport r;
    GenSeed current = seed;
    for (int k : sequence) {
        try {
            current = mutate(current, k);
            r.support_sizes.push_back(current.x[k].num_terms());
        } catch (const LaurentError&) {
            r.all_exact = false;
            break;
        }
    }
    return r;
}

nlohmann::json seed_to_json(const GenSeed& seed) {
    nlohmann::json j;
    j["rank"] = seed.rank();
    j["B"] = seed.B.b;
    j["d"] = seed.B.d;
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& tuple : seed.p) {
        nlohmann::json t = nlohmann::json::array();
        for (const auto& mono : tuple) t.push_back(mono.exps);
        coeffs.push_back(std::move(t));
    }
    j["coeffs"] = std::move(coeffs);
    std::vector<std::string> lambdas;
    for (int i = 0; i < seed.num_lambda; ++i)
        lambdas.push_back(seed.table->name(seed.lambda_position(i)));
    j["lambda_vars"] = lambdas;
    nlohmann::json cluster = nlohmann::json::array();
    for (const auto& xi : seed.x) cluster.push_back(xi.to_json());
    j["cluster"] = std::move(cluster);
    return j;
}

GenSeed seed_from_json(const nlohmann::json& j) {
    ExchangeMatrix B;
    B.n = j.at("rank").get<int>();
    B.b = j.at("B").get<std::vector<std::vector<long long>>>();
    B.d = j.at("d").get<std::vector<long long>>();
    CoeffTuple p;
    for (const auto& tuple : j.at("coeffs")) {
        std::vector<TropMonomial> t;
        for (const auto& mono : tuple) t.push_back({mono.get<std::vector<long long>>()});
        p.push_back(std::move(t));
    }
    std::vector<std::string> lambdas = j.at("lambda_vars").get<std::vector<std::string>>();
    std::vector<std::string> vars;
    if (j.contains("var_names")) {
        vars = j.at("var_names").get<std::vector<std::string>>();
    } else {
        for (int i = 1; i <= B.n; ++i) vars.push_back("x" + std::to_string(i));
    }
    GenSeed s = initial_seed(B, p, std::move(vars), std::move(lambdas));
    if (j.contains("cluster")) {
        s.x.clear();
        for (const auto& xj : j.at("cluster")) {
            LaurentPoly xi = LaurentPoly::from_json(xj);
            std::map<int, LaurentPoly> rebind;  // re-anchor onto the seed table
            for (int v = 0; v < xi.table()->size(); ++v) {
                int pos = s.table->index(xi.table()->name(v));
                if (pos < 0) throw LaurentError("cluster variable over wrong table");
                rebind.emplace(v, LaurentPoly::variable(s.table, pos));
            }
            s.x.push_back(xi.substitute(rebind, s.table));
        }
    }
    return s;
}

std::string graph_to_dot(const ExchangeGraph& g) {
    std::ostringstream os;
    os << "graph exchange {\n";
    std::map<std::string, size_t> ids;
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        ids[g.nodes[i].key] = i;
        std::vector<std::string> labels;
        for (const auto& xi : g.nodes[i].seed.x) labels.push_back(xi.to_string());
        std::sort(labels.begin(), labels.end());
        os << "  n" << i << " [label=\"";
        for (size_t t = 0; t < labels.size(); ++t) {
            if (t) os << "\\n";
            for (char c : labels[t])
                if (c == '"') os << "\\\""; else os << c;
        }
        os << "\"];\n";
    }
    for (const auto& e : g.edges)
        os << "  n" << ids.at(e.from) << " -- n" << ids.at(e.to)
           << " [label=\"" << (e.direction + 1) << "\"];\n";
    os << "}\n";
    return os.str();
}

nlohmann::json graph_to_json(const ExchangeGraph& g) {
    nlohmann::json j;
    j["complete"] = g.complete;
    j["num_nodes"] = g.nodes.size();
    j["num_variables"] = g.num_variables;
    nlohmann::json nodes = nlohmann::json::array();
    std::map<std::string, size_t> ids;
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        ids[g.nodes[i].key] = i;
        std::vector<std::string> labels;
        for (const auto& xi : g.nodes[i].seed.x) labels.push_back(xi.to_string());
        std::sort(labels.begin(), labels.end());
        nodes.push_back({{"id", i}, {"cluster", labels}});
    }
    j["nodes"] = std::move(nodes);
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges)
        edges.push_back({{"from", ids.at(e.from)}, {"to", ids.at(e.to)}, {"direction", e.direction + 1}});
    j["edges"] = std::move(edges);
    return j;
}

}  // namespace gencluster
