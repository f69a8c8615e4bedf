#include "gencluster/typec.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gencluster {

namespace {

int mod(int v, int N) { return ((v % N) + N) % N; }

// All diagonals of the orbit, as vertex pairs.
std::vector<std::pair<int, int>> orbit_diagonals(int n, const Orbit& o) {
    const int N = 4 * n + 4;
    std::vector<std::pair<int, int>> out;
    out.emplace_back(o.a, mod(o.a + 2 * o.m, N));
    if (o.m <= n) out.emplace_back(mod(o.a + 2 * n + 2, N), mod(o.a + 2 * o.m + 2 * n + 2, N));
    return out;
}

bool chords_cross(int n, std::pair<int, int> d1, std::pair<int, int> d2) {
    const int N = 4 * n + 4;
    if (d1.first == d2.first || d1.first == d2.second || d1.second == d2.first ||
        d1.second == d2.second)
        return false;
    // strict interleaving on the circle
    auto inside = [&](int v, int from, int to) {
        // v strictly inside the arc from->to walking in +direction
        return mod(v - from, N) > 0 && mod(v - from, N) < mod(to - from, N);
    };
    return inside(d2.first, d1.first, d1.second) != inside(d2.second, d1.first, d1.second);
}

}  // namespace

int bar_vertex(int v, int n) { return mod(v + 2 * n + 2, 4 * n + 4); }

Orbit make_orbit(int n, int a, int b) {
    const int N = 4 * n + 4;
    a = mod(a, N);
    b = mod(b, N);
    if (a % 2 != 0 || b % 2 != 0) throw std::invalid_argument("vertices must be even");
    if (a == b) throw std::invalid_argument("degenerate diagonal");
    int m = mod(b - a, N) / 2;
    if (m > n + 1) {
        std::swap(a, b);
        m = (2 * n + 2) - m;
    }
    Orbit o{a, m};
    if (m <= n + 1) {
        int a2 = mod(a + 2 * n + 2, N);
        if (a2 < o.a) o.a = a2;
    }
    return o;
}

std::string orbit_to_string(const Orbit& o, int n) {
    const int N = 4 * n + 4;
    auto vname = [&](int v) {
        if (v <= 2 * n) return std::to_string(v);
        return std::to_string(v - (2 * n + 2)) + "~";
    };
    return "x_{" + vname(o.a) + "," + vname(mod(o.a + 2 * o.m, N)) + "}";
}

Orbit orbit_from_string(int n, const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("orbit syntax: a,b");
    auto parse = [&](std::string part) {
        bool barred = !part.empty() && part.back() == '~';
        if (barred) part.pop_back();
        int v = std::stoi(part);
        return barred ? bar_vertex(v, n) : mod(v, 4 * n + 4);
    };
    return make_orbit(n, parse(text.substr(0, comma)), parse(text.substr(comma + 1)));
}

bool crossing(int n, const Orbit& o1, const Orbit& o2) {
    if (o1 == o2) return false;
    for (auto d1 : orbit_diagonals(n, o1))
        for (auto d2 : orbit_diagonals(n, o2))
            if (chords_cross(n, d1, d2)) return true;
    return false;
}

bool valid_triangulation(const CSTriangulation& t) {
    if (static_cast<int>(t.orbits.size()) != t.n) return false;
    int diameters = 0;
    for (size_t i = 0; i < t.orbits.size(); ++i) {
        if (is_side(t.orbits[i])) return false;
        if (is_diameter(t.orbits[i], t.n)) ++diameters;
        for (size_t j = i + 1; j < t.orbits.size(); ++j) {
            if (t.orbits[i] == t.orbits[j]) return false;
            if (crossing(t.n, t.orbits[i], t.orbits[j])) return false;
        }
    }
    return diameters == 1;
}

CSTriangulation initial_triangulation(int n) {
    CSTriangulation t;
    t.n = n;
    for (int k = 1; k <= n; ++k) t.orbits.push_back(make_orbit(n, bar_vertex(2 * n, n), 2 * k));
    if (!valid_triangulation(t)) throw std::logic_error("initial triangulation invalid");
    return t;
}

static std::vector<Orbit> enumerate_orbits(int n) {
    std::set<Orbit> out;
    const int N = 4 * n + 4;
    for (int a = 0; a < N; a += 2)
        for (int m = 2; m <= n + 1; ++m) out.insert(make_orbit(n, a, a + 2 * m));
    return {out.begin(), out.end()};
}

CSTriangulation flip(const CSTriangulation& t, int pos) {
    if (pos < 0 || pos >= t.n) throw std::out_of_range("flip position out of range");
    CSTriangulation out = t;
    const Orbit old = t.orbits[pos];
    std::vector<Orbit> matches;
    for (const Orbit& c : enumerate_orbits(t.n)) {
        if (c == old) continue;
        out.orbits[pos] = c;
        if (valid_triangulation(out)) matches.push_back(c);
    }
    if (matches.size() != 1) throw std::logic_error("flip replacement not unique");
    out.orbits[pos] = matches[0];
    return out;
}

GenSeed typec_initial_seed(int n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    ExchangeMatrix B;
    B.n = n;
    B.b.assign(n, std::vector<long long>(n, 0));
    for (int i = 0; i + 1 < n; ++i) {
        B.b[i][i + 1] = (i + 2 == n) ? 2 : 1;
        B.b[i + 1][i] = -1;
    }
    B.d.assign(n, 1);
    B.d[n - 1] = 2;
    CoeffTuple p(n);
    for (int i = 0; i + 1 < n; ++i) p[i] = {TropMonomial::one(1), TropMonomial::one(1)};
    p[n - 1] = {TropMonomial::one(1), TropMonomial{{1}}, TropMonomial::one(1)};
    std::vector<std::string> vars;
    for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    return initial_seed(B, p, vars, {"lambda"});
}

TypeCModel::TypeCModel(int n) : n_(n), seed0_(typec_initial_seed(n)) {
    all_orbits_ = enumerate_orbits(n);
    small_table_ = [&] {
        std::vector<std::string> names;
        for (int k = 0; k <= n; ++k) names.push_back("s" + std::to_string(k));
        return make_table(names);
    }();

    // Lockstep BFS: position i of the triangulation corresponds to direction i
    // of the seed, so flips and mutations stay aligned.
    CSTriangulation t0 = initial_triangulation(n);
    auto tri_key = [](const CSTriangulation& t) {
        std::vector<Orbit> sorted = t.orbits;
        std::sort(sorted.begin(), sorted.end());
        std::string key;
        for (const Orbit& o : sorted)
            key += std::to_string(o.a) + ":" + std::to_string(o.m) + ";";
        return key;
    };
    std::map<std::string, std::pair<CSTriangulation, GenSeed>> seen;
    std::deque<std::string> frontier;
    auto record = [&](const CSTriangulation& t, const GenSeed& s) {
        for (int i = 0; i < n_; ++i) {
            auto [it, inserted] = expansion_.emplace(t.orbits[i], s.x[i]);
            if (!inserted && !(it->second == s.x[i]))
                throw std::logic_error("orbit labelling inconsistent with mutation");
        }
    };
    std::string key0 = tri_key(t0);
    seen.emplace(key0, std::make_pair(t0, seed0_));
    frontier.push_back(key0);
    record(t0, seed0_);
    while (!frontier.empty()) {
        auto [t, s] = seen.at(frontier.front());
        frontier.pop_front();
        for (int i = 0; i < n_; ++i) {
            CSTriangulation t2 = flip(t, i);
            std::string key = tri_key(t2);
            if (seen.count(key)) continue;
            GenSeed s2 = mutate(s, i);
            record(t2, s2);
            seen.emplace(key, std::make_pair(std::move(t2), std::move(s2)));
            frontier.push_back(key);
        }
    }
    num_triangulations_ = seen.size();
    for (const Orbit& o : all_orbits_)
        if (!expansion_.count(o)) throw std::logic_error("orbit unreachable by flips");
}

LaurentPoly TypeCModel::variable_expansion(const Orbit& o) const {
    if (is_side(o)) return LaurentPoly::constant(seed0_.table, 1);
    auto it = expansion_.find(o);
    if (it == expansion_.end()) throw std::invalid_argument("unknown orbit");
    return it->second;
}

LaurentPoly TypeCModel::lambda() const {
    return LaurentPoly::variable(seed0_.table, seed0_.lambda_position(0));
}

TypeCModel::ExchangeIdentity TypeCModel::exchange_relation(const CSTriangulation& t,
                                                           int pos) const {
    const int N = 4 * n_ + 4;
    CSTriangulation t2 = flip(t, pos);
    ExchangeIdentity id;
    id.out = t.orbits[pos];
    id.in = t2.orbits[pos];
    id.lhs = variable_expansion(id.out) * variable_expansion(id.in);

    auto x = [&](int a, int b) -> LaurentPoly {
        if (mod(b - a, N) == 0) throw std::logic_error("degenerate label");
        return variable_expansion(make_orbit(n_, a, b));
    };

    if (is_diameter(id.out, n_)) {
        // gexc2: x_{u,ubar} x_{w,wbar} = x_{u,w}^2 + x_{u,wbar}^2
        //        + lambda x_{u,w} x_{u,wbar}
        int u = id.out.a;
        int w = id.in.a;
        LaurentPoly xw = x(u, w);
        LaurentPoly xwb = x(u, bar_vertex(w, n_));
        id.rhs = xw * xw + xwb * xwb + lambda() * xw * xwb;
        if (!(id.lhs == id.rhs)) throw std::logic_error("gexc2 identity failed");
        return id;
    }

    // Ptolemy in the quadrilateral of one copy of the flipped diagonal. The
    // edges of the triangulation are all sides plus all orbit diagonals.
    std::set<std::pair<int, int>> edges;
    auto add_edge = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        edges.emplace(a, b);
    };
    for (int v = 0; v < N; v += 2) add_edge(v, mod(v + 2, N));
    for (const Orbit& o : t.orbits)
        for (auto [a, b] : orbit_diagonals(n_, o)) add_edge(a, b);
    auto has_edge = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        return edges.count({a, b}) > 0;
    };
    auto [a, c] = orbit_diagonals(n_, id.out)[0];
    std::vector<int> adj;
    for (int w = 0; w < N; w += 2)
        if (w != a && w != c && has_edge(a, w) && has_edge(w, c)) adj.push_back(w);
    if (adj.size() != 2) throw std::logic_error("quadrilateral not found");
    int b = adj[0], d = adj[1];
    // order the quadrilateral a, b, c, d cyclically
    if (!(mod(b - a, N) < mod(c - a, N))) std::swap(b, d);
    if (!(make_orbit(n_, b, d) == id.in))
        throw std::logic_error("flip quadrilateral mismatch");
    id.rhs = x(a, b) * x(c, d) + x(b, c) * x(d, a);
    if (!(id.lhs == id.rhs)) throw std::logic_error("gexc1 identity failed");
    return id;
}

Orbit TypeCModel::small_orbit(int k) const { return make_orbit(n_, 2 * k, 2 * k + 4); }

LaurentPoly TypeCModel::express_in_small(const Orbit& o) const {
    if (is_side(o)) return LaurentPoly::constant(small_table_, 1);
    auto it = small_cache_.find(o);
    if (it != small_cache_.end()) return it->second;
    LaurentPoly result(small_table_);
    if (is_small(o)) {
        int k = mod(o.a, 2 * n_ + 2) / 2;
        result = LaurentPoly::variable(small_table_, k);
    } else {
        // x_{a,a+2m} = s(a+2m-4) * x_{a,a+2m-2} - x_{a,a+2m-4}
        const int N = 4 * n_ + 4;
        int k = mod(mod(o.a + 2 * o.m - 4, N), 2 * n_ + 2) / 2;
        LaurentPoly s = LaurentPoly::variable(small_table_, k);
        result = s * express_in_small(make_orbit(n_, o.a, o.a + 2 * o.m - 2)) -
                 express_in_small(make_orbit(n_, o.a, o.a + 2 * o.m - 4));
    }
    small_cache_.emplace(o, result);
    return result;
}

LaurentPoly TypeCModel::lambda_in_small() const {
    // lambda = x_{bar(2n),2n} x_{2n-2,bar(0)} - x_{bar(0),bar(2n)} - x_{bar(2n),2n-2}
    const int b2n = bar_vertex(2 * n_, n_), b0 = bar_vertex(0, n_);
    return express_in_small(make_orbit(n_, b2n, 2 * n_)) *
               express_in_small(make_orbit(n_, 2 * n_ - 2, b0)) -
           express_in_small(make_orbit(n_, b0, b2n)) -
           express_in_small(make_orbit(n_, b2n, 2 * n_ - 2));
}

long long TypeCModel::degree(const ClusterMonomial& m) const {
    long long d = (n_ + 1) * m.e;
    for (const auto& [o, mult] : m.mult) d += mult * card_O(o);
    return d;
}

Mono TypeCModel::phi(const ClusterMonomial& m) const {
    const int N = 4 * n_ + 4;
    for (auto it = m.mult.begin(); it != m.mult.end(); ++it)
        for (auto jt = std::next(it); jt != m.mult.end(); ++jt)
            if (crossing(n_, it->first, jt->first))
                throw std::invalid_argument("crossing orbits in cluster monomial");
    std::vector<long long> exps(n_ + 1, m.e);  // lambda^e -> product of all smalls
    for (const auto& [o, mult] : m.mult) {
        // O_ab: vertices a+2, ..., a+2m-2, each taken mod 2n+2 as orbit label 2k
        for (int t = 1; t < o.m; ++t) {
            int k = mod(mod(o.a + 2 * t, N), 2 * n_ + 2) / 2;
            exps[mod(k - 1, n_ + 1)] += mult;  // small s_{k-1} = x_{2k-2,2k+2}
        }
    }
    Mono out;
    for (int k = 0; k <= n_; ++k)
        if (exps[k] != 0) out.exps.emplace_back(k, static_cast<int>(exps[k]));
    return out;
}

TypeCModel::ClusterMonomial TypeCModel::psi(const Mono& s) const {
    // multiset heights over cyclic positions 0..n (position p <-> small s_p,
    // value 2p+2). Segments are cyclic value intervals: diameters wrap.
    const int P = n_ + 1;
    std::vector<long long> h(P, 0);
    for (const auto& [pos, e] : s.exps) {
        if (pos < 0 || pos >= P || e < 0) throw std::invalid_argument("not a small monomial");
        h[pos] = e;
    }
    ClusterMonomial out;
    long long r = h[0];
    for (int p = 0; p < P; ++p) r = std::min(r, h[p]);
    out.e = r;  // maximal segments removed first
    for (int p = 0; p < P; ++p) h[p] -= r;
    // skyline: maximal cyclic level intervals are pairwise in generic position
    long long maxh = 0;
    for (int p = 0; p < P; ++p) maxh = std::max(maxh, h[p]);
    for (long long level = 1; level <= maxh; ++level) {
        // at least one position has h < level, so runs are proper cyclic arcs
        for (int start = 0; start < P; ++start) {
            if (h[start] < level || h[(start + P - 1) % P] >= level) continue;
            int len = 1;
            while (h[(start + len) % P] >= level) ++len;
            out.mult[make_orbit(n_, 2 * start, 2 * start + 2 * (len + 1))] += 1;
        }
    }
    return out;
}

LaurentPoly TypeCModel::expand(const ClusterMonomial& m) const {
    LaurentPoly out = lambda().pow(static_cast<unsigned>(m.e));
    for (const auto& [o, mult] : m.mult)
        out *= variable_expansion(o).pow(static_cast<unsigned>(mult));
    return out;
}

LaurentPoly TypeCModel::expand_in_small(const ClusterMonomial& m) const {
    LaurentPoly out = lambda_in_small().pow(static_cast<unsigned>(m.e));
    for (const auto& [o, mult] : m.mult)
        out *= express_in_small(o).pow(static_cast<unsigned>(mult));
    return out;
}

std::vector<TypeCModel::ClusterMonomial> TypeCModel::cluster_monomials(long long bound) const {
    std::vector<ClusterMonomial> out;
    ClusterMonomial current;
    // backtracking over the sorted orbit list; compatibility = non-crossing
    std::function<void(size_t, long long)> rec = [&](size_t idx, long long deg) {
        if (idx == all_orbits_.size()) {
            out.push_back(current);
            return;
        }
        rec(idx + 1, deg);
        const Orbit& o = all_orbits_[idx];
        for (const auto& [other, mult] : current.mult)
            if (crossing(n_, o, other)) return;
        long long step = card_O(o);
        long long added = 0;
        while (deg + added + step <= bound) {
            added += step;
            current.mult[o] += 1;
            rec(idx + 1, deg + added);
        }
        if (added > 0) current.mult.erase(o);
    };
    rec(0, 0);
    std::sort(out.begin(), out.end(), [&](const ClusterMonomial& a, const ClusterMonomial& b) {
        long long da = degree(a), db = degree(b);
        if (da != db) return da < db;
        std::vector<std::tuple<int, int, long long>> ka, kb;
        for (auto& [o, m] : a.mult) ka.emplace_back(o.m, o.a, m);
        for (auto& [o, m] : b.mult) kb.emplace_back(o.m, o.a, m);
        return ka < kb;
    });
    return out;
}

LaurentPoly chebyshev_S(int k, const LaurentPoly& u) {
    LaurentPoly prev = LaurentPoly::constant(u.table(), 1);
    if (k == 0) return prev;
    LaurentPoly cur = u;
    for (int i = 1; i < k; ++i) {
        LaurentPoly next = u * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<LaurentPoly> basis_B(const TypeCModel& model, long long bound) {
    std::vector<LaurentPoly> out;
    LaurentPoly lam = model.lambda();
    const long long np1 = model.n() + 1;
    for (long long k = 0; k * np1 <= bound; ++k) {
        LaurentPoly sk = chebyshev_S(static_cast<int>(k), lam);
        for (const auto& m : model.cluster_monomials(bound - k * np1))
            out.push_back(sk * model.expand(m));
    }
    std::sort(out.begin(), out.end(), [](const LaurentPoly& a, const LaurentPoly& b) {
        return a.to_string() < b.to_string();
    });
    for (size_t i = 0; i + 1 < out.size(); ++i)
        if (out[i] == out[i + 1]) throw std::logic_error("basis elements not distinct");
    return out;
}

}  // namespace gencluster
