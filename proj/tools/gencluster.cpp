#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gencluster/seed.hpp"
#include "gencluster/sl2.hpp"
#include "gencluster/sl3.hpp"
#include "gencluster/typec.hpp"
#include "gencluster/verify.hpp"

using namespace gencluster;
using nlohmann::json;

namespace {

bool quiet = false;

void say(const std::string& line) {
    if (!quiet) std::cout << line << "\n";
}

int worker_cap() {
    const char* env = std::getenv("GENCLUSTER_THREADS");
    if (!env) return 1;
    int v = std::atoi(env);
    return v > 0 ? v : 1;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw CLI::ValidationError(path + ": " + e.what());
    }
    return j;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw CLI::ValidationError("cannot open " + path);
    out << content;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep))
        if (!part.empty()) out.push_back(part);
    return out;
}

// 1-based mutation directions "1,2,1" -> 0-based
std::vector<int> parse_sequence(const std::string& text, int rank) {
    std::vector<int> seq;
    for (const auto& tok : split(text, ',')) {
        int k = std::stoi(tok);
        if (k < 1 || k > rank) throw CLI::ValidationError("direction out of range: " + tok);
        seq.push_back(k - 1);
    }
    return seq;
}

Orbit parse_orbit(int n, std::string text) {
    if (text.rfind("x:", 0) == 0) text = text.substr(2);
    return orbit_from_string(n, text);
}

// "lambda^2*0,6*2,8~^3" -> ClusterMonomial
TypeCModel::ClusterMonomial parse_cluster_monomial(int n, const std::string& text) {
    TypeCModel::ClusterMonomial m;
    for (const auto& factor : split(text, '*')) {
        std::string base = factor;
        long long e = 1;
        if (auto caret = factor.rfind('^'); caret != std::string::npos) {
            base = factor.substr(0, caret);
            e = std::stoll(factor.substr(caret + 1));
        }
        if (base == "lambda")
            m.e += e;
        else
            m.mult[parse_orbit(n, base)] += e;
    }
    return m;
}

// "s0^2*s1" -> monomial over the small table
Mono parse_small_monomial(const TypeCModel& model, const std::string& text) {
    Mono s;
    for (const auto& factor : split(text, '*')) {
        std::string base = factor;
        long long e = 1;
        if (auto caret = factor.rfind('^'); caret != std::string::npos) {
            base = factor.substr(0, caret);
            e = std::stoll(factor.substr(caret + 1));
        }
        int pos = model.small_table()->index(base);
        if (pos < 0) throw CLI::ValidationError("unknown small variable: " + base);
        s = s * Mono::var(pos, e);
    }
    return s;
}

void emit_graph(const ExchangeGraph& g, const std::string& dot_path,
                const std::string& json_path) {
    say("clusters: " + std::to_string(g.nodes.size()));
    say("edges: " + std::to_string(g.edges.size()));
    say("variables: " + std::to_string(g.num_variables));
    say(std::string("complete: ") + (g.complete ? "yes" : "no"));
    if (!dot_path.empty()) write_file(dot_path, graph_to_dot(g));
    if (!json_path.empty()) write_file(json_path, graph_to_json(g).dump(2) + "\n");
}

// Walks stop extending once a cluster variable's support passes the cap:
// the conjecture seeds are of infinite type for l > 2 and expansions explode
// along generic deep sequences. Every performed division is checked exactly.
int run_laurent_trials(const GenSeed& seed, int trials, unsigned rng_seed, size_t support_cap) {
    std::mt19937 rng(rng_seed);
    std::uniform_int_distribution<int> len(1, 12);
    std::uniform_int_distribution<int> dir(0, seed.rank() - 1);
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
        std::vector<int> seq(len(rng));
        for (auto& k : seq) k = dir(rng);
        GenSeed s = seed;
        try {
            for (int k : seq) {
                size_t biggest = 0;
                for (const auto& x : s.x) biggest = std::max(biggest, x.terms().size());
                if (support_cap > 0 && biggest > support_cap) break;
                s = mutate(s, k);
            }
        } catch (const std::exception&) {
            ++failures;
        }
    }
    return failures;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized cluster algebras and eps-characters"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--quiet", quiet, "suppress informational output");
    unsigned rng_seed = 12345;
    app.add_option("--rng-seed", rng_seed, "seed for randomized trials");

    // mutate
    auto* mutate_cmd = app.add_subcommand("mutate", "apply a mutation sequence to a seed");
    std::string seed_path, sequence_text, json_path, dot_path;
    mutate_cmd->add_option("--seed", seed_path, "seed JSON file")->required();
    mutate_cmd->add_option("--sequence", sequence_text, "1-based directions, e.g. 1,2,1")
        ->required();
    mutate_cmd->add_option("--json", json_path, "write resulting seed JSON here");

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "exchange-graph closure from a seed");
    EnumerateLimits limits;
    enum_cmd->add_option("--seed", seed_path, "seed JSON file")->required();
    enum_cmd->add_option("--dot", dot_path, "write DOT graph here");
    enum_cmd->add_option("--json", json_path, "write JSON graph here");
    enum_cmd->add_option("--max-nodes", limits.max_nodes, "node cap");
    enum_cmd->add_option("--max-depth", limits.max_depth, "BFS depth cap");

    // typec
    auto* typec_cmd = app.add_subcommand("typec", "type C_n triangulation model");
    int tc_n = 3;
    bool tc_enumerate = false;
    std::string tc_express, tc_phi, tc_psi, tc_basis;
    long long tc_bound = 6;
    typec_cmd->add_option("--n", tc_n, "rank")->required()->check(CLI::PositiveNumber);
    typec_cmd->add_flag("--enumerate", tc_enumerate, "enumerate the exchange graph");
    typec_cmd->add_option("--express-small", tc_express, "orbit like x:0,6 or 2,0~");
    typec_cmd->add_option("--phi", tc_phi, "cluster monomial like lambda^2*0,6*2,8~^3");
    typec_cmd->add_option("--psi", tc_psi, "small monomial like s0^2*s1");
    typec_cmd->add_option("--basis", tc_basis, "basis to list (B)")
        ->check(CLI::IsMember({"B"}));
    typec_cmd->add_option("--bound", tc_bound, "degree bound for --basis");
    typec_cmd->add_option("--json", json_path, "write results here");
    typec_cmd->add_option("--dot", dot_path, "write DOT graph here (with --enumerate)");
    std::string seed_out;
    typec_cmd->add_option("--seed-out", seed_out, "write the initial seed JSON here");

    // sl2
    auto* sl2_cmd = app.add_subcommand("sl2", "sl2 eps-characters at a root of unity");
    int sl2_l = 2;
    sl2_cmd->add_option("--l", sl2_l, "order of eps^2")->required()->check(CLI::Range(2, 64));
    auto* sl2_char = sl2_cmd->add_subcommand("char", "print a character");
    std::string sl2_string;
    bool sl2_z = false;
    long long sl2_frob = -1;
    sl2_char->add_option("--string", sl2_string, "KR string d,k");
    sl2_char->add_flag("--z", sl2_z, "the central character z_1");
    sl2_char->add_option("--frobenius", sl2_frob, "Frobenius power a");
    auto* sl2_dec = sl2_cmd->add_subcommand("decompose", "decompose a product of simples");
    std::string labels_path;
    sl2_dec->add_option("--labels", labels_path, "JSON array of labels")->required();

    // sl3
    auto* sl3_cmd = app.add_subcommand("sl3", "sl3 at l = 2, G2 algebra, conjecture seeds");
    bool sl3_chars = false, sl3_g2 = false, sl3_conj = false;
    std::string sl3_dec_path, matrix_path;
    int sl3_l = 2, laurent_trials = 0;
    sl3_cmd->add_flag("--chars", sl3_chars, "print the fundamental-type characters");
    sl3_cmd->add_option("--decompose", sl3_dec_path, "JSON array of labels");
    sl3_cmd->add_flag("--g2", sl3_g2, "enumerate the G2 exchange graph");
    sl3_cmd->add_flag("--conjecture", sl3_conj, "build and validate the conjecture seed");
    sl3_cmd->add_option("--l", sl3_l, "level for --conjecture")->check(CLI::Range(2, 16));
    sl3_cmd->add_option("--matrix", matrix_path, "write the conjecture matrix here");
    sl3_cmd->add_option("--laurent-trials", laurent_trials, "random Laurent checks");
    std::size_t support_cap = 1000;
    sl3_cmd->add_option("--support-cap", support_cap,
                        "stop extending a trial walk past this support size (0 = no cap)");
    sl3_cmd->add_option("--json", json_path, "write results here");
    sl3_cmd->add_option("--dot", dot_path, "write DOT graph here (with --g2)");
    std::string sl3_seed_out;
    sl3_cmd->add_option("--seed-out", sl3_seed_out,
                        "write the G2 (or conjecture) seed JSON here");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "machine checks of the isomorphisms");
    auto* verify_phi_cmd = verify_cmd->add_subcommand("phi", "A_{l-1} -> K0 for sl2");
    int vp_l = 2;
    long long bound = 6;
    verify_phi_cmd->add_option("--l", vp_l, "level")->required()->check(CLI::Range(2, 8));
    verify_phi_cmd->add_option("--bound", bound, "degree bound");
    verify_phi_cmd->add_option("--json", json_path, "write the report here");
    auto* verify_eta_cmd = verify_cmd->add_subcommand("eta", "G -> K0 for sl3, l = 2");
    verify_eta_cmd->add_option("--bound", bound, "degree bound");
    verify_eta_cmd->add_option("--json", json_path, "write the report here");
    verify_cmd->require_subcommand(1);

    try {
        app.parse(argc, argv);

        if (*mutate_cmd) {
            GenSeed s = seed_from_json(read_json_file(seed_path));
            for (int k : parse_sequence(sequence_text, s.rank())) s = mutate(s, k);
            json out = seed_to_json(s);
            if (json_path.empty())
                std::cout << out.dump(2) << "\n";
            else
                write_file(json_path, out.dump(2) + "\n");
        } else if (*enum_cmd) {
            GenSeed s = seed_from_json(read_json_file(seed_path));
            emit_graph(enumerate_exchange_graph(s, limits), dot_path, json_path);
        } else if (*typec_cmd) {
            json out;
            if (!seed_out.empty())
                write_file(seed_out, seed_to_json(typec_initial_seed(tc_n)).dump(2) + "\n");
            if (tc_enumerate) {
                ExchangeGraph g = enumerate_exchange_graph(typec_initial_seed(tc_n));
                emit_graph(g, dot_path, "");
                out["clusters"] = g.nodes.size();
                out["edges"] = g.edges.size();
                out["variables"] = g.num_variables;
            }
            if (!tc_express.empty() || !tc_phi.empty() || !tc_psi.empty() || !tc_basis.empty()) {
                TypeCModel model(tc_n);
                if (!tc_express.empty()) {
                    LaurentPoly p = model.express_in_small(parse_orbit(tc_n, tc_express));
                    say(p.to_string());
                    out["express_small"] = p.to_json();
                }
                if (!tc_phi.empty()) {
                    Mono m = model.phi(parse_cluster_monomial(tc_n, tc_phi));
                    LaurentPoly p = LaurentPoly::monomial(model.small_table(), m, 1);
                    say(p.to_string());
                    out["phi"] = p.to_json();
                }
                if (!tc_psi.empty()) {
                    auto cm = model.psi(parse_small_monomial(model, tc_psi));
                    std::string text = "lambda^" + std::to_string(cm.e);
                    for (const auto& [o, mult] : cm.mult)
                        text += " * " + orbit_to_string(o, tc_n) + "^" + std::to_string(mult);
                    say(text);
                    out["psi"] = text;
                }
                if (tc_basis == "B") {
                    auto basis = basis_B(model, tc_bound);
                    say("basis B elements up to degree " + std::to_string(tc_bound) + ": " +
                        std::to_string(basis.size()));
                    json arr = json::array();
                    for (const auto& p : basis) arr.push_back(p.to_json());
                    out["basis_B"] = std::move(arr);
                }
            }
            if (!json_path.empty()) write_file(json_path, out.dump(2) + "\n");
        } else if (*sl2_cmd) {
            Sl2Ring ring(sl2_l);
            if (*sl2_char) {
                LaurentPoly p = LaurentPoly::zero(ring.table());
                if (!sl2_string.empty()) {
                    auto parts = split(sl2_string, ',');
                    if (parts.size() != 2) throw CLI::ValidationError("--string wants d,k");
                    p = ring.kr_character({std::stoi(parts[0]), std::stoi(parts[1])});
                } else if (sl2_z) {
                    p = ring.z_character();
                } else if (sl2_frob >= 0) {
                    p = ring.frobenius_character(sl2_frob);
                } else {
                    throw CLI::ValidationError("char wants --string, --z, or --frobenius");
                }
                say(p.to_string());
                if (!json_path.empty()) write_file(json_path, p.to_json().dump(2) + "\n");
            } else if (*sl2_dec) {
                std::vector<SimpleLabelA1> product;
                for (const auto& j : read_json_file(labels_path))
                    product.push_back(ring.label_from_json(j));
                json out = json::array();
                for (const auto& [lab, mult] : ring.decompose(product)) {
                    say(ring.label_to_string(lab) + " x " + mult.str());
                    json entry = ring.label_to_json(lab);
                    entry["multiplicity"] = mult.str();
                    out.push_back(std::move(entry));
                }
                if (!json_path.empty()) write_file(json_path, out.dump(2) + "\n");
            } else {
                throw CLI::ValidationError("sl2 wants char or decompose");
            }
        } else if (*sl3_cmd) {
            json out;
            if (sl3_chars) {
                Sl3RingL2 ring;
                for (int i : {1, 2})
                    for (int n = i == 1 ? 0 : 1; n < 4; n += 2) {
                        say("chi(L(Y_{" + std::to_string(i) + "," + std::to_string(n) +
                            "})) = " + ring.chi_single(i, n).to_string());
                        out["singles"].push_back(ring.chi_single(i, n).to_json());
                    }
                for (int n1 : {0, 2})
                    for (int n2 : {1, 3}) {
                        say("chi(L(Y_{1," + std::to_string(n1) + "} Y_{2," + std::to_string(n2) +
                            "})) = " + ring.chi_pair(n1, n2).to_string());
                        out["pairs"].push_back(ring.chi_pair(n1, n2).to_json());
                    }
                for (int i : {1, 2}) {
                    say("chi(L(Ybold_" + std::to_string(i) + ")) = " +
                        ring.chi_bold(i).to_string());
                    out["bold"].push_back(ring.chi_bold(i).to_json());
                }
            }
            if (!sl3_dec_path.empty()) {
                Sl3RingL2 ring;
                std::vector<SimpleLabelA2L2> product;
                for (const auto& j : read_json_file(sl3_dec_path))
                    product.push_back(ring.label_from_json(j));
                for (const auto& [lab, mult] : ring.decompose(product)) {
                    say(ring.label_to_string(lab) + " x " + mult.str());
                    json entry = ring.label_to_json(lab);
                    entry["multiplicity"] = mult.str();
                    out["decompose"].push_back(std::move(entry));
                }
            }
            if (sl3_g2) {
                ExchangeGraph g = enumerate_exchange_graph(g2_initial_seed());
                emit_graph(g, dot_path, "");
                out["g2"] = {{"clusters", g.nodes.size()},
                             {"edges", g.edges.size()},
                             {"variables", g.num_variables}};
            }
            if (!sl3_seed_out.empty())
                write_file(sl3_seed_out,
                           seed_to_json(sl3_conj ? conjecture_seed(sl3_l) : g2_initial_seed())
                                   .dump(2) +
                               "\n");
            if (sl3_conj) {
                GenSeed s = conjecture_seed(sl3_l);  // throws unless valid
                say("conjecture seed at l = " + std::to_string(sl3_l) + ": rank " +
                    std::to_string(s.rank()) + ", valid");
                json mat = json::array();
                for (const auto& row : s.B.b) mat.push_back(row);
                out["conjecture"] = {{"l", sl3_l}, {"B", mat}, {"d", s.B.d}};
                if (!matrix_path.empty())
                    write_file(matrix_path, out["conjecture"].dump(2) + "\n");
                if (laurent_trials > 0) {
                    int failures = run_laurent_trials(s, laurent_trials, rng_seed, support_cap);
                    say("laurent trials: " + std::to_string(laurent_trials) + ", failures: " +
                        std::to_string(failures));
                    out["conjecture"]["laurent_trials"] = laurent_trials;
                    out["conjecture"]["laurent_failures"] = failures;
                    out["conjecture"]["rng_seed"] = rng_seed;
                    if (failures > 0) {
                        if (!json_path.empty()) write_file(json_path, out.dump(2) + "\n");
                        return 1;
                    }
                }
            }
            if (!sl3_chars && sl3_dec_path.empty() && !sl3_g2 && !sl3_conj)
                throw CLI::ValidationError("sl3 wants --chars, --decompose, --g2, or --conjecture");
            if (!json_path.empty()) write_file(json_path, out.dump(2) + "\n");
        } else if (*verify_cmd) {
            VerifyReport rep = *verify_phi_cmd ? verify_phi(vp_l, bound) : verify_eta(bound);
            json out = rep.to_json();
            out["threads"] = worker_cap();
            say(rep.theorem + ": " + (rep.ok() ? "ok" : "FAILED") + " (" +
                std::to_string(rep.variables_checked) + " variables, " +
                std::to_string(rep.relations_checked) + " relations, " +
                std::to_string(rep.standard_checked) + " standard, " +
                std::to_string(rep.simple_checked) + " simple)");
            for (const auto& f : rep.failures) say("  " + f);
            if (!json_path.empty()) write_file(json_path, out.dump(2) + "\n");
            if (!rep.ok()) return 1;
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
