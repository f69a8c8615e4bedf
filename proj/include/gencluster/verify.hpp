#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace gencluster {

struct VerifyReport {
    std::string theorem;  // "phi" or "eta"
    int l = 0;            // root-of-unity level (phi only; eta is l = 2 sl3)
    long long bound = 0;
    int variables_checked = 0;
    int relations_checked = 0;
    int standard_checked = 0;
    int simple_checked = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    nlohmann::json to_json() const;
};

// Machine check of the isomorphism phi: A_{l-1} -> K0 for sl2:
// (a) every cluster variable maps to its KR class, lambda to z;
// (b) the image of every exchange-relation instance (flips, the diameter
//     family, the rel2 family) holds among eps-characters;
// (c) monomials in small variables up to degree_bound map to pairwise
//     distinct products of fundamental classes (standard classes);
// (d) every basis element S_e(lambda)*m maps to the simple class labelled by
//     (strings of m, e), and distinct elements have distinct images.
VerifyReport verify_phi(int l, long long degree_bound = 6);

// Same four-part check of eta: G -> K0 for sl3, l = 2, over the G2 algebra,
// walking the 8-cycle against the printed dictionary and matching the eight
// clusters with the eight tensor-product patterns.
VerifyReport verify_eta(long long degree_bound = 6);

}  // namespace gencluster
