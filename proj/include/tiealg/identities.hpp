#pragma once

// The catalogue of identities the reduction engine must certify: the nine
// defining relations of the algebra, the derived inverse/conjugation/slide
// identities, and the two skein-style consequences.  Shared between the unit
// tests, the acceptance runner, and the `check` command of the CLI.
//
// Each case is stored as parse-ready text so the corpus also exercises the
// element grammar end to end.

#include <string>
#include <vector>

namespace tiealg {

struct IdentityCase {
    std::string name;
    int n;
    std::string lhs;
    std::string rhs;
};

namespace corpus_detail {

inline std::string T(int i) { return "T" + std::to_string(i) + " "; }
inline std::string Ti(int i) { return "T" + std::to_string(i) + "^-1 "; }
inline std::string E(int i) { return "E" + std::to_string(i) + " "; }

}  // namespace corpus_detail

// The defining relations, instantiated at every valid index tuple for the
// given n.
inline std::vector<IdentityCase> defining_relation_cases(int n) {
    using namespace corpus_detail;
    std::vector<IdentityCase> cases;
    auto tag = [&](const std::string& what, int i, int j) {
        return what + " (" + std::to_string(i) + "," + std::to_string(j) + ") n=" +
               std::to_string(n);
    };
    auto tag1 = [&](const std::string& what, int i) {
        return what + " (" + std::to_string(i) + ") n=" + std::to_string(n);
    };
    for (int i = 1; i <= n - 1; ++i) {
        for (int j = 1; j <= n - 1; ++j) {
            if (i != j)
                cases.push_back({tag("tie-commute", i, j), n, E(i) + E(j), E(j) + E(i)});
            if (std::abs(i - j) > 1) {
                if (i < j)
                    cases.push_back(
                        {tag("crossing-commute", i, j), n, T(i) + T(j), T(j) + T(i)});
                cases.push_back({tag("tie-crossing-far", i, j), n, E(i) + T(j), T(j) + E(i)});
            }
            if (std::abs(i - j) == 1) {
                if (i < j)
                    cases.push_back({tag("braid", i, j), n, T(i) + T(j) + T(i),
                                     T(j) + T(i) + T(j)});
                cases.push_back({tag("tie-slide", i, j), n, E(j) + T(i) + T(j),
                                 T(i) + T(j) + E(i)});
                cases.push_back({tag("tie-absorb-left", i, j), n, E(i) + E(j) + T(j),
                                 E(i) + T(j) + E(i)});
                cases.push_back({tag("tie-absorb-right", i, j), n, E(i) + T(j) + E(i),
                                 T(j) + E(i) + E(j)});
            }
        }
        cases.push_back({tag1("tie-idempotent", i), n, E(i) + E(i), E(i)});
        cases.push_back({tag1("tie-own-crossing", i), n, E(i) + T(i), T(i) + E(i)});
        cases.push_back({tag1("crossing-square", i), n, T(i) + T(i),
                         "1 + ((1-u)/u)*" + E(i) + "- ((1-u)/u)*" + E(i) + T(i)});
    }
    return cases;
}

// Derived identities: the closed form of the inverse, the conjugation and
// slide consequences, and the behaviour of ties against inverse crossings.
inline std::vector<IdentityCase> derived_identity_cases(int n) {
    using namespace corpus_detail;
    std::vector<IdentityCase> cases;
    auto tag = [&](const std::string& what, int i, int j) {
        return what + " (" + std::to_string(i) + "," + std::to_string(j) + ") n=" +
               std::to_string(n);
    };
    auto tag1 = [&](const std::string& what, int i) {
        return what + " (" + std::to_string(i) + ") n=" + std::to_string(n);
    };
    for (int i = 1; i <= n - 1; ++i) {
        cases.push_back({tag1("inverse-expansion", i), n, Ti(i),
                         T(i) + "+ (u-1)*" + E(i) + T(i) + "+ (1-u)*" + E(i)});
        cases.push_back({tag1("tie-own-inverse", i), n, E(i) + Ti(i), Ti(i) + E(i)});
    }
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j) {
            if (std::abs(i - j) > 1)
                cases.push_back(
                    {tag("tie-inverse-far", i, j), n, E(i) + Ti(j), Ti(j) + E(i)});
            if (std::abs(i - j) != 1) continue;
            cases.push_back({tag("conjugate-inverse-left", i, j), n, Ti(i) + E(j) + T(i),
                             T(j) + E(i) + Ti(j)});
            cases.push_back({tag("conjugate-inverse-both", i, j), n, Ti(i) + E(j) + T(i),
                             Ti(j) + E(i) + T(j)});
            cases.push_back({tag("conjugate-difference", i, j), n,
                             "(u)*" + T(i) + E(j) + T(i) + "- (u)*" + T(j) + E(i) + T(j),
                             "(u-1)*" + E(j) + T(i) + E(j) + "- (u-1)*" + E(i) + T(j) + E(i)});
            cases.push_back({tag("crossing-pair-slide", i, j), n, T(i) + T(j) + E(j) + T(i),
                             T(j) + T(i) + E(i) + T(j)});
            cases.push_back({tag("commutation-lemma-1", i, j), n, E(j) + T(i),
                             T(i) + T(j) + E(i) + T(j) + "- ((1-u)/u)*" + T(i) + E(i) + E(j) +
                                 "+ ((1-u)/u)*" + T(i) + T(j) + E(i) + E(j)});
            cases.push_back({tag("commutation-lemma-2", i, j), n, T(j) + E(j) + T(i),
                             T(i) + T(j) + T(i) + E(i) + T(j) + "+ ((u-1)/u)*" + T(j) + T(i) +
                                 E(i) + E(j) + "- ((u-1)/u)*" + T(i) + T(j) + T(i) + E(i) +
                                 E(j)});
            cases.push_back({tag("tie-slide-inverse-right", i, j), n, E(j) + T(i) + Ti(j),
                             T(i) + Ti(j) + E(i)});
            cases.push_back({tag("tie-slide-inverse-left", i, j), n, E(j) + Ti(i) + T(j),
                             Ti(i) + T(j) + E(i)});
            cases.push_back({tag("tie-slide-inverse-both", i, j), n, E(j) + Ti(i) + Ti(j),
                             Ti(i) + Ti(j) + E(i)});
            cases.push_back({tag("tie-absorb-inverse", i, j), n, E(i) + E(j) + Ti(j),
                             E(i) + Ti(j) + E(i)});
            cases.push_back({tag("tie-absorb-inverse-right", i, j), n, E(i) + Ti(j) + E(i),
                             Ti(j) + E(i) + E(j)});
        }
    return cases;
}

// The two skein-style identities relating a crossing, its inverse, and the
// tie on the same strands.
inline std::vector<IdentityCase> skein_cases(int n) {
    using namespace corpus_detail;
    std::vector<IdentityCase> cases;
    for (int i = 1; i <= n - 1; ++i) {
        cases.push_back({"skein-tied (" + std::to_string(i) + ") n=" + std::to_string(n), n,
                         "(u)*" + E(i) + T(i) + "- " + E(i) + Ti(i), "(u-1)*" + E(i)});
        cases.push_back({"skein-untied (" + std::to_string(i) + ") n=" + std::to_string(n), n,
                         E(i) + T(i) + "- " + E(i) + Ti(i), T(i) + "- " + Ti(i)});
    }
    return cases;
}

inline std::vector<IdentityCase> full_corpus(int n) {
    std::vector<IdentityCase> all = defining_relation_cases(n);
    auto derived = derived_identity_cases(n);
    auto skein = skein_cases(n);
    all.insert(all.end(), derived.begin(), derived.end());
    all.insert(all.end(), skein.begin(), skein.end());
    return all;
}

}  // namespace tiealg
