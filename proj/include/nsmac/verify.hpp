#pragma once

// Named verification suites shared by the CLI and the acceptance binary.
// Every check is exact; failures carry the first counterexample with both
// operands serialized.

#include <string>
#include <vector>

namespace nsmac::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double ms = 0.0;
};

struct Options {
    int n = 3;
    int max_degree = 4;
    unsigned long seed = 42;
    int jobs = 1;
};

// Fixed data: the ten E_mu for n=3, |mu| <= 2, compared exactly.
std::vector<CheckResult> appendix_table(const Options& opt);
// The (2,1,3,0,0,2) filling statistics and the (3,1,2,4,3,0,4,2,3) arm.
std::vector<CheckResult> worked_example(const Options& opt);
// E_combinatorial vs E_recurrence over all mu with |mu| <= max_degree.
std::vector<CheckResult> dual_engine(const Options& opt);
// Quadratic, braid and commutation relations plus the T_i symmetry
// criterion, on seeded random Laurent polynomials.
std::vector<CheckResult> operator_relations(const Options& opt);
// Rotation and intertwiner steps with both sides from E_combinatorial.
std::vector<CheckResult> recurrence_steps(const Options& opt);
// Monic head coefficient and Bruhat-bounded support.
std::vector<CheckResult> triangularity(const Options& opt);
// Integral-form coefficients in Z[q,t]; positivity at q = t^k.
std::vector<CheckResult> integrality(const Options& opt);
// D_mu equal across rearrangements (bounds fixed by the suite).
std::vector<CheckResult> rearrangement_invariance(const Options& opt);
// J_lambda vs the truncated stable limit (bounds fixed by the suite).
std::vector<CheckResult> stable_limit(const Options& opt);
// The two P_lambda routes: equality, symmetry, monicity, q,t-inversion.
std::vector<CheckResult> p_dual_routes(const Options& opt);
// Key-polynomial sums vs the tableau Schur oracle.
std::vector<CheckResult> schur(const Options& opt);
// inv/coinv formulas vs triple counts on every filling, attacking included.
std::vector<CheckResult> triple_oracle(const Options& opt);

const std::vector<std::string>& suite_names();  // excludes "all"

// Dispatch by name; "all" concatenates every suite.  Throws
// std::invalid_argument for unknown names.
std::vector<CheckResult> run_suite(const std::string& name, const Options& opt);

}  // namespace nsmac::verify
