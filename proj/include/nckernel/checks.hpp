#pragma once

#include <string>
#include <vector>

namespace nck {

// One acceptance criterion outcome.
struct CheckResult {
    int id;
    std::string name;
    bool pass;
    std::string detail;   // first failure description, empty on pass
    double seconds;
};

// Caps for the criterion runs.  Defaults are the pinned acceptance values;
// the CLI `check` command may scale the main cap up or down.
struct CheckConfig {
    int lattice_brute_cap = 8;   // |NC(n)| vs brute force for n <= this
    int lattice_kr_cap = 6;      // Kreweras identities cap
    int group_random_count = 50;
    int group_nmax = 5;
    int u_subgroup_nmax = 7;
    int counting_n = 6;
    int coset_nmax = 6;
    int normalizer_nmax = 6;
    int tboolean_nmax = 6;
    int hopf_nmax = 6;
    int morphisms_nmax = 5;
    int transitions_nmax = 6;
};

CheckResult check_lattice(const CheckConfig& cfg = {});       // criterion 1
CheckResult check_group_laws(const CheckConfig& cfg = {});    // criterion 2
CheckResult check_counting(const CheckConfig& cfg = {});      // criterion 3
CheckResult check_coset(const CheckConfig& cfg = {});         // criterion 4
CheckResult check_normalizer(const CheckConfig& cfg = {});    // criterion 5
CheckResult check_tboolean(const CheckConfig& cfg = {});      // criterion 6
CheckResult check_appendix(const CheckConfig& cfg = {});      // criterion 7
CheckResult check_hopf(const CheckConfig& cfg = {});          // criterion 8
CheckResult check_tn(const CheckConfig& cfg = {});            // criterion 9
CheckResult check_morphisms(const CheckConfig& cfg = {});     // criterion 10
CheckResult check_transitions(const CheckConfig& cfg = {});   // criterion 11

std::vector<CheckResult> run_all_checks(const CheckConfig& cfg = {});
CheckResult run_check(int id, const CheckConfig& cfg = {});

}  // namespace nck
