#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace otn {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed0f0e7a11ULL;

struct SuiteResult {
    std::string name;
    std::uint64_t checked = 0;      // instances meeting the hypotheses
    std::uint64_t violations = 0;
    std::vector<std::string> examples;   // first few violations
    std::vector<std::string> notes;      // per-law instance counts and caveats
    double seconds = 0;

    bool passed() const { return violations == 0 && checked > 0; }
    void fail(const std::string& what);
    void note(const std::string& law, std::uint64_t n);
};

SuiteResult check_roundtrip(const std::vector<int>& ns = {1, 2}, int max_len = 8);
SuiteResult check_order_laws(int n = 1, int max_len = 6, std::uint64_t samples = 1'000'000,
                             std::uint64_t seed = kDefaultSeed);
SuiteResult check_theta_laws(int n = 1);
SuiteResult check_less_c_laws(int n = 1);
SuiteResult check_lx_trichotomy(int n = 1);
SuiteResult check_o_monotone(int n = 1);
SuiteResult check_hull_duality(int n = 1, int max_len = 5, int subsets = 50, std::uint64_t seed = kDefaultSeed);
SuiteResult check_coeff_laws(int n = 1, int max_len = 5);
SuiteResult check_closure_laws(int n = 1, int max_len = 5, int sets = 20, std::uint64_t seed = kDefaultSeed);
SuiteResult check_cascade(const std::vector<int>& ns = {1, 2}, int max_len = 5, int seeds = 10,
                          std::uint64_t seed = kDefaultSeed);

struct Golden {
    int n;
    int max_len;
    std::size_t count;
};
const std::vector<Golden>& universe_goldens();
SuiteResult check_goldens();

// suite names in criterion order: roundtrip, order, theta, less_c, lx, o, hull, coeff, closure, cascade, golden
const std::vector<std::string>& suite_names();
// max_len <= 0 keeps the suite's default universe size
SuiteResult run_suite(const std::string& name, int max_len = 0);

}  // namespace otn
