#include <cstdio>
#include <string>
#include <vector>

#include "otn/properties.hpp"

struct Criterion {
    int number;
    const char* suite;
    const char* title;
};

int main(int argc, char** argv) {
    bool verbose = argc > 1 && std::string(argv[1]) == "-v";
    const std::vector<Criterion> criteria{
        {1, "roundtrip", "parse/print round trip, N in {1,2}, length <= 8"},
        {2, "order", "order laws on the N=1, length <= 6 universe"},
        {3, "theta", "theta calculus identities on the generated pool"},
        {4, "less_c", "upward closure and zigzag for f <^c x"},
        {5, "lx", "lx trichotomy on irreducible pairs"},
        {6, "o", "o monotone under lx and step-down"},
        {7, "hull", "hull test agrees with the least-fixpoint oracle"},
        {8, "coeff", "coefficient set laws, exhaustive at length <= 5"},
        {9, "closure", "closure laws on self-closed sets"},
        {10, "cascade", "cascade shadows, N in {1,2}"},
        {11, "golden", "frozen universe counts"},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        otn::SuiteResult r = otn::run_suite(c.suite);
        bool ok = r.passed();
        failed += ok ? 0 : 1;
        std::printf("%s criterion %d (%s): %s; checked=%llu violations=%llu %.2fs\n", ok ? "PASS" : "FAIL", c.number,
                    c.suite, c.title, static_cast<unsigned long long>(r.checked),
                    static_cast<unsigned long long>(r.violations), r.seconds);
        if (verbose || !ok) {
            for (const auto& n : r.notes) std::printf("    %s\n", n.c_str());
            for (const auto& e : r.examples) std::printf("    violation: %s\n", e.c_str());
        }
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
