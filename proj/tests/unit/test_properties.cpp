#include <doctest.h>

#include "otn/closure_lab.hpp"
#include "otn/coeff.hpp"
#include "otn/order.hpp"
#include "otn/properties.hpp"
#include "otn/term.hpp"

using namespace otn;

namespace {

void require_pass(const SuiteResult& r) {
    CAPTURE(r.name);
    for (const auto& e : r.examples) MESSAGE(e);
    CHECK(r.checked > 0);
    CHECK(r.violations == 0);
}

}  // namespace

TEST_CASE("property suites at reduced size") {
    require_pass(check_roundtrip({1, 2}, 5));
    require_pass(check_order_laws(1, 5, 20000));
    require_pass(check_less_c_laws(1));
    require_pass(check_lx_trichotomy(1));
    require_pass(check_hull_duality(1, 4, 10));
    require_pass(check_coeff_laws(1, 4));
    require_pass(check_closure_laws(1, 4, 5));
    require_pass(check_cascade({1, 2}, 4, 4));
    require_pass(check_goldens());
}

TEST_CASE("o suite reports the lx counterexamples and nothing else") {
    SuiteResult r = check_o_monotone(1);
    CHECK(r.checked > 0);
    CHECK(r.violations > 0);
    for (const auto& e : r.examples) CHECK(e.rfind("f <lx^0 g implies o(f) < o(g)", 0) == 0);
}

TEST_CASE("suites are deterministic across fresh systems") {
    SuiteResult a = check_hull_duality(1, 4, 5, 7), b = check_hull_duality(1, 4, 5, 7);
    CHECK(a.checked == b.checked);
    CHECK(a.notes == b.notes);
    System s1(2), s2(2);
    CHECK(enumerate(s1, 5).terms == enumerate(s2, 5).terms);
}

TEST_CASE("suite dispatch") {
    CHECK(suite_names().size() == 11);
    CHECK(run_suite("golden").passed());
    CHECK_THROWS(run_suite("nope"));
}

TEST_CASE("coefficient hull laws: bulk counting agrees with direct enumeration") {
    System sys(1);
    Universe U = enumerate(sys, 4);
    const auto& T = U.terms;
    std::uint64_t g2 = 0, g3 = 0;
    for (Term a : T)
        for (Term al : T) {
            auto in_h = [&](Term x) { return in_hull_below(sys, x, a, al); };
            for (Term x : T) {
                if (!in_h(x)) continue;
                std::vector<Term> gs;
                for (Term k : T)
                    for (Term b : g_set(sys, k, x)) gs.push_back(b);
                sort_unique(sys, gs);
                g2 += gs.size();
            }
            for (Term b : T) {
                if (in_h(b)) continue;
                for (Term d : T)
                    if (k_below(sys, d, b).below(sys, a)) ++g3;
            }
        }
    SuiteResult r = check_coeff_laws(1, 4);
    auto count_of = [&](const std::string& prefix) -> std::uint64_t {
        for (const auto& n : r.notes)
            if (n.rfind(prefix, 0) == 0) return std::stoull(n.substr(n.rfind(": ") + 2));
        return 0;
    };
    CHECK(count_of("a in H_x(y) implies") == g2);
    CHECK(count_of("b not in H_a(al)") == g3);
}
