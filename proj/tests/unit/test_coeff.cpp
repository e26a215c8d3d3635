#include <doctest.h>

#include "otn/closure_lab.hpp"
#include "otn/coeff.hpp"
#include "otn/order.hpp"
#include "otn/term.hpp"

using namespace otn;

TEST_CASE("predecessor of regulars") {
    Term p = parse("psi(Om(1);0)", 1);
    REQUIRE(pd(p));
    CHECK(*pd(p) == omega_one());
    CHECK_FALSE(pd(stable()));
    Term kappa = parse("psi[0:1](S;0)", 1);
    Term inner = make_psi(kappa, zero(), FiniteFn{{{zero(), one()}}});
    CHECK(prec(inner, stable()));
    CHECK(prec(inner, kappa));
    CHECK(preceq(stable(), stable()));
    CHECK_FALSE(prec(stable(), stable()));
}

TEST_CASE("E sets") {
    System sys(1);
    Term b = parse("psi(Om(1);0)", 1), g = parse("psi(S;0)", 1);
    std::vector<Term> u = e_set(sys, b);
    for (Term t : e_set(sys, g)) u.push_back(t);
    sort_unique(sys, u);
    CHECK(e_set(sys, make_phi(b, g)) == u);
}

TEST_CASE("G and k examples") {
    System sys(1);
    Term p = parse("psi(S;Om(1))", 1);
    CHECK(g_set(sys, stable(), p) == std::vector<Term>{p});
    CHECK(k_tail(sys, omega_stable(1), p).empty());
    CHECK(k_tail(sys, omega_one(), p).size() >= 1);
}

TEST_CASE("F sets lie below delta on a small universe") {
    System sys(1);
    Universe u = enumerate(sys, 5);
    for (Term d : u.terms)
        for (Term t : u.terms)
            for (Term x : f_set(sys, d, t)) CHECK(lt(sys, x, d));
}
