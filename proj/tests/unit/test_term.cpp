#include <doctest.h>

#include <algorithm>

#include "otn/closure_lab.hpp"
#include "otn/order.hpp"
#include "otn/term.hpp"

using namespace otn;

namespace {

bool same_set(std::vector<Term> a, std::vector<Term> b) {
    auto key = [](Term x, Term y) { return x.id() < y.id(); };
    std::sort(a.begin(), a.end(), key);
    std::sort(b.begin(), b.end(), key);
    return a == b;
}

}  // namespace

TEST_CASE("parse builds the expected trees") {
    CHECK(parse("0", 1).is_zero());
    Term om = parse("Om(S+1)", 1);
    CHECK(om.is(Kind::Omega));
    CHECK(om.om_kind() == OmKind::Stable);
    CHECK(om.om_offset() == 1);
    Term p = parse("psi(Om(1);0)", 1);
    REQUIRE(p.is(Kind::Psi));
    CHECK(p.psi_pi() == omega_one());
    CHECK(p.psi_arg().is_zero());
    CHECK(p.psi_fn().empty());
}

TEST_CASE("terms are interned") {
    CHECK(parse("phi(0,0)", 1) == one());
    CHECK(parse("w", 1) == omega());
    CHECK(parse("w^w", 1) == make_phi(zero(), omega()));
    CHECK(make_sum({one(), one()}) == parse("1+1", 1));
}

TEST_CASE("print") {
    CHECK(print(zero()) == "0");
    CHECK(print(omega_stable(2)) == "Om(S+2)");
    CHECK(print(make_psi(stable(), zero(), FiniteFn{{{zero(), one()}}})) == "psi[0:1](S;0)");
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse("psi(Om(1);", 1), ParseError);
    CHECK_THROWS_AS(parse("phi(0 0)", 1), ParseError);
    CHECK_THROWS_AS(parse("Om(S+2)", 1), IndexError);
    CHECK_NOTHROW(parse("Om(S+2)", 2));
}

TEST_CASE("length measure") {
    CHECK(ell(zero()) == 1);
    CHECK(ell(one()) == 3);
    CHECK(ell(stable()) == 1);
    CHECK(ell(omega_stable(1)) == 1);
    CHECK(ell(parse("1+1", 1)) == 7);
    CHECK(ell(parse("psi(Om(1);0)", 1)) == 3);
}

TEST_CASE("immediate subterms are shorter") {
    System sys(2);
    Universe u = enumerate(sys, 6);
    for (Term t : u.terms)
        for (Term s : imm_subterms(t)) CHECK(ell(s) < ell(t));
}

TEST_CASE("immediate subterm examples") {
    CHECK(imm_subterms(zero()).empty());
    CHECK(imm_subterms(stable()).empty());
    CHECK(imm_subterms(omega_one()).empty());
    Term b = omega_one(), g = stable();
    CHECK(same_set(imm_subterms(make_phi(b, g)), {b, g}));
    CHECK(same_set(imm_subterms(parse("psi(Om(1);0)", 1)), {omega_one(), zero()}));
}

TEST_CASE("subterms below S") {
    System sys(1);
    CHECK(e_below_S(sys, omega_stable(1)).empty());
    Term p = parse("psi(Om(1);0)", 1);
    CHECK(e_below_S(sys, p) == std::vector<Term>{p});
    Term k = parse("psi[0:1](S;0)", 1);
    Term om = omega_kappa(k, 1);
    CHECK(e_below_S(sys, om) == std::vector<Term>{om});
}

TEST_CASE("round trip on enumerated universes") {
    for (int n : {1, 2}) {
        System sys(n);
        Universe u = enumerate(sys, 7);
        for (Term t : u.terms) CHECK(parse(print(t), n) == t);
    }
}
