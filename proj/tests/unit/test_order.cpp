#include <doctest.h>

#include <unordered_set>

#include "otn/closure_lab.hpp"
#include "otn/order.hpp"
#include "otn/term.hpp"

using namespace otn;

TEST_CASE("compare basics") {
    System sys(1);
    CHECK(compare(sys, zero(), omega_one()) == Ord::LT);
    CHECK(compare(sys, omega_one(), omega_one()) == Ord::EQ);
    Term a = parse("psi(Om(1);0)", 1), b = parse("psi(Om(1);1)", 1);
    CHECK(compare(sys, a, b) == Ord::LT);
    CHECK(compare(sys, b, a) == Ord::GT);
    CHECK(std::string(ord_symbol(Ord::LT)) == "<");
}

TEST_CASE("base constants form the chain 0 < Om(1) < S < Om(S+1)") {
    System sys(1);
    std::vector<Term> v{omega_stable(1), stable(), zero(), omega_one()};
    sort_terms(sys, v);
    CHECK(v == std::vector<Term>{zero(), omega_one(), stable(), omega_stable(1)});
}

TEST_CASE("a collapse lies below its regular") {
    System sys(1);
    Universe u = enumerate(sys, 6);
    int n = 0;
    for (Term t : u.terms)
        if (t.is(Kind::Psi)) {
            CHECK(lt(sys, t, t.psi_pi()));
            ++n;
        }
    CHECK(n > 0);
}

TEST_CASE("a collapse is below anything at or above its regular, in both orientations") {
    System sys(1);
    Universe u = enumerate(sys, 6);
    std::vector<Term> psis;
    for (Term t : u.terms)
        if (t.is(Kind::Psi)) psis.push_back(t);
    int n = 0;
    for (Term a : psis)
        for (Term b : psis)
            if (a != b && le(sys, a.psi_pi(), b)) {
                CHECK(lt(sys, a, b));
                CHECK(compare(sys, b, a) == Ord::GT);
                ++n;
            }
    CHECK(n > 0);
}

TEST_CASE("validator examples") {
    System sys(1);
    for (Term t : {zero(), omega_one(), stable(), omega_stable(1)}) {
        Verdict v = validate(sys, t);
        CHECK(v.accepted);
        CHECK(v.clause == "1");
    }
    Verdict p = validate(sys, parse("psi(Om(1);0)", 1));
    CHECK(p.accepted);
    CHECK(p.clause == "5");
    CHECK(validate(sys, parse("psi(Om(1);psi(Om(1);0))", 1)).accepted);
    CHECK_FALSE(validate(sys, parse("0+0", 1)).accepted);
    CHECK_FALSE(validate(sys, parse("1+w", 1)).accepted);
    CHECK_FALSE(validate(sys, parse("psi(0;0)", 1)).accepted);
}

TEST_CASE("regular terms") {
    System sys(1);
    CHECK(is_regular(stable()));
    CHECK(is_regular(omega_one()));
    CHECK_FALSE(is_regular(parse("psi(Om(1);0)", 1)));
    CHECK(is_regular(parse("psi[0:1](S;0)", 1)));
    Universe u = enumerate(sys, 5);
    auto r = next_regular(sys, zero(), &u.terms);
    REQUIRE(r);
    CHECK(*r == omega_one());
}

TEST_CASE("coefficient sets K") {
    System sys(1);
    auto none = [](Term) { return false; };
    CHECK(k_set(sys, none, omega_stable(1)).elems.empty());
    CHECK_FALSE(k_set(sys, none, omega_stable(1)).top);
    KResult k = k_set(sys, none, parse("psi(Om(1);0)", 1));
    CHECK_FALSE(k.top);
    CHECK(k.elems == std::vector<Term>{zero()});
    Term om = omega_kappa(parse("psi[0:1](S;0)", 1), 1);
    CHECK(k_set(sys, none, om).top);
    CHECK_FALSE(k_set(sys, [&](Term t) { return t == om; }, om).top);

    CHECK(k_below(sys, stable(), zero()).elems.empty());
    CHECK(k_below(sys, zero(), omega_one()).elems.empty());
    Term p = parse("psi(Om(1);0)", 1);
    CHECK(k_below(sys, omega_one(), p).elems.empty());
}

TEST_CASE("hull membership") {
    System sys(1);
    auto none = [](Term) { return false; };
    CHECK(in_hull(sys, zero(), zero(), none));
    CHECK_FALSE(in_hull(sys, parse("psi(Om(1);0)", 1), zero(), none));
    CHECK(in_hull(sys, parse("psi(Om(1);0)", 1), one(), none));
}

TEST_CASE("order is a strict total order on a small universe") {
    System sys(1);
    Universe u = enumerate(sys, 4);
    const auto& ts = u.terms;
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = 0; j < ts.size(); ++j) {
            Ord o = compare(sys, ts[i], ts[j]);
            CHECK((o == Ord::EQ) == (i == j));
            CHECK(compare(sys, ts[j], ts[i]) == flip(o));
            CHECK((o == Ord::LT) == (i < j));
        }
}
