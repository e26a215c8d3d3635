#include <doctest.h>

#include "otn/fn_calc.hpp"
#include "otn/order.hpp"
#include "otn/term.hpp"
#include "otn/theta.hpp"

using namespace otn;

namespace {

struct Fixture {
    System sys{1};
    Term two = add(sys, one(), one());
    Term w = omega();
    Term lam = sys.lambda();
    FiniteFn fn(std::vector<FnEntry> es) { return make_fn(sys, std::move(es)); }
    Term th(Term b, Term x) { return theta_term(sys, b, x); }
};

}  // namespace

TEST_CASE_FIXTURE(Fixture, "restrictions and concatenation") {
    FiniteFn f = fn({{zero(), th(one(), two)}, {one(), one()}, {w, two}});
    CHECK(restrict_below(sys, f, zero()).empty());
    for (Term c : {zero(), one(), two, w, add(sys, w, one())}) {
        CHECK(concat(sys, restrict_below(sys, f, c), restrict_from(sys, f, c), c) == f);
        for (Term d : restrict_from(sys, f, c).support()) CHECK(le(sys, c, d));
    }
    CHECK(restrict_from(sys, f, two).support() == std::vector<Term>{w});
}

TEST_CASE_FIXTURE(Fixture, "f <^c xi on two-point supports") {
    CHECK(less_c(sys, FiniteFn{}, zero(), zero()));
    std::vector<Term> xis{one(), two, w, lam};
    std::vector<Term> vals{one(), two, w, lam, th(one(), two)};
    int checked = 0;
    for (Term x1 : xis)
        for (Term x0 : xis) {
            if (!lt(sys, x0, x1)) continue;
            Term xi = add(sys, th(one(), x1), th(one(), x0));
            for (Term f0 : vals)
                for (Term f1 : vals) {
                    FiniteFn f = fn({{zero(), f0}, {one(), f1}});
                    bool expect = (lt(sys, f0, xi) && lt(sys, f1, x0)) || (lt(sys, f0, th(one(), x1)) && lt(sys, f1, x1));
                    CHECK(less_c(sys, f, zero(), xi) == expect);
                    ++checked;
                }
        }
    CHECK(checked > 100);
}

TEST_CASE_FIXTURE(Fixture, "f <^c xi negative instance") {
    Term x1 = lam, x0 = w, zeta = two;
    Term xi = add(sys, th(one(), x1), th(one(), x0));
    FiniteFn f = fn({{zero(), add(sys, th(one(), x1), th(one(), zeta))}, {one(), w}});
    CHECK_FALSE(less_c(sys, f, zero(), xi));
}

TEST_CASE_FIXTURE(Fixture, "irreducibility") {
    CHECK(is_irreducible(sys, FiniteFn{}));
    CHECK(is_irreducible(sys, fn({{w, two}})));
    CHECK_FALSE(is_irreducible(sys, fn({{zero(), th(one(), two)}, {one(), two}})));
    CHECK(is_irreducible(sys, fn({{zero(), th(one(), add(sys, two, one()))}, {one(), two}})));
}

TEST_CASE_FIXTURE(Fixture, "lx order") {
    FiniteFn f = fn({{zero(), one()}}), g = fn({{zero(), two}});
    CHECK(lx_less(sys, f, g, zero()));
    CHECK_FALSE(lx_less(sys, g, f, zero()));
    CHECK_FALSE(lx_less(sys, f, f, zero()));
    Term three = add(sys, two, one());
    FiniteFn h = fn({{zero(), th(one(), three)}, {one(), two}}), k = fn({{zero(), th(one(), add(sys, three, one()))}, {one(), two}});
    CHECK_FALSE(lx_less(sys, h, k, one()));
    CHECK_FALSE(lx_less(sys, k, h, one()));
    CHECK_THROWS_AS(lx_less(sys, fn({{zero(), th(one(), two)}, {one(), two}}), f, zero()), IrreducibilityError);
}

TEST_CASE_FIXTURE(Fixture, "o assignment") {
    CHECK(o_of(sys, FiniteFn{}) == zero());
    CHECK(o_at(sys, fn({{one(), one()}}), two) == zero());
    CHECK(o_of(sys, fn({{zero(), one()}})) == w);
    CHECK(o_of(sys, fn({{one(), one()}})) == th(one(), add(sys, w, one())));
}

TEST_CASE_FIXTURE(Fixture, "step-down admissibility") {
    FiniteFn f = fn({{zero(), th(one(), add(sys, lam, one()))}, {two, one()}});
    REQUIRE(is_irreducible(sys, f));
    FiniteFn g = restrict_below(sys, f, one());
    CHECK(step_down_ok(sys, f, g, zero(), two));
    CHECK(lt(sys, o_of(sys, g), o_of(sys, f)));

    Term big = add(sys, f.at(zero()), times_principal(sys, th(two, one()), w));
    FiniteFn bad = fn({{zero(), big}});
    StepDownCheck r = step_down_check(sys, f, bad, zero(), two);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.failed.empty());
    CHECK_FALSE(step_down_ok(sys, f, g, two, zero()));
}

TEST_CASE_FIXTURE(Fixture, "pinned counterexample to lx monotonicity of o") {
    FiniteFn f = fn({{two, one()}});
    FiniteFn g = fn({{zero(), th(one(), add(sys, lam, one()))}});
    REQUIRE(is_irreducible(sys, f));
    REQUIRE(is_irreducible(sys, g));
    CHECK(lx_less(sys, f, g, zero()));
    CHECK_FALSE(less_c(sys, f, zero(), g.at(zero())));
    CHECK(o_of(sys, f) == th(two, add(sys, w, one())));
    CHECK(o_of(sys, g) == th(one(), add(sys, th(one(), w), w)));
    CHECK(lt(sys, o_of(sys, g), o_of(sys, f)));
}

TEST_CASE_FIXTURE(Fixture, "collapsing lift breaks the zigzag law") {
    FiniteFn f = fn({{w, one()}});
    Term x = th(one(), two);
    CHECK(th(w, one()) == lam);
    CHECK(lt(sys, th(w, f.at(w)), tail_term(sys, x)));
    CHECK_FALSE(less_c(sys, f, zero(), x));
    FiniteFn g = fn({{zero(), x}});
    CHECK(lx_less(sys, f, g, zero()));
    CHECK(lt(sys, o_of(sys, g), o_of(sys, f)));
}
