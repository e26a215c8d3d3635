#include <doctest.h>

#include <algorithm>

#include "otn/closure_lab.hpp"
#include "otn/order.hpp"
#include "otn/term.hpp"

using namespace otn;

namespace {

bool has(const std::vector<Term>& xs, Term t) { return std::find(xs.begin(), xs.end(), t) != xs.end(); }

}  // namespace

TEST_CASE("length one universe is the base constants") {
    System sys(1);
    Universe u = enumerate(sys, 1);
    CHECK(u.terms == std::vector<Term>{zero(), omega_one(), stable(), omega_stable(1)});
    System sys2(2);
    CHECK(enumerate(sys2, 1).terms.size() == 5);
}

TEST_CASE("universes are downward closed and ascending") {
    System sys(1);
    Universe u = enumerate(sys, 6);
    for (std::size_t i = 0; i < u.terms.size(); ++i) {
        if (i) CHECK(lt(sys, u.terms[i - 1], u.terms[i]));
        for (Term s : imm_subterms(u.terms[i]))
            if (is_valid(sys, s)) CHECK(u.contains(s));
    }
}

TEST_CASE("bounded enumeration") {
    System sys(1);
    Universe all = enumerate(sys, 5), low = enumerate(sys, 5, stable());
    CHECK(low.terms == below(sys, all.terms, stable()));
    CHECK_THROWS_AS(enumerate(sys, 7, std::nullopt, 10), BudgetError);
}

TEST_CASE("closure seeds") {
    System sys(1);
    Universe u = enumerate(sys, 4);
    std::vector<Term> c = closure_c(sys, zero(), {}, u);
    for (Term b : {zero(), omega_one(), stable(), omega_stable(1)}) CHECK(has(c, b));
    std::vector<Term> x{parse("psi(Om(1);Om(1))", 1)};
    std::vector<Term> cs = closure_c(sys, stable(), x, u);
    CHECK(has(cs, x[0]));
}

TEST_CASE("closure shrinks as alpha grows") {
    System sys(1);
    Universe u = enumerate(sys, 5);
    std::vector<Term> prev;
    bool first = true;
    for (Term a : u.terms) {
        std::vector<Term> c = closure_c(sys, a, {}, u);
        if (!first) CHECK(subset_of(c, prev));
        prev = c;
        first = false;
    }
}

TEST_CASE("well-founded part") {
    System sys(1);
    CHECK(wf_sorted(sys, {}).chain.empty());
    ChainReport r = wf_sorted(sys, {omega_stable(1), zero(), stable(), omega_one()});
    CHECK(r.chain == std::vector<Term>{zero(), omega_one(), stable(), omega_stable(1)});
    Universe u = enumerate(sys, 4);
    for (Term a : {omega_one(), stable()}) CHECK(below(sys, wf_sorted(sys, u.terms).chain, a) == wf_sorted(sys, below(sys, u.terms, a)).chain);
}

TEST_CASE("distinguished report") {
    System sys(1);
    Universe u = enumerate(sys, 4);
    DistinguishedReport empty = distinguished_report(sys, {}, u);
    CHECK(empty.all_equal);
    CHECK(empty.checks.empty());
    CHECK_FALSE(empty.caveat.empty());

    DistinguishedReport r = distinguished_report(sys, {zero()}, u);
    REQUIRE(r.checks.size() == 1);
    CHECK(r.checks[0].alpha == zero());
    REQUIRE(r.checks[0].alpha_plus);
    CHECK(*r.checks[0].alpha_plus == omega_one());
    CHECK_FALSE(r.checks[0].equal());
    CHECK(r.checks[0].missing.empty());
}

TEST_CASE("cascade from an empty seed") {
    System sys(1);
    Universe u = enumerate(sys, 4);
    CascadeReport r = cascade_report(sys, u, {});
    CHECK(r.ok());
    REQUIRE(r.levels.size() >= 2);
    CHECK(below(sys, r.levels[0].w, stable()) == r.levels[0].w);
    CHECK(subset_of(r.levels[0].w, r.levels[0].c));
    for (Term b : {zero(), omega_one(), stable()}) CHECK(has(r.levels[0].c, b));
    for (std::size_t n = 1; n < r.levels.size(); ++n) {
        CHECK(subset_of(r.levels[n].c, r.levels[n - 1].c));
        CHECK(subset_of(r.levels[n - 1].w, r.levels[n].w));
    }
}
