#include <doctest.h>

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
    Term P(const char* s) { return parse(s, 1); }
};

}  // namespace

TEST_CASE_FIXTURE(Fixture, "normal form decomposition") {
    CHECK(to_tnf(sys, zero()).empty());
    Tnf l = to_tnf(sys, lam);
    REQUIRE(l.size() == 1);
    CHECK(l.entries[0].b == one());
    CHECK(l.entries[0].xi == one());
    CHECK(l.entries[0].coeff == one());

    Term lam_w = P("phi(0,Om(S+1)+phi(0,0))");
    Tnf x = to_tnf(sys, lam_w);
    REQUIRE(x.size() == 1);
    CHECK(x.entries[0].b == one());
    CHECK(x.entries[0].xi == one());
    CHECK(x.entries[0].coeff == w);

    CHECK(from_tnf(sys, Tnf{}) == zero());
    CHECK(from_tnf(sys, Tnf{{{one(), zero(), one()}}}) == one());
}

TEST_CASE_FIXTURE(Fixture, "theta application") {
    CHECK(theta_term(sys, zero(), w) == w);
    CHECK(theta_term(sys, one(), zero()) == one());
    CHECK(theta_term(sys, one(), one()) == lam);
    CHECK(theta_term(sys, w, zero()) == P("phi(1,0)"));
    CHECK(theta_term(sys, add(sys, one(), one()), one()) == theta_term(sys, one(), lam));
}

TEST_CASE_FIXTURE(Fixture, "theta inverse") {
    Term xi0 = two;
    CHECK(theta_minus_term(sys, one(), theta_term(sys, one(), xi0)) == xi0);
    CHECK(theta_minus_term(sys, two, theta_term(sys, one(), zero())) == zero());
    Term z = theta_term(sys, one(), add(sys, lam, one()));
    CHECK(le(sys, theta_minus_term(sys, one(), z), z));
}

TEST_CASE_FIXTURE(Fixture, "head, tail and parts") {
    Term x = theta_term(sys, one(), two);
    Tnf t = to_tnf(sys, x);
    CHECK(head(t) == t);
    CHECK(tail(t) == t);
    CHECK(parts(Tnf{}).size() == 1);
    Term y = add(sys, add(sys, x, lam), one());
    CHECK(parts(to_tnf(sys, y)).size() == 4);
    CHECK(head_term(sys, y) == x);
    CHECK(tail_term(sys, y) == one());
}

TEST_CASE_FIXTURE(Fixture, "measure a") {
    CHECK(a_measure_term(sys, zero()) == zero());
    CHECK(a_measure_term(sys, one()) == one());
    CHECK(a_measure_term(sys, lam) == theta_term(sys, one(), w));
    CHECK(lt(sys, a_measure_term(sys, one()), a_measure_term(sys, two)));
}

TEST_CASE_FIXTURE(Fixture, "ordinal subtraction") {
    Term w2 = omega_pow(sys, two);
    CHECK(osub(sys, w, zero()) == w);
    CHECK(osub(sys, w, w) == zero());
    CHECK(osub(sys, add(sys, w2, w), w2) == w);
    CHECK(osub(sys, w, one()) == w);
}

TEST_CASE_FIXTURE(Fixture, "below base plus t times omega") {
    Term base = lam, t = one();
    CHECK(below_plus_omega(sys, base, base, t));
    CHECK(below_plus_omega(sys, add(sys, base, add(sys, two, one())), base, t));
    CHECK_FALSE(below_plus_omega(sys, add(sys, base, w), base, t));
}

// literal statements that fail on degenerate or boundary instances
TEST_CASE_FIXTURE(Fixture, "pinned counterexamples to literal theta laws") {
    // theta_c(theta_{-c}(z)) <= z fails when theta_{-c}(z) = 0
    CHECK(theta_minus_term(sys, two, one()) == zero());
    CHECK(lt(sys, one(), theta_term(sys, two, zero())));

    // theta_w collapses at 1
    CHECK(theta_term(sys, w, one()) == lam);
    CHECK(theta_minus_term(sys, w, theta_term(sys, one(), two)) == zero());

    // theta_{-d}(z) need not be principal when d is the head subscript
    CHECK(theta_minus_term(sys, one(), theta_term(sys, one(), two)) == two);

    // composition needs a natural sum: 1 + w = w
    CHECK(add(sys, one(), w) == w);
    CHECK(theta_term(sys, one(), theta_term(sys, w, zero())) != theta_term(sys, w, zero()));

    // a and theta_{-c} do not commute once the result drops below Lambda
    CHECK(a_measure_term(sys, theta_minus_term(sys, one(), lam)) == one());
    CHECK(theta_minus_term(sys, one(), a_measure_term(sys, lam)) == w);
}
