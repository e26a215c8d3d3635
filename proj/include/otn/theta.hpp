#pragma once

#include <stdexcept>
#include <vector>

#include "otn/order.hpp"
#include "otn/term.hpp"

namespace otn {

struct RangeError : std::runtime_error { using std::runtime_error::runtime_error; };
struct ShapeError : std::runtime_error { using std::runtime_error::runtime_error; };
struct ZeroError : std::runtime_error { using std::runtime_error::runtime_error; };
struct OrderError : std::runtime_error { using std::runtime_error::runtime_error; };

// one summand theta_b(xi) * coeff; b is additively principal
struct TnfEntry {
    Term b;
    Term xi;
    Term coeff;
    friend bool operator==(const TnfEntry& x, const TnfEntry& y) {
        return x.b == y.b && x.xi == y.xi && x.coeff == y.coeff;
    }
};

// Entries descending by value; empty means 0.
struct Tnf {
    std::vector<TnfEntry> entries;
    bool empty() const { return entries.empty(); }
    std::size_t size() const { return entries.size(); }
    friend bool operator==(const Tnf& x, const Tnf& y) { return x.entries == y.entries; }
};

// Normalizing arithmetic on terms.
Term add(const System& sys, Term a, Term b);
Term succ(const System& sys, Term a);
Term phi_nf(const System& sys, Term b, Term g);
Term omega_pow(const System& sys, Term e);
Term exp_of(Term principal);
Term times_principal(const System& sys, Term p, Term x);   // p * x for additively principal p
Term omega_times(const System& sys, Term x);
Term lambda_times(const System& sys, Term x);
Term osub(const System& sys, Term alpha, Term beta);

Tnf to_tnf(const System& sys, Term t);
Term from_tnf(const System& sys, const Tnf& x);
bool decomposable(const System& sys, Term t);
// every entry but the lowest has coefficient 1, and so does the lowest unless its b is 1
bool coeff_condition(const Tnf& x);

Term theta_term(const System& sys, Term b, Term xi);
Tnf theta(const System& sys, Term b, const Tnf& xi);
Term theta_minus_term(const System& sys, Term c, Term zeta);
Tnf theta_minus(const System& sys, Term c, const Tnf& zeta);

Tnf head(const Tnf& x);
Tnf tail(const Tnf& x);
std::vector<Tnf> parts(const Tnf& x);   // shortest first, from 0 up to x
Term head_term(const System& sys, Term t);
Term tail_term(const System& sys, Term t);
std::vector<Term> parts_terms(const System& sys, Term t);

Term a_measure_term(const System& sys, Term t);
Tnf a_measure(const System& sys, const Tnf& x);

bool below_plus_omega(const System& sys, Term x, Term base, Term t);

}  // namespace otn
