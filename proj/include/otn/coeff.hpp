#pragma once

#include <optional>
#include <vector>

#include "otn/order.hpp"
#include "otn/term.hpp"

namespace otn {

std::optional<Term> pd(Term t);
bool prec(Term pi, Term kappa);     // kappa = pd^(n)(pi) for some n >= 1
bool preceq(Term pi, Term kappa);

// All results ascending and duplicate free.
std::vector<Term> e_set(const System& sys, Term t);
std::vector<Term> g_set(const System& sys, Term kappa, Term t);
std::vector<Term> f_set(const System& sys, Term delta, Term t);
std::vector<Term> k_tail(const System& sys, Term delta, Term t);

}  // namespace otn
