#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "otn/order.hpp"
#include "otn/term.hpp"

namespace otn {

struct IrreducibilityError : std::runtime_error { using std::runtime_error::runtime_error; };

FiniteFn restrict_below(const System& sys, const FiniteFn& f, Term c);   // f_c
FiniteFn restrict_from(const System& sys, const FiniteFn& f, Term c);    // f^c
FiniteFn concat(const System& sys, const FiniteFn& g, const FiniteFn& f, Term c);

// Sorts entries by argument and drops zero values.
FiniteFn make_fn(const System& sys, std::vector<FnEntry> entries);

bool less_c(const System& sys, const FiniteFn& f, Term c, Term xi);
bool is_irreducible(const System& sys, const FiniteFn& f);
bool lx_less(const System& sys, const FiniteFn& f, const FiniteFn& g, Term b);

Term o_at(const System& sys, const FiniteFn& f, Term d);
Term o_of(const System& sys, const FiniteFn& f);

struct StepDownCheck {
    bool ok = false;
    std::vector<std::string> failed;   // names of the violated side conditions
};

StepDownCheck step_down_check(const System& sys, const FiniteFn& f, const FiniteFn& g, Term d, Term c);
inline bool step_down_ok(const System& sys, const FiniteFn& f, const FiniteFn& g, Term d, Term c) {
    return step_down_check(sys, f, g, d, c).ok;
}

}  // namespace otn
