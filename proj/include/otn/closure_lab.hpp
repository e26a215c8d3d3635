#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "otn/order.hpp"
#include "otn/term.hpp"

namespace otn {

struct BudgetError : std::runtime_error { using std::runtime_error::runtime_error; };

struct OrderViolation : std::runtime_error {
    std::vector<Term> witness;
    OrderViolation(const std::string& msg, std::vector<Term> w) : std::runtime_error(msg), witness(std::move(w)) {}
};

// OTN_BUDGET or 10^7
std::uint64_t default_budget();

struct Universe {
    int n_param = 1;
    int max_len = 0;
    std::vector<Term> terms;   // ascending
    std::unordered_map<Term, std::size_t> index;
    std::uint64_t candidates = 0;

    bool contains(Term t) const { return index.count(t) != 0; }
    std::size_t rank(Term t) const { return index.at(t); }
};

Universe enumerate(const System& sys, int max_len, std::optional<Term> upper = std::nullopt,
                   std::uint64_t budget = default_budget());

// C^alpha(X) restricted to U, ascending
std::vector<Term> closure_c(const System& sys, Term alpha, const std::vector<Term>& X, const Universe& U);

struct ChainReport {
    std::vector<Term> chain;
    std::string note;
};

// Throws OrderViolation when the order is inconsistent on X.
ChainReport wf_sorted(const System& sys, std::vector<Term> X);

struct AlphaCheck {
    Term alpha;
    std::optional<Term> alpha_plus;   // nullopt means no regular term above alpha
    std::vector<Term> missing;        // in X below alpha^+ but not in the closure
    std::vector<Term> extra;          // in the closure below alpha^+ but not in X
    bool equal() const { return missing.empty() && extra.empty(); }
};

struct DistinguishedReport {
    std::vector<AlphaCheck> checks;
    bool all_equal = true;
    std::string caveat;
};

DistinguishedReport distinguished_report(const System& sys, const std::vector<Term>& X, const Universe& U);

struct CascadeLevel {
    int n = 0;
    std::vector<Term> w;   // W_n
    std::vector<Term> c;   // C_n
};

struct CascadeReport {
    std::vector<CascadeLevel> levels;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    std::string caveat;
};

CascadeReport cascade_report(const System& sys, const Universe& U, const std::vector<Term>& seed);

// set helpers on ascending term lists
std::vector<Term> below(const System& sys, const std::vector<Term>& xs, std::optional<Term> bound);
bool subset_of(const std::vector<Term>& a, const std::vector<Term>& b);
std::vector<Term> set_minus(const std::vector<Term>& a, const std::vector<Term>& b);

extern const char* const kTruncationCaveat;

}  // namespace otn
