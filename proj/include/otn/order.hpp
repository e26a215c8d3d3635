#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "otn/term.hpp"

namespace otn {

enum class Ord : signed char { LT = -1, EQ = 0, GT = 1 };

inline Ord flip(Ord o) { return static_cast<Ord>(-static_cast<int>(o)); }
const char* ord_symbol(Ord o);

struct Verdict {
    bool accepted = false;
    std::string clause;   // "1".."7" when accepted, the failed clause otherwise
    FiniteFn m;           // degree function of a psi term, empty otherwise
    std::string reason;
};

struct Caches;

// OT_N for a fixed N. Carries the memo tables shared by copies.
class System {
public:
    explicit System(int n);

    int n() const { return n_; }
    Term lambda() const { return lambda_; }   // Om(S+N)
    Caches& caches() const { return *caches_; }

private:
    int n_;
    Term lambda_;
    std::shared_ptr<Caches> caches_;
};

Ord compare(const System& sys, Term a, Term b);
inline bool lt(const System& s, Term a, Term b) { return compare(s, a, b) == Ord::LT; }
inline bool le(const System& s, Term a, Term b) { return compare(s, a, b) != Ord::GT; }

void sort_terms(const System& sys, std::vector<Term>& ts);
void sort_unique(const System& sys, std::vector<Term>& ts);

using Membership = std::function<bool(Term)>;

// Either a finite coefficient set or the top sentinel.
struct KResult {
    bool top = false;
    std::vector<Term> elems;

    static KResult Top() { return {true, {}}; }
    void merge(const KResult& o);
    bool below(const System& sys, Term gamma) const;   // every member < gamma
};

KResult k_set(const System& sys, const Membership& X, Term alpha);
KResult k_below(const System& sys, Term delta, Term alpha);
bool in_hull(const System& sys, Term alpha, Term gamma, const Membership& X);
// alpha in H_gamma(delta), i.e. K_delta(alpha) < gamma
bool in_hull_below(const System& sys, Term alpha, Term gamma, Term delta);

Verdict validate(const System& sys, Term t);
inline bool is_valid(const System& sys, Term t) { return validate(sys, t).accepted; }

bool is_regular(Term t);
bool in_psi_class(const System& sys, Term t);
bool is_phi_normal(const System& sys, Term b, Term g);
// a < Gamma_{beta+1}
bool below_gamma_succ(const System& sys, Term a, Term beta);

// Least regular term above alpha. Falls back to a scan of the given
// universe where the answer is not determined structurally.
std::optional<Term> next_regular(const System& sys, Term alpha, const std::vector<Term>* universe = nullptr);

std::vector<Term> e_below_S(const System& sys, Term t);

}  // namespace otn
