#include "otn/closure_lab.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <unordered_set>

namespace otn {

const char* const kTruncationCaveat =
    "finite fragment: closures are cut off at the universe length bound, so agreement is a necessary "
    "condition only and ordinals outside the universe are not quantified over";

std::uint64_t default_budget() {
    if (const char* env = std::getenv("OTN_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) return v;
    }
    return 10'000'000ULL;
}

// ---------------------------------------------------------------- enumerate

namespace {

class Enumerator {
public:
    Enumerator(const System& sys, int max_len, std::uint64_t budget)
        : sys_(sys), max_len_(max_len), budget_(budget), by_len_(static_cast<std::size_t>(max_len) + 1),
          principal_(static_cast<std::size_t>(max_len) + 1), regular_(static_cast<std::size_t>(max_len) + 1),
          psi_class_(static_cast<std::size_t>(max_len) + 1) {}

    std::vector<Term> run() {
        for (int L = 1; L <= max_len_; ++L) level(L);
        std::vector<Term> out;
        for (const auto& v : by_len_) out.insert(out.end(), v.begin(), v.end());
        return out;
    }

    std::uint64_t candidates() const { return count_; }

private:
    const System& sys_;
    int max_len_;
    std::uint64_t budget_;
    std::uint64_t count_ = 0;
    std::vector<std::vector<Term>> by_len_, principal_, regular_, psi_class_;

    void tick() {
        if (++count_ > budget_) throw BudgetError("candidate budget of " + std::to_string(budget_) + " exceeded");
    }

    void offer(int L, Term t) {
        tick();
        if (!is_valid(sys_, t)) return;
        auto i = static_cast<std::size_t>(L);
        by_len_[i].push_back(t);
        if (is_principal(t)) principal_[i].push_back(t);
        if (is_regular(t)) regular_[i].push_back(t);
        if (t.is(Kind::Psi) && !t.psi_fn().empty()) psi_class_[i].push_back(t);
    }

    const std::vector<Term>& at(const std::vector<std::vector<Term>>& v, int L) const {
        static const std::vector<Term> none;
        return L >= 1 && L <= max_len_ ? v[static_cast<std::size_t>(L)] : none;
    }

    void level(int L) {
        if (L == 1) {
            offer(1, zero());
            offer(1, omega_one());
            offer(1, stable());
            for (int n = 1; n <= sys_.n(); ++n) offer(1, omega_stable(n));
            return;
        }
        for (int lp = 1; lp <= L - 2; ++lp)
            for (Term p : at(principal_, lp))
                for (Term r : at(by_len_, L - 1 - lp)) {
                    if (r.is_zero()) continue;
                    Term lead = r.is(Kind::Sum) ? r.summands().front() : r;
                    if (lt(sys_, p, lead)) continue;
                    offer(L, make_sum({p, r}));
                }
        for (int lb = 1; lb <= L - 2; ++lb)
            for (Term b : at(by_len_, lb))
                for (Term g : at(by_len_, L - 1 - lb))
                    if (is_phi_normal(sys_, b, g)) offer(L, make_phi(b, g));
        for (int n = 1; n <= sys_.n(); ++n)
            for (Term k : at(psi_class_, L - 1 - n)) offer(L, omega_kappa(k, n));
        for (int lp = 1; lp <= L - 2; ++lp)
            for (Term pi : at(regular_, lp))
                for (Term a : at(by_len_, L - 1 - lp)) offer(L, make_psi(pi, a));
        psi_with_fn(L);
    }

    // all ascending entry lists with total length exactly len
    void fn_lists(int len, std::optional<Term> last, std::vector<FnEntry>& acc,
                  const std::function<void(const std::vector<FnEntry>&)>& emit) {
        if (len == 0) {
            if (!acc.empty()) emit(acc);
            return;
        }
        for (int lc = 1; lc <= len - 1; ++lc)
            for (Term c : at(by_len_, lc)) {
                if (last && !lt(sys_, *last, c)) continue;
                if (!lt(sys_, c, sys_.lambda())) continue;
                for (int lv = 1; lv <= len - lc; ++lv)
                    for (Term v : at(by_len_, lv)) {
                        if (v.is_zero()) continue;
                        acc.push_back({c, v});
                        fn_lists(len - lc - lv, c, acc, emit);
                        acc.pop_back();
                    }
            }
    }

    void psi_with_fn(int L) {
        std::vector<Term> pis{stable()};
        for (int lp = 1; lp <= L - 4; ++lp) pis.insert(pis.end(), at(psi_class_, lp).begin(), at(psi_class_, lp).end());
        for (Term pi : pis) {
            int rest = L - 1 - static_cast<int>(pi.len());
            for (int la = 1; la <= rest - 2; ++la)
                for (Term a : at(by_len_, la)) {
                    std::vector<FnEntry> acc;
                    fn_lists(rest - la, std::nullopt, acc, [&](const std::vector<FnEntry>& es) {
                        if (pi.is(Kind::Stable) && es.size() != 1) return;
                        offer(L, make_psi(pi, a, FiniteFn{es}));
                    });
                }
        }
    }
};

}  // namespace

Universe enumerate(const System& sys, int max_len, std::optional<Term> upper, std::uint64_t budget) {
    if (max_len < 1) throw std::invalid_argument("max_len must be at least 1");
    Enumerator en(sys, max_len, budget);
    Universe u;
    u.n_param = sys.n();
    u.max_len = max_len;
    u.terms = en.run();
    u.candidates = en.candidates();
    if (upper) u.terms = below(sys, u.terms, upper);
    sort_terms(sys, u.terms);
    for (std::size_t i = 0; i < u.terms.size(); ++i) u.index.emplace(u.terms[i], i);
    return u;
}

// ---------------------------------------------------------------- closures

std::vector<Term> below(const System& sys, const std::vector<Term>& xs, std::optional<Term> bound) {
    if (!bound) return xs;
    std::vector<Term> out;
    for (Term x : xs)
        if (lt(sys, x, *bound)) out.push_back(x);
    return out;
}

bool subset_of(const std::vector<Term>& a, const std::vector<Term>& b) {
    std::unordered_set<Term> s(b.begin(), b.end());
    return std::all_of(a.begin(), a.end(), [&](Term t) { return s.count(t) != 0; });
}

std::vector<Term> set_minus(const std::vector<Term>& a, const std::vector<Term>& b) {
    std::unordered_set<Term> s(b.begin(), b.end());
    std::vector<Term> out;
    for (Term t : a)
        if (!s.count(t)) out.push_back(t);
    return out;
}

namespace {

// alpha = nullopt stands for infinity: every seed counts and no collapse applies
std::vector<Term> closure_impl(const System& sys, std::optional<Term> alpha, const std::vector<Term>& X,
                               const Universe& U) {
    std::unordered_set<Term> in;
    for (Term x : X)
        if (!alpha || lt(sys, x, *alpha)) in.insert(x);
    // components have smaller length, so one pass in length order reaches the fixpoint
    std::vector<Term> order = U.terms;
    std::stable_sort(order.begin(), order.end(), [](Term x, Term y) { return x.len() < y.len(); });
    auto has = [&](Term t) { return in.count(t) != 0; };
    for (Term t : order) {
        if (has(t)) continue;
        bool add = false;
        switch (t.kind()) {
        case Kind::Zero:
        case Kind::Stable: add = true; break;
        case Kind::Omega: add = t.om_kind() != OmKind::Kappa || has(t.om_base()); break;
        case Kind::Sum: add = std::all_of(t.summands().begin(), t.summands().end(), has); break;
        case Kind::Phi: add = has(t.phi_b()) && has(t.phi_g()); break;
        case Kind::Psi: {
            std::vector<Term> ks = t.psi_fn().k_set();
            add = alpha && lt(sys, *alpha, t.psi_pi()) && has(t.psi_pi()) && has(t.psi_arg()) &&
                  std::all_of(ks.begin(), ks.end(), has);
            break;
        }
        }
        if (add) in.insert(t);
    }
    std::vector<Term> out;
    for (Term t : U.terms)
        if (has(t)) out.push_back(t);
    for (Term x : X)
        if (has(x) && !U.contains(x)) out.push_back(x);
    sort_unique(sys, out);
    return out;
}

}  // namespace

std::vector<Term> closure_c(const System& sys, Term alpha, const std::vector<Term>& X, const Universe& U) {
    return closure_impl(sys, alpha, X, U);
}

ChainReport wf_sorted(const System& sys, std::vector<Term> X) {
    sort_unique(sys, X);
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = i + 1; j < X.size(); ++j) {
            Ord fwd = compare(sys, X[i], X[j]), back = compare(sys, X[j], X[i]);
            if (fwd != Ord::LT || back != Ord::GT) {
                std::vector<Term> w{X[i], X[j]};
                for (std::size_t k = i + 1; k < j; ++k)
                    if (lt(sys, X[i], X[k]) && lt(sys, X[k], X[j])) {
                        w.insert(w.begin() + 1, X[k]);
                        break;
                    }
                throw OrderViolation("order inconsistent on " + print(X[i]) + " and " + print(X[j]), w);
            }
        }
    ChainReport r;
    r.chain = std::move(X);
    r.note = "finite linear fragment: the well-founded part W(X) is all of X";
    return r;
}

DistinguishedReport distinguished_report(const System& sys, const std::vector<Term>& X, const Universe& U) {
    DistinguishedReport rep;
    rep.caveat = kTruncationCaveat;
    std::vector<Term> xs = X;
    sort_unique(sys, xs);
    if (xs.empty()) return rep;
    Term top = xs.back();
    for (Term alpha : U.terms) {
        if (lt(sys, top, alpha)) break;
        AlphaCheck chk;
        chk.alpha = alpha;
        chk.alpha_plus = next_regular(sys, alpha, &U.terms);
        std::vector<Term> closed = below(sys, closure_c(sys, alpha, xs, U), chk.alpha_plus);
        std::vector<Term> mine = below(sys, xs, chk.alpha_plus);
        chk.missing = set_minus(mine, closed);
        chk.extra = set_minus(closed, mine);
        if (!chk.equal()) rep.all_equal = false;
        rep.checks.push_back(std::move(chk));
    }
    return rep;
}

namespace {

// Om(S+n) with Om(S+0) = S and Om(S+N+1) = infinity
std::optional<Term> stable_level(const System& sys, int n) {
    if (n == 0) return stable();
    if (n > sys.n()) return std::nullopt;
    return omega_stable(n);
}

std::string level_name(const System& sys, int n) {
    std::optional<Term> t = stable_level(sys, n);
    return t ? print(*t) : std::string("inf");
}

std::string show_set(const std::vector<Term>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + print(xs[i]);
    return s + "}";
}

}  // namespace

CascadeReport cascade_report(const System& sys, const Universe& U, const std::vector<Term>& seed) {
    CascadeReport rep;
    rep.caveat = kTruncationCaveat;
    std::vector<Term> w = below(sys, closure_c(sys, stable(), below(sys, seed, stable()), U), stable());
    for (int n = 0; n <= sys.n() + 1; ++n) {
        CascadeLevel lvl;
        lvl.n = n;
        lvl.w = w;
        lvl.c = closure_impl(sys, stable_level(sys, n), w, U);
        std::string tag = std::to_string(n);
        std::vector<Term> cut = below(sys, lvl.c, stable_level(sys, n));
        if (cut != lvl.w)
            rep.violations.push_back("C_" + tag + " below " + level_name(sys, n) + " differs from W_" + tag +
                                     ": missing " + show_set(set_minus(lvl.w, cut)) + ", extra " +
                                     show_set(set_minus(cut, lvl.w)));
        if (!rep.levels.empty()) {
            const CascadeLevel& prev = rep.levels.back();
            std::string ptag = std::to_string(n - 1);
            if (!subset_of(lvl.c, prev.c))
                rep.violations.push_back("C_" + tag + " not contained in C_" + ptag + ": " +
                                         show_set(set_minus(lvl.c, prev.c)));
            if (!subset_of(prev.w, lvl.w)) rep.violations.push_back("W_" + ptag + " not contained in W_" + tag);
            Term prev_level = *stable_level(sys, n - 1);
            if (std::find(lvl.w.begin(), lvl.w.end(), prev_level) == lvl.w.end())
                rep.violations.push_back(print(prev_level) + " missing from W_" + tag);
        }
        rep.levels.push_back(lvl);
        w = below(sys, lvl.c, stable_level(sys, n + 1));
    }
    return rep;
}

}  // namespace otn
