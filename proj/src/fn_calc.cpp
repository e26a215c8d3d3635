#include "otn/fn_calc.hpp"

#include <algorithm>

#include "otn/theta.hpp"

namespace otn {

FiniteFn restrict_below(const System& sys, const FiniteFn& f, Term c) {
    FiniteFn out;
    for (const auto& e : f.entries)
        if (lt(sys, e.arg, c)) out.entries.push_back(e);
    return out;
}

FiniteFn restrict_from(const System& sys, const FiniteFn& f, Term c) {
    FiniteFn out;
    for (const auto& e : f.entries)
        if (!lt(sys, e.arg, c)) out.entries.push_back(e);
    return out;
}

FiniteFn concat(const System& sys, const FiniteFn& g, const FiniteFn& f, Term c) {
    FiniteFn out = restrict_below(sys, g, c);
    for (const auto& e : restrict_from(sys, f, c).entries) out.entries.push_back(e);
    return out;
}

FiniteFn make_fn(const System& sys, std::vector<FnEntry> entries) {
    entries.erase(std::remove_if(entries.begin(), entries.end(), [](const FnEntry& e) { return e.val.is_zero(); }),
                  entries.end());
    std::stable_sort(entries.begin(), entries.end(),
                     [&](const FnEntry& x, const FnEntry& y) { return lt(sys, x.arg, y.arg); });
    return FiniteFn{std::move(entries)};
}

namespace {

// least support point strictly above c
const FnEntry* next_above(const System& sys, const FiniteFn& f, Term c) {
    for (const auto& e : f.entries)
        if (lt(sys, c, e.arg)) return &e;
    return nullptr;
}

bool less_from(const System& sys, const FiniteFn& f, Term c, Term xi) {
    Term fc = f.at(c);
    const FnEntry* up = next_above(sys, f, c);
    if (restrict_from(sys, f, c).empty()) return true;
    for (Term mu : parts_terms(sys, xi)) {
        if (!lt(sys, fc, mu)) continue;
        if (!up) return true;
        Term step = osub(sys, up->arg, c);
        Term next = theta_minus_term(sys, step, tail_term(sys, mu));
        if (less_from(sys, f, up->arg, next)) return true;
    }
    return false;
}

// the merge step of the irreducibility recursion, on (arg, value) pairs
bool irreducible_pairs(const System& sys, std::vector<FnEntry> es) {
    while (es.size() >= 2) {
        const FnEntry top = es.back();
        FnEntry& below = es[es.size() - 2];
        Term lift = theta_term(sys, osub(sys, top.arg, below.arg), top.val);
        if (compare(sys, tail_term(sys, below.val), lift) != Ord::GT) return false;
        below.val = add(sys, below.val, lift);
        es.pop_back();
    }
    return true;
}

Term shortest_part_above(const System& sys, Term x, Term bound) {
    for (Term mu : parts_terms(sys, x))
        if (lt(sys, bound, mu)) return mu;
    return x;
}

bool lx_from(const System& sys, const FiniteFn& f, const FiniteFn& g, Term b) {
    FiniteFn fb = restrict_from(sys, f, b), gb = restrict_from(sys, g, b);
    if (fb == gb) return false;
    std::vector<Term> pts = fb.support();
    for (Term t : gb.support())
        if (std::find(pts.begin(), pts.end(), t) == pts.end()) pts.push_back(t);
    std::sort(pts.begin(), pts.end(), [&](Term x, Term y) { return lt(sys, x, y); });
    Term c;
    for (Term p : pts)
        if (f.at(p) != g.at(p)) {
            c = p;
            break;
        }
    Term fc = f.at(c), gc = g.at(c);
    if (lt(sys, fc, gc)) {
        Term tl_mu = tail_term(sys, shortest_part_above(sys, gc, fc));
        for (const auto& e : f.entries) {
            if (!lt(sys, c, e.arg)) continue;
            Term lifted = theta_term(sys, osub(sys, e.arg, c), e.val);
            if (le(sys, tl_mu, lifted) && !lx_from(sys, f, g, e.arg)) return false;
        }
        return true;
    }
    Term tl_nu = tail_term(sys, shortest_part_above(sys, fc, gc));
    for (const auto& e : g.entries) {
        if (!lt(sys, c, e.arg)) continue;
        Term lifted = theta_term(sys, osub(sys, e.arg, c), e.val);
        if (le(sys, tl_nu, lifted) && lx_from(sys, f, g, e.arg)) return true;
    }
    return false;
}

}  // namespace

bool less_c(const System& sys, const FiniteFn& f, Term c, Term xi) { return less_from(sys, f, c, xi); }

bool is_irreducible(const System& sys, const FiniteFn& f) {
    try {
        return irreducible_pairs(sys, f.entries);
    } catch (const RangeError&) {
        return false;
    }
}

bool lx_less(const System& sys, const FiniteFn& f, const FiniteFn& g, Term b) {
    if (!is_irreducible(sys, f) || !is_irreducible(sys, g))
        throw IrreducibilityError("lx comparison needs irreducible functions");
    return lx_from(sys, f, g, b);
}

Term o_at(const System& sys, const FiniteFn& f, Term d) {
    if (!is_irreducible(sys, f)) throw IrreducibilityError("o needs an irreducible function");
    if (f.empty()) return zero();
    bool on_grid = d.is_zero() || f.in_supp(d);
    if (!on_grid) {
        const FnEntry* up = next_above(sys, f, d);
        if (!up) return zero();
        return theta_term(sys, osub(sys, up->arg, d), succ(sys, o_at(sys, f, up->arg)));
    }
    std::vector<FnEntry> grid;
    if (!f.in_supp(zero())) grid.push_back({zero(), zero()});
    grid.insert(grid.end(), f.entries.begin(), f.entries.end());
    Term zeta = zero();
    for (std::size_t i = grid.size(); i-- > 0;) {
        Term own = omega_times(sys, a_measure_term(sys, grid[i].val));
        if (i + 1 == grid.size())
            zeta = own;
        else
            zeta = add(sys, own, theta_term(sys, osub(sys, grid[i + 1].arg, grid[i].arg), succ(sys, zeta)));
        if (grid[i].arg == d) return zeta;
    }
    return zeta;
}

Term o_of(const System& sys, const FiniteFn& f) { return o_at(sys, f, zero()); }

StepDownCheck step_down_check(const System& sys, const FiniteFn& f, const FiniteFn& g, Term d, Term c) {
    StepDownCheck r;
    auto fail = [&](const char* what) { r.failed.emplace_back(what); };
    if (!f.in_supp(c)) fail("c in supp(f)");
    if (!lt(sys, d, c)) fail("d < c");
    auto gap_free = [&](const FiniteFn& h) {
        for (const auto& e : h.entries)
            if (lt(sys, d, e.arg) && lt(sys, e.arg, c)) return false;
        return true;
    };
    if (!gap_free(f)) fail("(d,c) disjoint from supp(f)");
    if (!is_irreducible(sys, g)) fail("g irreducible");
    if (restrict_below(sys, g, d) != restrict_below(sys, f, d)) fail("g_d = f_d");
    if (!gap_free(g)) fail("(d,c) disjoint from supp(g)");
    if (r.failed.empty()) {
        try {
            Term step = theta_term(sys, osub(sys, c, d), f.at(c));
            if (!below_plus_omega(sys, g.at(d), f.at(d), step)) fail("g(d) < f(d) + theta_{c-d}(f(c)) * w");
            if (!less_c(sys, g, c, f.at(c))) fail("g <^c f(c)");
        } catch (const std::runtime_error&) {
            fail("theta normal form");
        }
    }
    r.ok = r.failed.empty();
    return r;
}

}  // namespace otn
