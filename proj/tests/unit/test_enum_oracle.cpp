#include <doctest.h>

#include <map>
#include <unordered_set>

#include "otn/closure_lab.hpp"
#include "otn/order.hpp"
#include "otn/properties.hpp"
#include "otn/term.hpp"

using namespace otn;

namespace {

// every raw tree up to max_len, grouped by length, built without the enumerator
std::map<unsigned, std::vector<Term>> raw_trees(int n, unsigned max_len) {
    std::map<unsigned, std::vector<Term>> by;
    std::unordered_set<Term> seen;
    auto put = [&](Term t) {
        if (t.len() <= max_len && seen.insert(t).second) by[t.len()].push_back(t);
    };
    put(zero());
    put(stable());
    put(omega_one());
    for (int k = 1; k <= n; ++k) put(omega_stable(k));
    for (unsigned L = 2; L <= max_len; ++L) {
        auto each = [&](unsigned len, auto&& fn) {
            if (by.count(len))
                for (Term t : std::vector<Term>(by[len])) fn(t);
        };
        for (unsigned a = 1; a + 1 < L; ++a)
            each(a, [&](Term x) { each(L - 1 - a, [&](Term y) { put(make_phi(x, y)); }); });
        for (int k = 1; k <= n; ++k)
            if (L > 1u + k) each(L - 1 - k, [&](Term x) { put(omega_kappa(x, k)); });
        // one function entry suffices below length 7
        for (unsigned a = 1; a + 1 < L; ++a)
            each(a, [&](Term p) {
                each(L - 1 - a, [&](Term x) { put(make_psi(p, x)); });
                for (unsigned b = 1; a + b + 1 < L; ++b)
                    each(b, [&](Term x) {
                        for (unsigned c = 1; a + b + c + 1 < L; ++c)
                            each(c, [&](Term cc) {
                                each(L - 1 - a - b - c, [&](Term v) { put(make_psi(p, x, FiniteFn{{{cc, v}}})); });
                            });
                    });
            });
        // sums of non-sum parts, parts joined by one symbol each
        std::function<void(unsigned, std::vector<Term>&)> sums = [&](unsigned left, std::vector<Term>& acc) {
            if (left == 0 && acc.size() >= 2) {
                put(make_sum(acc));
                return;
            }
            unsigned sep = acc.empty() ? 0 : 1;
            for (unsigned a = 1; a + sep <= left; ++a)
                each(a, [&](Term x) {
                    if (x.is(Kind::Sum)) return;
                    acc.push_back(x);
                    sums(left - a - sep, acc);
                    acc.pop_back();
                });
        };
        std::vector<Term> acc;
        sums(L, acc);
    }
    return by;
}

std::size_t oracle_count(int n, unsigned max_len) {
    System sys(n);
    std::size_t count = 0;
    for (auto& [len, ts] : raw_trees(n, max_len))
        for (Term t : ts)
            if (is_valid(sys, t)) ++count;
    return count;
}

}  // namespace

TEST_CASE("enumeration matches brute-force generation and validation") {
    for (int n : {1, 2})
        for (int L = 1; L <= 5; ++L) {
            System sys(n);
            CAPTURE(n);
            CAPTURE(L);
            CHECK(enumerate(sys, L).terms.size() == oracle_count(n, static_cast<unsigned>(L)));
        }
}

TEST_CASE("frozen universe counts") {
    for (const Golden& g : universe_goldens()) {
        CAPTURE(g.n);
        CAPTURE(g.max_len);
        CHECK(oracle_count(g.n, static_cast<unsigned>(g.max_len)) == g.count);
        System sys(g.n);
        CHECK(enumerate(sys, g.max_len).terms.size() == g.count);
    }
}

TEST_CASE("counts do not depend on construction order") {
    System a(1);
    std::size_t first = enumerate(a, 5).terms.size();
    raw_trees(2, 6);
    System b(1);
    CHECK(enumerate(b, 5).terms.size() == first);
    CHECK(first == 318);
}
