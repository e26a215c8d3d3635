#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "otn/closure_lab.hpp"
#include "otn/coeff.hpp"
#include "otn/fn_calc.hpp"
#include "otn/json_io.hpp"
#include "otn/order.hpp"
#include "otn/properties.hpp"
#include "otn/term.hpp"
#include "otn/theta.hpp"

namespace {

using namespace otn;

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kUsage = 2;
constexpr int kViolation = 3;

struct Rejected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int n = 1;
    bool json = false;
};

void emit(const Options& o, const Json& j, const std::string& plain) {
    if (o.json)
        std::cout << j.dump() << "\n";
    else if (!plain.empty())
        std::cout << plain << (plain.back() == '\n' ? "" : "\n");
}

std::string lines(const std::vector<Term>& ts) {
    std::string s;
    for (Term t : ts) s += print(t) + "\n";
    return s;
}

Term read_term(const System& sys, const std::string& text) { return parse(text, sys.n()); }

// parses and insists on OT_N membership
Term read_valid(const System& sys, const std::string& text) {
    Term t = read_term(sys, text);
    Verdict v = validate(sys, t);
    if (!v.accepted) throw Rejected(print(t) + " rejected at clause " + v.clause + ": " + v.reason);
    return t;
}

// "[c:v,...]" as printed, or a JSON array of [c, v] string pairs
FiniteFn read_fn(const System& sys, const std::string& text) {
    std::vector<FnEntry> entries;
    Json j = Json::parse(text, nullptr, false);
    if (!j.is_discarded() && j.is_array()) {
        for (const auto& p : j) {
            if (!p.is_array() || p.size() != 2) throw ParseError("function entries must be [c, v] pairs", 0);
            entries.push_back({read_valid(sys, p.at(0).get<std::string>()), read_valid(sys, p.at(1).get<std::string>())});
        }
        return make_fn(sys, std::move(entries));
    }
    Term carrier = read_term(sys, "psi" + text + "(S;0)");
    for (const auto& e : carrier.psi_fn().entries) entries.push_back(e);
    return make_fn(sys, std::move(entries));
}

// newline-separated terms (blank lines and # comments skipped) or a JSON array of strings
std::vector<Term> read_file(const System& sys, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::vector<Term> out;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        for (const auto& s : Json::parse(text)) out.push_back(read_valid(sys, s.get<std::string>()));
        return out;
    }
    std::istringstream ls(text);
    std::string line;
    while (std::getline(ls, line)) {
        auto a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos || line[a] == '#') continue;
        auto b = line.find_last_not_of(" \t\r");
        out.push_back(read_valid(sys, line.substr(a, b - a + 1)));
    }
    return out;
}

Json suite_json(const SuiteResult& r) {
    return {{"suite", r.name},
            {"passed", r.passed()},
            {"checked", r.checked},
            {"violations", r.violations},
            {"examples", r.examples},
            {"notes", r.notes},
            {"seconds", r.seconds}};
}

std::string suite_plain(const SuiteResult& r) {
    std::ostringstream s;
    s << (r.passed() ? "PASS " : "FAIL ") << r.name << " checked=" << r.checked << " violations=" << r.violations
      << " seconds=" << r.seconds << "\n";
    for (const auto& n : r.notes) s << "  " << n << "\n";
    for (const auto& e : r.examples) s << "  violation: " << e << "\n";
    return s.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ordinal notation kernel"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--n", opt.n, "number of Omega levels above S")->check(CLI::PositiveNumber);
    app.add_flag("--json", opt.json, "machine-readable output");

    std::string a_text, b_text, file, below_text, kind, kappa_text, delta_text, alpha_text, suite = "all";
    int max_len = 0, budget = 0;
    bool count_only = false, distinguished = false;

    auto* validate_cmd = app.add_subcommand("validate", "decide OT_N membership");
    validate_cmd->add_option("EXPR", a_text)->required();

    auto* compare_cmd = app.add_subcommand("compare", "compare two terms");
    compare_cmd->add_option("A", a_text)->required();
    compare_cmd->add_option("B", b_text)->required();

    auto* sort_cmd = app.add_subcommand("sort", "sort the terms of a file ascending");
    sort_cmd->add_option("FILE", file)->required();

    auto* enum_cmd = app.add_subcommand("enum", "enumerate OT_N up to a length");
    enum_cmd->add_option("--max-len", max_len)->required();
    enum_cmd->add_option("--below", below_text, "keep terms below this bound");
    enum_cmd->add_flag("--count-only", count_only);

    auto* kset_cmd = app.add_subcommand("kset", "coefficient set K_D(EXPR) or K_X(EXPR)");
    auto* kset_below = kset_cmd->add_option("--below", below_text, "bound D");
    auto* kset_set = kset_cmd->add_option("--set", file, "file holding X");
    kset_below->excludes(kset_set);
    kset_cmd->add_option("EXPR", a_text)->required();

    auto* coeff_cmd = app.add_subcommand("coeff", "E, G, F and k coefficient sets");
    coeff_cmd->add_option("--kind", kind)->required()->check(CLI::IsMember({"E", "G", "F", "k"}));
    auto* kappa_opt = coeff_cmd->add_option("--kappa", kappa_text);
    auto* delta_opt = coeff_cmd->add_option("--delta", delta_text);
    kappa_opt->excludes(delta_opt);
    coeff_cmd->add_option("EXPR", a_text)->required();

    auto* closure_cmd = app.add_subcommand("closure", "C^alpha(X) inside the length-bounded universe");
    closure_cmd->add_option("--alpha", alpha_text)->required();
    closure_cmd->add_option("--x", file)->required();
    closure_cmd->add_option("--max-len", max_len)->required();
    closure_cmd->add_flag("--distinguished", distinguished, "also compare W(C^a(X)) with X below a^+ for a in X");

    auto* cascade_cmd = app.add_subcommand("cascade", "W_n / C_n cascade from a seed set");
    cascade_cmd->add_option("--seed", file)->required();
    cascade_cmd->add_option("--max-len", max_len)->required();

    auto* fn_cmd = app.add_subcommand("fn", "finite function calculus");
    fn_cmd->require_subcommand(1);
    std::string f_text, g_text, c_text, d_text;
    auto* lessc_cmd = fn_cmd->add_subcommand("lessc", "decide F <^C X");
    lessc_cmd->add_option("F", f_text)->required();
    lessc_cmd->add_option("C", c_text)->required();
    lessc_cmd->add_option("X", a_text)->required();
    auto* lx_cmd = fn_cmd->add_subcommand("lx", "decide F <lx^B G");
    lx_cmd->add_option("F", f_text)->required();
    lx_cmd->add_option("G", g_text)->required();
    lx_cmd->add_option("--b", b_text, "start point, default 0");
    auto* o_cmd = fn_cmd->add_subcommand("o", "o(F) or o(F;D)");
    o_cmd->add_option("F", f_text)->required();
    o_cmd->add_option("--d", d_text);

    auto* selftest_cmd = app.add_subcommand("selftest", "run property suites");
    std::vector<std::string> suite_choices = suite_names();
    suite_choices.push_back("all");
    selftest_cmd->add_option("--suite", suite)->check(CLI::IsMember(suite_choices));
    selftest_cmd->add_option("--budget", budget, "universe length for universe-based suites, 0 keeps defaults");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        System sys(opt.n);

        if (*validate_cmd) {
            Term t = read_term(sys, a_text);
            Verdict v = validate(sys, t);
            std::string plain = v.accepted ? "accepted, clause " + v.clause
                                           : "rejected, clause " + v.clause + ": " + v.reason;
            if (v.accepted && !v.m.empty()) plain += ", m = " + print(v.m);
            emit(opt, to_json(v), plain);
            return v.accepted ? kOk : kRejected;
        }
        if (*compare_cmd) {
            Term a = read_valid(sys, a_text), b = read_valid(sys, b_text);
            const char* sym = ord_symbol(compare(sys, a, b));
            emit(opt, {{"a", print(a)}, {"b", print(b)}, {"order", sym}}, sym);
            return kOk;
        }
        if (*sort_cmd) {
            std::vector<Term> ts = read_file(sys, file);
            sort_terms(sys, ts);
            emit(opt, printed(ts), lines(ts));
            return kOk;
        }
        if (*enum_cmd) {
            std::optional<Term> bound;
            if (!below_text.empty()) bound = read_valid(sys, below_text);
            Universe u = enumerate(sys, max_len, bound);
            emit(opt, to_json(u, !count_only), count_only ? std::to_string(u.terms.size()) : lines(u.terms));
            return kOk;
        }
        if (*kset_cmd) {
            Term t = read_valid(sys, a_text);
            KResult k;
            if (*kset_set) {
                std::vector<Term> xs = read_file(sys, file);
                std::unordered_set<Term> members(xs.begin(), xs.end());
                k = k_set(sys, [&](Term x) { return members.count(x) != 0; }, t);
            } else if (*kset_below) {
                k = k_below(sys, read_valid(sys, below_text), t);
            } else {
                throw CLI::ValidationError("kset needs --below or --set");
            }
            std::string plain = "top";
            if (!k.top) {
                plain = "{";
                for (std::size_t i = 0; i < k.elems.size(); ++i) plain += (i ? ", " : "") + print(k.elems[i]);
                plain += "}";
            }
            emit(opt, to_json(k), plain);
            return kOk;
        }
        if (*coeff_cmd) {
            Term t = read_valid(sys, a_text);
            std::vector<Term> out;
            if (kind == "E") {
                out = e_set(sys, t);
            } else if (kind == "G") {
                if (kappa_text.empty()) throw CLI::ValidationError("--kind G needs --kappa");
                out = g_set(sys, read_valid(sys, kappa_text), t);
            } else {
                if (delta_text.empty()) throw CLI::ValidationError("--kind " + kind + " needs --delta");
                Term d = read_valid(sys, delta_text);
                out = kind == "F" ? f_set(sys, d, t) : k_tail(sys, d, t);
            }
            emit(opt, {{"kind", kind}, {"set", printed(out)}}, lines(out));
            return kOk;
        }
        if (*closure_cmd) {
            Term alpha = read_valid(sys, alpha_text);
            std::vector<Term> xs = read_file(sys, file);
            Universe u = enumerate(sys, max_len);
            std::vector<Term> c = closure_c(sys, alpha, xs, u);
            Json j = {{"alpha", print(alpha)}, {"closure", printed(c)}, {"universe", to_json(u, false)},
                      {"truncated_universe", kTruncationCaveat}};
            std::string plain = lines(c);
            if (distinguished) {
                DistinguishedReport r = distinguished_report(sys, xs, u);
                j["distinguished"] = to_json(r);
                plain += std::string("distinguished: ") + (r.all_equal ? "yes" : "no") + "\n";
            }
            emit(opt, j, plain);
            return kOk;
        }
        if (*cascade_cmd) {
            std::vector<Term> seed = read_file(sys, file);
            Universe u = enumerate(sys, max_len);
            CascadeReport r = cascade_report(sys, u, seed);
            std::ostringstream s;
            for (const auto& l : r.levels) s << "W_" << l.n << " (" << l.w.size() << "), C_" << l.n << " (" << l.c.size() << ")\n";
            for (const auto& v : r.violations) s << "violation: " << v << "\n";
            s << (r.ok() ? "ok" : "violated");
            emit(opt, to_json(r), s.str());
            return r.ok() ? kOk : kViolation;
        }
        if (*fn_cmd) {
            FiniteFn f = read_fn(sys, f_text);
            if (*lessc_cmd) {
                bool v = less_c(sys, f, read_valid(sys, c_text), read_valid(sys, a_text));
                emit(opt, {{"holds", v}}, v ? "true" : "false");
            } else if (*lx_cmd) {
                FiniteFn g = read_fn(sys, g_text);
                Term b = b_text.empty() ? zero() : read_valid(sys, b_text);
                bool v = lx_less(sys, f, g, b);
                emit(opt, {{"holds", v}}, v ? "true" : "false");
            } else {
                Term v = d_text.empty() ? o_of(sys, f) : o_at(sys, f, read_valid(sys, d_text));
                emit(opt, {{"o", print(v)}}, print(v));
            }
            return kOk;
        }
        if (*selftest_cmd) {
            std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
            Json all = Json::array();
            std::string plain;
            bool ok = true;
            for (const auto& name : names) {
                SuiteResult r = run_suite(name, budget);
                ok = ok && r.passed();
                all.push_back(suite_json(r));
                plain += suite_plain(r);
            }
            emit(opt, all, plain);
            return ok ? kOk : kViolation;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const Json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const Rejected& e) {
        std::cerr << e.what() << "\n";
        return kRejected;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kRejected;
    }
    return kUsage;
}
