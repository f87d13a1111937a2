#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>

#include "fubini/essential.hpp"
#include "fubini/flag_minors.hpp"
#include "fubini/io.hpp"
#include "fubini/orders.hpp"
#include "fubini/pattern.hpp"
#include "fubini/verify.hpp"

namespace fubini::cli {

namespace {

using nlohmann::json;

std::string join(std::span<const int> values, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) s += sep;
        s += std::to_string(values[i]);
    }
    return s;
}

std::string braces(std::span<const int> values) { return "{" + join(values) + "}"; }

void check_budget(int n, int k, std::size_t budget) {
    if (k < 1 || k > n) throw DomainError("need 1 <= k <= n");
    if (n > 24) throw DomainError("n above 24 is not supported");
    if (fubini_count(n, k) > budget)
        throw DomainError("|W_{" + std::to_string(n) + "," + std::to_string(k) + "}| = " +
                          std::to_string(fubini_count(n, k)) + " exceeds budget " + std::to_string(budget));
}

void print_info(const FubiniWord& w, std::ostream& out) {
    std::vector<std::string> beta;
    for (const auto& b : beta_chain(w)) beta.push_back(braces(b));
    std::string chain;
    for (std::size_t i = 0; i < beta.size(); ++i) chain += (i ? " < " : "") + beta[i];
    std::string blocks;
    for (const auto& b : ordered_set_partition(w)) blocks += (blocks.empty() ? "" : " | ") + join(b);
    out << "word      " << w.to_string() << "\n"
        << "n k       " << w.n() << " " << w.k() << "\n"
        << "alpha     (" << join(alpha_vector(w), ", ") << ")\n"
        << "pi        " << initial_permutation(w).to_string() << "\n"
        << "blocks    " << blocks << "\n"
        << "beta      " << chain << "\n"
        << "conv      " << convexify(w).to_string() << "\n"
        << "std       " << standardize(w).to_string() << "\n"
        << "dim       " << dimension(w) << "\n"
        << "cell dim  " << cell_dimension(w) << "\n"
        << "codim     " << codimension(w) << "\n"
        << "pattern\n";
    std::string p = PatternMatrix(w).to_string();
    std::size_t start = 0;
    while (start < p.size()) {
        std::size_t end = p.find('\n', start);
        if (end == std::string::npos) end = p.size();
        out << "  " << p.substr(start, end - start) << "\n";
        start = end + 1;
    }
}

void print_minors(const FubiniWord& w, const std::string& only, bool as_json, std::ostream& out) {
    FlagClassification c = classify_all(w);
    json list = json::array();
    for (std::size_t i = 0; i < c.index().size(); ++i) {
        char cls = to_char(c.at(i));
        if (!only.empty() && only[0] != cls) continue;
        const PositionSet& cols = c.index().at(i);
        if (as_json)
            list.push_back({{"J", std::vector<int>(cols.begin(), cols.end())}, {"class", std::string(1, cls)}});
        else
            out << braces(cols) << " " << cls << "\n";
    }
    if (as_json) out << json{{"word", w.to_string()}, {"minors", list}}.dump(2) << "\n";
}

void print_compare(const FubiniWord& v, const FubiniWord& w, const std::string& order, std::size_t budget,
                   std::ostream& out) {
    if (v.n() != w.n() || v.k() != w.k()) throw DomainError("compare: words must share n and k");
    if (order == "touch") {
        out << v.to_string() << " ⇀ " << w.to_string() << ": " << (touches(v, w) ? "true" : "false") << "\n";
        return;
    }
    OrderKind kind = parse_order_kind(order);
    bool below = false;
    bool above = false;
    if (kind == OrderKind::Medium) {
        below = medium_leq(v, w);
        above = medium_leq(w, v);
    } else {
        check_budget(v.n(), v.k(), budget);
        Poset p = build_poset(v.n(), v.k(), kind, {budget});
        below = p.leq(p.index_of(v), p.index_of(w));
        above = p.leq(p.index_of(w), p.index_of(v));
    }
    const char* rel = below && above ? "=" : below ? "<" : above ? ">" : "||";
    out << v.to_string() << " " << rel << " " << w.to_string() << "\n";
}

void print_essential(const FubiniWord& w, std::ostream& out) {
    auto cells = [](const Diagram& d) {
        std::string s;
        for (const auto& c : d) s += (s.empty() ? "" : " ") + std::string("(") + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
        return s.empty() ? std::string("none") : s;
    };
    Diagram d = fubini_diagram(w);
    RankedEssentialSet ess = ranked_essential_set(w);
    out << "std(conv)  " << standardize(convexify(w)).to_string() << "\n"
        << "diagram    " << cells(d) << "\n"
        << "essential  " << cells(essential_cells(d)) << "\n";
    if (ess.triples.empty()) out << "Ess*       none\n";
    for (const auto& t : ess.triples)
        out << "Ess*       h=" << t.h << " beta_" << t.beta_index << "=" << braces(t.beta) << " r=" << t.rank << "\n";
    if (!ess.unmatched.empty()) out << "unmatched  " << cells(ess.unmatched) << "\n";
}

void print_verify(const VerifyReport& report, bool as_json, std::ostream& out) {
    if (as_json) {
        out << report.to_json().dump(2) << "\n";
        return;
    }
    std::size_t width = 0;
    for (const auto& s : report.suites) width = std::max(width, s.name.size());
    out << "verify n=" << report.n << " k=" << report.k << " seed=" << report.seed << " trials=" << report.trials << "\n";
    for (const auto& s : report.suites)
        out << std::left << std::setw(static_cast<int>(width) + 2) << s.name << std::setw(9) << to_string(s.status)
            << s.summary << "\n";
    out << (report.any_failure() ? "result: FAIL" : "result: ok") << "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fubini words, pattern matrices, flag minors and Fubini-Bruhat orders"};
    app.require_subcommand(1);
    std::size_t budget = 20000;

    int n = 0;
    int k = 0;
    std::string word_text;
    std::string other_text;
    std::string order = "medium";
    std::string format = "dot";
    std::string only_class;
    std::string matrix_path;
    bool as_json = false;
    bool hasse_only = false;
    std::uint64_t seed = 1;
    int trials = 20;
    std::vector<std::string> suites;

    auto* enumerate = app.add_subcommand("enumerate", "List W_{n,k} in lexicographic order");
    enumerate->add_option("n", n)->required();
    enumerate->add_option("k", k)->required();
    enumerate->add_option("--budget", budget, "Largest |W_{n,k}| accepted");

    auto* info = app.add_subcommand("info", "Statistics and pattern matrix of a word");
    info->add_option("WORD", word_text)->required();

    auto* minors = app.add_subcommand("minors", "Classify every flag minor as S, T or U");
    minors->add_option("WORD", word_text)->required();
    minors->add_option("--class", only_class, "Only list minors of this class")->check(CLI::IsMember({"S", "T", "U"}));
    minors->add_flag("--json", as_json);

    auto* compare = app.add_subcommand("compare", "Compare two words in an order");
    compare->add_option("V", word_text)->required();
    compare->add_option("W", other_text)->required();
    compare->add_option("--order", order)->check(CLI::IsMember({"medium", "espresso", "decaf", "touch"}));
    compare->add_option("--budget", budget);

    auto* poset = app.add_subcommand("poset", "Export an order on W_{n,k}");
    poset->add_option("n", n)->required();
    poset->add_option("k", k)->required();
    poset->add_option("--order", order)->check(CLI::IsMember({"medium", "espresso", "decaf"}));
    poset->add_option("--out", format)->check(CLI::IsMember({"dot", "json"}));
    poset->add_flag("--hasse-only", hasse_only, "Omit the full relation list from JSON");
    poset->add_option("--budget", budget);

    auto* poincare = app.add_subcommand("poincare", "Sum of q^codim over W_{n,k}");
    poincare->add_option("n", n)->required();
    poincare->add_option("k", k)->required();

    auto* essential = app.add_subcommand("essential", "Diagram, essential cells and ranked essential set");
    essential->add_option("WORD", word_text)->required();

    auto* decomp = app.add_subcommand("decompose", "Factor a spanning matrix as U * A' * T");
    decomp->add_option("--matrix", matrix_path)->required();

    auto* member = app.add_subcommand("member", "Test whether a matrix lies in the closure of a cell");
    member->add_option("WORD", word_text)->required();
    member->add_option("--matrix", matrix_path)->required();

    auto* verify = app.add_subcommand("verify", "Run the cross-oracle property suites");
    verify->add_option("n", n)->required();
    verify->add_option("k", k)->required();
    verify->add_option("--suites", suites, "Comma-separated suite names")->delimiter(',');
    verify->add_option("--seed", seed);
    verify->add_option("--trials", trials);
    verify->add_option("--budget", budget);
    verify->add_flag("--json", as_json);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitDomainError;
    }

    try {
        if (*enumerate) {
            check_budget(n, k, budget);
            for_each_word(n, k, [&](const FubiniWord& w) { out << w.to_string() << "\n"; });
        } else if (*info) {
            print_info(parse_word(word_text), out);
        } else if (*minors) {
            print_minors(parse_word(word_text), only_class, as_json, out);
        } else if (*compare) {
            print_compare(parse_word(word_text), parse_word(other_text), order, budget, out);
        } else if (*poset) {
            check_budget(n, k, budget);
            Poset p = build_poset(n, k, parse_order_kind(order), {budget});
            out << export_poset(p, parse_poset_format(format), hasse_only);
        } else if (*poincare) {
            check_budget(n, k, std::numeric_limits<std::size_t>::max());
            out << poincare_polynomial(n, k).to_string() << "\n";
        } else if (*essential) {
            print_essential(parse_word(word_text), out);
        } else if (*decomp) {
            Decomposition d = decompose(read_matrix_file(matrix_path));
            json j{{"word", d.word.to_string()},
                   {"unitriangular", matrix_to_json(d.unitriangular)},
                   {"reduced", matrix_to_json(d.reduced)},
                   {"scaling", matrix_to_json(d.scaling)}};
            out << j.dump(2) << "\n";
        } else if (*member) {
            RationalMatrix a = read_matrix_file(matrix_path);
            FubiniWord w = parse_word(word_text);
            bool by_flags = member_closure_flags(a, w);
            bool by_ess = member_closure_ess(a, w);
            out << "flag minors    " << (by_flags ? "true" : "false") << "\n"
                << "essential set  " << (by_ess ? "true" : "false") << "\n";
            if (by_flags != by_ess) {
                err << "membership tests disagree\n";
                return kExitViolation;
            }
        } else if (*verify) {
            check_budget(n, k, budget);
            VerifyReport report = verify_suite({n, k, seed, trials, budget, suites});
            print_verify(report, as_json, out);
            return report.any_failure() ? kExitViolation : kExitOk;
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const InternalError& e) {
        err << "internal disagreement: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitOk;
}

} // namespace fubini::cli
