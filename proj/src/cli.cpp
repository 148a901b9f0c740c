#include "dpp/cli.hpp"

#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dpp/bijection.hpp"
#include "dpp/enumeration.hpp"
#include "dpp/text.hpp"

namespace dpp {

namespace {

// Full enumeration is exponential in the order, so the unbounded
// subcommands refuse orders past these caps instead of hanging. Order 7
// unfiltered means 218,348 arrays; order 8 with no special parts, 8!.
constexpr int kMaxUnfilteredOrder = 7;
constexpr int kMaxNoSpecialOrder = 8;
constexpr int kMaxFormulaOrder = 200;

std::string join(const std::vector<int>& values) {
    std::string text;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) text += ' ';
        text += std::to_string(values[i]);
    }
    return text;
}

void require_listable(const DppFilter& filter, bool limited) {
    if (limited) return;
    const int cap =
        filter.no_special_parts ? kMaxNoSpecialOrder : kMaxUnfilteredOrder;
    if (filter.order > cap)
        throw InfeasibleOrderError(
            "full enumeration at order " + std::to_string(filter.order) +
            " is out of reach; the cap is " + std::to_string(cap) +
            (filter.no_special_parts ? " with" : " without") +
            " --no-special (use --limit for a prefix)");
}

int cmd_to_perm(const std::string& text, int order, bool trace,
                std::ostream& out, std::ostream& err) {
    const Dpp d = parse_dpp(text);
    std::vector<BijectionStep> steps;
    const Permutation p = dpp_to_permutation(d, order, trace ? &steps : nullptr);
    for (const auto& step : steps) {
        err << "row " << step.row_index << ": ";
        if (!step.prefix.empty()) err << join(step.prefix) << ' ';
        err << "| " << join(step.beta_block) << " | " << join(step.gamma_block)
            << "\n";
    }
    out << to_text(p) << "\n";
    return 0;
}

int cmd_to_dpp(const std::string& text, std::ostream& out) {
    out << to_text(permutation_to_dpp(parse_permutation(text))) << "\n";
    return 0;
}

int cmd_validate(const std::string& kind, const std::string& text,
                 std::ostream& out) {
    if (kind == "dpp")
        parse_dpp(text);
    else
        parse_permutation(text);
    out << "valid\n";
    return 0;
}

int cmd_stats_perm(const std::string& text, std::ostream& out) {
    const Permutation p = parse_permutation(text);
    out << "n: " << p.size() << "\n";
    out << "ascents: " << p.ascent_count() << "\n";
    out << "runs: " << p.descending_runs().size() << "\n";
    out << "non_inversions: " << p.non_inversion_count() << "\n";
    out << "inversions: " << p.inversion_count() << "\n";
    return 0;
}

int cmd_stats_dpp(const std::string& text, int order, std::ostream& out) {
    const Dpp d = parse_dpp(text);
    out << "rows: " << d.row_count() << "\n";
    out << "parts: " << d.part_count() << "\n";
    out << "sum: " << d.entry_sum() << "\n";
    out << "max_entry: " << d.max_entry() << "\n";
    out << "special_parts: " << d.special_parts().size() << "\n";
    if (!d.has_special_part()) {
        const Permutation p = dpp_to_permutation(d, order);
        out << "non_inversions: " << non_inversions_via_dpp(d) << "\n";
        out << "permutation: " << to_text(p) << "\n";
    }
    return 0;
}

int cmd_enumerate(const DppFilter& filter, std::optional<long long> limit,
                  std::ostream& out) {
    require_listable(filter, limit.has_value());
    long long printed = 0;
    const bool exhausted = enumerate_dpps(filter, [&](const Dpp& d) {
        out << to_text(d) << "\n";
        ++printed;
        return !limit || printed < *limit;
    });
    if (exhausted) out << "total: " << printed << "\n";
    return 0;
}

int cmd_count(const DppFilter& filter, std::ostream& out) {
    require_listable(filter, false);
    out << count_dpps(filter).str() << "\n";
    return 0;
}

int cmd_formula_count(int order, std::ostream& out) {
    if (order > kMaxFormulaOrder)
        throw InfeasibleOrderError("formula-count is capped at order " +
                                   std::to_string(kMaxFormulaOrder));
    out << dpp_count_formula(order).str() << "\n";
    return 0;
}

int cmd_eulerian(int n, int k, std::ostream& out) {
    if (n > kMaxFormulaOrder)
        throw InfeasibleOrderError("eulerian is capped at n = " +
                                   std::to_string(kMaxFormulaOrder));
    out << eulerian_number(n, k).str() << "\n";
    return 0;
}

int cmd_verify(int n, bool as_json, std::ostream& out) {
    const VerifyReport report = verify_order(n);
    if (as_json)
        out << to_json(report) << "\n";
    else
        out << render_report(report);
    return report.passed() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"descending plane partitions and their partner permutations"};
    app.name("dpp");
    app.require_subcommand(1);

    std::string to_perm_text;
    int to_perm_order = 0;
    bool to_perm_trace = false;
    auto* to_perm = app.add_subcommand(
        "to-perm", "Map an array with no special part to its permutation");
    to_perm
        ->add_option("array", to_perm_text,
                     "rows joined by '/', entries space-separated, '-' for "
                     "the empty array")
        ->required();
    to_perm->add_option("-n,--order", to_perm_order, "order n of the map")
        ->required();
    to_perm->add_flag("--trace", to_perm_trace,
                      "print each construction step to stderr as "
                      "'prefix | beta | gamma'");

    std::string to_dpp_text;
    auto* to_dpp =
        app.add_subcommand("to-dpp", "Map a permutation back to its array");
    to_dpp->add_option("permutation", to_dpp_text, "space-separated values of 1..n")
        ->required();

    std::string validate_text;
    std::string validate_kind = "dpp";
    auto* validate =
        app.add_subcommand("validate", "Check that the input parses and is valid");
    validate->add_option("input", validate_text, "array or permutation text")
        ->required();
    validate->add_option("--kind", validate_kind, "what the input claims to be")
        ->check(CLI::IsMember({"dpp", "perm"}))
        ->capture_default_str();

    std::string stats_text;
    std::string stats_kind;
    int stats_order = 0;
    auto* stats = app.add_subcommand("stats", "Print statistics of the input");
    stats->add_option("input", stats_text, "array or permutation text")
        ->required();
    stats->add_option("--kind", stats_kind, "what the input is")
        ->check(CLI::IsMember({"dpp", "perm"}))
        ->required();
    auto* stats_order_opt = stats->add_option(
        "-n,--order", stats_order, "order for the partner permutation (dpp only)");

    int enumerate_order = 0;
    bool enumerate_no_special = false;
    int enumerate_rows = 0;
    long long enumerate_limit = 0;
    auto* enumerate = app.add_subcommand(
        "enumerate", "List arrays of the given order in canonical order");
    enumerate->add_option("order", enumerate_order, "order n")->required();
    enumerate->add_flag("--no-special", enumerate_no_special,
                        "only arrays with no special part");
    auto* enumerate_rows_opt = enumerate->add_option(
        "--rows", enumerate_rows, "only arrays with exactly this many rows");
    auto* enumerate_limit_opt =
        enumerate->add_option("--limit", enumerate_limit,
                              "print at most this many arrays")
            ->check(CLI::PositiveNumber);

    int count_order = 0;
    bool count_no_special = false;
    int count_rows = 0;
    auto* count =
        app.add_subcommand("count", "Count arrays of the given order by listing");
    count->add_option("order", count_order, "order n")->required();
    count->add_flag("--no-special", count_no_special,
                    "only arrays with no special part");
    auto* count_rows_opt = count->add_option(
        "--rows", count_rows, "only arrays with exactly this many rows");

    int formula_order = 0;
    auto* formula = app.add_subcommand(
        "formula-count", "Count arrays of the given order by the product formula");
    formula->add_option("order", formula_order, "order n")->required();

    int eulerian_n = 0;
    int eulerian_k = 0;
    auto* eulerian =
        app.add_subcommand("eulerian", "Eulerian number E(n, k)");
    eulerian->add_option("n", eulerian_n, "number of letters")->required();
    eulerian->add_option("k", eulerian_k, "number of ascents")->required();

    int verify_order_n = 0;
    bool verify_json = false;
    auto* verify = app.add_subcommand(
        "verify", "Exhaustively cross-check the correspondence at one order");
    verify->add_option("order", verify_order_n, "order n, 1 through 8")
        ->required();
    verify->add_flag("--json", verify_json, "machine-readable report");

    std::vector<std::string> words;
    words.reserve(args.size() + 1);
    words.push_back("dpp");
    words.insert(words.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(words.size());
    for (const auto& word : words) argv.push_back(word.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }

    try {
        if (to_perm->parsed())
            return cmd_to_perm(to_perm_text, to_perm_order, to_perm_trace, out,
                               err);
        if (to_dpp->parsed()) return cmd_to_dpp(to_dpp_text, out);
        if (validate->parsed())
            return cmd_validate(validate_kind, validate_text, out);
        if (stats->parsed()) {
            if (stats_kind == "dpp") {
                if (stats_order_opt->count() == 0)
                    throw std::invalid_argument(
                        "stats on an array needs -n to fix the order");
                return cmd_stats_dpp(stats_text, stats_order, out);
            }
            if (stats_order_opt->count() > 0)
                throw std::invalid_argument("-n applies only to arrays");
            return cmd_stats_perm(stats_text, out);
        }
        if (enumerate->parsed()) {
            DppFilter filter;
            filter.order = enumerate_order;
            filter.no_special_parts = enumerate_no_special;
            if (enumerate_rows_opt->count() > 0) filter.row_count = enumerate_rows;
            std::optional<long long> limit;
            if (enumerate_limit_opt->count() > 0) limit = enumerate_limit;
            return cmd_enumerate(filter, limit, out);
        }
        if (count->parsed()) {
            DppFilter filter;
            filter.order = count_order;
            filter.no_special_parts = count_no_special;
            if (count_rows_opt->count() > 0) filter.row_count = count_rows;
            return cmd_count(filter, out);
        }
        if (formula->parsed()) return cmd_formula_count(formula_order, out);
        if (eulerian->parsed()) return cmd_eulerian(eulerian_n, eulerian_k, out);
        if (verify->parsed()) return cmd_verify(verify_order_n, verify_json, out);
    } catch (const InfeasibleOrderError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace dpp
