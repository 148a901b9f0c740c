#include <chrono>
#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "dpp/bijection.hpp"
#include "dpp/enumeration.hpp"
#include "dpp/text.hpp"

namespace dpp {

bool VerifyReport::passed() const {
    if (!round_trip_failures.empty() || !formula_mismatches.empty()) return false;
    if (permutation_count != dpp_no_special_count) return false;

    BigCount factorial = 1;
    for (int i = 2; i <= order; ++i) factorial *= i;
    if (permutation_count != factorial) return false;

    BigCount dpps_seen = 0;
    for (const auto& row : table) {
        if (row.dpps_with_k_rows != row.eulerian) return false;
        if (row.perms_with_k_ascents != row.eulerian) return false;
        dpps_seen += row.dpps_with_k_rows;
    }
    return dpps_seen == dpp_no_special_count;
}

VerifyReport verify_order(int n) {
    if (n < 1 || n > 8)
        throw InfeasibleOrderError(
            "exhaustive verification covers orders 1 through 8; got " +
            std::to_string(n));

    const auto start = std::chrono::steady_clock::now();
    VerifyReport report;
    report.order = n;

    std::vector<BigCount> perms_by_ascents(n, 0);
    std::vector<BigCount> dpps_by_rows(n, 0);
    BigCount perm_count = 0;

    enumerate_permutations(n, [&](const Permutation& p) {
        ++perm_count;
        const int ascents = p.ascent_count();
        ++perms_by_ascents[ascents];

        const Dpp image = permutation_to_dpp(p);
        if (image.row_count() != ascents)
            report.round_trip_failures.push_back(
                "image of " + to_text(p) + " has " +
                std::to_string(image.row_count()) + " rows, expected " +
                std::to_string(ascents));
        const Permutation back = dpp_to_permutation(image, n);
        if (!(back == p))
            report.round_trip_failures.push_back(
                to_text(p) + " round-tripped to " + to_text(back));
        if (non_inversions_via_dpp(image) != p.non_inversion_count())
            report.formula_mismatches.push_back(
                "entry-sum statistic of " + to_text(image) +
                " disagrees with pair count for " + to_text(p));
        return true;
    });

    BigCount dpp_count = 0, total_parts = 0, total_sum = 0;
    DppFilter filter;
    filter.order = n;
    filter.no_special_parts = true;
    enumerate_dpps(filter, [&](const Dpp& d) {
        ++dpp_count;
        ++dpps_by_rows[d.row_count()];
        total_parts += d.part_count();
        total_sum += d.entry_sum();

        const Permutation image = dpp_to_permutation(d, n);
        if (!(permutation_to_dpp(image) == d))
            report.round_trip_failures.push_back(
                to_text(d) + " round-tripped through " + to_text(image));
        if (non_inversions_via_dpp(d) != image.non_inversion_count())
            report.formula_mismatches.push_back(
                "entry-sum statistic of " + to_text(d) +
                " disagrees with pair count for " + to_text(image));
        return true;
    });

    report.permutation_count = perm_count;
    report.dpp_no_special_count = dpp_count;
    report.dpp_total_parts = total_parts;
    report.dpp_total_entry_sum = total_sum;
    for (int k = 0; k < n; ++k)
        report.table.push_back(
            {k, eulerian_number(n, k), dpps_by_rows[k], perms_by_ascents[k]});

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

std::string to_json(const VerifyReport& report) {
    nlohmann::ordered_json j;
    j["n"] = report.order;
    j["permutation_count"] = report.permutation_count.str();
    j["dpp_no_special_count"] = report.dpp_no_special_count.str();
    auto table = nlohmann::ordered_json::array();
    for (const auto& row : report.table)
        table.push_back(nlohmann::ordered_json{
            {"k", row.k},
            {"eulerian", row.eulerian.str()},
            {"dpps", row.dpps_with_k_rows.str()},
            {"permutations", row.perms_with_k_ascents.str()},
        });
    j["table"] = table;
    j["dpp_total_parts"] = report.dpp_total_parts.str();
    j["dpp_total_entry_sum"] = report.dpp_total_entry_sum.str();
    j["round_trip_failures"] = report.round_trip_failures;
    j["formula_mismatches"] = report.formula_mismatches;
    j["elapsed_seconds"] = report.elapsed_seconds;
    j["passed"] = report.passed();
    return j.dump(2);
}

std::string render_report(const VerifyReport& report) {
    std::ostringstream out;
    out << "order " << report.order << "\n";
    out << "permutations: " << report.permutation_count.str() << "\n";
    out << "no-special-part arrays: " << report.dpp_no_special_count.str()
        << "\n";
    out << "  k   eulerian   arrays(k rows)   perms(k ascents)\n";
    for (const auto& row : report.table)
        out << std::setw(3) << row.k << std::setw(11) << row.eulerian.str()
            << std::setw(17) << row.dpps_with_k_rows.str() << std::setw(19)
            << row.perms_with_k_ascents.str() << "\n";
    out << "total parts: " << report.dpp_total_parts.str()
        << ", total entry sum: " << report.dpp_total_entry_sum.str() << "\n";
    for (const auto& line : report.round_trip_failures)
        out << "round-trip failure: " << line << "\n";
    for (const auto& line : report.formula_mismatches)
        out << "statistic mismatch: " << line << "\n";
    out << std::fixed << std::setprecision(3);
    out << "elapsed: " << report.elapsed_seconds << "s\n";
    out << "verify: " << (report.passed() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace dpp
