#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "dpp/dpp.hpp"
#include "dpp/permutation.hpp"
#include "dpp/text.hpp"

using dpp::CellPosition;
using dpp::Dpp;
using dpp::DppError;
using dpp::DppViolation;
using dpp::ParseError;
using dpp::Permutation;

namespace {

DppViolation must_fail(const std::vector<std::vector<int>>& rows) {
    auto violation = Dpp::check(rows);
    REQUIRE(violation.has_value());
    return *violation;
}

// Second opinion on validity, written straight from the definition in
// global coordinates (row i occupies columns i..i+m_i-1) with a cell
// map, sharing no code with Dpp::check.
bool valid_by_definition(const std::vector<std::vector<int>>& rows) {
    const int r = static_cast<int>(rows.size());
    std::map<std::pair<int, int>, int> cell;
    for (int i = 1; i <= r; ++i) {
        if (rows[i - 1].empty()) return false;
        if (i > 1 && rows[i - 1].size() >= rows[i - 2].size()) return false;
        for (int t = 1; t <= static_cast<int>(rows[i - 1].size()); ++t)
            cell[{i, i + t - 1}] = rows[i - 1][t - 1];
    }
    for (const auto& [pos, value] : cell) {
        const auto [i, j] = pos;
        if (value < 1) return false;
        auto right = cell.find({i, j + 1});
        if (right != cell.end() && value < right->second) return false;
        auto below = cell.find({i + 1, j});
        if (below != cell.end() && value <= below->second) return false;
    }
    for (int i = 1; i <= r; ++i) {
        const int diagonal = cell.at({i, i});
        if (diagonal <= static_cast<int>(rows[i - 1].size())) return false;
        if (i > 1 && diagonal > static_cast<int>(rows[i - 2].size())) return false;
    }
    return true;
}

std::vector<CellPosition> special_by_definition(
    const std::vector<std::vector<int>>& rows) {
    std::vector<CellPosition> cells;
    for (int i = 1; i <= static_cast<int>(rows.size()); ++i)
        for (int t = 1; t <= static_cast<int>(rows[i - 1].size()); ++t) {
            const int j = i + t - 1;
            if (rows[i - 1][t - 1] <= j - i) cells.push_back({i, j});
        }
    return cells;
}

// Every ragged array with the given shape and entries 0..max_value.
template <typename Fn>
void for_each_filling(const std::vector<int>& shape, int max_value, Fn fn) {
    const int cells = std::accumulate(shape.begin(), shape.end(), 0);
    std::vector<int> flat(cells, 0);
    while (true) {
        std::vector<std::vector<int>> rows;
        int used = 0;
        for (int length : shape) {
            rows.emplace_back(flat.begin() + used, flat.begin() + used + length);
            used += length;
        }
        fn(rows);
        int pos = 0;
        while (pos < cells && ++flat[pos] > max_value) flat[pos++] = 0;
        if (pos == cells) break;
    }
}

}  // namespace

TEST_CASE("a valid three-row array is accepted and exposes its parts") {
    const Dpp d = Dpp::from_rows({{7, 7, 6, 5, 5}, {4, 4, 4}, {3, 2}});
    CHECK(d.row_count() == 3);
    CHECK_FALSE(d.empty());
    CHECK(d.row_lengths() == std::vector<int>{5, 3, 2});
    CHECK(d.max_entry() == 7);
    CHECK(d.part_count() == 10);
    CHECK(d.entry_sum() == 47);
    CHECK(d.special_parts().empty());
    CHECK_FALSE(d.has_special_part());
}

TEST_CASE("the empty array is valid") {
    const Dpp d;
    CHECK(d.empty());
    CHECK(d.row_count() == 0);
    CHECK(d.max_entry() == 0);
    CHECK(d.part_count() == 0);
    CHECK(d.entry_sum() == 0);
    CHECK(d == Dpp::from_rows({}));
}

TEST_CASE("each violation kind is reported at the right cell") {
    using Kind = DppViolation::Kind;

    SUBCASE("non-positive entry") {
        const auto v = must_fail({{3, 0}});
        CHECK(v.kind == Kind::non_positive_entry);
        CHECK(v.cell == CellPosition{1, 2});
        CHECK(must_fail({{4, 3}, {-1}}).kind == Kind::non_positive_entry);
    }
    SUBCASE("row lengths must strictly decrease") {
        const auto v = must_fail({{3, 2}, {3, 1}});
        CHECK(v.kind == Kind::row_length_not_strictly_decreasing);
        CHECK(v.cell == CellPosition{2, 2});
        CHECK(must_fail({{}}).kind == Kind::row_length_not_strictly_decreasing);
        CHECK(must_fail({{3}, {}}).cell == CellPosition{2, 2});
    }
    SUBCASE("rows must weakly decrease") {
        const auto v = must_fail({{2, 3}});
        CHECK(v.kind == Kind::row_not_weakly_decreasing);
        CHECK(v.cell == CellPosition{1, 2});
    }
    SUBCASE("columns must strictly decrease") {
        const auto v = must_fail({{3, 3}, {3}});
        CHECK(v.kind == Kind::column_not_strictly_decreasing);
        CHECK(v.cell == CellPosition{2, 2});
    }
    SUBCASE("diagonal entries must exceed the row length") {
        const auto v = must_fail({{2, 2}});
        CHECK(v.kind == Kind::diagonal_too_small);
        CHECK(v.cell == CellPosition{1, 1});
        CHECK(must_fail({{5, 4, 3}, {2, 2}}).cell == CellPosition{2, 2});
    }
    SUBCASE("diagonal entries are bounded by the row above") {
        const auto v = must_fail({{5, 4}, {3}});
        CHECK(v.kind == Kind::diagonal_too_large);
        CHECK(v.cell == CellPosition{2, 2});
    }
}

TEST_CASE("from_rows throws a DppError carrying the violation") {
    try {
        Dpp::from_rows({{2, 2}});
        FAIL("expected DppError");
    } catch (const DppError& e) {
        CHECK(e.violation().kind == DppViolation::Kind::diagonal_too_small);
        CHECK(e.violation().cell == CellPosition{1, 1});
        CHECK(std::string(e.what()) ==
              "(1,1): diagonal entry must exceed its row length (condition 3)");
    }
}

TEST_CASE("validity agrees with the definition over a brute-force space") {
    // Shapes of up to 3 rows with lengths up to 4 and at most 5 cells,
    // entries 0..4. The valid ones are exactly the nonempty arrays with
    // all entries at most 4, except the unique six-cell one, so 42
    // (counting the empty array) minus those two.
    std::vector<std::vector<int>> shapes;
    for (int a = 1; a <= 4; ++a) {
        shapes.push_back({a});
        for (int b = 1; b <= 4; ++b) {
            if (a + b <= 5) shapes.push_back({a, b});
            for (int c = 1; c <= 4; ++c)
                if (a + b + c <= 5) shapes.push_back({a, b, c});
        }
    }
    long long candidates = 0, valid = 0, mismatches = 0, special_mismatches = 0;
    for (const auto& shape : shapes) {
        for_each_filling(shape, 4, [&](const std::vector<std::vector<int>>& rows) {
            ++candidates;
            const bool checked = !Dpp::check(rows).has_value();
            if (checked != valid_by_definition(rows)) ++mismatches;
            if (checked) {
                ++valid;
                const Dpp d = Dpp::from_rows(rows);
                if (d.special_parts() != special_by_definition(rows))
                    ++special_mismatches;
            }
        });
    }
    CHECK(candidates > 30000);
    CHECK(mismatches == 0);
    CHECK(special_mismatches == 0);
    CHECK(valid == 40);
}

TEST_CASE("special parts sit strictly right of the diagonal") {
    CHECK(Dpp::from_rows({{4, 3, 1}}).special_parts() ==
          std::vector<CellPosition>{{1, 3}});
    CHECK(Dpp::from_rows({{3, 1}}).special_parts() ==
          std::vector<CellPosition>{{1, 2}});
    CHECK(Dpp::from_rows({{5, 5, 3, 1}, {3, 1}}).special_parts() ==
          std::vector<CellPosition>{{1, 4}, {2, 3}});
    CHECK(Dpp::from_rows({{6, 6, 2, 1}}).special_parts() ==
          std::vector<CellPosition>{{1, 3}, {1, 4}});
    CHECK_FALSE(Dpp::from_rows({{2}}).has_special_part());
}

TEST_CASE("permutations validate their values") {
    CHECK_THROWS_AS(Permutation({}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
    CHECK(Permutation({1}).size() == 1);
    CHECK(Permutation::identity(4).values() == std::vector<int>{1, 2, 3, 4});
    CHECK(Permutation::descending(4).values() == std::vector<int>{4, 3, 2, 1});
}

TEST_CASE("permutation statistics match hand-computed values") {
    const Permutation p({9, 8, 5, 3, 7, 1, 4, 6, 2});
    CHECK(p.size() == 9);
    CHECK(p.at(1) == 9);
    CHECK(p.at(9) == 2);
    CHECK(p.ascent_positions() == std::vector<int>{4, 6, 7});
    CHECK(p.ascent_count() == 3);
    CHECK(p.descending_runs() ==
          std::vector<std::vector<int>>{{9, 8, 5, 3}, {7, 1}, {4}, {6, 2}});
    CHECK(p.non_inversion_count() == 9);
    CHECK(p.inversion_count() == 27);

    const Permutation q({7, 5, 4, 2, 6, 3, 1});
    CHECK(q.ascent_count() == 1);
    CHECK(q.non_inversion_count() == 4);

    CHECK(Permutation::identity(6).non_inversion_count() == 15);
    CHECK(Permutation::descending(6).non_inversion_count() == 0);
    CHECK(Permutation::descending(6).ascent_count() == 0);
    CHECK(Permutation::descending(6).descending_runs().size() == 1);
}

TEST_CASE("runs are the pieces between ascents, exhaustively to n = 7") {
    for (int n = 1; n <= 7; ++n) {
        std::vector<int> values(n);
        std::iota(values.begin(), values.end(), 1);
        long long bad = 0;
        do {
            const Permutation p(values);
            const auto runs = p.descending_runs();
            if (static_cast<int>(runs.size()) != p.ascent_count() + 1) ++bad;
            std::vector<int> glued;
            for (const auto& run : runs) {
                for (std::size_t i = 1; i < run.size(); ++i)
                    if (run[i - 1] <= run[i]) ++bad;
                glued.insert(glued.end(), run.begin(), run.end());
            }
            if (glued != values) ++bad;
            if (p.non_inversion_count() + p.inversion_count() !=
                static_cast<long long>(n) * (n - 1) / 2)
                ++bad;
        } while (std::next_permutation(values.begin(), values.end()));
        CHECK(bad == 0);
    }
}

TEST_CASE("canonical text forms round-trip") {
    const Dpp d = Dpp::from_rows({{7, 7, 6, 5, 5}, {4, 4, 4}, {3, 2}});
    CHECK(dpp::to_text(d) == "7 7 6 5 5 / 4 4 4 / 3 2");
    CHECK(dpp::parse_dpp("7 7 6 5 5 / 4 4 4 / 3 2") == d);
    CHECK(dpp::parse_dpp("  7 7 6 5 5/ 4 4 4 /3 2\t") == d);

    CHECK(dpp::to_text(Dpp()) == "-");
    CHECK(dpp::parse_dpp("-") == Dpp());
    CHECK(dpp::parse_dpp("  -  ") == Dpp());

    const Permutation p({9, 8, 5, 3, 7, 1, 4, 6, 2});
    CHECK(dpp::to_text(p) == "9 8 5 3 7 1 4 6 2");
    CHECK(dpp::parse_permutation("9 8 5 3 7 1 4 6 2") == p);
    CHECK(dpp::parse_permutation(" 9 8 5 3\t7 1 4 6 2 ") == p);
}

TEST_CASE("malformed text raises ParseError, invalid values domain errors") {
    CHECK_THROWS_AS(dpp::parse_dpp(""), ParseError);
    CHECK_THROWS_AS(dpp::parse_dpp("3 / / 2"), ParseError);
    CHECK_THROWS_AS(dpp::parse_dpp("3 x"), ParseError);
    CHECK_THROWS_AS(dpp::parse_dpp("99999999999999999999"), ParseError);
    CHECK_THROWS_AS(dpp::parse_dpp("4 4 / 9"), DppError);

    CHECK_THROWS_AS(dpp::parse_permutation(""), ParseError);
    CHECK_THROWS_AS(dpp::parse_permutation("1 2 x"), ParseError);
    CHECK_THROWS_AS(dpp::parse_permutation("2"), std::invalid_argument);
    CHECK_THROWS_AS(dpp::parse_permutation("1 2 2"), std::invalid_argument);
}
