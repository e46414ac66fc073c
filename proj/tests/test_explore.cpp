// SPDX-License-Identifier: Apache-2.0
#include <combwalks/explore.hpp>

#include <combwalks/io.hpp>
#include <combwalks/rational.hpp>

#include <doctest.h>

#include <atomic>
#include <stdexcept>
#include <string>
#include <vector>

using namespace combwalks;

namespace {

int column_index(const ScanTable& t, const std::string& name) {
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        if (t.columns[i] == name) return int(i);
    throw std::out_of_range("no column " + name);
}

}  // namespace

TEST_CASE("parallel_for covers every index exactly once") {
    for (unsigned jobs : {1u, 2u, 5u}) {
        std::vector<std::atomic<int>> hits(257);
        parallel_for(hits.size(), jobs, [&](std::size_t i) { hits[i].fetch_add(1); });
        for (auto& h : hits) CHECK(h.load() == 1);
    }
    parallel_for(0, 4, [&](std::size_t) { FAIL("must not run"); });
}

TEST_CASE("parallel_for propagates the first worker exception") {
    CHECK_THROWS_AS(
        parallel_for(64, 4, [](std::size_t i) {
            if (i == 13) throw std::runtime_error("boom");
        }),
        std::runtime_error);
}

TEST_CASE("q1 normalized polynomials have unit leading coefficient") {
    ScanTable t = q1_scan(/*m=*/6, /*n_min=*/1, /*n_max=*/5);
    int n_col = column_index(t, "n");
    int terms_col = column_index(t, "term_count");
    int poly_col = column_index(t, "normalized");
    REQUIRE(t.rows.size() == 5);
    for (const auto& row : t.rows) {
        int n = row[std::size_t(n_col)].get<int>();
        std::string p = row[std::size_t(poly_col)].get<std::string>();
        // the rescaled V(2)^n term carries coefficient exactly 1
        std::string pure(n == 1 ? "V(2)" : "V(2)^" + std::to_string(n));
        CHECK(p.find(pure) != std::string::npos);
        CHECK(row[std::size_t(terms_col)].get<int>() >= 1);
    }

    // pinned shape at n = 3, m = 6: three monomials
    ScanTable t3 = q1_scan(6, 3, 3);
    CHECK(t3.rows[0][std::size_t(column_index(t3, "normalized"))].get<std::string>()
          == "64 V(6) + 16 V(2) V(4) + V(2)^3");
}

TEST_CASE("q2 sampling is seed-deterministic and job-count independent") {
    ScanOptions serial;
    ScanOptions parallel_opts;
    parallel_opts.jobs = 4;

    ScanTable a = q2_scan(/*m=*/4, /*n_min=*/2, /*n_max=*/5, /*samples=*/6, /*seed=*/99, serial);
    ScanTable b = q2_scan(4, 2, 5, 6, 99, parallel_opts);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) CHECK(a.rows[i] == b.rows[i]);

    ScanTable c = q2_scan(4, 2, 5, 6, 100, serial);
    CHECK(a.rows != c.rows);  // a new seed draws new weights

    // ratios are >= 1 up to roundoff wherever defined
    int ratio_col = column_index(a, "ratio");
    for (const auto& row : a.rows) {
        const Json& cell = row[std::size_t(ratio_col)];
        if (!cell.is_null()) CHECK(cell.get<double>() >= 1.0 - 1e-9);
    }
}

TEST_CASE("q3 exact columns match the first orders") {
    ScanTable t = q3_scan(1, 4);
    int m_col = column_index(t, "m");
    int b3_col = column_index(t, "b3");
    int count_col = column_index(t, "walk_count");
    REQUIRE(t.rows.size() == 4);

    CHECK(t.rows[0][std::size_t(m_col)] == 1);
    CHECK(t.rows[0][std::size_t(b3_col)] == "1/2949120");
    CHECK(t.rows[0][std::size_t(count_col)] == 2);
    CHECK(t.rows[1][std::size_t(b3_col)] == "1/74317824");
    CHECK(t.rows[1][std::size_t(count_col)] == 11);
    CHECK(t.rows[2][std::size_t(b3_col)] == "1/81537269760");
    CHECK(t.rows[2][std::size_t(count_col)] == 26);
    CHECK(t.rows[3][std::size_t(b3_col)] == "1/90429194240000");
    CHECK(t.rows[3][std::size_t(count_col)] == 48);

    // growth column stays finite once the sum is nonzero
    int growth_col = column_index(t, "growth");
    for (const auto& row : t.rows) CHECK(row[std::size_t(growth_col)].is_number());
}

TEST_CASE("prop3 ratios collapse to one when negative steps carry no weight") {
    PotentialAssignment v;
    v.set(2, Rational(1, 3));
    v.set(4, Rational(1, 7));
    ScanTable t = prop3_scan(/*m=*/4, /*n_min=*/4, /*n_max=*/8, v, /*L=*/20, /*W=*/6);
    int ra = column_index(t, "ratio_asc");
    int rd = column_index(t, "ratio_desc");
    int trunc = column_index(t, "truncated");
    for (const auto& row : t.rows) {
        CHECK(row[std::size_t(ra)] == 1.0);
        CHECK(row[std::size_t(rd)] == 1.0);
        CHECK(row[std::size_t(trunc)] == false);
    }
}

TEST_CASE("prop3 guards degenerate weights instead of dividing by zero") {
    PotentialAssignment zero;
    ScanTable t = prop3_scan(4, 4, 5, zero, 12, 4);
    int note = column_index(t, "note");
    int ra = column_index(t, "ratio_asc");
    for (const auto& row : t.rows) {
        CHECK(row[std::size_t(ra)].is_null());
        CHECK(row[std::size_t(note)].get<std::string>().find("degenerate") != std::string::npos);
    }
}

TEST_CASE("prop3 symmetric weights give matching ascending and descending columns") {
    PotentialAssignment v;
    v.set(2, Rational(1, 5));
    v.set(-2, Rational(1, 5));
    v.set(4, Rational(1, 9));
    v.set(-4, Rational(1, 9));
    ScanTable t = prop3_scan(4, 4, 6, v, 16, 6);
    int ra = column_index(t, "ratio_asc");
    int rd = column_index(t, "ratio_desc");
    for (const auto& row : t.rows)
        CHECK(row[std::size_t(ra)] == row[std::size_t(rd)]);
}
