// SPDX-License-Identifier: Apache-2.0
#include <combwalks/io.hpp>

#include <combwalks/polynomial.hpp>
#include <combwalks/rational.hpp>
#include <combwalks/sum_engine.hpp>
#include <combwalks/walk.hpp>

#include <doctest.h>

#include <stdexcept>
#include <string>

using namespace combwalks;

TEST_CASE("rational and big-integer JSON forms") {
    CHECK(to_json(Rational(3, 4)) == Json("3/4"));
    CHECK(to_json(Rational(-7)) == Json("-7"));

    CHECK(to_json(mpz_class(42)) == Json(42));
    mpz_class big("123456789012345678901234567890");
    Json j = to_json(big);
    REQUIRE(j.is_string());
    CHECK(j.get<std::string>() == "123456789012345678901234567890");
}

TEST_CASE("float_repr keeps 17 significant digits and no locale surprises") {
    CHECK(float_repr(0.5) == "0.5");
    CHECK(float_repr(1.0 / 3.0) == "0.33333333333333331");
    CHECK(float_repr(-0.0).find(',') == std::string::npos);
}

TEST_CASE("polynomial JSON round-trips through the term list") {
    SparsePolynomial p = SparsePolynomial::variable(4)
        + SparsePolynomial::variable(2) * SparsePolynomial::variable(2).scaled(Rational(1, 4))
        + SparsePolynomial::constant(Rational(-3, 7));
    Json j = to_json(p);
    REQUIRE(j.is_array());
    CHECK(polynomial_from_json(j) == p);

    CHECK(polynomial_from_json(to_json(SparsePolynomial())).is_zero());
    CHECK_THROWS_AS(polynomial_from_json(Json{{"not", "a poly"}}), std::invalid_argument);
}

TEST_CASE("walks and classes serialize to the documented shapes") {
    CHECK(to_json(Walk{{4, -2, 4}}) == Json({4, -2, 4}));

    WalkClass c;
    c.n = 3;
    c.step_set = StepSet({-2, 4});
    c.kappa = 1;
    Json j = to_json(c);
    CHECK(j["n"] == 3);
    CHECK(j["direction"] == "ascending");
    CHECK(j["steps"] == Json({-2, 4}));
    CHECK(j["sign_filter"] == "all");
    CHECK(j["kappa"] == 1);
    CHECK(!j.contains("truncation"));

    WalkClass t;
    t.n = 2;
    t.direction = Direction::descending;
    t.step_set = StepSet::up_to(2);
    t.truncation = Truncation{5, 2};
    Json jt = to_json(t);
    CHECK(jt["direction"] == "descending");
    CHECK(jt["truncation"]["L"] == 5);
    CHECK(jt["truncation"]["W"] == 2);
    CHECK(!jt.contains("kappa"));
}

TEST_CASE("sum results carry exactness and truncation metadata") {
    SumResult r;
    r.value = Rational(41, 180);
    r.walk_count = 2;
    Json j = to_json(r);
    CHECK(j["value"] == "41/180");
    CHECK(j["exact"] == true);
    CHECK(j["walk_count"] == 2);
    CHECK(j["truncated"] == false);

    SumResult t;
    t.value = Rational(1, 7);
    t.truncated = true;
    t.truncation = Truncation{12, 4};
    Json jt = to_json(t);
    CHECK(jt["truncated"] == true);
    CHECK(jt["truncation"]["L"] == 12);
    CHECK(jt["truncation"]["W"] == 4);
}

TEST_CASE("table rendering is deterministic and format-consistent") {
    RunManifest m;
    m.command = "combwalks explore q3 --m-max 2";
    m.params = {{"m_max", "2"}};
    m.seed = 7;
    m.wall_ms = 123.0;  // volatile, must not appear in comparisons below

    ScanTable t;
    t.columns = {"m", "value", "note"};
    t.add_row({1, "1/2", nullptr});
    t.add_row({2, "x,y", "quoted, cell"});

    std::string csv = render_table(m, t, OutputFormat::csv);
    CHECK(csv.find("# command: combwalks explore q3 --m-max 2\n") != std::string::npos);
    CHECK(csv.find("# seed: 7\n") != std::string::npos);
    CHECK(csv.find("m,value,note\n") != std::string::npos);
    CHECK(csv.find("1,1/2,\n") != std::string::npos);          // null renders empty
    CHECK(csv.find("2,\"x,y\",\"quoted, cell\"\n") != std::string::npos);

    std::string json_doc = render_table(m, t, OutputFormat::json);
    Json parsed = Json::parse(json_doc);
    CHECK(parsed["manifest"]["command"] == "combwalks explore q3 --m-max 2");
    REQUIRE(parsed["rows"].size() == 2);
    CHECK(parsed["rows"][0]["m"] == 1);
    CHECK(parsed["rows"][0]["value"] == "1/2");
    CHECK(parsed["rows"][0]["note"].is_null());

    std::string text = render_table(m, t, OutputFormat::text);
    CHECK(text.find("m") != std::string::npos);
    CHECK(text.find("1/2") != std::string::npos);

    // identical inputs, identical bytes, wall time aside
    RunManifest m2 = m;
    m2.wall_ms = 9999.0;
    std::string csv2 = render_table(m2, t, OutputFormat::csv);
    auto strip_wall = [](std::string s) {
        auto pos = s.find("# wall_ms:");
        if (pos == std::string::npos) return s;
        auto end = s.find('\n', pos);
        return s.erase(pos, end - pos + 1);
    };
    CHECK(strip_wall(csv) == strip_wall(csv2));
    CHECK(csv != csv2);
}

TEST_CASE("row width mismatches are rejected") {
    ScanTable t;
    t.columns = {"a", "b"};
    CHECK_THROWS_AS(t.add_row({1}), std::invalid_argument);
}

TEST_CASE("report rendering marks failures") {
    IdentityReport ok;
    ok.id = "demo";
    ok.params = {{"n", "3"}};
    ok.lhs = "0";
    ok.rhs = "0";
    ok.verdict = Verdict::equal;

    IdentityReport bad = ok;
    bad.verdict = Verdict::mismatch;
    bad.lhs = "1/2";

    RunManifest m;
    m.command = "combwalks verify demo";

    std::string text = render_reports(m, {ok, bad}, OutputFormat::text);
    CHECK(text.find("[ok]") != std::string::npos);
    CHECK(text.find("[FAIL]") != std::string::npos);

    Json parsed = Json::parse(render_reports(m, {ok, bad}, OutputFormat::json));
    CHECK(parsed["reports"][0]["verdict"] == "equal");
    CHECK(parsed["reports"][1]["verdict"] == "mismatch");
}

TEST_CASE("format parsing accepts only the documented names") {
    CHECK(parse_format("json") == OutputFormat::json);
    CHECK(parse_format("csv") == OutputFormat::csv);
    CHECK(parse_format("text") == OutputFormat::text);
    CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}
