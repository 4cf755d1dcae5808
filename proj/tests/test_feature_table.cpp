#include <doctest.h>

#include "affikd/bio/feature_table.hpp"
#include "affikd/error.hpp"

using namespace affikd;
using namespace affikd::bio;

TEST_CASE("descriptor csv: direct load") {
    auto t = parse_descriptor_csv("complex_id,f0,f1,f2\n1ABC,1,2,3\n2XYZ,4,5,6.5\n");
    CHECK(t.dim() == 3);
    REQUIRE(t.size() == 2);
    CHECK(t.ids[0] == "1ABC");
    CHECK(t.rows[1][2] == doctest::Approx(6.5));
}

TEST_CASE("descriptor csv: expected_dim mismatch") {
    std::string csv = "complex_id,f0,f1\nA,1,2\n";
    CHECK_NOTHROW(parse_descriptor_csv(csv, 2));
    CHECK_THROWS_WITH_AS(parse_descriptor_csv(csv, 200), doctest::Contains("200"),
                         ValidationError);
}

TEST_CASE("descriptor csv: duplicate complex_id") {
    CHECK_THROWS_WITH_AS(
        parse_descriptor_csv("complex_id,f0\n1ABC,1\n1ABC,2\n"),
        doctest::Contains("1ABC"), ValidationError);
}

TEST_CASE("descriptor csv: ragged row reports the row index") {
    CHECK_THROWS_WITH_AS(parse_descriptor_csv("complex_id,f0,f1\nA,1,2\nB,1\n"),
                         doctest::Contains("row 2"), ParseError);
}

TEST_CASE("descriptor csv: non-numeric cell reports the cell address") {
    CHECK_THROWS_WITH_AS(parse_descriptor_csv("complex_id,f0,f1\nA,1,oops\n"),
                         doctest::Contains("f1"), ParseError);
}

TEST_CASE("descriptor csv: row order matches file order, uniform width") {
    std::string csv = "complex_id,f0,f1\n";
    for (int i = 0; i < 20; ++i)
        csv += "id" + std::to_string(19 - i) + "," + std::to_string(i) + ",0\n";
    auto t = parse_descriptor_csv(csv);
    REQUIRE(t.size() == 20);
    for (int i = 0; i < 20; ++i) {
        CHECK(t.ids[i] == "id" + std::to_string(19 - i));
        CHECK(t.rows[i].size() == 2);
    }
}

TEST_CASE("labels csv: plain record without metadata") {
    auto c = parse_labels_csv("complex_id,delta_g\n1ABC,-10.5\n");
    REQUIRE(c.records.size() == 1);
    CHECK(c.records[0].complex_id == "1ABC");
    CHECK(c.records[0].delta_g == doctest::Approx(-10.5));
    CHECK(!c.records[0].ph);
    CHECK(!c.records[0].temperature);
    CHECK(!c.records[0].method);
}

TEST_CASE("labels csv: optional metadata columns") {
    auto c = parse_labels_csv(
        "complex_id,delta_g,ph,temperature,method\n1ABC,-10.5,7.4,25,SPR\n");
    REQUIRE(c.records.size() == 1);
    CHECK(c.records[0].ph == doctest::Approx(7.4));
    CHECK(c.records[0].temperature == doctest::Approx(25.0));
    CHECK(*c.records[0].method == "SPR");
}

TEST_CASE("labels csv: non-finite delta_g is an error") {
    CHECK_THROWS_AS(parse_labels_csv("complex_id,delta_g\n1ABC,NaN\n"), ParseError);
    CHECK_THROWS_AS(parse_labels_csv("complex_id,delta_g\n1ABC,inf\n"), ParseError);
    CHECK_THROWS_AS(parse_labels_csv("complex_id,delta_g\n1ABC,\n"), ParseError);
}

TEST_CASE("feature csv: write then re-load round-trips") {
    FeatureTable t;
    t.descriptor = "KMER";
    t.ids = {"a", "b"};
    t.rows = {{0.125, -3.5, 1e-9}, {2.0, 0.1 + 0.2, 7.0}};
    auto back = parse_descriptor_csv(feature_csv_string(t));
    REQUIRE(back.size() == 2);
    CHECK(back.ids == t.ids);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            CHECK(back.rows[r][c] == t.rows[r][c]);  // bit-exact round trip
}
