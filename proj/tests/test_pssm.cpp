#include <doctest.h>

#include "affikd/bio/pssm.hpp"
#include "affikd/error.hpp"
#include "affikd/fsio.hpp"

using namespace affikd;
using namespace affikd::bio;

namespace {

std::string row(int pos, char aa, const std::vector<int>& scores) {
    std::string line = std::to_string(pos) + " " + std::string(1, aa);
    for (int s : scores) line += " " + std::to_string(s);
    for (int i = 0; i < 20; ++i) line += " 0";  // weighted percentages
    line += " 0.50 0.10\n";
    return line;
}

}  // namespace

TEST_CASE("pssm: zero profile parses to a zero matrix") {
    std::string text = "header\n" + row(1, 'A', std::vector<int>(20, 0)) +
                       row(2, 'G', std::vector<int>(20, 0));
    auto p = parse_pssm(text);
    REQUIRE(p.sequence_length == 2);
    for (const auto& r : p.scores) {
        REQUIRE(r.size() == 20);
        for (int v : r) CHECK(v == 0);
    }
}

TEST_CASE("pssm: column order is preserved") {
    std::vector<int> scores;
    for (int i = 1; i <= 20; ++i) scores.push_back(i);
    auto p = parse_pssm(row(1, 'M', scores));
    REQUIRE(p.sequence_length == 1);
    for (int i = 0; i < 20; ++i) CHECK(p.scores[0][i] == i + 1);
}

TEST_CASE("pssm: real PSI-BLAST layout fixture matches hand transcription") {
    auto p = parse_pssm(read_file(std::string(AFFIKD_FIXTURES_DIR) + "/pssm/mktay.pssm"));
    REQUIRE(p.sequence_length == 5);
    // Transcribed by eye from the fixture file.
    std::vector<std::vector<int>> expected = {
        {-1, -2, -3, -4, -2, -1, -3, -4, -3, 1, 3, -2, 8, 0, -4, -2, -1, -2, -2, 0},
        {-1, 2, 0, -1, -4, 1, 1, -2, -1, -3, -3, 5, -2, -4, -1, 0, -1, -4, -2, -3},
        {0, -1, 0, -1, -1, -1, -1, -2, -2, -1, -1, -1, -1, -2, -1, 1, 5, -2, -2, 0},
        {4, -1, -2, -2, 0, -1, -1, 0, -2, -1, -1, -1, -1, -2, -1, 1, 0, -3, -2, 0},
        {-2, -2, -2, -3, -2, -1, -2, -3, 2, -1, -1, -2, -1, 3, -3, -2, -2, 2, 7, -1},
    };
    CHECK(p.scores == expected);
}

TEST_CASE("pssm: row with wrong column count names the position") {
    std::string text = row(1, 'A', std::vector<int>(20, 0));
    text += "2 G 1 2 3\n";  // 3 numeric columns instead of 40
    CHECK_THROWS_WITH_AS(parse_pssm(text), doctest::Contains("position 2"), ParseError);
}

TEST_CASE("pssm: matrix shape is length x 20 for fuzzed row counts") {
    for (int len : {1, 3, 7, 25}) {
        std::string text;
        for (int i = 1; i <= len; ++i) text += row(i, 'A', std::vector<int>(20, i));
        auto p = parse_pssm(text);
        CHECK(p.sequence_length == len);
        REQUIRE(p.scores.size() == static_cast<std::size_t>(len));
        for (const auto& r : p.scores) CHECK(r.size() == 20);
    }
}

TEST_CASE("pssm: empty input is an error") {
    CHECK_THROWS_AS(parse_pssm("no rows here\n"), ParseError);
}
