#include <doctest.h>

#include <cmath>
#include <numeric>

#include "affikd/error.hpp"
#include "affikd/feat/sequence.hpp"
#include "affikd/feat/tables.hpp"
#include "affikd/rng.hpp"

using namespace affikd;
using namespace affikd::bio;
using namespace affikd::feat;

namespace {

ProteinChain chain(const std::string& id, const std::string& seq) {
    ProteinChain c;
    c.chain_id = id;
    for (char ch : seq) c.sequence.push_back(from_one_letter(ch));
    return c;
}

// Frozen by transcription from the standard BLOSUM-62 matrix (rows in
// alphabetical order A C D E F G H I K L M N P Q R S T V W Y).
const std::vector<double> kColumnA = {4,  0,  -2, -1, -2, 0, -2, -1, -1, -1,
                                      -1, -2, -1, -1, -1, 1, 0,  0,  -3, -2};
const std::vector<double> kColumnC = {0,  9,  -3, -4, -2, -3, -3, -1, -3, -1,
                                      -1, -3, -3, -3, -3, -1, -1, -1, -2, -2};

std::string random_sequence(Rng& rng, int len) {
    std::string s;
    for (int i = 0; i < len; ++i) s += kOneLetter[rng.below(20)];
    return s;
}

}  // namespace

TEST_CASE("kmer: AAA has entry (A,A) = 2/3") {
    auto v = kmer_composition(chain("c", "AAA"), 2);
    REQUIRE(v.size() == 400);
    CHECK(v[0] == doctest::Approx(2.0 / 3.0));
    double rest = std::accumulate(v.begin() + 1, v.end(), 0.0);
    CHECK(rest == 0.0);
}

TEST_CASE("kmer: dim is 400 for k=2") {
    Rng rng(1);
    for (int i = 0; i < 5; ++i)
        CHECK(kmer_composition(chain("c", random_sequence(rng, 5 + i)), 2).size() == 400);
}

TEST_CASE("kmer: windows containing Unknown are skipped") {
    auto v = kmer_composition(chain("c", "AXA"), 2);
    for (double x : v) CHECK(x == 0.0);
}

TEST_CASE("kmer: sequence shorter than k is an error") {
    CHECK_THROWS_AS(kmer_composition(chain("c", "A"), 2), ValidationError);
}

TEST_CASE("kmer: entries sum to (L-k+1)/L for clean sequences") {
    Rng rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        int len = 2 + static_cast<int>(rng.below(60));
        auto v = kmer_composition(chain("c", random_sequence(rng, len)), 2);
        double sum = std::accumulate(v.begin(), v.end(), 0.0);
        CHECK(sum == doctest::Approx((len - 1.0) / len).epsilon(1e-12));
        for (double x : v) CHECK(x >= 0.0);
    }
}

TEST_CASE("grouped kmer: dim is 7^k") {
    CHECK(grouped_kmer(chain("c", "ACDE"), 2).size() == 49);
    CHECK(grouped_kmer(chain("c", "ACDE"), 3).size() == 343);
    CHECK(grouped_kmer(chain("c", "ACDE"), 4).size() == 2401);
    CHECK(grouped_kmer_concat(chain("c", "ACDE")).size() == 2793);
}

TEST_CASE("grouped kmer: R and K share a group") {
    REQUIRE(amino_group(AminoAcid::R) == amino_group(AminoAcid::K));
    int g = amino_group(AminoAcid::R);
    auto v = grouped_kmer(chain("c", "RK"), 2);
    CHECK(v[g * 7 + g] == doctest::Approx(1.0));
    CHECK(std::accumulate(v.begin(), v.end(), 0.0) == doctest::Approx(1.0));
}

TEST_CASE("grouped kmer: homopolymer concentrates in one bin") {
    auto v = grouped_kmer(chain("c", "AAAA"), 2);
    int g = amino_group(AminoAcid::A);
    CHECK(v[g * 7 + g] == doctest::Approx(1.0));
    for (std::size_t i = 0; i < v.size(); ++i)
        if (i != static_cast<std::size_t>(g * 7 + g)) CHECK(v[i] == 0.0);
}

TEST_CASE("grouped kmer: k outside 2..4 is an error") {
    CHECK_THROWS_AS(grouped_kmer(chain("c", "ACDE"), 1), ValidationError);
    CHECK_THROWS_AS(grouped_kmer(chain("c", "ACDE"), 5), ValidationError);
    CHECK_THROWS_AS(grouped_kmer(chain("c", "A"), 2), ValidationError);
}

TEST_CASE("grouped kmer: entries sum to 1 for clean sequences") {
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        int len = 4 + static_cast<int>(rng.below(40));
        for (int k = 2; k <= 4; ++k) {
            auto v = grouped_kmer(chain("c", random_sequence(rng, len)), k);
            CHECK(std::accumulate(v.begin(), v.end(), 0.0) ==
                  doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("grouped kmer: seven groups cover all 20 residues") {
    std::vector<int> sizes(7, 0);
    for (int i = 0; i < 20; ++i) sizes[amino_group(static_cast<AminoAcid>(i))]++;
    for (int s : sizes) CHECK(s >= 1);
    CHECK(std::accumulate(sizes.begin(), sizes.end(), 0) == 20);
}

TEST_CASE("blosum mean: all-A sequence gives column A") {
    auto v = blosum_mean(chain("c", "AAAA").sequence);
    REQUIRE(v.size() == 20);
    for (int i = 0; i < 20; ++i) CHECK(v[i] == doctest::Approx(kColumnA[i]));
}

TEST_CASE("blosum mean: AC averages columns A and C") {
    auto v = blosum_mean(chain("c", "AC").sequence);
    for (int i = 0; i < 20; ++i)
        CHECK(v[i] == doctest::Approx(0.5 * (kColumnA[i] + kColumnC[i])));
}

TEST_CASE("blosum mean: Unknown residues are skipped") {
    auto v = blosum_mean(chain("c", "AXA").sequence);
    for (int i = 0; i < 20; ++i) CHECK(v[i] == doctest::Approx(kColumnA[i]));
    CHECK_THROWS_AS(blosum_mean(chain("c", "XX").sequence), ValidationError);
}

TEST_CASE("blosum mean: set-based averaging counts each residue once") {
    auto occurrence = blosum_mean(chain("c", "AAC").sequence);
    auto set_based = blosum_mean(chain("c", "AAC").sequence, true);
    auto pair = blosum_mean(chain("c", "AC").sequence);
    for (int i = 0; i < 20; ++i) {
        CHECK(set_based[i] == doctest::Approx(pair[i]));
        CHECK(occurrence[i] == doctest::Approx((2 * kColumnA[i] + kColumnC[i]) / 3.0));
    }
}

TEST_CASE("blosum mean: permutation-invariant and bounded by column extremes") {
    Rng rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        std::string seq = random_sequence(rng, 3 + static_cast<int>(rng.below(20)));
        auto base = blosum_mean(chain("c", seq).sequence);
        std::vector<char> tmp(seq.begin(), seq.end());
        rng.shuffle(tmp);
        auto perm = blosum_mean(chain("c", std::string(tmp.begin(), tmp.end())).sequence);
        for (int i = 0; i < 20; ++i) {
            CHECK(base[i] == doctest::Approx(perm[i]).epsilon(1e-12));
            double lo = 1e9, hi = -1e9;
            for (char ch : seq) {
                const auto& col = blosum62_column(from_one_letter(ch));
                lo = std::min(lo, col[i]);
                hi = std::max(hi, col[i]);
            }
            CHECK(base[i] >= lo - 1e-12);
            CHECK(base[i] <= hi + 1e-12);
        }
    }
}

TEST_CASE("protparam: aromaticity") {
    CHECK(protparam(chain("c", "FWY"))[1] == doctest::Approx(1.0));
    CHECK(protparam(chain("c", "AAAA"))[1] == doctest::Approx(0.0));
}

TEST_CASE("protparam: molecular weight from the residue-mass table") {
    CHECK(amino_acid_mass(AminoAcid::G) == doctest::Approx(75.07).epsilon(1e-3));
    // GG: two glycines minus one water
    CHECK(protparam(chain("c", "GG"))[0] ==
          doctest::Approx(2 * 75.0666 - 18.015).epsilon(1e-12));
}

TEST_CASE("protparam: instability index of GG is 10 * DIWV(G,G)") {
    CHECK(protparam(chain("c", "GG"))[2] ==
          doctest::Approx(10.0 * diwv(AminoAcid::G, AminoAcid::G)).epsilon(1e-12));
    CHECK(diwv(AminoAcid::G, AminoAcid::G) == doctest::Approx(13.34));
}

TEST_CASE("protparam: pI is the zero of a decreasing net-charge curve") {
    Rng rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        auto c = chain("c", random_sequence(rng, 5 + static_cast<int>(rng.below(40))));
        double pi = protparam(c)[3];
        CHECK(net_charge(c, pi - 0.1) > 0.0);
        CHECK(net_charge(c, pi + 0.1) < 0.0);
    }
}

TEST_CASE("protparam: secondary-structure fractions lie in [0,1]; classes overlap") {
    Rng rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        auto v = protparam(chain("c", random_sequence(rng, 10)));
        for (int i : {4, 5, 6}) {
            CHECK(v[i] >= 0.0);
            CHECK(v[i] <= 1.0);
        }
    }
    // L counts toward both helix and sheet
    auto v = protparam(chain("c", "LL"));
    CHECK(v[4] == doctest::Approx(1.0));
    CHECK(v[6] == doctest::Approx(1.0));
}

TEST_CASE("protparam: fewer than 2 canonical residues is an error") {
    CHECK_THROWS_AS(protparam(chain("c", "G")), ValidationError);
    CHECK_THROWS_AS(protparam(chain("c", "GX")), ValidationError);
    CHECK_NOTHROW(protparam(chain("c", "GXG")));
}

TEST_CASE("pssm mean: zero, identity, and hand-averaged profiles") {
    PssmProfile zero{3, {std::vector<int>(20, 0), std::vector<int>(20, 0),
                         std::vector<int>(20, 0)}};
    for (double v : pssm_mean(zero)) CHECK(v == 0.0);

    PssmProfile one{1, {{}}};
    for (int i = 0; i < 20; ++i) one.scores[0].push_back(i - 7);
    auto v1 = pssm_mean(one);
    for (int i = 0; i < 20; ++i) CHECK(v1[i] == doctest::Approx(i - 7.0));

    PssmProfile two{2, {{}, {}}};
    for (int i = 0; i < 20; ++i) {
        two.scores[0].push_back(i);
        two.scores[1].push_back(3 * i + 1);
    }
    auto v2 = pssm_mean(two);
    for (int i = 0; i < 20; ++i)
        CHECK(v2[i] == doctest::Approx((i + 3.0 * i + 1.0) / 2.0));
}

TEST_CASE("complex features: per-side mean then ligand-first concatenation") {
    auto fn = [](const ProteinChain& c) -> std::vector<double> {
        if (c.chain_id == "L1") return {1, 3};
        if (c.chain_id == "L2") return {3, 5};
        return {0, 0};
    };
    auto fv = complex_features("cx", "TEST", {chain("L1", "AA"), chain("L2", "AA")},
                               {chain("R", "AA")}, fn);
    REQUIRE(fv.values.size() == 4);
    CHECK(fv.values[0] == doctest::Approx(2.0));
    CHECK(fv.values[1] == doctest::Approx(4.0));
    CHECK(fv.values[2] == 0.0);
    CHECK(fv.values[3] == 0.0);
}

TEST_CASE("complex features: single chain per side concatenates unchanged") {
    auto fn = [](const ProteinChain& c) { return kmer_composition(c, 2); };
    auto lig = chain("A", "ACDE"), rec = chain("B", "GGWY");
    auto fv = complex_features("cx", "KMER", {lig}, {rec}, fn);
    REQUIRE(fv.dim() == 800);
    auto vl = kmer_composition(lig, 2), vr = kmer_composition(rec, 2);
    for (int i = 0; i < 400; ++i) {
        CHECK(fv.values[i] == vl[i]);
        CHECK(fv.values[400 + i] == vr[i]);
    }
}

TEST_CASE("complex features: empty side is an error; chain errors carry the id") {
    auto fn = [](const ProteinChain& c) { return kmer_composition(c, 2); };
    CHECK_THROWS_AS(complex_features("cx", "KMER", {}, {chain("B", "AC")}, fn),
                    ValidationError);
    CHECK_THROWS_WITH_AS(
        complex_features("cx", "KMER", {chain("bad", "A")}, {chain("B", "AC")}, fn),
        doctest::Contains("bad"), ValidationError);
}

TEST_CASE("complex features: identical chain on both sides gives equal halves") {
    auto fn = [](const ProteinChain& c) { return kmer_composition(c, 2); };
    auto c = chain("A", "ACDEFG");
    auto fv = complex_features("cx", "KMER", {c}, {c}, fn);
    for (int i = 0; i < 400; ++i) CHECK(fv.values[i] == fv.values[400 + i]);
}
