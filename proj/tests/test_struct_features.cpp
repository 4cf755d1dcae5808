#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "affikd/error.hpp"
#include "affikd/feat/sequence.hpp"
#include "affikd/feat/structure.hpp"
#include "affikd/rng.hpp"

using namespace affikd;
using namespace affikd::bio;
using namespace affikd::feat;

namespace {

struct Builder {
    ComplexStructure cs;
    int serial = 0;

    Builder(std::set<char> receptor, std::set<char> ligand) {
        cs.complex_id = "toy";
        cs.receptor_chains = std::move(receptor);
        cs.ligand_chains = std::move(ligand);
    }
    Builder& atom(char chain, int resseq, const char* resn, double x, double y, double z) {
        Atom a;
        a.serial = ++serial;
        a.atom_name = "CA";
        a.residue_name = resn;
        a.residue_seq = resseq;
        a.chain_id = chain;
        a.position = {x, y, z};
        cs.atoms.push_back(a);
        return *this;
    }
};

const char* kResnames[20] = {"ALA", "CYS", "ASP", "GLU", "PHE", "GLY", "HIS",
                             "ILE", "LYS", "LEU", "MET", "ASN", "PRO", "GLN",
                             "ARG", "SER", "THR", "VAL", "TRP", "TYR"};

ComplexStructure random_complex(Rng& rng, int max_atoms_per_side) {
    Builder b({'A'}, {'B'});
    auto fill_side = [&](char chain, double center) {
        int n_res = 1 + static_cast<int>(rng.below(6));
        int atoms_left = 1 + static_cast<int>(rng.below(max_atoms_per_side));
        for (int r = 0; r < n_res; ++r) {
            int n_atoms = std::max<std::size_t>(1, rng.below(atoms_left / n_res + 2));
            for (int a = 0; a < n_atoms; ++a)
                b.atom(chain, r + 1, kResnames[rng.below(20)],
                       center + rng.uniform(-6, 6), rng.uniform(-6, 6), rng.uniform(-6, 6));
        }
    };
    fill_side('A', 0.0);
    fill_side('B', rng.uniform(2.0, 14.0));
    return b.cs;
}

// Plain all-pairs oracle with no bounding-box shortcut.
std::vector<std::pair<ResidueKey, ResidueKey>> oracle_contacts(
    const ComplexStructure& cs, double cutoff) {
    auto rec = group_residues(cs, true);
    auto lig = group_residues(cs, false);
    std::vector<std::pair<ResidueKey, ResidueKey>> out;
    for (const auto& r : rec)
        for (const auto& l : lig) {
            double best = 1e300;
            for (const auto& pa : r.atoms)
                for (const auto& pb : l.atoms) best = std::min(best, distance(pa, pb));
            if (best <= cutoff) out.emplace_back(r.key, l.key);
        }
    return out;
}

// Rotation matrix from a random unit quaternion, plus a translation.
ComplexStructure rigid_transform(const ComplexStructure& cs, Rng& rng) {
    double q[4];
    double norm = 0;
    for (double& qi : q) {
        qi = rng.normal();
        norm += qi * qi;
    }
    norm = std::sqrt(norm);
    for (double& qi : q) qi /= norm;
    double w = q[0], x = q[1], y = q[2], z = q[3];
    double rot[3][3] = {
        {1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
        {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
        {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}};
    Vec3 t{rng.uniform(-50, 50), rng.uniform(-50, 50), rng.uniform(-50, 50)};

    ComplexStructure out = cs;
    for (auto& a : out.atoms) {
        Vec3 p = a.position;
        a.position = {rot[0][0] * p.x + rot[0][1] * p.y + rot[0][2] * p.z + t.x,
                      rot[1][0] * p.x + rot[1][1] * p.y + rot[1][2] * p.z + t.y,
                      rot[2][0] * p.x + rot[2][1] * p.y + rot[2][2] * p.z + t.z};
    }
    return out;
}

}  // namespace

TEST_CASE("residue min distance: 3-4-5 triangle, coincident points, two-pair case") {
    CHECK(residue_min_distance({{0, 0, 0}}, {{3, 4, 0}}) == doctest::Approx(5.0));
    CHECK(residue_min_distance({{1, 2, 3}}, {{1, 2, 3}}) == doctest::Approx(0.0));
    CHECK(residue_min_distance({{0, 0, 0}, {10, 0, 0}}, {{6, 0, 0}}) ==
          doctest::Approx(4.0));
    CHECK_THROWS_AS(residue_min_distance({}, {{0, 0, 0}}), ValidationError);
}

TEST_CASE("interface map: cutoff boundary") {
    auto near = Builder({'A'}, {'B'})
                    .atom('A', 1, "ALA", 0, 0, 0)
                    .atom('B', 1, "GLY", 7.9, 0, 0)
                    .cs;
    auto m = interface_map(near);
    CHECK(m.contact_pairs.size() == 1);
    CHECK(m.receptor_iface.size() == 1);
    CHECK(m.ligand_iface.size() == 1);

    auto far = Builder({'A'}, {'B'})
                   .atom('A', 1, "ALA", 0, 0, 0)
                   .atom('B', 1, "GLY", 9.0, 0, 0)
                   .cs;
    auto m2 = interface_map(far);
    CHECK(m2.contact_pairs.empty());
    CHECK(m2.receptor_iface.empty());
    CHECK(m2.ligand_iface.empty());
}

TEST_CASE("interface map: hand-placed 3x2 toy matches the all-pairs oracle") {
    auto cs = Builder({'A'}, {'B'})
                  .atom('A', 1, "ALA", 0, 0, 0)
                  .atom('A', 1, "ALA", 1.5, 0, 0)
                  .atom('A', 2, "GLY", 20, 0, 0)
                  .atom('A', 3, "SER", 0, 12, 0)
                  .atom('B', 1, "TRP", 5, 0, 0)
                  .atom('B', 2, "HIS", 0, 19, 0)
                  .cs;
    auto m = interface_map(cs);
    auto expected = oracle_contacts(cs, 8.0);
    CHECK(m.contact_pairs == expected);
    // contacts: A1-B1 at 3.5 A and A3-B2 at 7 A
    REQUIRE(m.contact_pairs.size() == 2);
    CHECK(m.contact_pairs[0].first == ResidueKey{'A', 1});
    CHECK(m.contact_pairs[0].second == ResidueKey{'B', 1});
    CHECK(m.contact_pairs[1].first == ResidueKey{'A', 3});
    CHECK(m.contact_pairs[1].second == ResidueKey{'B', 2});
}

TEST_CASE("interface map: matches the oracle on random toys") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto cs = random_complex(rng, 30);
        auto m = interface_map(cs);
        CHECK(m.contact_pairs == oracle_contacts(cs, 8.0));
    }
}

TEST_CASE("interface map: shrinking the cutoff never adds contacts") {
    Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        auto cs = random_complex(rng, 20);
        auto wide = interface_map(cs, 8.0).contact_pairs;
        auto narrow = interface_map(cs, 4.0).contact_pairs;
        for (const auto& pair : narrow)
            CHECK(std::find(wide.begin(), wide.end(), pair) != wide.end());
    }
}

TEST_CASE("nirp: single GLY-ALA contact fills bin (A,G)") {
    auto cs = Builder({'A'}, {'B'})
                  .atom('A', 1, "GLY", 0, 0, 0)
                  .atom('B', 1, "ALA", 3, 0, 0)
                  .cs;
    auto v = nirp(cs);
    REQUIRE(v.size() == 211);
    int bin = nirp_bin(AminoAcid::A, AminoAcid::G);
    CHECK(v[bin] == doctest::Approx(1.0));
    CHECK(std::accumulate(v.begin(), v.end(), 0.0) == doctest::Approx(1.0));
}

TEST_CASE("nirp: A:B and B:A land in one bin") {
    CHECK(nirp_bin(AminoAcid::A, AminoAcid::G) == nirp_bin(AminoAcid::G, AminoAcid::A));
    CHECK(nirp_bin(AminoAcid::W, AminoAcid::C) == nirp_bin(AminoAcid::C, AminoAcid::W));
    // bins cover 0..209 exactly over unordered canonical pairs
    std::vector<int> seen(211, 0);
    for (int i = 0; i < 20; ++i)
        for (int j = i; j < 20; ++j)
            seen[nirp_bin(static_cast<AminoAcid>(i), static_cast<AminoAcid>(j))]++;
    for (int b = 0; b < 210; ++b) CHECK(seen[b] == 1);
    CHECK(seen[210] == 0);
    CHECK(nirp_bin(AminoAcid::Unknown, AminoAcid::A) == 210);
}

TEST_CASE("nirp: normalized entries sum to 1; raw counts are integers") {
    Rng rng(9);
    for (int trial = 0; trial < 25; ++trial) {
        auto cs = random_complex(rng, 20);
        auto m = interface_map(cs);
        auto v = nirp(cs);
        double sum = std::accumulate(v.begin(), v.end(), 0.0);
        if (m.contact_pairs.empty()) {
            CHECK(sum == 0.0);
        } else {
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        }
        for (double x : v) CHECK(x >= 0.0);
        auto raw = nirp(cs, 8.0, false);
        CHECK(std::accumulate(raw.begin(), raw.end(), 0.0) ==
              doctest::Approx(static_cast<double>(m.contact_pairs.size())));
    }
}

TEST_CASE("nirp: invariant under rigid rotation + translation") {
    Rng rng(10);
    for (int trial = 0; trial < 20; ++trial) {
        auto cs = random_complex(rng, 25);
        if (interface_map(cs).contact_pairs.empty()) continue;
        auto moved = rigid_transform(cs, rng);
        auto v0 = nirp(cs), v1 = nirp(moved);
        for (int i = 0; i < 211; ++i) CHECK(std::fabs(v0[i] - v1[i]) <= 1e-9);
    }
}

TEST_CASE("nirp: swapping receptor/ligand labels leaves the vector unchanged") {
    Rng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        auto cs = random_complex(rng, 20);
        auto swapped = cs;
        std::swap(swapped.receptor_chains, swapped.ligand_chains);
        auto v0 = nirp(cs), v1 = nirp(swapped);
        for (int i = 0; i < 211; ++i) CHECK(v0[i] == doctest::Approx(v1[i]).epsilon(1e-12));
    }
}

TEST_CASE("blosum interface: all-alanine interface repeats column A") {
    auto cs = Builder({'A'}, {'B'})
                  .atom('A', 1, "ALA", 0, 0, 0)
                  .atom('A', 2, "ALA", 2, 0, 0)
                  .atom('B', 1, "ALA", 4, 0, 0)
                  .cs;
    auto v = blosum_interface(cs);
    REQUIRE(v.size() == 40);
    auto colA = blosum_mean({AminoAcid::A});
    for (int i = 0; i < 20; ++i) {
        CHECK(v[i] == doctest::Approx(colA[i]));
        CHECK(v[20 + i] == doctest::Approx(colA[i]));
    }
}

TEST_CASE("blosum interface: no contacts is an error naming the cutoff") {
    auto cs = Builder({'A'}, {'B'})
                  .atom('A', 1, "ALA", 0, 0, 0)
                  .atom('B', 1, "GLY", 50, 0, 0)
                  .cs;
    CHECK_THROWS_WITH_AS(blosum_interface(cs), doctest::Contains("no interface"),
                         ValidationError);
}

TEST_CASE("blosum interface: halves match blosum_mean over hand-listed iface residues") {
    // receptor iface residues: SER+TRP; ligand iface: GLY only.
    auto cs = Builder({'A'}, {'B'})
                  .atom('A', 1, "SER", 0, 0, 0)
                  .atom('A', 2, "TRP", 3, 0, 0)
                  .atom('A', 3, "HIS", 40, 0, 0)  // far from everything
                  .atom('B', 1, "GLY", 6, 0, 0)
                  .atom('B', 2, "LYS", 60, 0, 0)  // far
                  .cs;
    auto v = blosum_interface(cs);
    auto lig = blosum_mean({AminoAcid::G});
    auto rec = blosum_mean({AminoAcid::S, AminoAcid::W});
    for (int i = 0; i < 20; ++i) {
        CHECK(v[i] == doctest::Approx(lig[i]));
        CHECK(v[20 + i] == doctest::Approx(rec[i]));
    }
}

TEST_CASE("blosum interface: swapping sides swaps the halves") {
    Rng rng(12);
    for (int trial = 0; trial < 10; ++trial) {
        auto cs = random_complex(rng, 20);
        if (interface_map(cs).contact_pairs.empty()) continue;
        auto swapped = cs;
        std::swap(swapped.receptor_chains, swapped.ligand_chains);
        auto v = blosum_interface(cs);
        auto w = blosum_interface(swapped);
        for (int i = 0; i < 20; ++i) {
            CHECK(v[i] == doctest::Approx(w[20 + i]).epsilon(1e-12));
            CHECK(v[20 + i] == doctest::Approx(w[i]).epsilon(1e-12));
        }
    }
}
