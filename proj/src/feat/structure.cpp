#include "affikd/feat/structure.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "affikd/error.hpp"
#include "affikd/feat/sequence.hpp"

namespace affikd::feat {

using bio::AminoAcid;
using bio::ComplexStructure;
using bio::Vec3;

std::vector<ResidueAtoms> group_residues(const ComplexStructure& structure,
                                         bool receptor_side) {
    std::vector<ResidueAtoms> out;
    std::map<ResidueKey, std::size_t> index;
    for (const auto& atom : structure.atoms) {
        if (structure.is_receptor(atom.chain_id) != receptor_side) continue;
        ResidueKey key{atom.chain_id, atom.residue_seq};
        auto it = index.find(key);
        if (it == index.end()) {
            index.emplace(key, out.size());
            out.push_back(ResidueAtoms{key, atom.residue_type(), {atom.position}});
        } else {
            out[it->second].atoms.push_back(atom.position);
        }
    }
    return out;
}

double residue_min_distance(const std::vector<Vec3>& a, const std::vector<Vec3>& b) {
    if (a.empty() || b.empty())
        throw ValidationError("residue min distance: empty atom list");
    double best = std::numeric_limits<double>::infinity();
    for (const auto& pa : a)
        for (const auto& pb : b)
            best = std::min(best, bio::distance(pa, pb));
    return best;
}

namespace {

struct Aabb {
    Vec3 lo{std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::infinity()};
    Vec3 hi{-std::numeric_limits<double>::infinity(),
            -std::numeric_limits<double>::infinity(),
            -std::numeric_limits<double>::infinity()};

    void add(const Vec3& p) {
        lo.x = std::min(lo.x, p.x); lo.y = std::min(lo.y, p.y); lo.z = std::min(lo.z, p.z);
        hi.x = std::max(hi.x, p.x); hi.y = std::max(hi.y, p.y); hi.z = std::max(hi.z, p.z);
    }
};

// Lower bound on the distance between two boxes; 0 when they overlap.
double aabb_gap(const Aabb& a, const Aabb& b) {
    double dx = std::max({a.lo.x - b.hi.x, b.lo.x - a.hi.x, 0.0});
    double dy = std::max({a.lo.y - b.hi.y, b.lo.y - a.hi.y, 0.0});
    double dz = std::max({a.lo.z - b.hi.z, b.lo.z - a.hi.z, 0.0});
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

Aabb residue_box(const ResidueAtoms& r) {
    Aabb box;
    for (const auto& p : r.atoms) box.add(p);
    return box;
}

}  // namespace

InterfaceMap interface_map(const ComplexStructure& structure, double cutoff) {
    auto receptor = group_residues(structure, true);
    auto ligand = group_residues(structure, false);
    if (receptor.empty() || ligand.empty())
        throw ValidationError("interface map: a side has no residues");

    std::vector<Aabb> rec_boxes(receptor.size()), lig_boxes(ligand.size());
    for (std::size_t i = 0; i < receptor.size(); ++i) rec_boxes[i] = residue_box(receptor[i]);
    for (std::size_t j = 0; j < ligand.size(); ++j) lig_boxes[j] = residue_box(ligand[j]);

    InterfaceMap map;
    map.complex_id = structure.complex_id;
    for (std::size_t i = 0; i < receptor.size(); ++i) {
        for (std::size_t j = 0; j < ligand.size(); ++j) {
            if (aabb_gap(rec_boxes[i], lig_boxes[j]) > cutoff) continue;
            if (residue_min_distance(receptor[i].atoms, ligand[j].atoms) <= cutoff) {
                map.contact_pairs.emplace_back(receptor[i].key, ligand[j].key);
                map.receptor_iface.insert(receptor[i].key);
                map.ligand_iface.insert(ligand[j].key);
            }
        }
    }
    return map;
}

int nirp_bin(AminoAcid a, AminoAcid b) {
    if (!bio::is_canonical(a) || !bio::is_canonical(b)) return kNirpDim - 1;
    int i = bio::index_of(a), j = bio::index_of(b);
    if (i > j) std::swap(i, j);
    // pairs with smaller first index precede: offset(i) = sum_{t<i} (20 - t)
    int offset = i * 20 - i * (i - 1) / 2;
    return offset + (j - i);
}

namespace {

std::map<ResidueKey, AminoAcid> residue_types(const ComplexStructure& structure) {
    std::map<ResidueKey, AminoAcid> types;
    for (const auto& atom : structure.atoms)
        types.emplace(ResidueKey{atom.chain_id, atom.residue_seq}, atom.residue_type());
    return types;
}

}  // namespace

std::vector<double> nirp(const ComplexStructure& structure, double cutoff,
                         bool normalized) {
    auto map = interface_map(structure, cutoff);
    auto types = residue_types(structure);

    std::vector<double> out(kNirpDim, 0.0);
    for (const auto& [rec, lig] : map.contact_pairs)
        out[nirp_bin(types.at(rec), types.at(lig))] += 1.0;
    if (normalized && !map.contact_pairs.empty()) {
        double total = static_cast<double>(map.contact_pairs.size());
        for (double& v : out) v /= total;
    }
    return out;
}

std::vector<double> blosum_interface(const ComplexStructure& structure, double cutoff) {
    auto map = interface_map(structure, cutoff);
    if (map.ligand_iface.empty() || map.receptor_iface.empty())
        throw ValidationError("blosum interface: no interface at cutoff " +
                              std::to_string(cutoff) + " A for complex '" +
                              structure.complex_id + "'");
    auto types = residue_types(structure);

    auto side_types = [&](const std::set<ResidueKey>& keys) {
        std::vector<AminoAcid> res;
        res.reserve(keys.size());
        for (const auto& key : keys) res.push_back(types.at(key));
        return res;
    };
    auto out = blosum_mean(side_types(map.ligand_iface));
    auto rec = blosum_mean(side_types(map.receptor_iface));
    out.insert(out.end(), rec.begin(), rec.end());
    return out;
}

}  // namespace affikd::feat
