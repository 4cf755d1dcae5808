#include "affikd/feat/tables.hpp"

#include <stdexcept>

namespace affikd::feat {

using bio::AminoAcid;
using bio::index_of;

namespace {

// Row/col order: A C D E F G H I K L M N P Q R S T V W Y
constexpr std::array<std::array<double, 20>, 20> kBlosum62 = {{
    {  4,   0,  -2,  -1,  -2,   0,  -2,  -1,  -1,  -1,  -1,  -2,  -1,  -1,  -1,   1,   0,   0,  -3,  -2},  // A
    {  0,   9,  -3,  -4,  -2,  -3,  -3,  -1,  -3,  -1,  -1,  -3,  -3,  -3,  -3,  -1,  -1,  -1,  -2,  -2},  // C
    { -2,  -3,   6,   2,  -3,  -1,  -1,  -3,  -1,  -4,  -3,   1,  -1,   0,  -2,   0,  -1,  -3,  -4,  -3},  // D
    { -1,  -4,   2,   5,  -3,  -2,   0,  -3,   1,  -3,  -2,   0,  -1,   2,   0,   0,  -1,  -2,  -3,  -2},  // E
    { -2,  -2,  -3,  -3,   6,  -3,  -1,   0,  -3,   0,   0,  -3,  -4,  -3,  -3,  -2,  -2,  -1,   1,   3},  // F
    {  0,  -3,  -1,  -2,  -3,   6,  -2,  -4,  -2,  -4,  -3,   0,  -2,  -2,  -2,   0,  -2,  -3,  -2,  -3},  // G
    { -2,  -3,  -1,   0,  -1,  -2,   8,  -3,  -1,  -3,  -2,   1,  -2,   0,   0,  -1,  -2,  -3,  -2,   2},  // H
    { -1,  -1,  -3,  -3,   0,  -4,  -3,   4,  -3,   2,   1,  -3,  -3,  -3,  -3,  -2,  -1,   3,  -3,  -1},  // I
    { -1,  -3,  -1,   1,  -3,  -2,  -1,  -3,   5,  -2,  -1,   0,  -1,   1,   2,   0,  -1,  -2,  -3,  -2},  // K
    { -1,  -1,  -4,  -3,   0,  -4,  -3,   2,  -2,   4,   2,  -3,  -3,  -2,  -2,  -2,  -1,   1,  -2,  -1},  // L
    { -1,  -1,  -3,  -2,   0,  -3,  -2,   1,  -1,   2,   5,  -2,  -2,   0,  -1,  -1,  -1,   1,  -1,  -1},  // M
    { -2,  -3,   1,   0,  -3,   0,   1,  -3,   0,  -3,  -2,   6,  -2,   0,   0,   1,   0,  -3,  -4,  -2},  // N
    { -1,  -3,  -1,  -1,  -4,  -2,  -2,  -3,  -1,  -3,  -2,  -2,   7,  -1,  -2,  -1,  -1,  -2,  -4,  -3},  // P
    { -1,  -3,   0,   2,  -3,  -2,   0,  -3,   1,  -2,   0,   0,  -1,   5,   1,   0,  -1,  -2,  -2,  -1},  // Q
    { -1,  -3,  -2,   0,  -3,  -2,   0,  -3,   2,  -2,  -1,   0,  -2,   1,   5,  -1,  -1,  -3,  -3,  -2},  // R
    {  1,  -1,   0,   0,  -2,   0,  -1,  -2,   0,  -2,  -1,   1,  -1,   0,  -1,   4,   1,  -2,  -3,  -2},  // S
    {  0,  -1,  -1,  -1,  -2,  -2,  -2,  -1,  -1,  -1,  -1,   0,  -1,  -1,  -1,   1,   5,   0,  -2,  -2},  // T
    {  0,  -1,  -3,  -2,  -1,  -3,  -3,   3,  -2,   1,   1,  -3,  -2,  -2,  -3,  -2,   0,   4,  -3,  -1},  // V
    { -3,  -2,  -4,  -3,   1,  -2,  -2,  -3,  -3,  -2,  -1,  -4,  -4,  -2,  -3,  -3,  -2,  -3,  11,   2},  // W
    { -2,  -2,  -3,  -2,   3,  -3,   2,  -1,  -2,  -1,  -1,  -2,  -3,  -1,  -2,  -2,  -2,  -1,   2,   7},  // Y
}};

// Free amino acid average masses in Da; peptide-bond formation loses one
// water (kWaterMass) per bond.
constexpr std::array<double, 20> kAminoAcidMass = {
    89.0932,   // A
    121.1582,  // C
    133.1027,  // D
    147.1293,  // E
    165.1891,  // F
    75.0666,   // G
    155.1546,  // H
    131.1729,  // I
    146.1876,  // K
    131.1729,  // L
    149.2113,  // M
    132.1179,  // N
    115.1305,  // P
    146.1445,  // Q
    174.2010,  // R
    105.0926,  // S
    119.1192,  // T
    117.1463,  // V
    204.2252,  // W
    181.1885,  // Y
};

// DIWV(row = first residue, col = second residue).
constexpr std::array<std::array<double, 20>, 20> kDiwv = {{
    {  1.00,  44.94,  -7.49,   1.00,   1.00,   1.00,  -7.49,   1.00,   1.00,   1.00,   1.00,   1.00,  20.26,   1.00,   1.00,   1.00,   1.00,   1.00,   1.00,   1.00},  // A
    {  1.00,   1.00,  20.26,   1.00,   1.00,   1.00,  33.60,   1.00,   1.00,  20.26,  33.60,   1.00,  20.26,  -6.54,   1.00,   1.00,  33.60,  -6.54,  24.68,   1.00},  // C
    {  1.00,   1.00,   1.00,   1.00,  -6.54,   1.00,   1.00,   1.00,  -7.49,   1.00,   1.00,   1.00,   1.00,   1.00,  -6.54,  20.26, -14.03,   1.00,   1.00,   1.00},  // D
    {  1.00,  44.94,  20.26,  33.60,   1.00,   1.00,  -6.54,  20.26,   1.00,   1.00,   1.00,   1.00,  20.26,  20.26,   1.00,  20.26,   1.00,   1.00, -14.03,   1.00},  // E
    {  1.00,   1.00,  13.34,   1.00,   1.00,   1.00,   1.00,   1.00, -14.03,   1.00,   1.00,   1.00,  20.26,   1.00,   1.00,   1.00,   1.00,   1.00,   1.00,  33.60},  // F
    { -7.49,   1.00,   1.00,  -6.54,   1.00,  13.34,   1.00,  -7.49,  -7.49,   1.00,   1.00,  -7.49,   1.00,   1.00,   1.00,   1.00,  -7.49,   1.00,  13.34,  -7.49},  // G
    {  1.00,   1.00,   1.00,   1.00,  -9.37,  -9.37,   1.00,  44.94,  24.68,   1.00,   1.00,  24.68,  -1.88,   1.00,   1.00,   1.00,  -6.54,   1.00,  -1.88,  44.94},  // H
    {  1.00,   1.00,   1.00,  44.94,   1.00,   1.00,  13.34,   1.00,  -7.49,  20.26,   1.00,   1.00,  -1.88,   1.00,   1.00,   1.00,   1.00,  -7.49,   1.00,   1.00},  // I
    {  1.00,   1.00,   1.00,   1.00,   1.00,  -7.49,   1.00,  -7.49,   1.00,  -7.49,  33.60,   1.00,  -6.54,  24.64,  33.60,   1.00,   1.00,  -7.49,   1.00,   1.00},  // K
    {  1.00,   1.00,   1.00,   1.00,   1.00,   1.00,   1.00,   1.00,  -7.49,   1.00,   1.00,   1.00,  20.26,  33.60,  20.26,   1.00,   1.00,   1.00,  24.68,   1.00},  // L
    { 13.34,   1.00,   1.00,   1.00,   1.00,   1.00,  58.28,   1.00,   1.00,   1.00,  -1.88,   1.00,  44.94,  -6.54,  -6.54,  44.94,  -1.88,   1.00,   1.00,  24.68},  // M
    {  1.00,  -1.88,   1.00,   1.00, -14.03, -14.03,   1.00,  44.94,  24.68,   1.00,   1.00,   1.00,  -1.88,  -6.54,   1.00,   1.00,  -7.49,   1.00,  -9.37,   1.00},  // N
    { 20.26,  -6.54,  -6.54,  18.38,  20.26,   1.00,   1.00,   1.00,   1.00,   1.00,  -6.54,   1.00,  20.26,  20.26,  -6.54,  20.26,   1.00,  20.26,  -1.88,   1.00},  // P
    {  1.00,  -6.54,  20.26,  20.26,  -6.54,   1.00,   1.00,   1.00,   1.00,   1.00,   1.00,   1.00,  20.26,  20.26,   1.00,  44.94,   1.00,  -6.54,   1.00,  -6.54},  // Q
    {  1.00,   1.00,   1.00,   1.00,   1.00,  -7.49,  20.26,   1.00,   1.00,   1.00,   1.00,  13.34,  20.26,  20.26,  58.28,  44.94,   1.00,   1.00,  58.28,  -6.54},  // R
    {  1.00,  33.60,   1.00,  20.26,   1.00,   1.00,   1.00,   1.00,   1.00,   1.00,   1.00,   1.00,  44.94,  20.26,  20.26,  20.26,   1.00,   1.00,   1.00,   1.00},  // S
    {  1.00,   1.00,   1.00,  20.26,  13.34,  -7.49,   1.00,   1.00,   1.00,   1.00,   1.00, -14.03,   1.00,  -6.54,   1.00,   1.00,   1.00,   1.00, -14.03,   1.00},  // T
    {  1.00,   1.00, -14.03,   1.00,   1.00,  -7.49,   1.00,   1.00,  -1.88,   1.00,   1.00,   1.00,  20.26,   1.00,   1.00,   1.00,  -7.49,   1.00,   1.00,  -6.54},  // V
    {-14.03,   1.00,   1.00,   1.00,   1.00,  -9.37,  24.68,   1.00,   1.00,  13.34,  24.68,  13.34,   1.00,   1.00,   1.00,   1.00, -14.03,  -7.49,   1.00,   1.00},  // W
    { 24.68,   1.00,  24.68,  -6.54,   1.00,  -7.49,  13.34,   1.00,   1.00,   1.00,  44.94,   1.00,  13.34,   1.00, -15.91,   1.00,  -7.49,   1.00,  -9.37,  13.34},  // Y
}};

constexpr std::array<int, 20> kAminoGroup = {
    0,  // A
    6,  // C
    5,  // D
    5,  // E
    1,  // F
    0,  // G
    3,  // H
    1,  // I
    4,  // K
    1,  // L
    2,  // M
    3,  // N
    1,  // P
    3,  // Q
    4,  // R
    2,  // S
    2,  // T
    0,  // V
    3,  // W
    2,  // Y
};

int checked_index(AminoAcid aa, const char* what) {
    if (!bio::is_canonical(aa))
        throw std::invalid_argument(std::string(what) + ": not defined for Unknown residue");
    return index_of(aa);
}

}  // namespace

const std::array<double, 20>& blosum62_column(AminoAcid aa) {
    return kBlosum62[checked_index(aa, "blosum62_column")];
}

double amino_acid_mass(AminoAcid aa) {
    return kAminoAcidMass[checked_index(aa, "amino_acid_mass")];
}

double diwv(AminoAcid first, AminoAcid second) {
    return kDiwv[checked_index(first, "diwv")][checked_index(second, "diwv")];
}

int amino_group(AminoAcid aa) {
    return kAminoGroup[checked_index(aa, "amino_group")];
}

bool is_helix_residue(AminoAcid aa) {
    switch (aa) {
        case AminoAcid::V: case AminoAcid::I: case AminoAcid::Y:
        case AminoAcid::F: case AminoAcid::W: case AminoAcid::L:
            return true;
        default:
            return false;
    }
}

bool is_turn_residue(AminoAcid aa) {
    switch (aa) {
        case AminoAcid::N: case AminoAcid::P: case AminoAcid::G: case AminoAcid::S:
            return true;
        default:
            return false;
    }
}

bool is_sheet_residue(AminoAcid aa) {
    switch (aa) {
        case AminoAcid::E: case AminoAcid::M: case AminoAcid::A: case AminoAcid::L:
            return true;
        default:
            return false;
    }
}

}  // namespace affikd::feat
