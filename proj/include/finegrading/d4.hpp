#pragma once

#include "finegrading/enumerate.hpp"
#include "finegrading/octonion.hpp"

namespace fgr {

/// The automorphism group of the D4 root system Phi = {+-eps_i +- eps_j},
/// acting on span{eps_0,...,eps_3} by exact rational 4x4 matrices.
struct AutPhi {
    std::vector<CycMatrix> weyl;  // 192 elements
    std::vector<CycMatrix> full;  // 1152 elements
};
const AutPhi& autphi_group();

/// The 24 roots as rational coordinate vectors.
std::vector<CycMatrix> d4_roots();

/// Order of a finite-order element (throws past the bound).
long element_order(const CycMatrix& m, long bound = 48);

/// theta and iota_tau as weight-space matrices.
CycMatrix theta_weight_matrix();
CycMatrix iota_tau_weight_matrix();

/// Conjugacy classes of order-3 elements of Aut Phi, each a list of indexes
/// into autphi_group().full.
std::vector<std::vector<size_t>> order3_classes();

/// Number of partitions of Phi into three 8-element subsets in which any two
/// roots are proportional or orthogonal (the paper's Phi_1, Phi_2, Phi_3 is
/// the only one).
long phi_partition_count();
/// The stated partition satisfies the property.
bool phi_partition_stated_valid();

/// The three fine gradings of so_8 whose MAD contains an outer order-3
/// automorphism: (a) Z^2 x Z_3 of type (26,1), (b) Z_2^3 x Z_3 of type
/// (14,7), (c) Z_3^3 of type (24,2).
std::vector<LieGrading> build_triality_gradings();

struct D4Row {
    int index = 0;
    FinAbGroup group;
    std::vector<long> type;
    std::string provenance;  // matrix-class key, "merged: ...", or triality-a/b/c
};
/// The 17-row table: the 15 matrix-level classes with the two (24,2)-type
/// Z_2^3 x Z_4 classes merged, plus the three triality gradings.
std::vector<D4Row> d4_table();

}  // namespace fgr
