#ifndef LATCONE_BOUNDS_HPP
#define LATCONE_BOUNDS_HPP

#include "latcone/numeric.hpp"

#include <string>
#include <vector>

namespace latcone {

// m = 2 (n+2)! n, the base-point-free multiple in dimension n.
Int bpf_multiple(unsigned n);

// (m^n Ln)^(n+1), bounding cyclic subgroups of the polarized birational group.
Int cyclic_subgroup_bound(unsigned n, const Int& ln);

// (m^n Ln)^(16 n 3^n), bounding the full polarized automorphism group.
Int aut_group_bound(unsigned n, const Int& ln);

// 4^484 = 2^968, bounding finite subgroups of K3 automorphism groups.
Int k3_aut_torsion_bound();

// prod_{i=0}^{rho-1} (3^rho - 3^i) = #GL_rho(F_3); bounds the order of any
// torsion subgroup of GL_rho(Z) through the reduction 1 + 3 M_rho(Z_3).
Int gl_f3_order(unsigned rho);

struct BoundEntry {
    std::string name;
    Int value;
    // Distinguishes values quoted from cited formulas from combinations
    // assembled by this toolkit.
    std::string provenance;
};

struct BoundReport {
    std::vector<BoundEntry> entries;
};

BoundReport bound_report(unsigned dimension, const Int& self_intersection, unsigned rank);

} // namespace latcone

#endif
