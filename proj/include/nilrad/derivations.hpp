#pragma once

#include <vector>

#include "nilrad/structure_table.hpp"

namespace nilrad {

// A derivation is stored as its matrix in the column convention
// D(e_j) = sum_i D^i_j e_i.
struct DerivationSpace {
    std::vector<Mat> basis;       // nullspace of the Leibniz system, RREF order
    std::vector<Mat> inner_basis; // independent ad(e_j), chosen greedily by j
    int dim_total = 0;
    int dim_inner = 0;
    int dim_outer = 0;
};

DerivationSpace derivation_space(const StructureTable& table);

bool satisfies_leibniz(const StructureTable& table, const Mat& d);

// Exact test d^dim = 0. Throws not_a_derivation_error if d violates Leibniz.
bool is_nilpotent_derivation(const StructureTable& table, const Mat& d);

enum class Tristate { yes, no, undecided };

// True iff no nontrivial rational combination of ds is nilpotent. Exact for
// spans of dimension <= 2; larger spans use the linear trace condition plus a
// definiteness certificate on tr(M^2) and report undecided past that.
Tristate is_nilindependent(const StructureTable& table, const std::vector<Mat>& ds);

// True iff every derivation of the algebra is nilpotent (so the algebra is
// not the nilradical of any solvable extension).
bool is_characteristically_nilpotent(const StructureTable& table);

} // namespace nilrad
