#ifndef NOVB_ZMATRIX_HPP
#define NOVB_ZMATRIX_HPP

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace novb {

// Dense row-major integer matrix, exact arithmetic throughout.
using ZMat = std::vector<std::vector<mpz_class>>;
using ZVec = std::vector<mpz_class>;

// Row Hermite normal form basis of the row lattice of A: echelon shape,
// positive pivots, entries above each pivot reduced into [0, pivot).
// Zero rows are dropped, so the result is a basis.
ZMat hnf_row_basis(ZMat a);

// Coordinates of v in an echelon row basis (as produced by hnf_row_basis):
// x with x * basis == v, or nullopt if v is not in the lattice.
std::optional<ZVec> lattice_coordinates(const ZMat& basis, const ZVec& v);

// Basis (as rows) of the saturated kernel lattice { x in Z^n : A x = 0 }
// of an m x n matrix, in HNF.
ZMat kernel_lattice(const ZMat& a, int num_cols);

// Rank over Q.
int rank_rational(std::vector<std::vector<mpq_class>> m);
int rank_integer(const ZMat& a);

} // namespace novb

#endif
