#ifndef NOVB_MINORS_HPP
#define NOVB_MINORS_HPP

#include <cstdint>
#include <vector>

#include "novb/laurent.hpp"

namespace novb {

struct MinorOptions {
    std::uint64_t cap = 1000000; // SizeExceeded past this many minors
    bool parallel = true;
};

// Determinant of a square Laurent matrix, fraction-free (Bareiss) with exact
// divisions in the Laurent ring.
LaurentPoly det_laurent(LMat m);

// Reference determinant by cofactor expansion along the sparsest line.
LaurentPoly det_cofactor(const LMat& m);

// All nonzero k x k minors in lexicographic (row-set, column-set) order.
// k = 0 yields {1}; k exceeding the matrix dimensions yields {}.  Throws
// SizeExceeded when the number of submatrices exceeds opts.cap.
std::vector<LaurentPoly> enumerate_minors(const LMat& m, int k, const MinorOptions& opts = {});

// Plain-loop reference (cofactor determinants, iterator-style enumeration);
// must produce the identical list.
std::vector<LaurentPoly> enumerate_minors_serial(const LMat& m, int k, const MinorOptions& opts = {});

} // namespace novb

#endif
