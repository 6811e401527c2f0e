#pragma once

#include "contextkit/matrix.hpp"

#include <cstddef>
#include <vector>

namespace contextkit {

struct RrefResult {
    RatMatrix matrix;                     // reduced row echelon form, zero rows last
    std::size_t rank = 0;                 // number of pivot rows
    std::vector<std::size_t> pivot_cols;  // pivot column of row i, for i < rank
};

// Unique reduced row echelon form, computed by fraction-free (Bareiss)
// Gauss-Jordan elimination with first-nonzero pivoting, normalized to
// leading-1 form at the end. Exact; throws on an empty matrix.
RrefResult rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

// True iff appending `v` to `m` leaves the rank unchanged.
// Throws std::invalid_argument when v's length differs from m's column count.
bool in_row_space(const RatMatrix& m, const std::vector<Rational>& v);

// Precomputed row space of a matrix for repeated membership queries.
class RowSpace {
public:
    explicit RowSpace(const RatMatrix& m) : rref_(rref(m)) {}

    bool contains(const std::vector<Rational>& v) const;
    const RrefResult& reduced() const { return rref_; }

private:
    RrefResult rref_;
};

}  // namespace contextkit
