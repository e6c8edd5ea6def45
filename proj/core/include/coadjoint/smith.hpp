#pragma once

#include "coadjoint/cartan_type.hpp"

namespace coadjoint {

/// Smith normal form D = left * M * right with left, right unimodular.
///
/// D is diagonal with nonnegative entries d_0 | d_1 | ... ; zero entries
/// (rank deficiency) come last. left_inverse is the exact integer inverse
/// of left.
struct SmithForm {
  IntMatrix left;
  IntMatrix left_inverse;
  IntMatrix right;
  IntMatrix diagonal;
};

/// Throws InvalidInput on an empty matrix. Entries are int64; intermediate
/// overflow is detected and reported as std::overflow_error.
SmithForm smith_normal_form(const IntMatrix& m);

/// Exact determinant via fraction-free (Bareiss) elimination.
std::int64_t determinant(const IntMatrix& m);

}  // namespace coadjoint
