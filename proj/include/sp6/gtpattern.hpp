// Gelfand–Tsetlin pattern enumeration for U(3): an independent route to the
// weight multiplicities of an irreducible representation, used as the oracle
// that validates the Weyl-character implementation.
//
// A pattern with top row (a >= b >= c) is
//        a     b     c
//          m12   m22        a >= m12 >= b >= m22 >= c
//             m11           m12 >= m11 >= m22
// and contributes the weight
//   (m11, m12 + m22 − m11, a + b + c − m12 − m22).

#pragma once

#include "sp6/uchar.hpp"

namespace sp6 {

/// Weight multiplicities of the irreducible with highest weight hw, obtained
/// purely by pattern counting (no character arithmetic).
LaurentChar gt_char(const Weight& hw);

/// Number of patterns = dimension.
std::int64_t gt_dim(const Weight& hw);

}  // namespace sp6
