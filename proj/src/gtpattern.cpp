#include "sp6/gtpattern.hpp"

#include <stdexcept>

namespace sp6 {

LaurentChar gt_char(const Weight& hw) {
    if (!hw.is_k_dominant())
        throw std::invalid_argument("gt_char: " + hw.str() + " is not dominant");
    const std::int64_t a = hw[0], b = hw[1], c = hw[2];
    LaurentChar ch;
    for (std::int64_t m12 = b; m12 <= a; ++m12)
        for (std::int64_t m22 = c; m22 <= b; ++m22)
            for (std::int64_t m11 = m22; m11 <= m12; ++m11)
                ch.add_term(Weight{m11, m12 + m22 - m11, a + b + c - m12 - m22}, 1);
    return ch;
}

std::int64_t gt_dim(const Weight& hw) {
    if (!hw.is_k_dominant())
        throw std::invalid_argument("gt_dim: " + hw.str() + " is not dominant");
    const std::int64_t a = hw[0], b = hw[1], c = hw[2];
    std::int64_t n = 0;
    for (std::int64_t m12 = b; m12 <= a; ++m12)
        for (std::int64_t m22 = c; m22 <= b; ++m22) n += m12 - m22 + 1;
    return n;
}

}  // namespace sp6
