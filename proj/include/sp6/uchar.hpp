// The exact character ring of U(3): Weyl characters as integer Laurent
// polynomials in x1,x2,x3, dimensions, exterior-power characters of p±, and
// decomposition of genuine characters into irreducibles by greedy
// leading-term subtraction.

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "sp6/rootsys.hpp"

namespace sp6 {

/// Raised when decompose() is fed something that is not a genuine character,
/// or when exact Laurent division leaves a remainder.
struct NotACharacterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Integer Laurent polynomial in three variables, keyed by exponent weight.
/// Terms are kept lexicographically descending so begin() is the leading term.
class LaurentChar {
public:
    using Map = std::map<Weight, std::int64_t, std::greater<Weight>>;

    LaurentChar() = default;
    /// The monomial c * x^w.
    static LaurentChar monomial(const Weight& w, std::int64_t c = 1);
    static LaurentChar one() { return monomial(Weight{0, 0, 0}); }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::int64_t coeff(const Weight& w) const;
    /// Lexicographically greatest weight carrying a nonzero coefficient.
    const Weight& leading_weight() const;
    /// Value at x1 = x2 = x3 = 1 (the dimension for genuine characters).
    std::int64_t eval_at_one() const;

    void add_term(const Weight& w, std::int64_t c);

    friend LaurentChar operator+(const LaurentChar& a, const LaurentChar& b);
    friend LaurentChar operator-(const LaurentChar& a, const LaurentChar& b);
    friend LaurentChar operator*(const LaurentChar& a, const LaurentChar& b);
    friend LaurentChar operator*(std::int64_t c, const LaurentChar& a);
    friend bool operator==(const LaurentChar& a, const LaurentChar& b) {
        return a.terms_ == b.terms_;
    }

    /// Invariance under permutations of the three variables — a necessary
    /// condition for being a virtual character of U(3).
    bool is_symmetric() const;

private:
    Map terms_;
};

/// Decomposition into irreducibles: K-dominant highest weight -> multiplicity.
struct DecompTable {
    std::map<Weight, std::int64_t, std::greater<Weight>> entries;

    friend bool operator==(const DecompTable& a, const DecompTable& b) {
        return a.entries == b.entries;
    }
    /// Sum of mult * dim over the entries.
    std::int64_t total_dim() const;
};

/// Character of the irreducible U(3)-representation with highest weight hw
/// (k1 >= k2 >= k3, possibly negative), via the Weyl character formula as an
/// exact alternant ratio.  Throws std::invalid_argument for non-dominant hw.
LaurentChar irrep_char(const Weight& hw);

/// Weyl dimension formula (a−b+1)(b−c+1)(a−c+2)/2.
std::int64_t dim(const Weight& hw);

enum class PSpace { plus, minus };

/// Character of the k-th exterior power of p+ (weights 2e_j, e_j+e_k) or p−
/// (their negatives): the k-th elementary symmetric polynomial in the six
/// weight monomials.  Throws std::invalid_argument for k outside 0..6.
LaurentChar wedge_char(PSpace space, int k);

/// Greedy decomposition of a genuine character: repeatedly subtract
/// mult * irrep_char at the lexicographically leading weight.  Throws
/// NotACharacterError if the input is not a nonnegative integer combination
/// of irreducible characters.
DecompTable decompose(const LaurentChar& ch);

}  // namespace sp6
