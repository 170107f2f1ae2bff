#pragma once

#include <string>
#include <vector>

#include "pretzelccs/numbers.hpp"

namespace pretzel {

/**
 * Alternating odd pretzel knot K(k1, ..., k_{2g+1}): the pretzel knot
 * P(2*k1+1, ..., 2*k_{2g+1}+1) with all twist parameters of the same sign.
 * Each k_i counts full right-handed twist pairs on one strand and must be
 * nonnegative; the all-negative mirror family is handled by the documented
 * mirror rules (a_{2j} unchanged, v3 and signatures negated).
 *
 * The twist vector has odd length 2g+1 >= 1; g is the Seifert genus.
 * A single strand (g = 0) is the unknot.
 */
class PretzelKnot {
  public:
    explicit PretzelKnot(std::vector<long> twists);

    const std::vector<long>& twists() const { return twists_; }
    unsigned genus() const { return static_cast<unsigned>((twists_.size() - 1) / 2); }
    bool is_unknot() const { return genus() == 0; }
    bool all_twists_zero() const;
    Int twist_sum() const;

    // Twist vector sorted nonincreasingly.  Every invariant computed by
    // this library is a symmetric function of the k_i (pretzel mutation),
    // so this representative is safe to canonicalize to.
    PretzelKnot canonical() const;

    std::string to_string() const;  // "K(1,0,0,0,0)"
    bool operator==(const PretzelKnot& o) const { return twists_ == o.twists_; }
    bool operator<(const PretzelKnot& o) const;  // genus, then twists lexicographic

  private:
    std::vector<long> twists_;
};

// Parses "K(1,0,0,0,0)" (whitespace tolerated).  Throws ParseError on
// malformed text; BadLength / NegativeTwist propagate from validation.
PretzelKnot parse_knot(const std::string& text);

// Row-major 2g x 2g integer Seifert matrix.
struct SeifertMatrix {
    std::size_t dim = 0;
    std::vector<Int> entries;

    const Int& at(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }
    Int& at(std::size_t i, std::size_t j) { return entries[i * dim + j]; }
};

/**
 * Seifert matrix of the genus-g surface from the standard diagram: the
 * tridiagonal band A[i][i] = k_i + k_{i+1} + 1, A[i][i+1] = k_{i+1},
 * A[i+1][i] = k_{i+1} + 1 (strands indexed from 1).  Satisfies
 * det(A - A^T) = 1.  Throws UnknotHasNoSurfaceBasis for g = 0.
 */
SeifertMatrix seifert_matrix(const PretzelKnot& k);

// 2*(k1 + ... + k_{2g+1}) + 2g + 1 for g >= 1; 0 for the unknot.
Int crossing_number(const PretzelKnot& k);

// n-th elementary symmetric polynomial of ks, by the recurrence
// s_{n,m+1} = s_{n,m} + k_{m+1} * s_{n-1,m};  s_0 = 1 and s_{n>m} = 0.
Int elementary_symmetric(unsigned n, const std::vector<long>& ks);

// All of s_0, ..., s_m at once (m = ks.size()).
std::vector<Int> elementary_symmetric_all(const std::vector<long>& ks);

}  // namespace pretzel
