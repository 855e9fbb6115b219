#pragma once

#include <vector>

#include "loopkit/normal_forms.hpp"
#include "loopkit/rational.hpp"
#include "loopkit/word.hpp"

namespace loopkit {

using RationalMatrix = std::vector<std::vector<Rational>>;

// T(u_1..u_r) modulo one quadratic relation, in the two sign conventions.
// `graded` is the Pontryagin ring relation; `ungraded` keeps the same
// bracket coefficients l_ij with [a, b] = ab - ba and drops squares.
// Both have coefficient 1 on the leading pair.
struct QuadraticPresentation {
    AlphabetRef alphabet;
    AlgebraElement graded;
    AlgebraElement ungraded;
    LeadingPair leading;
    int relation_degree = 0;
    // Columns of `change` express the normalized cohomology basis in the
    // input basis; `pairing` = change^T * input pairing * change.
    RationalMatrix change;
    RationalMatrix pairing;
};

} // namespace loopkit
