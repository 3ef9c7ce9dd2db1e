#ifndef GCA_OPERATORS_HPP
#define GCA_OPERATORS_HPP

#include "gca/algebra.hpp"
#include "gca/graded_matrix.hpp"
#include "gca/words.hpp"

namespace gca {

// Compression P_L lambda(x) P_L on the ball basis: entry (s, t) = x(s t^-1),
// levels l(s). Everything downstream certifies lower bounds through this:
// Rayleigh values of a compression never exceed the full operator norm, and
// for L >= support radius the identity column reproduces the l2 norm of x.
GradedMatrix convolution_matrix(const GroupAlgebraElement& x, const BallIndex& ball);
GradedMatrix convolution_matrix(const GroupAlgebraElement& x, int ball_radius,
                                std::size_t cap = kDefaultBallCap);

// k-fold Dirac commutator delta^k(lambda(x)) compressed the same way:
// entry (s, t) = (l(s) - l(t))^k x(s t^-1). k = 0 is the plain convolution.
GradedMatrix commutator_matrix(const GroupAlgebraElement& x, const BallIndex& ball, int k);
GradedMatrix commutator_matrix(const GroupAlgebraElement& x, int ball_radius, int k,
                               std::size_t cap = kDefaultBallCap);

// sum_g |x(g)| l(g)^k >= ||delta^k(lambda(x))||: the triangle-inequality upper
// bound, exact on single-generator elements.
double commutator_upper_bound(const GroupAlgebraElement& x, int k);

// [diag(levels), A] for any graded matrix: entry (i, j) scaled by l_i - l_j.
GradedMatrix level_commutator(const GradedMatrix& a);

}  // namespace gca

#endif
