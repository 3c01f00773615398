#ifndef RBX_COMBINATORICS_HPP
#define RBX_COMBINATORICS_HPP

#include <cstddef>
#include <vector>

namespace rbx {

/// Permutation of [n] in one-line notation (values 1..n).
using Perm = std::vector<unsigned>;

/// All permutations of [n] in lexicographic order.
std::vector<Perm> permutations(std::size_t n);

/// Disjoint cycles of sigma, each starting at its smallest element, cycles
/// ordered by that element. Fixed points are 1-cycles.
std::vector<std::vector<unsigned>> cycles(const Perm& sigma);

/// Set partitions of [n] as lists of blocks (each sorted, blocks ordered by
/// smallest element), enumerated by restricted growth strings.
std::vector<std::vector<std::vector<unsigned>>> set_partitions(std::size_t n);

/// Compositions (i_1, ..., i_k) of n with positive parts, in lexicographic
/// order. compositions(0) is the single empty composition.
std::vector<std::vector<std::size_t>> compositions(std::size_t n);

/// Number of left-to-right maxima (records) of sigma.
std::size_t left_to_right_maxima(const Perm& sigma);

} // namespace rbx

#endif
