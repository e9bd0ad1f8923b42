#pragma once

// Independent reference implementations used only by the tests. None of
// these call into the library's algorithms beyond the Partition type.

#include <cstdint>
#include <ostream>
#include <vector>

#include "twistlab/partition.hpp"

namespace twistlab {

// gtest printer
inline void PrintTo(const Partition& lambda, std::ostream* os) { *os << "(" << lambda.to_string() << ")"; }

}  // namespace twistlab

namespace oracle {

using twistlab::Part;
using twistlab::Partition;
using Matrix = std::vector<std::vector<std::uint32_t>>;

/// Number of partitions of d via Euler's pentagonal recurrence.
std::uint64_t partition_count(unsigned d);

/// Strips rim p-hooks off the Young diagram one at a time (any node with hook
/// length p) until none is left. Returns core and number of hooks removed.
struct Stripped {
  Partition core;
  Part weight = 0;
};
Stripped strip_hooks(const Partition& lambda, Part p);

/// Mullineux map via Kleshchev's good-node crystal: walk lambda down to the
/// empty partition by good removals, then climb back with the negated
/// residues using cogood additions.
Partition crystal_mullineux(const Partition& lambda, Part p);

/// All nu with `rows` rows whose p-rim has `rim` nodes and leaves mu; found
/// by enumerating partitions of |mu| + rim. Uses the rim rule restated
/// independently from the diagram (rim nodes walked row by row).
std::vector<Partition> rim_insertions(const Partition& mu, Part rim, Part rows, Part p);

/// p-rim of lambda computed from the diagram: number of nodes and remainder.
std::pair<Partition, Part> strip_p_rim(const Partition& lambda, Part p);

/// Rank over Z/p by dense elimination.
std::size_t rank_mod_p(Matrix m, std::uint32_t p);

/// Specht module spanned by polytabloids of all standard tableaux inside the
/// permutation module, with generator matrices (rows = images of basis
/// vectors) for the transposition (1 2) and the cycle i -> i+1 mod d.
struct DenseSpecht {
  std::uint32_t p = 2;
  std::size_t dim = 0;
  Matrix transposition;
  Matrix cycle;
};
DenseSpecht dense_specht(const Partition& lambda, std::uint32_t p);

/// dim Hom by the dense Kronecker system (both sides in the same action
/// convention). Only for dim A * dim B up to a few thousand.
std::size_t dense_hom_dim(const DenseSpecht& a, const DenseSpecht& b);

/// Common fixed space of the two generators.
std::size_t dense_invariants_dim(const DenseSpecht& a);

}  // namespace oracle
