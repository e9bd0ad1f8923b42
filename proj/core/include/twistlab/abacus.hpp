#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "twistlab/partition.hpp"

namespace twistlab {

/// Beta-numbers of a partition, displayed on p runners. Bead positions are
/// strictly decreasing: beta_i = lambda_i + b - 1 - i (0-based i).
struct AbacusDisplay {
  Part p = 2;
  std::vector<Part> beta;

  std::size_t beads() const noexcept { return beta.size(); }
  /// One string per runner, level 0 first: 'o' bead, '.' gap.
  std::vector<std::string> runners() const;
};

struct BlockData {
  Partition core;
  Part weight = 0;

  friend bool operator==(const BlockData&, const BlockData&) = default;
};

/// Throws TooFewBeads when beads < length(lambda).
AbacusDisplay to_abacus(const Partition& lambda, Part p, std::size_t beads);
/// Bead count defaults to length(lambda) rounded up to a multiple of p.
AbacusDisplay to_abacus(const Partition& lambda, Part p);
std::size_t default_beads(const Partition& lambda, Part p);

Partition from_abacus(const AbacusDisplay& display);

/// Pushes every bead toward level 0 on its runner. The number of single
/// steps is the p-weight.
BlockData p_core(const Partition& lambda, Part p);
BlockData p_core(const AbacusDisplay& display);

/// Every part divisible by p and every part multiplicity divisible by p
/// (equivalently lambda and its conjugate are both p times a partition).
bool is_p_by_p(const Partition& lambda, Part p);

struct BlockCensusEntry {
  Partition core;
  Part weight = 0;
  std::vector<Partition> members;
  std::vector<Partition> p_by_p_members;
};

/// Groups all partitions of d by p-core. Blocks are ordered by first
/// appearance in the decreasing-lex enumeration; members keep that order.
std::vector<BlockCensusEntry> block_census(Part d, Part p);

}  // namespace twistlab
