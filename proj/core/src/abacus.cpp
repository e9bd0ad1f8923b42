#include "twistlab/abacus.hpp"

#include <algorithm>
#include <map>

#include "twistlab/error.hpp"

namespace twistlab {

std::vector<std::string> AbacusDisplay::runners() const {
  Part top = beta.empty() ? 0 : beta.front();
  std::size_t levels = static_cast<std::size_t>(top / p) + 1;
  std::vector<std::string> rows(p, std::string(levels, '.'));
  for (Part position : beta) rows[position % p][position / p] = 'o';
  return rows;
}

std::size_t default_beads(const Partition& lambda, Part p) {
  std::size_t n = lambda.length();
  return ((n + p - 1) / p) * p;
}

AbacusDisplay to_abacus(const Partition& lambda, Part p, std::size_t beads) {
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "p must be at least 2");
  if (beads < lambda.length()) {
    throw Error(ErrorCode::TooFewBeads, std::to_string(beads) + " beads for " +
                                            std::to_string(lambda.length()) + " rows");
  }
  AbacusDisplay display{p, std::vector<Part>(beads)};
  for (std::size_t i = 0; i < beads; ++i) display.beta[i] = lambda[i] + (beads - 1 - i);
  return display;
}

AbacusDisplay to_abacus(const Partition& lambda, Part p) {
  return to_abacus(lambda, p, default_beads(lambda, p));
}

Partition from_abacus(const AbacusDisplay& display) {
  std::vector<Part> beta = display.beta;
  std::sort(beta.begin(), beta.end(), std::greater<>());
  std::size_t b = beta.size();
  std::vector<Part> parts(b);
  for (std::size_t i = 0; i < b; ++i) {
    if (i > 0 && beta[i] == beta[i - 1]) {
      throw Error(ErrorCode::InvalidArgument, "bead positions must be distinct");
    }
    parts[i] = beta[i] - (b - 1 - i);
  }
  return Partition(std::move(parts));
}

BlockData p_core(const AbacusDisplay& display) {
  Part p = display.p;
  // Beads on a runner pack to the lowest levels; the weight counts how many
  // single-level moves that takes.
  std::vector<std::vector<Part>> levels(p);
  for (Part position : display.beta) levels[position % p].push_back(position / p);
  Part weight = 0;
  std::vector<Part> packed;
  packed.reserve(display.beta.size());
  for (Part runner = 0; runner < p; ++runner) {
    auto& on_runner = levels[runner];
    std::sort(on_runner.begin(), on_runner.end());
    for (std::size_t k = 0; k < on_runner.size(); ++k) {
      weight += on_runner[k] - k;
      packed.push_back(k * p + runner);
    }
  }
  return {from_abacus(AbacusDisplay{p, std::move(packed)}), weight};
}

BlockData p_core(const Partition& lambda, Part p) { return p_core(to_abacus(lambda, p)); }

bool is_p_by_p(const Partition& lambda, Part p) {
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "p must be at least 2");
  auto parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (parts[i] % p != 0 || (j - i) % p != 0) return false;
    i = j;
  }
  return true;
}

std::vector<BlockCensusEntry> block_census(Part d, Part p) {
  std::vector<BlockCensusEntry> blocks;
  std::map<Partition, std::size_t> index;
  for_each_partition(d, PartitionFilter::all(), [&](const Partition& lambda) {
    BlockData data = p_core(lambda, p);
    auto [it, inserted] = index.try_emplace(data.core, blocks.size());
    if (inserted) blocks.push_back({data.core, data.weight, {}, {}});
    auto& block = blocks[it->second];
    block.members.push_back(lambda);
    if (is_p_by_p(lambda, p)) block.p_by_p_members.push_back(lambda);
    return true;
  });
  return blocks;
}

}  // namespace twistlab
