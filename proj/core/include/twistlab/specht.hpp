#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "twistlab/gf_matrix.hpp"
#include "twistlab/partition.hpp"

namespace twistlab {

/// A representation of the symmetric group of the given degree, recorded by
/// the matrices of its two generators: the transposition (1 2) and the
/// cycle (1 2 ... d). Vectors are rows; g acts by v -> v * gens[g].
struct Representation {
  Part p = 2;
  Part degree = 0;
  std::array<linalg::GfMatrix, 2> gens;

  std::size_t dim() const noexcept { return gens[0].rows(); }
  /// Sign of each generator as a permutation: -1 for the transposition,
  /// (-1)^(d-1) for the cycle.
  std::array<int, 2> generator_signs() const noexcept;
};

/// Tensor with the sign representation.
Representation sign_twist(const Representation& rep);
/// Contragredient: g acts by the inverse transpose.
Representation dual(const Representation& rep);

/// Checks the presentation relations on the generators: s^2 = 1, c^d = 1,
/// (s c)^(d-1) = 1, and for the Coxeter generators s_i = c^(i-1) s c^(1-i):
/// (s_i s_{i+1})^3 = 1 and (s_i s_j)^2 = 1 when |i - j| > 1.
bool satisfies_relations(const Representation& rep);

/// Entries of a Young tableau, 0-based values, row by row.
struct Tableau {
  std::vector<std::vector<std::uint8_t>> rows;
};

struct SpechtOptions {
  /// Upper bound on dim M^lambda. Defaults to $TWISTLAB_MAX_DIM or 100000.
  std::uint64_t max_tabloids = default_max_tabloids();

  static std::uint64_t default_max_tabloids();
};

/// A tabloid is encoded by the row of each entry, 4 bits per entry with
/// entry 0 in the most significant position. Smaller codes are more dominant.
using TabloidCode = std::uint64_t;

struct SparseTerm {
  TabloidCode tabloid;
  int coefficient;  // +1 or -1
};

/// S^lambda over Z/p with the standard polytabloids as basis. The embedding
/// in M^lambda is kept implicitly: polytabloid(i) lists the signed tabloids
/// of basis vector i.
class SpechtModule {
 public:
  const Partition& shape() const noexcept { return shape_; }
  Part prime() const noexcept { return rep_.p; }
  std::size_t dim() const noexcept { return tableaux_.size(); }
  std::uint64_t tabloid_count() const noexcept { return tabloids_; }
  const Representation& representation() const noexcept { return rep_; }
  const std::vector<Tableau>& standard_tableaux() const noexcept { return tableaux_; }

  std::vector<SparseTerm> polytabloid(std::size_t i) const;
  /// Coordinates of g * e_{t_i} in the polytabloid basis; g is given by the
  /// images of 0..d-1.
  std::vector<linalg::Entry> act(const std::vector<std::uint8_t>& g, std::size_t i) const;

  friend SpechtModule build_specht(const Partition& lambda, Part p, const SpechtOptions& options);

 private:
  std::vector<linalg::Entry> solve_from_standard_positions(std::vector<linalg::Entry> v) const;
  std::vector<linalg::Entry> restrict_polytabloid(const Tableau& t) const;

  Partition shape_;
  Representation rep_;
  std::uint64_t tabloids_ = 0;
  std::vector<Tableau> tableaux_;
  std::vector<TabloidCode> codes_;
  // Polytabloid i restricted to standard tabloids: (index, coefficient)
  // pairs, leading entry (i, 1).
  std::vector<std::vector<std::pair<std::size_t, linalg::Entry>>> triangular_;
};

/// Throws TooLarge when dim M^lambda exceeds the bound or |lambda| > 16.
SpechtModule build_specht(const Partition& lambda, Part p, const SpechtOptions& options = {});

/// d! / prod lambda_i!; saturates at UINT64_MAX.
std::uint64_t tabloid_count(const Partition& lambda);

std::uint64_t count_standard_tableaux(const Partition& lambda);
std::uint64_t hook_length_dimension(const Partition& lambda);
/// Standard tableau count, checked against the hook length formula.
std::uint64_t dim_specht(const Partition& lambda);

std::vector<Tableau> standard_tableaux(const Partition& lambda);
TabloidCode tabloid_code(const Tableau& t, std::size_t degree);

}  // namespace twistlab
