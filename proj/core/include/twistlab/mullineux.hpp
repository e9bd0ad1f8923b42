#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "twistlab/partition.hpp"

namespace twistlab {

/// One column of a Mullineux symbol: the size of a removed p-rim and the
/// number of rows of the partition it was removed from.
struct SymbolColumn {
  Part rim = 0;
  Part rows = 0;

  friend bool operator==(const SymbolColumn&, const SymbolColumn&) = default;
};

struct MullineuxSymbol {
  Part p = 2;
  std::vector<SymbolColumn> columns;

  /// Total nodes removed, i.e. the size of the source partition.
  Part size() const;
  /// "((5,5);(2,2))" with repeated columns spelled out.
  std::string to_string() const;

  friend bool operator==(const MullineuxSymbol&, const MullineuxSymbol&) = default;
};

struct RimRemoval {
  Partition rest;
  Part rim = 0;
};

/// Strips the p-rim: rows are visited top to bottom with a segment budget
/// starting at p. Row j offers lambda_j - lambda_{j+1} + 1 rim nodes (the
/// last row offers all of its nodes); min(budget, offered) are taken from
/// the right. An exhausted budget starts a fresh segment of length p on the
/// next row, otherwise the segment continues there with what is left.
RimRemoval remove_p_rim(const Partition& lambda, Part p);

/// Iterated rim removal down to the empty partition. Throws NotPRegular.
MullineuxSymbol mullineux_symbol(const Partition& lambda, Part p);

/// Keeps the rim sizes and replaces each row count r by a - r + eps, where
/// eps is 1 when p does not divide a. Involutive. Throws InvalidSymbol if a
/// new row count drops below 1.
MullineuxSymbol transform_symbol(const MullineuxSymbol& symbol);

/// The unique nu with exactly `rows` rows whose p-rim has `rim` nodes and
/// leaves mu behind. Throws NoInsertion or AmbiguousInsertion.
Partition insert_p_rim(const Partition& mu, Part rim, Part rows, Part p);

/// Rebuilds the partition from its symbol by inserting rims right to left.
Partition reconstruct(const MullineuxSymbol& symbol);

/// The Mullineux involution on p-regular partitions. Throws NotPRegular.
Partition mullineux_map(const Partition& lambda, Part p);

/// lambda -> m(lambda')' on p-restricted partitions. Throws NotPRestricted.
Partition mullineux_restricted(const Partition& lambda, Part p);

/// Restricted label of the trivial module, computed as m((n))'.
Partition tau(Part n, Part p);
/// (p-1, ..., p-1, a) with ceil(n/(p-1)) parts.
Partition tau_closed_form(Part n, Part p);

/// m(hat(lambda)) == (p-1) lambda for a distinct-parts lambda.
bool verify_hat_identity(const Partition& lambda, Part p);

/// m(p^2 lambda) - m(p lambda); throws PostconditionFailed if it differs
/// from p * hat(lambda).
Partition steinberg_difference(const Partition& lambda, Part p);

}  // namespace twistlab
