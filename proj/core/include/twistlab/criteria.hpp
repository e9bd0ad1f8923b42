#pragma once

#include <optional>
#include <vector>

#include "twistlab/partition.hpp"

namespace twistlab {

// ---------------------------------------------------------------------------
// Ext^1 between two-part simple modules D^(v,u) and D^(s,r), p odd.
// ---------------------------------------------------------------------------

struct TwoPartExtQuery {
  Part p = 3;
  Partition lambda;  // (v, u)
  Partition mu;      // (s, r)
};

struct KsResult {
  unsigned dimension = 0;
  /// Base-p digits of v - u + 1 after ordering so that u >= r.
  std::vector<Part> digits;
  /// Digit index i that fired, when the dimension is 1.
  std::optional<unsigned> witness;
  /// True when the inputs were swapped to get u >= r.
  bool swapped = false;
};

/// Writes v-u+1 = sum a_i p^i and reports 1 iff some i has a_i > 0,
/// u - r = (p - a_i) p^i, and either a_{i+1} < p-1 or u < p^{i+2}.
/// Throws NotTwoPart, EqualSizeRequired, PrimeTooSmall.
KsResult ks_ext1(const TwoPartExtQuery& query);

/// ks_ext1 on (p lambda, p mu) equals ks_ext1 on (p^2 lambda, p^2 mu).
bool ks_twist_stable(Part p, const Partition& lambda, const Partition& mu);

// ---------------------------------------------------------------------------
// Hook Specht modules S^(d-r, 1^r) in characteristic 2.
// ---------------------------------------------------------------------------

struct MurphyHook {
  Part d = 0;
  Part r = 0;

  Partition shape() const;
};

/// dim End(S^(d-r,1^r)). Throws HypothesisViolated if d < 2r.
Part murphy_end_dim(const MurphyHook& hook);
/// Throws HypothesisViolated if d < 2r.
bool murphy_indecomposable(const MurphyHook& hook);
/// The L with 2^(L-1) <= r < 2^L (0 for r = 0).
unsigned murphy_level(Part r);
/// End dims agree at d and d+2; indecomposability agrees at d and d+2^L.
bool murphy_twist_invariance(Part d, Part r);

// ---------------------------------------------------------------------------
// Invariants of Specht modules.
// ---------------------------------------------------------------------------

struct H0Result {
  bool nonzero = true;
  /// First row i (0-based) where lambda_i is not -1 mod p^{l_p(lambda_{i+1})}.
  std::optional<std::size_t> failed_row;
  Part modulus = 1;
};

/// H^0(S^lambda) != 0 iff lambda_i = -1 mod p^{l_p(lambda_{i+1})} for every
/// row with a nonzero successor.
H0Result h0_specht(const Partition& lambda, Part p);
bool h0_specht_nonzero(const Partition& lambda, Part p);

/// Checks h0_specht_nonzero(lambda) == h0_specht_nonzero((a, lambda)).
/// Throws CongruenceViolated unless a = -1 mod p^{l_p(lambda_1)}, and
/// InvalidArgument if a < lambda_1.
bool h0_prepend_stable(const Partition& lambda, Part a, Part p);

}  // namespace twistlab
