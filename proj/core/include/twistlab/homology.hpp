#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "twistlab/gf_matrix.hpp"
#include "twistlab/specht.hpp"

namespace twistlab {

/// Which linear algebra kernel runs the solves. Packed is the bit-row path
/// and only exists for p = 2; Auto picks it there.
enum class Backend { Auto, Generic, Packed };

struct HomSpace {
  Part p = 2;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  /// Each X satisfies rho_A(g) X = X rho_B(g); rows index the source basis.
  std::vector<linalg::GfMatrix> basis;

  std::size_t dim() const noexcept { return basis.size(); }
};

/// Equivariant maps A -> B. The source is spun up from cyclic generators and
/// a map is fixed by the images of those generators, so the unknowns number
/// (#generators) * dim B rather than dim A * dim B. Throws SizeMismatch.
HomSpace hom_space(const Representation& source, const Representation& target,
                   Backend backend = Backend::Auto);
std::size_t hom_dim(const Representation& source, const Representation& target,
                    Backend backend = Backend::Auto);
std::size_t hom_dim(const SpechtModule& source, const SpechtModule& target,
                    Backend backend = Backend::Auto);

/// The same dimension from the stacked system in all dim A * dim B entries
/// of X. Only for small modules; throws TooLarge past `max_unknowns`.
std::size_t hom_dim_stacked(const Representation& source, const Representation& target,
                            std::size_t max_unknowns = 6000);

/// Basis of End(A).
std::vector<linalg::GfMatrix> end_ring(const Representation& rep, Backend backend = Backend::Auto);
std::vector<linalg::GfMatrix> end_ring(const SpechtModule& module, Backend backend = Backend::Auto);

/// Dimension of the common fixed space of the generators.
std::size_t invariants_dim(const Representation& rep);
std::size_t invariants_dim(const SpechtModule& module);

struct DecomposeOptions {
  /// Enumerate all of End when p^dim(End) is at most this.
  std::uint64_t enumeration_bound = std::uint64_t{1} << 20;
  std::size_t samples = 64;
  std::uint64_t seed = 0x7477697374ULL;
  Backend backend = Backend::Auto;
};

struct DecompositionResult {
  enum class Method { Enumerated, Fitting };

  bool decomposable = false;
  Method method = Method::Enumerated;
  std::size_t end_dim = 0;
  /// Rank of the splitting endomorphism (idempotent, or Fitting power).
  std::size_t summand_dim = 0;
  /// A nontrivial idempotent, when enumeration found one.
  std::optional<linalg::GfMatrix> idempotent;
};

const char* to_string(DecompositionResult::Method method) noexcept;

/// Exact when End is small enough to enumerate; otherwise samples random
/// endomorphisms and reports a split as soon as one is neither nilpotent nor
/// invertible. Throws Inconclusive if sampling finds nothing.
DecompositionResult is_decomposable(const Representation& rep, const DecomposeOptions& options = {});
DecompositionResult is_decomposable(const SpechtModule& module, const DecomposeOptions& options = {});

/// S^lambda tensor sign is isomorphic to the dual of S^{lambda'}: finds an
/// invertible equivariant map between the two.
bool sign_dual_check(const Partition& lambda, Part p, const SpechtOptions& options = {});

}  // namespace twistlab
