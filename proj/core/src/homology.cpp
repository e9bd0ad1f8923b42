#include "twistlab/homology.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "twistlab/bit_matrix.hpp"
#include "twistlab/error.hpp"

namespace twistlab {

using linalg::BitEchelon;
using linalg::BitMatrix;
using linalg::Entry;
using linalg::GfEchelon;
using linalg::GfMatrix;

namespace {

template <class M>
struct Ops;

template <>
struct Ops<GfMatrix> {
  using Echelon = GfEchelon;
  static GfMatrix zeros(Entry p, std::size_t r, std::size_t c) { return GfMatrix(p, r, c); }
  static GfMatrix identity(Entry p, std::size_t n) { return GfMatrix::identity(p, n); }
  static GfMatrix from_gf(const GfMatrix& m) { return m; }
  static GfMatrix to_gf(const GfMatrix& m) { return m; }
};

template <>
struct Ops<BitMatrix> {
  using Echelon = BitEchelon;
  static BitMatrix zeros(Entry, std::size_t r, std::size_t c) { return BitMatrix(r, c); }
  static BitMatrix identity(Entry, std::size_t n) { return BitMatrix::identity(n); }
  static BitMatrix from_gf(const GfMatrix& m) { return BitMatrix(m); }
  static GfMatrix to_gf(const BitMatrix& m) { return m.to_gf(); }
};

template <class M>
std::array<M, 2> convert(const Representation& rep) {
  return {Ops<M>::from_gf(rep.gens[0]), Ops<M>::from_gf(rep.gens[1])};
}

// Spin basis of the source: every basis vector is a root (a unit vector not
// yet in the span) or a generator applied to an earlier basis vector.
template <class M>
struct SpinBasis {
  struct Node {
    std::size_t parent;  // == index for roots
    int generator;       // -1 for roots
    std::size_t root;    // root number
  };
  std::vector<M> vectors;  // 1 x n
  std::vector<Node> nodes;
  std::size_t roots = 0;
  // (basis index, generator) pairs whose image was not a new basis vector.
  std::vector<std::pair<std::size_t, int>> relations;
};

template <class M>
SpinBasis<M> spin(const std::array<M, 2>& gens, Entry p) {
  const std::size_t n = gens[0].rows();
  SpinBasis<M> basis;
  typename Ops<M>::Echelon span(p, n);
  std::size_t next_unit = 0;
  std::size_t k = 0;
  while (basis.vectors.size() < n) {
    if (k == basis.vectors.size()) {
      while (true) {
        M unit = Ops<M>::zeros(p, 1, n);
        unit.set(0, next_unit++, 1);
        if (span.insert(unit.row(0))) {
          basis.nodes.push_back({basis.vectors.size(), -1, basis.roots++});
          basis.vectors.push_back(std::move(unit));
          break;
        }
      }
    }
    for (int g = 0; g < 2; ++g) {
      M image = basis.vectors[k] * gens[g];
      if (basis.vectors.size() < n && span.insert(image.row(0))) {
        basis.nodes.push_back({k, g, basis.nodes[k].root});
        basis.vectors.push_back(std::move(image));
      } else {
        basis.relations.emplace_back(k, g);
      }
    }
    ++k;
  }
  for (; k < n; ++k) {
    for (int g = 0; g < 2; ++g) basis.relations.emplace_back(k, g);
  }
  return basis;
}

template <class M>
std::vector<GfMatrix> spin_hom(const std::array<M, 2>& source, const std::array<M, 2>& target,
                               Entry p) {
  const std::size_t n = source[0].rows();
  const std::size_t m = target[0].rows();
  if (n == 0 || m == 0) return {};

  SpinBasis<M> basis = spin(source, p);
  M change = Ops<M>::zeros(p, n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) change.set(k, j, basis.vectors[k].get(0, j));
  }
  auto change_inverse = change.inverse();
  if (!change_inverse) throw Error(ErrorCode::PostconditionFailed, "spin basis is singular");

  // A map is fixed by u = (images of the roots). The image of basis vector k
  // is u_root * word_k, where word_k is the product of target generators
  // along the spin path; we keep the transposes so constraints come out as rows.
  const std::array<M, 2> target_t{target[0].transpose(), target[1].transpose()};
  std::vector<M> words_t;
  words_t.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& node = basis.nodes[k];
    if (node.generator < 0) {
      words_t.push_back(Ops<M>::identity(p, m));
    } else {
      words_t.push_back(target_t[node.generator] * words_t[node.parent]);
    }
  }

  const std::size_t unknowns = basis.roots * m;
  typename Ops<M>::Echelon constraints(p, unknowns);
  for (const auto& [k, g] : basis.relations) {
    // source: v_k g = sum_j c_j v_j, so the images must satisfy
    // u word_k g_B - sum_j c_j u word_j = 0.
    M coefficients = (basis.vectors[k] * source[g]) * *change_inverse;
    M block = Ops<M>::zeros(p, m, unknowns);
    block.add_scaled_block(target_t[g] * words_t[k], 1, basis.nodes[k].root * m);
    for (std::size_t j = 0; j < n; ++j) {
      Entry c = coefficients.get(0, j);
      if (c == 0) continue;
      block.add_scaled_block(words_t[j], p - c, basis.nodes[j].root * m);
    }
    for (std::size_t i = 0; i < m; ++i) constraints.insert(block.row(i));
    if (constraints.rank() == unknowns) return {};
  }

  M solutions = constraints.nullspace();
  std::vector<GfMatrix> out;
  out.reserve(solutions.rows());
  for (std::size_t s = 0; s < solutions.rows(); ++s) {
    M images = Ops<M>::zeros(p, n, m);
    std::vector<M> rows;
    rows.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      const auto& node = basis.nodes[k];
      M row = Ops<M>::zeros(p, 1, m);
      if (node.generator < 0) {
        for (std::size_t j = 0; j < m; ++j) row.set(0, j, solutions.get(s, node.root * m + j));
      } else {
        row = rows[node.parent] * target[node.generator];
      }
      for (std::size_t j = 0; j < m; ++j) images.set(k, j, row.get(0, j));
      rows.push_back(std::move(row));
    }
    out.push_back(Ops<M>::to_gf(*change_inverse * images));
  }
  return out;
}

bool use_packed(Backend backend, Part p) {
  if (backend == Backend::Packed && p != 2) {
    throw Error(ErrorCode::InvalidArgument, "packed backend only exists for p = 2");
  }
  return backend == Backend::Packed || (backend == Backend::Auto && p == 2);
}

void require_compatible(const Representation& a, const Representation& b) {
  if (a.p != b.p || a.degree != b.degree) {
    throw Error(ErrorCode::SizeMismatch, "modules for different groups or fields");
  }
}

Part checked_power(Part p, std::size_t e, Part cap) {
  Part out = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (out > cap / p) return cap + 1;
    out *= p;
  }
  return out;
}

template <class M>
M combination(const std::vector<M>& basis, const std::vector<Entry>& coefficients, Entry p) {
  M out = Ops<M>::zeros(p, basis.front().rows(), basis.front().cols());
  for (std::size_t i = 0; i < basis.size(); ++i) out.add_scaled(basis[i], coefficients[i]);
  return out;
}

template <class M>
DecompositionResult decompose(const std::vector<GfMatrix>& end_basis, std::size_t n, Entry p,
                              const DecomposeOptions& options) {
  DecompositionResult result;
  result.end_dim = end_basis.size();
  if (end_basis.size() <= 1) return result;  // only scalars: local

  std::vector<M> basis;
  for (const auto& x : end_basis) basis.push_back(Ops<M>::from_gf(x));
  const M identity = Ops<M>::identity(p, n);

  Part total = checked_power(p, basis.size(), options.enumeration_bound);
  if (total <= options.enumeration_bound) {
    // A probe vector rejects most candidates before the full square.
    M probe = Ops<M>::zeros(p, 1, n);
    for (std::size_t j = 0; j < n; ++j) probe.set(0, j, static_cast<Entry>((j * 7 + 3) % p));
    std::vector<Entry> coefficients(basis.size(), 0);
    for (Part index = 1; index < total; ++index) {
      Part rest = index;
      for (auto& c : coefficients) {
        c = static_cast<Entry>(rest % p);
        rest /= p;
      }
      M theta = combination(basis, coefficients, p);
      M once = probe * theta;
      if (!(once * theta == once)) continue;
      if (theta == identity || theta.is_zero()) continue;
      if (theta * theta == theta) {
        result.decomposable = true;
        result.summand_dim = theta.rank();
        result.idempotent = Ops<M>::to_gf(theta);
        return result;
      }
    }
    return result;
  }

  result.method = DecompositionResult::Method::Fitting;
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<Entry> coefficient(0, p - 1);
  for (std::size_t sample = 0; sample < options.samples; ++sample) {
    std::vector<Entry> coefficients(basis.size());
    for (auto& c : coefficients) c = coefficient(rng);
    M power = combination(basis, coefficients, p);
    // theta^(2^k) with 2^k >= n has reached the stable Fitting rank.
    for (std::size_t reach = 1; reach < n; reach *= 2) power = power * power;
    std::size_t rank = power.rank();
    if (rank > 0 && rank < n) {
      result.decomposable = true;
      result.summand_dim = rank;
      return result;
    }
  }
  throw Error(ErrorCode::Inconclusive, "no splitting endomorphism in " +
                                           std::to_string(options.samples) + " samples");
}

}  // namespace

const char* to_string(DecompositionResult::Method method) noexcept {
  return method == DecompositionResult::Method::Enumerated ? "enumerated" : "fitting";
}

HomSpace hom_space(const Representation& source, const Representation& target, Backend backend) {
  require_compatible(source, target);
  const Entry p = static_cast<Entry>(source.p);
  HomSpace space{source.p, source.dim(), target.dim(), {}};
  if (use_packed(backend, source.p)) {
    space.basis = spin_hom(convert<BitMatrix>(source), convert<BitMatrix>(target), p);
  } else {
    space.basis = spin_hom(convert<GfMatrix>(source), convert<GfMatrix>(target), p);
  }
  return space;
}

std::size_t hom_dim(const Representation& source, const Representation& target, Backend backend) {
  return hom_space(source, target, backend).dim();
}

std::size_t hom_dim(const SpechtModule& source, const SpechtModule& target, Backend backend) {
  return hom_dim(source.representation(), target.representation(), backend);
}

std::size_t hom_dim_stacked(const Representation& source, const Representation& target,
                            std::size_t max_unknowns) {
  require_compatible(source, target);
  const std::size_t n = source.dim();
  const std::size_t m = target.dim();
  if (n * m > max_unknowns) {
    throw Error(ErrorCode::TooLarge, std::to_string(n * m) + " unknowns");
  }
  const linalg::PrimeField field{static_cast<Entry>(source.p)};
  GfEchelon system(field.p, n * m);
  std::vector<Entry> equation(n * m);
  for (std::size_t g = 0; g < 2; ++g) {
    const GfMatrix& a = source.gens[g];
    const GfMatrix& b = target.gens[g];
    // (rho_A X - X rho_B)[i][j] = 0
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        std::fill(equation.begin(), equation.end(), 0);
        for (std::size_t k = 0; k < n; ++k) {
          Entry& slot = equation[k * m + j];
          slot = field.add(slot, a.get(i, k));
        }
        for (std::size_t k = 0; k < m; ++k) {
          Entry& slot = equation[i * m + k];
          slot = field.sub(slot, b.get(k, j));
        }
        system.insert(equation);
      }
    }
  }
  return n * m - system.rank();
}

std::vector<GfMatrix> end_ring(const Representation& rep, Backend backend) {
  return hom_space(rep, rep, backend).basis;
}

std::vector<GfMatrix> end_ring(const SpechtModule& module, Backend backend) {
  return end_ring(module.representation(), backend);
}

std::size_t invariants_dim(const Representation& rep) {
  const std::size_t n = rep.dim();
  const Entry p = static_cast<Entry>(rep.p);
  GfMatrix stacked(p, n, 2 * n);
  const GfMatrix identity = GfMatrix::identity(p, n);
  stacked.add_scaled_block(rep.gens[0] - identity, 1, 0);
  stacked.add_scaled_block(rep.gens[1] - identity, 1, n);
  return stacked.left_nullspace().rows();
}

std::size_t invariants_dim(const SpechtModule& module) {
  return invariants_dim(module.representation());
}

DecompositionResult is_decomposable(const Representation& rep, const DecomposeOptions& options) {
  auto basis = end_ring(rep, options.backend);
  const Entry p = static_cast<Entry>(rep.p);
  if (use_packed(options.backend, rep.p)) {
    return decompose<BitMatrix>(basis, rep.dim(), p, options);
  }
  return decompose<GfMatrix>(basis, rep.dim(), p, options);
}

DecompositionResult is_decomposable(const SpechtModule& module, const DecomposeOptions& options) {
  return is_decomposable(module.representation(), options);
}

bool sign_dual_check(const Partition& lambda, Part p, const SpechtOptions& options) {
  Representation twisted = sign_twist(build_specht(lambda, p, options).representation());
  Representation dualized = dual(build_specht(conjugate(lambda), p, options).representation());
  if (twisted.dim() != dualized.dim()) return false;
  HomSpace maps = hom_space(twisted, dualized);
  if (maps.dim() == 0) return false;
  const Entry q = static_cast<Entry>(p);
  const std::size_t n = twisted.dim();
  auto invertible = [&](const std::vector<Entry>& coefficients) {
    return combination(maps.basis, coefficients, q).rank() == n;
  };
  constexpr Part kEnumerate = Part{1} << 16;
  Part total = checked_power(p, maps.dim(), kEnumerate);
  std::vector<Entry> coefficients(maps.dim(), 0);
  if (total <= kEnumerate) {
    for (Part index = 1; index < total; ++index) {
      Part rest = index;
      for (auto& c : coefficients) {
        c = static_cast<Entry>(rest % p);
        rest /= p;
      }
      if (invertible(coefficients)) return true;
    }
    return false;
  }
  std::mt19937_64 rng(0x5167);
  std::uniform_int_distribution<Entry> coefficient(0, q - 1);
  for (int sample = 0; sample < 64; ++sample) {
    for (auto& c : coefficients) c = coefficient(rng);
    if (invertible(coefficients)) return true;
  }
  return false;
}

}  // namespace twistlab
