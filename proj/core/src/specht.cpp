#include "twistlab/specht.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "twistlab/error.hpp"

namespace twistlab {

using linalg::Entry;
using linalg::GfMatrix;

namespace {

constexpr std::size_t kMaxDegree = 16;

unsigned shift_of(std::size_t entry, std::size_t degree) {
  return static_cast<unsigned>(4 * (degree - 1 - entry));
}

// All permutations of [0, h) with their signs, lexicographic order.
struct SignedPermutations {
  std::vector<std::vector<std::uint8_t>> perms;
  std::vector<int> signs;
};

const SignedPermutations& permutations_of(std::size_t h) {
  static std::mutex guard;
  static std::map<std::size_t, SignedPermutations> cache;
  std::lock_guard lock(guard);
  auto it = cache.find(h);
  if (it != cache.end()) return it->second;
  SignedPermutations out;
  std::vector<std::uint8_t> perm(h);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < h; ++a) {
      for (std::size_t b = a + 1; b < h; ++b) inversions += perm[a] > perm[b];
    }
    out.perms.push_back(perm);
    out.signs.push_back(inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return cache.emplace(h, std::move(out)).first->second;
}

// Calls visit(code, sign) for every term of the polytabloid of t: the column
// group permutes the rows of each column's entries.
template <class Visit>
void for_each_term(const Tableau& t, std::size_t degree, Visit&& visit) {
  std::size_t width = t.rows.empty() ? 0 : t.rows.front().size();
  // Per column: list of (code contribution, sign).
  std::vector<std::vector<std::pair<TabloidCode, int>>> columns(width);
  for (std::size_t c = 0; c < width; ++c) {
    std::size_t h = 0;
    while (h < t.rows.size() && t.rows[h].size() > c) ++h;
    const auto& perms = permutations_of(h);
    columns[c].reserve(perms.perms.size());
    for (std::size_t k = 0; k < perms.perms.size(); ++k) {
      TabloidCode contribution = 0;
      for (std::size_t i = 0; i < h; ++i) {
        contribution |= TabloidCode{perms.perms[k][i]} << shift_of(t.rows[i][c], degree);
      }
      columns[c].emplace_back(contribution, perms.signs[k]);
    }
  }
  // Odometer over the product of column groups.
  std::vector<std::size_t> index(width, 0);
  if (width == 0) {
    visit(TabloidCode{0}, 1);
    return;
  }
  while (true) {
    TabloidCode code = 0;
    int sign = 1;
    for (std::size_t c = 0; c < width; ++c) {
      code |= columns[c][index[c]].first;
      sign *= columns[c][index[c]].second;
    }
    visit(code, sign);
    std::size_t c = 0;
    while (c < width && ++index[c] == columns[c].size()) {
      index[c] = 0;
      ++c;
    }
    if (c == width) break;
  }
}

void collect_standard(const Partition& shape, std::vector<std::vector<std::uint8_t>>& rows,
                      std::size_t next, std::size_t degree, std::vector<Tableau>& out) {
  if (next == degree) {
    out.push_back(Tableau{rows});
    return;
  }
  for (std::size_t i = 0; i < shape.length(); ++i) {
    std::size_t len = rows[i].size();
    if (len >= shape[i]) continue;
    if (i > 0 && rows[i - 1].size() <= len) continue;
    rows[i].push_back(static_cast<std::uint8_t>(next));
    collect_standard(shape, rows, next + 1, degree, out);
    rows[i].pop_back();
  }
}

Tableau permuted(const Tableau& t, const std::vector<std::uint8_t>& g) {
  Tableau out = t;
  for (auto& row : out.rows) {
    for (auto& x : row) x = g[x];
  }
  return out;
}

std::vector<std::uint8_t> transposition_images(std::size_t degree) {
  std::vector<std::uint8_t> g(degree);
  std::iota(g.begin(), g.end(), 0);
  if (degree >= 2) std::swap(g[0], g[1]);
  return g;
}

std::vector<std::uint8_t> cycle_images(std::size_t degree) {
  std::vector<std::uint8_t> g(degree);
  for (std::size_t x = 0; x < degree; ++x) g[x] = static_cast<std::uint8_t>((x + 1) % degree);
  return g;
}

GfMatrix power(const GfMatrix& m, Part e) {
  GfMatrix result = GfMatrix::identity(m.prime(), m.rows());
  GfMatrix base = m;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

}  // namespace

std::array<int, 2> Representation::generator_signs() const noexcept {
  int cycle = (degree >= 1 && (degree - 1) % 2 == 1) ? -1 : 1;
  int transposition = degree >= 2 ? -1 : 1;
  return {transposition, cycle};
}

Representation sign_twist(const Representation& rep) {
  Representation out = rep;
  auto signs = rep.generator_signs();
  for (std::size_t g = 0; g < 2; ++g) {
    if (signs[g] < 0) out.gens[g] = rep.gens[g].scaled(rep.p - 1);
  }
  return out;
}

Representation dual(const Representation& rep) {
  Representation out = rep;
  for (std::size_t g = 0; g < 2; ++g) {
    auto inverse = rep.gens[g].inverse();
    if (!inverse) throw Error(ErrorCode::InvalidArgument, "generator matrix is singular");
    out.gens[g] = inverse->transpose();
  }
  return out;
}

bool satisfies_relations(const Representation& rep) {
  const GfMatrix& s = rep.gens[0];
  const GfMatrix& c = rep.gens[1];
  const Part d = rep.degree;
  if (d <= 1) return s.is_identity() && c.is_identity();
  if (!(s * s).is_identity()) return false;
  if (!power(c, d).is_identity()) return false;
  if (!power(s * c, d - 1).is_identity()) return false;
  auto c_inverse = c.inverse();
  if (!c_inverse) return false;
  // Right action, so R(gh) = R(h) R(g) and s_i = c^i s c^-i has matrix
  // C^-i S C^i.
  std::vector<GfMatrix> coxeter;
  GfMatrix left = GfMatrix::identity(rep.p, rep.dim());
  GfMatrix right = left;
  for (Part i = 0; i + 1 < d; ++i) {
    coxeter.push_back(left * s * right);
    left = left * *c_inverse;
    right = c * right;
  }
  for (std::size_t i = 0; i < coxeter.size(); ++i) {
    for (std::size_t j = i + 1; j < coxeter.size(); ++j) {
      GfMatrix product = coxeter[i] * coxeter[j];
      Part order = (j == i + 1) ? 3 : 2;
      if (!power(product, order).is_identity()) return false;
    }
  }
  return true;
}

std::uint64_t SpechtOptions::default_max_tabloids() {
  if (const char* env = std::getenv("TWISTLAB_MAX_DIM")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return 100000;
}

std::uint64_t tabloid_count(const Partition& lambda) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  // Product of binomials C(lambda_1 + ... + lambda_i, lambda_i).
  std::uint64_t result = 1;
  std::uint64_t placed = 0;
  for (Part part : lambda) {
    placed += part;
    std::uint64_t binomial = 1;
    for (Part k = 1; k <= part; ++k) {
      std::uint64_t factor = placed - part + k;
      if (binomial > kMax / factor) return kMax;
      binomial = binomial * factor / k;
    }
    if (binomial != 0 && result > kMax / binomial) return kMax;
    result *= binomial;
  }
  return result;
}

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
  std::size_t degree = lambda.size();
  std::vector<Tableau> out;
  std::vector<std::vector<std::uint8_t>> rows(lambda.length());
  collect_standard(lambda, rows, 0, degree, out);
  return out;
}

namespace {

std::uint64_t count_standard_tableaux(const Partition& lambda,
                                      std::map<Partition, std::uint64_t>& cache) {
  if (lambda.size() <= 1) return 1;
  if (auto it = cache.find(lambda); it != cache.end()) return it->second;
  // The largest entry sits in some removable corner.
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    if (lambda[i] > lambda[i + 1]) {
      std::vector<Part> smaller(lambda.begin(), lambda.end());
      --smaller[i];
      total += count_standard_tableaux(Partition(std::move(smaller)), cache);
    }
  }
  cache.emplace(lambda, total);
  return total;
}

}  // namespace

std::uint64_t count_standard_tableaux(const Partition& lambda) {
  std::map<Partition, std::uint64_t> cache;
  return count_standard_tableaux(lambda, cache);
}

std::uint64_t hook_length_dimension(const Partition& lambda) {
  // d! / prod hooks via prime exponents, so intermediate values stay small.
  const std::size_t degree = lambda.size();
  std::vector<int> exponent(degree + 1, 0);
  auto add_factorization = [&](std::uint64_t n, int sign) {
    for (std::uint64_t q = 2; q * q <= n; ++q) {
      while (n % q == 0) {
        exponent[q] += sign;
        n /= q;
      }
    }
    if (n > 1) exponent[n] += sign;
  };
  for (std::uint64_t n = 2; n <= degree; ++n) add_factorization(n, +1);
  Partition columns = conjugate(lambda);
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    for (Part j = 0; j < lambda[i]; ++j) {
      std::uint64_t hook = (lambda[i] - j - 1) + (columns[j] - i - 1) + 1;
      add_factorization(hook, -1);
    }
  }
  std::uint64_t result = 1;
  for (std::size_t q = 2; q <= degree; ++q) {
    if (exponent[q] < 0) throw Error(ErrorCode::PostconditionFailed, "hook product does not divide d!");
    for (int k = 0; k < exponent[q]; ++k) result *= q;
  }
  return result;
}

std::uint64_t dim_specht(const Partition& lambda) {
  std::uint64_t tableaux = count_standard_tableaux(lambda);
  std::uint64_t hooks = hook_length_dimension(lambda);
  if (tableaux != hooks) {
    throw Error(ErrorCode::PostconditionFailed,
                "tableau count " + std::to_string(tableaux) + " != hook formula " + std::to_string(hooks));
  }
  return tableaux;
}

TabloidCode tabloid_code(const Tableau& t, std::size_t degree) {
  TabloidCode code = 0;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    for (auto x : t.rows[i]) code |= TabloidCode{i} << shift_of(x, degree);
  }
  return code;
}

std::vector<SparseTerm> SpechtModule::polytabloid(std::size_t i) const {
  std::vector<SparseTerm> terms;
  for_each_term(tableaux_.at(i), static_cast<std::size_t>(rep_.degree),
                [&](TabloidCode code, int sign) { terms.push_back({code, sign}); });
  return terms;
}

std::vector<Entry> SpechtModule::restrict_polytabloid(const Tableau& t) const {
  const linalg::PrimeField field{static_cast<Entry>(rep_.p)};
  std::vector<Entry> v(dim(), 0);
  for_each_term(t, static_cast<std::size_t>(rep_.degree), [&](TabloidCode code, int sign) {
    auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
    if (it == codes_.end() || *it != code) return;
    auto& slot = v[static_cast<std::size_t>(it - codes_.begin())];
    slot = sign > 0 ? field.add(slot, 1) : field.sub(slot, 1);
  });
  return v;
}

std::vector<Entry> SpechtModule::solve_from_standard_positions(std::vector<Entry> v) const {
  const linalg::PrimeField field{static_cast<Entry>(rep_.p)};
  std::vector<Entry> coords(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    Entry c = v[i];
    if (c == 0) continue;
    coords[i] = c;
    Entry minus = field.neg(c);
    for (const auto& [j, coefficient] : triangular_[i]) {
      v[j] = field.add(v[j], field.mul(minus, coefficient));
    }
  }
  return coords;
}

std::vector<Entry> SpechtModule::act(const std::vector<std::uint8_t>& g, std::size_t i) const {
  return solve_from_standard_positions(restrict_polytabloid(permuted(tableaux_.at(i), g)));
}

SpechtModule build_specht(const Partition& lambda, Part p, const SpechtOptions& options) {
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "p must be at least 2");
  const Part degree = lambda.size();
  if (degree > kMaxDegree) {
    throw Error(ErrorCode::TooLarge, "degree " + std::to_string(degree) + " exceeds " +
                                         std::to_string(kMaxDegree));
  }
  std::uint64_t tabloids = tabloid_count(lambda);
  if (tabloids > options.max_tabloids) {
    throw Error(ErrorCode::TooLarge, "dim M^" + lambda.to_exponent_string() + " = " +
                                         std::to_string(tabloids) + " exceeds bound " +
                                         std::to_string(options.max_tabloids));
  }

  SpechtModule module;
  module.shape_ = lambda;
  module.tabloids_ = tabloids;
  module.rep_.p = p;
  module.rep_.degree = degree;

  auto tableaux = standard_tableaux(lambda);
  std::vector<std::pair<TabloidCode, std::size_t>> order;
  order.reserve(tableaux.size());
  for (std::size_t i = 0; i < tableaux.size(); ++i) {
    order.emplace_back(tabloid_code(tableaux[i], degree), i);
  }
  std::sort(order.begin(), order.end());
  for (const auto& [code, index] : order) {
    module.codes_.push_back(code);
    module.tableaux_.push_back(tableaux[index]);
  }

  const std::size_t n = module.tableaux_.size();
  module.triangular_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = module.restrict_polytabloid(module.tableaux_[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j] == 0) continue;
      if (j < i || (j == i && row[j] != 1)) {
        throw Error(ErrorCode::PostconditionFailed,
                    "polytabloids are not unitriangular on standard tabloids");
      }
      if (j > i) module.triangular_[i].emplace_back(j, row[j]);
    }
    if (row[i] != 1) {
      throw Error(ErrorCode::PostconditionFailed, "polytabloid misses its own tabloid");
    }
  }

  const std::array<std::vector<std::uint8_t>, 2> generators{transposition_images(degree),
                                                            cycle_images(degree)};
  for (std::size_t g = 0; g < 2; ++g) {
    GfMatrix matrix(static_cast<Entry>(p), n, n);
    for (std::size_t i = 0; i < n; ++i) {
      auto coords = module.act(generators[g], i);
      for (std::size_t j = 0; j < n; ++j) matrix.set(i, j, coords[j]);
    }
    module.rep_.gens[g] = std::move(matrix);
  }
  return module;
}

}  // namespace twistlab
