#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

std::vector<Part> rows_of(const Partition& lambda) { return lambda.vec(); }

Partition make(std::vector<Part> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

Part at(const std::vector<Part>& v, std::size_t i) { return i < v.size() ? v[i] : 0; }

std::vector<Part> column_lengths(const std::vector<Part>& rows) {
  std::vector<Part> cols(rows.empty() ? 0 : rows[0], 0);
  for (Part r : rows) {
    for (Part j = 0; j < r; ++j) ++cols[j];
  }
  return cols;
}

void partitions_with_length(Part n, Part max_part, Part length, std::vector<Part>& prefix,
                            std::vector<Partition>& out) {
  if (length == 0) {
    if (n == 0) out.push_back(Partition(prefix));
    return;
  }
  for (Part x = std::min(n, max_part); x >= 1; --x) {
    if (x * length < n) break;
    prefix.push_back(x);
    partitions_with_length(n - x, x, length - 1, prefix, out);
    prefix.pop_back();
  }
}

// --- crystal ---------------------------------------------------------------

struct Node {
  std::size_t row;
  bool addable;
};

std::int64_t residue(std::int64_t col, std::int64_t row, Part p) {
  std::int64_t r = (col - row) % static_cast<std::int64_t>(p);
  return r < 0 ? r + static_cast<std::int64_t>(p) : r;
}

// i-nodes read from the bottom row upward, with removable-then-addable
// pairs cancelled; what survives is the reduced signature.
std::vector<Node> reduced_signature(const std::vector<Part>& lam, std::int64_t i, Part p) {
  std::vector<Node> nodes;
  const std::size_t n = lam.size();
  for (std::size_t r = n + 1; r-- > 0;) {
    Part l = at(lam, r);
    Part next = at(lam, r + 1);
    bool has_prev = r > 0;
    Part prev = has_prev ? lam[r - 1] : 0;
    // Within one row the removable node sits left of the addable one; when
    // reading bottom-up the row order is reversed along with everything else.
    if (l > 0 && l - 1 >= next && residue(static_cast<std::int64_t>(l) - 1,
                                          static_cast<std::int64_t>(r), p) == i) {
      nodes.push_back({r, false});
    }
    if ((!has_prev || l < prev) && residue(static_cast<std::int64_t>(l),
                                           static_cast<std::int64_t>(r), p) == i) {
      nodes.push_back({r, true});
    }
  }
  std::vector<Node> stack;
  for (const auto& x : nodes) {
    if (!stack.empty() && !stack.back().addable && x.addable) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  return stack;
}

bool good_remove(std::vector<Part>& lam, std::int64_t i, Part p) {
  for (const auto& x : reduced_signature(lam, i, p)) {
    if (!x.addable) {
      --lam[x.row];
      while (!lam.empty() && lam.back() == 0) lam.pop_back();
      return true;
    }
  }
  return false;
}

bool cogood_add(std::vector<Part>& lam, std::int64_t i, Part p) {
  auto sig = reduced_signature(lam, i, p);
  for (auto it = sig.rbegin(); it != sig.rend(); ++it) {
    if (it->addable) {
      if (it->row == lam.size()) lam.push_back(0);
      ++lam[it->row];
      return true;
    }
  }
  return false;
}

// --- dense GF(p) -----------------------------------------------------------

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::size_t rank_gf2(const Matrix& m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  const std::size_t words = (cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(m.size());
  for (const auto& r : m) {
    std::vector<std::uint64_t> bits(words, 0);
    for (std::size_t j = 0; j < cols; ++j) {
      if (r[j] & 1) bits[j / 64] |= std::uint64_t{1} << (j % 64);
    }
    rows.push_back(std::move(bits));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot][c / 64] & mask)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c / 64] & mask) {
        for (std::size_t w = c / 64; w < words; ++w) rows[r][w] ^= rows[rank][w];
      }
    }
    ++rank;
  }
  return rank;
}

// Tabloids are identified by the row index of every entry.
using Tabloid = std::vector<std::uint8_t>;
using Tableau = std::vector<std::vector<unsigned>>;

void standard_fill(const std::vector<Part>& shape, unsigned next, unsigned d, Tableau& t,
                   std::vector<Tableau>& out) {
  if (next > d) {
    out.push_back(t);
    return;
  }
  for (std::size_t r = 0; r < shape.size(); ++r) {
    if (t[r].size() >= shape[r]) continue;
    if (r > 0 && t[r].size() >= t[r - 1].size()) continue;
    t[r].push_back(next);
    standard_fill(shape, next + 1, d, t, out);
    t[r].pop_back();
  }
}

int permutation_sign(const std::vector<unsigned>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) sign = -sign;
    }
  }
  return sign;
}

struct TabloidIndex {
  std::map<Tabloid, std::size_t> index;
  std::size_t of(const Tabloid& t) {
    auto [it, inserted] = index.emplace(t, index.size());
    return it->second;
  }
};

std::map<std::size_t, int> polytabloid(const Tableau& t, const std::vector<Part>& shape,
                                       unsigned d, TabloidIndex& tabloids) {
  auto cols = column_lengths(shape);
  std::vector<std::vector<unsigned>> perms;
  for (Part len : cols) {
    std::vector<unsigned> perm(len);
    std::iota(perm.begin(), perm.end(), 0u);
    perms.push_back(perm);
  }
  std::map<std::size_t, int> out;
  while (true) {
    Tabloid tabloid(d);
    int sign = 1;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      sign *= permutation_sign(perms[j]);
      for (std::size_t i = 0; i < cols[j]; ++i) {
        // entry of row i moves to row perms[j][i]
        tabloid[t[i][j] - 1] = static_cast<std::uint8_t>(perms[j][i]);
      }
    }
    out[tabloids.of(tabloid)] += sign;
    std::size_t j = 0;
    while (j < perms.size() && !std::next_permutation(perms[j].begin(), perms[j].end())) ++j;
    if (j == perms.size()) break;
  }
  return out;
}

}  // namespace

std::uint64_t partition_count(unsigned d) {
  std::vector<std::int64_t> p(d + 1, 0);
  p[0] = 1;
  for (unsigned n = 1; n <= d; ++n) {
    std::int64_t total = 0;
    for (std::int64_t k = 1;; ++k) {
      std::int64_t g1 = k * (3 * k - 1) / 2;
      std::int64_t g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      std::int64_t sign = (k % 2 == 1) ? 1 : -1;
      total += sign * p[n - g1];
      if (g2 <= n) total += sign * p[n - g2];
    }
    p[n] = total;
  }
  return static_cast<std::uint64_t>(p[d]);
}

Stripped strip_hooks(const Partition& lambda, Part p) {
  std::vector<Part> rows = rows_of(lambda);
  Part weight = 0;
  bool found = true;
  while (found) {
    found = false;
    auto cols = column_lengths(rows);
    for (std::size_t i = 0; i < rows.size() && !found; ++i) {
      for (Part j = 0; j < rows[i] && !found; ++j) {
        Part arm = rows[i] - j - 1;
        Part leg = cols[j] - i - 1;
        if (arm + leg + 1 != p) continue;
        std::size_t bottom = cols[j] - 1;
        for (std::size_t r = i; r < bottom; ++r) rows[r] = rows[r + 1] - 1;
        rows[bottom] = j;
        while (!rows.empty() && rows.back() == 0) rows.pop_back();
        ++weight;
        found = true;
      }
    }
  }
  return {make(rows), weight};
}

Partition crystal_mullineux(const Partition& lambda, Part p) {
  std::vector<Part> lam = rows_of(lambda);
  std::vector<std::int64_t> path;
  while (!lam.empty()) {
    bool moved = false;
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(p) && !moved; ++i) {
      if (good_remove(lam, i, p)) {
        path.push_back(i);
        moved = true;
      }
    }
    if (!moved) throw std::logic_error("no good node");
  }
  std::vector<Part> nu;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    std::int64_t i = (static_cast<std::int64_t>(p) - *it) % static_cast<std::int64_t>(p);
    if (!cogood_add(nu, i, p)) throw std::logic_error("no cogood node");
  }
  return make(nu);
}

std::pair<Partition, Part> strip_p_rim(const Partition& lambda, Part p) {
  std::vector<Part> rows = rows_of(lambda);
  // The rim walked from the top right: row i holds columns
  // rows[i+1]-1 .. rows[i]-1 of it (all of row i for the last row).
  struct RimNode {
    std::size_t row;
  };
  std::vector<RimNode> walk;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Part lowest = i + 1 < rows.size() ? rows[i + 1] - 1 : 0;
    for (Part j = rows[i]; j-- > lowest;) walk.push_back({i});
  }
  std::vector<Part> removed(rows.size(), 0);
  Part total = 0;
  std::size_t pos = 0;
  while (pos < walk.size()) {
    std::size_t end = std::min(walk.size(), pos + p);
    for (std::size_t k = pos; k < end; ++k) ++removed[walk[k].row];
    total += end - pos;
    if (end == walk.size()) break;
    // next segment starts at the first rim node of the row below
    std::size_t last_row = walk[end - 1].row;
    pos = end;
    while (pos < walk.size() && walk[pos].row == last_row) ++pos;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] -= removed[i];
  return {make(rows), total};
}

std::vector<Partition> rim_insertions(const Partition& mu, Part rim, Part rows, Part p) {
  std::vector<Partition> candidates;
  std::vector<Part> prefix;
  partitions_with_length(mu.size() + rim, mu.size() + rim, rows, prefix, candidates);
  std::vector<Partition> out;
  for (const auto& nu : candidates) {
    auto [rest, size] = strip_p_rim(nu, p);
    if (size == rim && rest == mu) out.push_back(nu);
  }
  return out;
}

std::size_t rank_mod_p(Matrix m, std::uint32_t p) {
  if (p == 2) return rank_gf2(m);
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] % p == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    std::uint32_t inv = inv_mod(m[rank][c] % p, p);
    for (auto& x : m[rank]) x = static_cast<std::uint32_t>(std::uint64_t{x} * inv % p);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      std::uint32_t f = m[r][c] % p;
      if (f == 0) continue;
      for (std::size_t k = c; k < cols; ++k) {
        m[r][k] = static_cast<std::uint32_t>((m[r][k] + std::uint64_t{p - f} * m[rank][k]) % p);
      }
    }
    ++rank;
  }
  return rank;
}

DenseSpecht dense_specht(const Partition& lambda, std::uint32_t p) {
  const std::vector<Part> shape = rows_of(lambda);
  const unsigned d = static_cast<unsigned>(lambda.size());
  DenseSpecht out;
  out.p = p;
  if (d == 0) {
    out.dim = 1;
    out.transposition = out.cycle = Matrix{{1}};
    return out;
  }

  std::vector<Tableau> standard;
  Tableau scratch(shape.size());
  standard_fill(shape, 1, d, scratch, standard);

  TabloidIndex tabloids;
  auto reduce = [p](const std::map<std::size_t, int>& v) {
    std::map<std::size_t, std::uint32_t> out;
    for (auto [k, c] : v) {
      int r = ((c % static_cast<int>(p)) + static_cast<int>(p)) % static_cast<int>(p);
      if (r) out[k] = static_cast<std::uint32_t>(r);
    }
    return out;
  };

  std::vector<std::map<std::size_t, std::uint32_t>> basis;
  for (const auto& t : standard) basis.push_back(reduce(polytabloid(t, shape, d, tabloids)));

  auto image = [&](const Tableau& t, auto&& g) {
    Tableau moved = t;
    for (auto& row : moved) {
      for (auto& x : row) x = g(x);
    }
    return reduce(polytabloid(moved, shape, d, tabloids));
  };
  auto swap12 = [](unsigned x) { return x == 1 ? 2u : x == 2 ? 1u : x; };
  auto shift = [d](unsigned x) { return x == d ? 1u : x + 1; };
  std::vector<std::map<std::size_t, std::uint32_t>> s_images, c_images;
  for (const auto& t : standard) {
    s_images.push_back(image(t, swap12));
    c_images.push_back(image(t, shift));
  }

  // Row reduce the basis with a record of the combinations used, then
  // express each image by reading it off the pivots.
  const std::size_t n = basis.size();
  const std::size_t width = tabloids.index.size();
  Matrix rows(n, std::vector<std::uint32_t>(width, 0));
  Matrix track(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (auto [k, c] : basis[i]) rows[i][k] = c;
    track[i][i] = 1;
  }
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < width && rank < n; ++c) {
    std::size_t pivot = rank;
    while (pivot < n && rows[pivot][c] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(rows[rank], rows[pivot]);
    std::swap(track[rank], track[pivot]);
    std::uint32_t inv = inv_mod(rows[rank][c], p);
    for (auto& x : rows[rank]) x = static_cast<std::uint32_t>(std::uint64_t{x} * inv % p);
    for (auto& x : track[rank]) x = static_cast<std::uint32_t>(std::uint64_t{x} * inv % p);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      std::uint64_t f = p - rows[r][c];
      for (std::size_t k = 0; k < width; ++k) {
        rows[r][k] = static_cast<std::uint32_t>((rows[r][k] + f * rows[rank][k]) % p);
      }
      for (std::size_t k = 0; k < n; ++k) {
        track[r][k] = static_cast<std::uint32_t>((track[r][k] + f * track[rank][k]) % p);
      }
    }
    pivots.push_back(c);
    ++rank;
  }
  if (rank != n) throw std::logic_error("standard polytabloids are dependent");

  auto coordinates = [&](const std::map<std::size_t, std::uint32_t>& v) {
    std::vector<std::uint32_t> coeff(n, 0);
    std::vector<std::uint32_t> dense(width, 0);
    for (auto [k, c] : v) dense[k] = c;
    for (std::size_t r = 0; r < n; ++r) {
      std::uint64_t f = dense[pivots[r]];
      if (f == 0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        coeff[k] = static_cast<std::uint32_t>((coeff[k] + f * track[r][k]) % p);
      }
      for (std::size_t k = 0; k < width; ++k) {
        dense[k] = static_cast<std::uint32_t>((dense[k] + (p - f) * rows[r][k]) % p);
      }
    }
    if (std::any_of(dense.begin(), dense.end(), [](auto x) { return x != 0; })) {
      throw std::logic_error("image outside the span");
    }
    return coeff;
  };

  out.dim = n;
  for (std::size_t i = 0; i < n; ++i) {
    out.transposition.push_back(coordinates(s_images[i]));
    out.cycle.push_back(coordinates(c_images[i]));
  }
  return out;
}

std::size_t dense_hom_dim(const DenseSpecht& a, const DenseSpecht& b) {
  const std::size_t n = a.dim, m = b.dim, p = a.p;
  Matrix equations;
  for (const Matrix* pair : {&a.transposition, &a.cycle}) {
    const Matrix& ga = *pair;
    const Matrix& gb = pair == &a.transposition ? b.transposition : b.cycle;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        std::vector<std::uint32_t> row(n * m, 0);
        for (std::size_t k = 0; k < n; ++k) row[k * m + j] = (row[k * m + j] + ga[i][k]) % p;
        for (std::size_t k = 0; k < m; ++k) {
          row[i * m + k] = static_cast<std::uint32_t>((row[i * m + k] + p - gb[k][j]) % p);
        }
        equations.push_back(std::move(row));
      }
    }
  }
  return n * m - rank_mod_p(std::move(equations), a.p);
}

std::size_t dense_invariants_dim(const DenseSpecht& a) {
  const std::size_t n = a.dim;
  // columns of [S - I | C - I]; fixed vectors form its left kernel
  Matrix stacked(n, std::vector<std::uint32_t>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::uint32_t id = i == j ? 1 : 0;
      stacked[i][j] = (a.transposition[i][j] + a.p - id) % a.p;
      stacked[i][n + j] = (a.cycle[i][j] + a.p - id) % a.p;
    }
  }
  return n - rank_mod_p(std::move(stacked), a.p);
}

}  // namespace oracle
