#include "twistlab/partition.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

#include "twistlab/error.hpp"

namespace twistlab {

namespace {

Part checked_mul(Part a, Part b) {
  if (a != 0 && b > std::numeric_limits<Part>::max() / a) {
    throw Error(ErrorCode::Overflow, std::to_string(a) + " * " + std::to_string(b));
  }
  return a * b;
}

Part checked_add(Part a, Part b) {
  if (b > std::numeric_limits<Part>::max() - a) {
    throw Error(ErrorCode::Overflow, std::to_string(a) + " + " + std::to_string(b));
  }
  return a + b;
}

void require_prime_like(Part p) {
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "p must be at least 2");
}

// Strips trailing zeros and checks the descent condition.
std::vector<Part> canonical(std::vector<Part> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] > parts[i - 1]) {
      throw Error(ErrorCode::InvalidPartition, "parts must be weakly decreasing");
    }
    if (parts[i] == 0) {
      throw Error(ErrorCode::InvalidPartition, "zero part before a positive part");
    }
  }
  return parts;
}

}  // namespace

Partition::Partition(std::initializer_list<Part> parts)
    : parts_(canonical(std::vector<Part>(parts))) {}

Partition::Partition(std::vector<Part> parts) : parts_(canonical(std::move(parts))) {}

Partition Partition::parse(std::string_view text) {
  std::vector<Part> parts;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) return {};
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto token = trim(text.substr(pos, comma - pos));
    Part value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::InvalidPartition, "cannot parse part '" + std::string(token) + "'");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

Part Partition::size() const {
  Part total = 0;
  for (Part x : parts_) total = checked_add(total, x);
  return total;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::string Partition::to_exponent_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (i) out << ',';
    out << parts_[i];
    if (j - i > 1) out << '^' << (j - i);
    i = j;
  }
  out << ')';
  return out.str();
}

Partition conjugate(const Partition& lambda) {
  std::vector<Part> out(lambda.first(), 0);
  // Column j has as many nodes as rows of length > j.
  std::size_t rows = lambda.length();
  for (Part j = 1; j <= lambda.first(); ++j) {
    while (rows > 0 && lambda[rows - 1] < j) --rows;
    out[j - 1] = rows;
  }
  return Partition(std::move(out));
}

bool is_p_regular(const Partition& lambda, Part p) {
  require_prime_like(p);
  auto parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (j - i >= p) return false;
    i = j;
  }
  return true;
}

bool is_p_restricted(const Partition& lambda, Part p) {
  require_prime_like(p);
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    if (lambda[i] - lambda[i + 1] >= p) return false;
  }
  return true;
}

bool has_distinct_parts(const Partition& lambda) {
  for (std::size_t i = 1; i < lambda.length(); ++i) {
    if (lambda[i] == lambda[i - 1]) return false;
  }
  return true;
}

Partition scale(const Partition& lambda, Part c) {
  if (c == 0) throw Error(ErrorCode::InvalidArgument, "scale factor must be positive");
  std::vector<Part> out;
  out.reserve(lambda.length());
  for (Part x : lambda) out.push_back(checked_mul(x, c));
  return Partition(std::move(out));
}

Partition add(const Partition& lambda, const Partition& mu) {
  std::vector<Part> out(std::max(lambda.length(), mu.length()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(lambda[i], mu[i]);
  return Partition(std::move(out));
}

Partition subtract(const Partition& lambda, const Partition& mu) {
  std::size_t n = std::max(lambda.length(), mu.length());
  std::vector<Part> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (lambda[i] < mu[i]) {
      throw Error(ErrorCode::NonPartitionDifference,
                  "negative entry in row " + std::to_string(i + 1));
    }
    out[i] = lambda[i] - mu[i];
    if (i > 0 && out[i] > out[i - 1]) {
      throw Error(ErrorCode::NonPartitionDifference,
                  "difference increases at row " + std::to_string(i + 1));
    }
  }
  return Partition(std::move(out));
}

Partition hat(const Partition& lambda, Part p) {
  require_prime_like(p);
  if (!has_distinct_parts(lambda)) {
    throw Error(ErrorCode::NotDistinctParts, lambda.to_exponent_string());
  }
  std::vector<Part> out;
  out.reserve(lambda.length() * (p - 1));
  for (Part x : lambda) out.insert(out.end(), p - 1, x);
  return Partition(std::move(out));
}

unsigned l_p(Part t, Part p) {
  require_prime_like(p);
  unsigned l = 0;
  // Compare against t / p^l instead of forming p^l, which may overflow.
  Part rest = t;
  while (rest > 0) {
    rest /= p;
    ++l;
  }
  return l;
}

Part checked_pow(Part p, unsigned e) {
  Part out = 1;
  for (unsigned i = 0; i < e; ++i) out = checked_mul(out, p);
  return out;
}

PAdicDigits p_adic_expansion(const Partition& mu, Part p) {
  require_prime_like(p);
  PAdicDigits result{p, {}};
  std::vector<Part> rows(mu.begin(), mu.end());
  while (std::any_of(rows.begin(), rows.end(), [](Part x) { return x > 0; })) {
    std::vector<Part> digit(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      digit[i] = rows[i] % p;
      rows[i] /= p;
    }
    for (std::size_t i = 1; i < digit.size(); ++i) {
      if (digit[i] > digit[i - 1]) {
        throw Error(ErrorCode::NoPAdicExpansion,
                    "digit " + std::to_string(result.digits.size()) + " is not a partition");
      }
    }
    Partition piece(std::move(digit));
    if (!is_p_restricted(piece, p)) {
      throw Error(ErrorCode::NoPAdicExpansion, "digit is not p-restricted");
    }
    result.digits.push_back(std::move(piece));
  }
  return result;
}

Partition reconstruct(const PAdicDigits& expansion) {
  Partition out;
  Part weight = 1;
  for (std::size_t i = 0; i < expansion.digits.size(); ++i) {
    out = add(out, scale(expansion.digits[i], weight));
    if (i + 1 < expansion.digits.size()) weight = checked_mul(weight, expansion.p);
  }
  return out;
}

bool PartitionFilter::accepts(const Partition& lambda) const {
  switch (kind) {
    case Kind::All: return true;
    case Kind::PRegular: return is_p_regular(lambda, p);
    case Kind::TwoPart: return lambda.length() <= 2;
    case Kind::Distinct: return has_distinct_parts(lambda);
  }
  return false;
}

namespace {

// Fills rows[depth..] with partitions of `remaining` whose parts are at most
// `max_part`, largest first, and reports each completed one.
bool walk(std::vector<Part>& rows, Part remaining, Part max_part, const PartitionFilter& filter,
          const std::function<bool(const Partition&)>& visit) {
  if (remaining == 0) {
    Partition lambda(rows);
    if (filter.accepts(lambda)) return visit(lambda);
    return true;
  }
  if (filter.kind == PartitionFilter::Kind::TwoPart && rows.size() >= 2) return true;
  Part top = std::min(remaining, max_part);
  for (Part part = top; part >= 1; --part) {
    if (filter.kind == PartitionFilter::Kind::Distinct && !rows.empty() && part == rows.back()) {
      continue;
    }
    rows.push_back(part);
    bool keep_going = walk(rows, remaining - part, part, filter, visit);
    rows.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

void for_each_partition(Part d, const PartitionFilter& filter,
                        const std::function<bool(const Partition&)>& visit) {
  std::vector<Part> rows;
  walk(rows, d, d, filter, visit);
}

std::vector<Partition> enumerate_partitions(Part d, const PartitionFilter& filter) {
  std::vector<Partition> out;
  for_each_partition(d, filter, [&](const Partition& lambda) {
    out.push_back(lambda);
    return true;
  });
  return out;
}

std::vector<Partition> enumerate_partitions_with_first(Part d, Part first,
                                                       const PartitionFilter& filter) {
  std::vector<Partition> out;
  if (first == 0 || first > d) {
    if (d == 0 && first == 0 && filter.accepts(Partition{})) out.emplace_back();
    return out;
  }
  std::vector<Part> rows{first};
  walk(rows, d - first, first, filter, [&](const Partition& lambda) {
    out.push_back(lambda);
    return true;
  });
  return out;
}

}  // namespace twistlab
