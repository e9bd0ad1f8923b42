#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace twistlab {

using Part = std::uint64_t;

/// A weakly decreasing sequence of positive integers. Trailing zeros passed
/// to the constructor are stripped; anything else that is not weakly
/// decreasing is rejected with ErrorCode::InvalidPartition.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<Part> parts);
  explicit Partition(std::vector<Part> parts);

  /// Parses "15,15" (largest part first). Whitespace around parts is
  /// allowed; an empty string or "0" is the empty partition.
  static Partition parse(std::string_view text);

  std::span<const Part> parts() const noexcept { return parts_; }
  const std::vector<Part>& vec() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  /// Part i (0-based), or 0 past the end.
  Part operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
  Part first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  /// Sum of parts; throws Overflow if it does not fit in 64 bits.
  Part size() const;

  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  /// "15,15"; the empty partition prints as "".
  std::string to_string() const;
  /// "(20^3,5^4)" style; the empty partition prints as "()".
  std::string to_exponent_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<Part> parts_;
};

Partition conjugate(const Partition& lambda);

bool is_p_regular(const Partition& lambda, Part p);
bool is_p_restricted(const Partition& lambda, Part p);
bool has_distinct_parts(const Partition& lambda);

/// Every part multiplied by c. Throws Overflow rather than wrapping.
Partition scale(const Partition& lambda, Part c);

/// Row-wise sum, shorter operand padded with zeros.
Partition add(const Partition& lambda, const Partition& mu);

/// Row-wise difference; throws NonPartitionDifference unless every entry is
/// nonnegative and the result is weakly decreasing.
Partition subtract(const Partition& lambda, const Partition& mu);

/// Each (distinct) part repeated p-1 times.
Partition hat(const Partition& lambda, Part p);

/// Least l >= 0 with t < p^l.
unsigned l_p(Part t, Part p);

/// Checked p^e; throws Overflow.
Part checked_pow(Part p, unsigned e);

/// Row-wise base-p digits; digits[i] is the partition of i-th digits.
struct PAdicDigits {
  Part p = 2;
  std::vector<Partition> digits;
};

/// Throws NoPAdicExpansion when some digit vector is not a partition.
PAdicDigits p_adic_expansion(const Partition& mu, Part p);
Partition reconstruct(const PAdicDigits& expansion);

struct PartitionFilter {
  enum class Kind { All, PRegular, TwoPart, Distinct };

  Kind kind = Kind::All;
  Part p = 0;

  static PartitionFilter all() { return {Kind::All, 0}; }
  static PartitionFilter p_regular(Part prime) { return {Kind::PRegular, prime}; }
  /// At most two nonzero parts, so (d) counts as (d, 0).
  static PartitionFilter two_part() { return {Kind::TwoPart, 0}; }
  static PartitionFilter distinct() { return {Kind::Distinct, 0}; }

  bool accepts(const Partition& lambda) const;
};

/// Calls visit on every qualifying partition of d, in decreasing
/// lexicographic order. Returning false from visit stops the walk.
void for_each_partition(Part d, const PartitionFilter& filter,
                        const std::function<bool(const Partition&)>& visit);

std::vector<Partition> enumerate_partitions(Part d,
                                            const PartitionFilter& filter = PartitionFilter::all());

/// Partitions of d whose first part is exactly `first`, decreasing lex order.
std::vector<Partition> enumerate_partitions_with_first(Part d, Part first,
                                                       const PartitionFilter& filter);

}  // namespace twistlab
