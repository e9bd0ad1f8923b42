#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "twistlab/partition.hpp"

namespace twistlab {

using CertificateValue =
    std::variant<std::uint64_t, bool, std::string, Partition, std::vector<Partition>>;

struct CertificateField {
  std::string key;
  CertificateValue value;

  friend bool operator==(const CertificateField&, const CertificateField&) = default;
};

/// One scanned object (a partition, or a pair for the Ext scans) together
/// with the recomputed values that justify its classification.
struct Finding {
  std::vector<Partition> subjects;
  std::vector<CertificateField> certificate;

  const CertificateValue* find(const std::string& key) const;
  friend bool operator==(const Finding&, const Finding&) = default;
};

struct SearchParams {
  Part p = 0;
  std::optional<Part> d;
  std::optional<Partition> lambda;
  std::optional<unsigned> max_b;

  friend bool operator==(const SearchParams&, const SearchParams&) = default;
};

struct SearchReport {
  std::string id;
  SearchParams params;
  std::vector<Finding> hits;
  std::vector<Finding> counterexamples;
  /// Extra records that are neither hits nor counterexamples, e.g. pairs
  /// whose answer changes under the first twist.
  std::vector<Finding> observations;
  std::uint64_t scanned = 0;
  double elapsed_seconds = 0.0;
  std::string tool_version;

  bool has_counterexamples() const noexcept { return !counterexamples.empty(); }
};

struct SearchOptions {
  /// Worker threads; 0 means hardware concurrency.
  unsigned jobs = 1;
};

/// p-regular lambda of d with m(p lambda) = p m(lambda).
SearchReport find_twist_commuting(Part d, Part p, const SearchOptions& options = {});

/// Among the twist-commuting lambda, those with m(p^2 lambda) != p m(p lambda)
/// are counterexamples.
SearchReport check_twist_persistence(Part d, Part p, const SearchOptions& options = {});

/// p-regular lambda of d for which every part of m(p lambda) is divisible by p;
/// the certificate carries tau = m(p lambda) / p.
SearchReport find_p_image(Part d, Part p, const SearchOptions& options = {});

/// For 1 <= a < b <= max_b, tests whether m(p^b lambda) - m(p^a lambda) is a
/// partition divisible by p^a. Hits are the witnessing pairs. Throws Overflow
/// when p^max_b |lambda| does not fit in 64 bits.
SearchReport multi_twist_scan(const Partition& lambda, Part p, unsigned max_b);

/// All ordered pairs of two-part partitions of d. Counterexamples fail
/// ks_twist_stable; observations are pairs where Ext^1 at (lambda, mu)
/// differs from Ext^1 at (p lambda, p mu). Hits have nonzero Ext^1 after one
/// twist. Requires p > 2.
SearchReport ks_stability_scan(Part d, Part p, const SearchOptions& options = {});

/// One hit per block of partitions of d.
SearchReport census(Part d, Part p);

}  // namespace twistlab
