#include "twistlab/search.hpp"

#include <atomic>
#include <chrono>
#include <limits>
#include <thread>

#include "twistlab/abacus.hpp"
#include "twistlab/criteria.hpp"
#include "twistlab/error.hpp"
#include "twistlab/mullineux.hpp"
#include "twistlab/report.hpp"

namespace twistlab {

const CertificateValue* Finding::find(const std::string& key) const {
  for (const auto& field : certificate) {
    if (field.key == key) return &field.value;
  }
  return nullptr;
}

namespace {

struct Shard {
  std::vector<Finding> hits;
  std::vector<Finding> counterexamples;
  std::vector<Finding> observations;
  std::uint64_t scanned = 0;
};

using Clock = std::chrono::steady_clock;

SearchReport start(std::string id, Part p, std::optional<Part> d) {
  SearchReport report;
  report.id = std::move(id);
  report.params.p = p;
  report.params.d = d;
  report.tool_version = version();
  return report;
}

void finish(SearchReport& report, Clock::time_point began) {
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - began).count();
}

void require_prime_like(Part p) {
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "p must be at least 2");
}

// Shards are the partitions with a given first part. Workers take shards
// from a counter; the merge walks shards in enumeration order (largest first
// part first), so the report does not depend on scheduling.
template <class Visit>
void sharded_scan(Part d, const PartitionFilter& filter, unsigned jobs, SearchReport& report,
                  Visit visit) {
  std::vector<Shard> shards(d == 0 ? 1 : d);
  auto run_shard = [&](std::size_t index) {
    Shard& shard = shards[index];
    if (d == 0) {
      Partition empty;
      if (filter.accepts(empty)) {
        ++shard.scanned;
        visit(empty, shard);
      }
      return;
    }
    const Part first = d - index;
    for (const auto& lambda : enumerate_partitions_with_first(d, first, filter)) {
      ++shard.scanned;
      visit(lambda, shard);
    }
  };

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, shards.size()));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < shards.size(); ++i) run_shard(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < shards.size(); i = next++) run_shard(i);
        } catch (...) {
          errors[w] = std::current_exception();
          next = shards.size();
        }
      });
    }
    for (auto& worker : workers) worker.join();
    for (auto& error : errors) {
      if (error) std::rethrow_exception(error);
    }
  }

  for (auto& shard : shards) {
    report.scanned += shard.scanned;
    for (auto& f : shard.hits) report.hits.push_back(std::move(f));
    for (auto& f : shard.counterexamples) report.counterexamples.push_back(std::move(f));
    for (auto& f : shard.observations) report.observations.push_back(std::move(f));
  }
}

}  // namespace

SearchReport find_twist_commuting(Part d, Part p, const SearchOptions& options) {
  require_prime_like(p);
  auto began = Clock::now();
  SearchReport report = start("fixed-points", p, d);
  sharded_scan(d, PartitionFilter::p_regular(p), options.jobs, report,
               [p](const Partition& lambda, Shard& shard) {
                 Partition image = mullineux_map(lambda, p);
                 Partition twisted_image = mullineux_map(scale(lambda, p), p);
                 if (twisted_image == scale(image, p)) {
                   shard.hits.push_back(
                       {{lambda}, {{"m", image}, {"m_twisted", twisted_image}}});
                 }
               });
  finish(report, began);
  return report;
}

SearchReport check_twist_persistence(Part d, Part p, const SearchOptions& options) {
  require_prime_like(p);
  auto began = Clock::now();
  SearchReport report = start("persistence", p, d);
  sharded_scan(d, PartitionFilter::p_regular(p), options.jobs, report,
               [p](const Partition& lambda, Shard& shard) {
                 Partition image = mullineux_map(lambda, p);
                 Partition once = mullineux_map(scale(lambda, p), p);
                 if (once != scale(image, p)) return;
                 Partition twice = mullineux_map(scale(lambda, p * p), p);
                 Finding finding{{lambda},
                                 {{"m", image}, {"m_twisted", once}, {"m_twisted_twice", twice}}};
                 if (twice == scale(once, p)) {
                   shard.hits.push_back(std::move(finding));
                 } else {
                   shard.counterexamples.push_back(std::move(finding));
                 }
               });
  finish(report, began);
  return report;
}

SearchReport find_p_image(Part d, Part p, const SearchOptions& options) {
  require_prime_like(p);
  auto began = Clock::now();
  SearchReport report = start("p-image", p, d);
  sharded_scan(d, PartitionFilter::p_regular(p), options.jobs, report,
               [p](const Partition& lambda, Shard& shard) {
                 Partition twisted_image = mullineux_map(scale(lambda, p), p);
                 std::vector<Part> quotient;
                 for (Part part : twisted_image.parts()) {
                   if (part % p != 0) return;
                   quotient.push_back(part / p);
                 }
                 shard.hits.push_back(
                     {{lambda}, {{"m_twisted", twisted_image}, {"tau", Partition(quotient)}}});
               });
  finish(report, began);
  return report;
}

SearchReport multi_twist_scan(const Partition& lambda, Part p, unsigned max_b) {
  require_prime_like(p);
  auto began = Clock::now();
  SearchReport report = start("multi-twist", p, std::nullopt);
  report.params.lambda = lambda;
  report.params.max_b = max_b;

  Part top = checked_pow(p, max_b);
  Part size = lambda.size();
  if (size != 0 && top > std::numeric_limits<Part>::max() / size) {
    throw Error(ErrorCode::Overflow, "p^max_b * |lambda| exceeds 64 bits");
  }

  std::vector<Partition> images(max_b + 1);
  for (unsigned b = 1; b <= max_b; ++b) {
    images[b] = mullineux_map(scale(lambda, checked_pow(p, b)), p);
  }
  for (unsigned a = 1; a <= max_b; ++a) {
    const Part pa = checked_pow(p, a);
    for (unsigned b = a + 1; b <= max_b; ++b) {
      ++report.scanned;
      Finding finding{{},
                      {{"a", std::uint64_t{a}},
                       {"b", std::uint64_t{b}},
                       {"m_a", images[a]},
                       {"m_b", images[b]}}};
      std::optional<Partition> difference;
      try {
        difference = subtract(images[b], images[a]);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NonPartitionDifference) throw;
      }
      finding.certificate.push_back({"difference_is_partition", difference.has_value()});
      if (!difference) {
        report.observations.push_back(std::move(finding));
        continue;
      }
      finding.certificate.push_back({"difference", *difference});
      bool divisible = true;
      std::vector<Part> quotient;
      for (Part part : difference->parts()) {
        if (part % pa != 0) divisible = false;
        quotient.push_back(part / pa);
      }
      finding.certificate.push_back({"divisible", divisible});
      if (divisible) {
        finding.certificate.push_back({"tau", Partition(quotient)});
        report.hits.push_back(std::move(finding));
      } else {
        report.observations.push_back(std::move(finding));
      }
    }
  }
  finish(report, began);
  return report;
}

SearchReport ks_stability_scan(Part d, Part p, const SearchOptions& options) {
  if (p <= 2) throw Error(ErrorCode::PrimeTooSmall, "the two-part criterion needs p > 2");
  auto began = Clock::now();
  SearchReport report = start("ks-stability", p, d);
  const auto all = enumerate_partitions(d, PartitionFilter::two_part());
  sharded_scan(d, PartitionFilter::two_part(), options.jobs, report,
               [p, &all](const Partition& lambda, Shard& shard) {
                 // Each lambda contributes all ordered pairs (lambda, mu); the
                 // counter of the shard is per pair, so undo the per-lambda tick.
                 --shard.scanned;
                 for (const auto& mu : all) {
                   ++shard.scanned;
                   auto plain = ks_ext1({p, lambda, mu}).dimension;
                   auto once = ks_ext1({p, scale(lambda, p), scale(mu, p)}).dimension;
                   Finding finding{{lambda, mu},
                                   {{"ext", std::uint64_t{plain}},
                                    {"ext_twisted", std::uint64_t{once}}}};
                   if (!ks_twist_stable(p, lambda, mu)) {
                     auto twice = ks_ext1({p, scale(lambda, p * p), scale(mu, p * p)}).dimension;
                     Finding broken = finding;
                     broken.certificate.push_back({"ext_twisted_twice", std::uint64_t{twice}});
                     shard.counterexamples.push_back(std::move(broken));
                   }
                   if (plain != once) shard.observations.push_back(finding);
                   if (once != 0) shard.hits.push_back(std::move(finding));
                 }
               });
  finish(report, began);
  return report;
}

SearchReport census(Part d, Part p) {
  require_prime_like(p);
  auto began = Clock::now();
  SearchReport report = start("census", p, d);
  for (auto& block : block_census(d, p)) {
    report.scanned += block.members.size();
    report.hits.push_back({{block.core},
                           {{"weight", std::uint64_t{block.weight}},
                            {"size", std::uint64_t{block.members.size()}},
                            {"members", block.members},
                            {"p_by_p", block.p_by_p_members}}});
  }
  finish(report, began);
  return report;
}

}  // namespace twistlab
