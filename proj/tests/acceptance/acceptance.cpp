// Runs every acceptance criterion once and prints one PASS/FAIL line each.
// Exit status is the number of failed criteria (capped at 125).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "twistlab/abacus.hpp"
#include "twistlab/criteria.hpp"
#include "twistlab/error.hpp"
#include "twistlab/homology.hpp"
#include "twistlab/mullineux.hpp"
#include "twistlab/report.hpp"
#include "twistlab/search.hpp"
#include "twistlab/specht.hpp"

using namespace twistlab;

namespace {

struct Outcome {
  bool passed = true;
  std::string note;
};

// Records the first few failures of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_++ < 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  Outcome outcome() const {
    if (failures_ == 0) return {true, ""};
    std::string note = std::to_string(failures_) + " failure(s): " + notes_;
    return {false, note};
  }

 private:
  std::size_t failures_ = 0;
  std::string notes_;
};

Partition repeated(std::vector<std::pair<Part, std::size_t>> runs) {
  std::vector<Part> parts;
  for (auto [value, count] : runs) parts.insert(parts.end(), count, value);
  return Partition(parts);
}

std::string show(const Partition& lambda) { return "(" + lambda.to_string() + ")"; }

Outcome mullineux_values() {
  Check c;
  c.expect(mullineux_map({15, 15}, 5) == Partition{10, 10, 10}, "m(15,15)");
  c.expect(conjugate(mullineux_map(scale({4, 2, 1}, 5), 5)) == Partition{12, 9, 6, 4, 4}, "m(5(4,2,1))'");
  c.expect(mullineux_map({30, 30, 20}, 5) == Partition{20, 20, 20, 5, 5, 5, 5}, "m(30,30,20)");
  c.expect(tau(20, 5) == Partition{4, 4, 4, 4, 4}, "tau_20");
  c.expect(tau(10, 5) == Partition{4, 4, 2}, "tau_10");
  c.expect(tau(5, 5) == Partition{4, 1}, "tau_5");
  return c.outcome();
}

Outcome involution() {
  Check c;
  std::size_t cases = 0;
  for (Part p : {2, 3, 5, 7}) {
    for (Part d = 0; d <= 25; ++d) {
      for_each_partition(d, PartitionFilter::p_regular(p), [&](const Partition& lambda) {
        ++cases;
        Partition image = mullineux_map(lambda, p);
        c.expect(is_p_regular(image, p), "irregular image of " + show(lambda));
        c.expect(mullineux_map(image, p) == lambda, "m(m" + show(lambda) + ")");
        return true;
      });
    }
  }
  auto out = c.outcome();
  if (out.passed) out.note = std::to_string(cases) + " cases";
  return out;
}

MullineuxSymbol distinct_pattern(const Partition& lambda, Part p, Part f) {
  MullineuxSymbol out{p, {}};
  for (std::size_t k = lambda.length(); k >= 1; --k) {
    for (Part t = 0; t < lambda[k - 1] - lambda[k]; ++t) out.columns.push_back({k * p, k * f});
  }
  return out;
}

Outcome identity_suites() {
  Check c;
  for (Part p : {3, 5}) {
    for (Part d = 1; d <= 15; ++d) {
      for (const auto& lambda : enumerate_partitions(d, PartitionFilter::distinct())) {
        const std::string tag = show(lambda) + " p=" + std::to_string(p);
        c.expect(verify_hat_identity(lambda, p), "hat " + tag);
        for (const Partition& mu : {scale(lambda, p - 1), hat(lambda, p)}) {
          c.expect(mullineux_map(scale(mu, p), p) == scale(mullineux_map(mu, p), p), "twist " + tag);
        }
        Partition twisted = scale(lambda, p);
        Partition image = mullineux_map(twisted, p);
        Partition sum;
        for (Part x : lambda) sum = add(sum, tau(p * x, p));
        c.expect(conjugate(image) == sum, "tau sum " + tag);
        try {
          c.expect(steinberg_difference(lambda, p) == scale(hat(lambda, p), p), "steinberg " + tag);
        } catch (const Error& e) {
          c.expect(false, "steinberg " + tag + ": " + e.what());
        }
        c.expect(mullineux_symbol(image, p) == distinct_pattern(lambda, p, p - 1), "symbol " + tag);
      }
    }
  }
  return c.outcome();
}

Outcome many_twists() {
  Check c;
  const Part p = 7;
  const Partition lambda{29, 29, 24, 4, 4, 3, 3, 3, 2, 1};
  std::vector<Partition> images;
  Part factor = 1;
  for (int b = 0; b <= 5; ++b) {
    images.push_back(mullineux_map(scale(lambda, factor), p));
    factor *= p;
  }
  Partition expected =
      scale(repeated({{123840, 5}, {9600, 5}, {5400, 4}, {3840, 5}, {800, 6}, {400, 6}}), p);
  try {
    Partition difference = subtract(images[5], images[1]);
    c.expect(difference == expected, "m(7^5 l) - m(7 l) = " + difference.to_exponent_string() +
                                         ", stated " + expected.to_exponent_string());
  } catch (const Error& e) {
    c.expect(false, std::string("m(7^5 l) - m(7 l): ") + e.what());
  }
  for (int x = 1; x < 5; ++x) {
    for (int y = x + 1; y < 5; ++y) {
      bool seven_tau = false;
      try {
        Partition difference = subtract(images[y], images[x]);
        seven_tau = std::all_of(difference.begin(), difference.end(), [](Part v) { return v % 7 == 0; });
      } catch (const Error&) {
      }
      c.expect(!seven_tau, "(" + std::to_string(x) + "," + std::to_string(y) + ") is a 7-multiple");
    }
  }
  return c.outcome();
}

std::vector<Partition> hit_subjects(const SearchReport& report) {
  std::vector<Partition> out;
  for (const auto& hit : report.hits) out.push_back(hit.subjects.at(0));
  std::sort(out.begin(), out.end());
  return out;
}

Outcome fixed_points() {
  Check c;
  std::vector<Partition> expected{{20}, {16, 4}, {12, 8}, {5, 5, 5, 5}, {4, 4, 4, 4, 1, 1, 1, 1},
                                  {3, 3, 3, 3, 2, 2, 2, 2}};
  std::sort(expected.begin(), expected.end());
  c.expect(hit_subjects(find_twist_commuting(20, 5)) == expected, "d=20 hit set");
  auto small = hit_subjects(find_twist_commuting(6, 5));
  c.expect(std::find(small.begin(), small.end(), Partition{3, 3}) != small.end(), "(3,3) at d=6");
  return c.outcome();
}

Outcome kleshchev_sheth() {
  Check c;
  c.expect(ks_ext1({3, {20, 9}, {26, 3}}).dimension == 1, "(20,9)/(26,3)");
  c.expect(ks_ext1({3, {60, 27}, {78, 9}}).dimension == 0, "(60,27)/(78,9)");
  for (Part p : {3, 5}) {
    for (Part d = 1; d <= 40; ++d) {
      c.expect(!ks_stability_scan(d, p).has_counterexamples(),
               "d=" + std::to_string(d) + " p=" + std::to_string(p));
    }
  }
  return c.outcome();
}

Outcome murphy() {
  Check c;
  c.expect(murphy_end_dim({9, 2}) == 1, "formula (9,2)");
  c.expect(murphy_end_dim({9, 3}) == 2, "formula (9,3)");
  c.expect(murphy_end_dim({9, 4}) == 2, "formula (9,4)");
  for (Part r = 0; r <= 4; ++r) c.expect(murphy_end_dim({8, r}) == 1, "formula (8," + std::to_string(r) + ")");
  for (Part d : {8, 9, 11, 13}) {
    for (Part r = 0; r <= 4 && 2 * r <= d; ++r) {
      const std::string tag = "(" + std::to_string(d) + "," + std::to_string(r) + ")";
      SpechtModule s = build_specht(MurphyHook{d, r}.shape(), 2);
      std::size_t end = hom_dim(s, s);
      c.expect(end == murphy_end_dim({d, r}), "End " + tag + " = " + std::to_string(end) +
                                                  " vs formula " + std::to_string(murphy_end_dim({d, r})));
      bool split = is_decomposable(s).decomposable;
      c.expect(split != murphy_indecomposable({d, r}),
               "decomposable " + tag + " = " + (split ? "true" : "false"));
    }
  }
  return c.outcome();
}

Outcome dodge_fayers() {
  Check c;
  auto result = is_decomposable(build_specht({4, 3, 1, 1}, 2));
  c.expect(result.decomposable, "not split");
  c.expect(result.method == DecompositionResult::Method::Enumerated && result.idempotent.has_value(),
           "no exact idempotent");
  if (result.idempotent) {
    const auto& e = *result.idempotent;
    c.expect(e * e == e && !e.is_zero() && !e.is_identity(), "idempotent is trivial");
  }
  return c.outcome();
}

Outcome gap_line() {
  Check c;
  c.expect(hom_dim(build_specht({7, 1, 1}, 3), build_specht({3, 1, 1, 1, 1, 1, 1}, 3)) == 0, "hom != 0");
  return c.outcome();
}

Outcome h0_coherence() {
  Check c;
  SpechtOptions unbounded;
  unbounded.max_tabloids = std::numeric_limits<std::uint64_t>::max();
  for (Part p : {2, 3, 5}) {
    for (Part d = 1; d <= 10; ++d) {
      for (const auto& lambda : enumerate_partitions(d)) {
        bool fixed = invariants_dim(build_specht(lambda, p, unbounded)) > 0;
        c.expect(fixed == h0_specht_nonzero(lambda, p), "H0 " + show(lambda) + " p=" + std::to_string(p));
      }
    }
  }
  std::mt19937_64 rng(0x4830);
  const std::vector<Part> primes{2, 3, 5};
  for (int sample = 0; sample < 100; ++sample) {
    Part p = primes[rng() % primes.size()];
    auto shapes = enumerate_partitions(1 + rng() % 12);
    const Partition& lambda = shapes[rng() % shapes.size()];
    Part modulus = checked_pow(p, l_p(lambda.first(), p));
    Part a = modulus - 1 + modulus * (rng() % 4);
    while (a < lambda.first()) a += modulus;
    c.expect(h0_prepend_stable(lambda, a, p), "prepend " + std::to_string(a) + " to " + show(lambda));
  }
  for (Part p : {2, 3, 5, 7}) {
    for (Part d = 1; d <= 20; ++d) {
      for (const auto& lambda : enumerate_partitions(d)) {
        if (lambda.length() > 1) c.expect(!h0_specht_nonzero(scale(lambda, p), p), "p" + show(lambda));
      }
    }
  }
  return c.outcome();
}

Outcome abacus() {
  Check c;
  for (Part p : {2, 3, 5, 7}) {
    for (Part d = 0; d <= 12; ++d) {
      for (const auto& lambda : enumerate_partitions(d)) {
        BlockData block = p_core(lambda, p);
        c.expect(d == block.core.size() + p * block.weight, "size " + show(lambda));
        auto stripped = oracle::strip_hooks(lambda, p);
        c.expect(stripped.core == block.core && stripped.weight == block.weight, "strip " + show(lambda));
      }
    }
  }
  return c.outcome();
}

Outcome determinism() {
  Check c;
  auto twice = [&](const std::string& name, const std::function<SearchReport()>& run) {
    c.expect(report_body_json(run()) == report_body_json(run()), name);
  };
  twice("fixed-points", [] { return find_twist_commuting(18, 5, {4}); });
  twice("persistence", [] { return check_twist_persistence(18, 3, {4}); });
  twice("p-image", [] { return find_p_image(16, 5, {4}); });
  twice("multi-twist", [] { return multi_twist_scan({4, 2, 1}, 5, 3); });
  twice("ks-stability", [] { return ks_stability_scan(29, 3, {4}); });
  twice("census", [] { return census(12, 3); });
  c.expect(report_body_json(check_twist_persistence(18, 3, {1})) ==
               report_body_json(check_twist_persistence(18, 3, {4})),
           "persistence jobs=1 vs jobs=4");
  return c.outcome();
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Mullineux values", 1.0, mullineux_values},
      {2, "involution and regularity, d <= 25", 30.0, involution},
      {3, "distinct-parts identity suites, d <= 15", 60.0, identity_suites},
      {4, "seven-fold twist example", 5.0, many_twists},
      {5, "twist-commuting classification", 10.0, fixed_points},
      {6, "two-part Ext^1 criterion and stability scan", 60.0, kleshchev_sheth},
      {7, "hook Specht modules against linear algebra", 600.0, murphy},
      {8, "S^(4,3,1,1) decomposable at p = 2", 600.0, dodge_fayers},
      {9, "Hom(S^(7,1,1), S^(3,1^6)) = 0 at p = 3", 300.0, gap_line},
      {10, "H^0 criterion coherence", 600.0, h0_coherence},
      {11, "abacus cores and weights", 30.0, abacus},
      {12, "search report determinism", 600.0, determinism},
  };
  int failed = 0;
  for (const auto& criterion : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > criterion.limit_seconds) {
      outcome.passed = false;
      std::ostringstream note;
      note << "over time limit " << criterion.limit_seconds << " s";
      outcome.note += (outcome.note.empty() ? "" : "; ") + note.str();
    }
    if (!outcome.passed) ++failed;
    std::printf("[%s] %2d %s (%.2f s / %.0f s)%s%s\n", outcome.passed ? "PASS" : "FAIL", criterion.number,
                criterion.name, seconds, criterion.limit_seconds, outcome.note.empty() ? "" : ": ",
                outcome.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return std::min(failed, 125);
}
