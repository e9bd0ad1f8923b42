#include "twistlab/criteria.hpp"

#include <limits>

#include "twistlab/error.hpp"

namespace twistlab {

namespace {

std::vector<Part> base_p_digits(Part n, Part p) {
  std::vector<Part> digits;
  while (n > 0) {
    digits.push_back(n % p);
    n /= p;
  }
  return digits;
}

// x < p^e without forming p^e.
bool less_than_power(Part x, Part p, unsigned e) {
  for (unsigned i = 0; i < e; ++i) {
    if (x == 0) return true;
    x /= p;
  }
  return x == 0;
}

// p^e if it fits, otherwise nullopt.
std::optional<Part> power_if_fits(Part p, unsigned e) {
  Part out = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (out > std::numeric_limits<Part>::max() / p) return std::nullopt;
    out *= p;
  }
  return out;
}

void require_two_part(const Partition& lambda) {
  if (lambda.length() > 2) throw Error(ErrorCode::NotTwoPart, lambda.to_exponent_string());
}

}  // namespace

KsResult ks_ext1(const TwoPartExtQuery& query) {
  const Part p = query.p;
  if (p <= 2) throw Error(ErrorCode::PrimeTooSmall, "Kleshchev-Sheth criterion needs p > 2");
  require_two_part(query.lambda);
  require_two_part(query.mu);
  if (query.lambda.size() != query.mu.size()) {
    throw Error(ErrorCode::EqualSizeRequired,
                query.lambda.to_string() + " vs " + query.mu.to_string());
  }
  KsResult result;
  Part v = query.lambda[0], u = query.lambda[1];
  Part r = query.mu[1];
  if (u < r) {
    v = query.mu[0];
    u = query.mu[1];
    r = query.lambda[1];
    result.swapped = true;
  }
  result.digits = base_p_digits(v - u + 1, p);
  const Part gap = u - r;
  for (unsigned i = 0; i < result.digits.size(); ++i) {
    Part a = result.digits[i];
    if (a == 0) continue;
    auto scale = power_if_fits(p, i);
    if (!scale || (p - a) > std::numeric_limits<Part>::max() / *scale) break;
    if (gap != (p - a) * *scale) continue;
    Part next = i + 1 < result.digits.size() ? result.digits[i + 1] : 0;
    if (next < p - 1 || less_than_power(u, p, i + 2)) {
      result.dimension = 1;
      result.witness = i;
      break;
    }
  }
  return result;
}

bool ks_twist_stable(Part p, const Partition& lambda, const Partition& mu) {
  auto once = ks_ext1({p, scale(lambda, p), scale(mu, p)});
  auto twice = ks_ext1({p, scale(lambda, p * p), scale(mu, p * p)});
  return once.dimension == twice.dimension;
}

Partition MurphyHook::shape() const {
  if (d < 2 * r) {
    throw Error(ErrorCode::HypothesisViolated,
                "d=" + std::to_string(d) + " < 2r=" + std::to_string(2 * r));
  }
  std::vector<Part> parts{d - r};
  parts.insert(parts.end(), r, 1);
  return Partition(std::move(parts));
}

namespace {

void require_hook_hypothesis(const MurphyHook& hook) {
  if (hook.d < 2 * hook.r) {
    throw Error(ErrorCode::HypothesisViolated,
                "d=" + std::to_string(hook.d) + " < 2r=" + std::to_string(2 * hook.r));
  }
}

}  // namespace

unsigned murphy_level(Part r) {
  unsigned level = 0;
  while (r > 0) {
    r >>= 1;
    ++level;
  }
  return level;
}

Part murphy_end_dim(const MurphyHook& hook) {
  require_hook_hypothesis(hook);
  if (hook.d % 2 == 0) return 1;
  if (hook.r == 0) return 1;  // trivial module; the r/2 formula is not meant for it
  if (hook.r % 2 == 0) return hook.r / 2;
  return (hook.r + 1) / 2;
}

bool murphy_indecomposable(const MurphyHook& hook) {
  require_hook_hypothesis(hook);
  if (hook.d % 2 == 0 || hook.r == 0) return true;
  Part modulus = Part{1} << murphy_level(hook.r);
  return (hook.d - hook.r - 1) % modulus == 0;
}

bool murphy_twist_invariance(Part d, Part r) {
  MurphyHook hook{d, r};
  bool dims = murphy_end_dim(hook) == murphy_end_dim({d + 2, r});
  Part shift = Part{1} << murphy_level(r);
  bool indecomposability = murphy_indecomposable(hook) == murphy_indecomposable({d + shift, r});
  return dims && indecomposability;
}

H0Result h0_specht(const Partition& lambda, Part p) {
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "p must be at least 2");
  H0Result result;
  for (std::size_t i = 0; i + 1 < lambda.length(); ++i) {
    unsigned level = l_p(lambda[i + 1], p);
    auto modulus = power_if_fits(p, level);
    if (!modulus) throw Error(ErrorCode::Overflow, "p^l_p too large");
    if ((lambda[i] + 1) % *modulus != 0) {
      result.nonzero = false;
      result.failed_row = i;
      result.modulus = *modulus;
      break;
    }
  }
  return result;
}

bool h0_specht_nonzero(const Partition& lambda, Part p) { return h0_specht(lambda, p).nonzero; }

bool h0_prepend_stable(const Partition& lambda, Part a, Part p) {
  if (a < lambda.first()) {
    throw Error(ErrorCode::InvalidArgument, "new first row must be at least lambda_1");
  }
  auto modulus = power_if_fits(p, l_p(lambda.first(), p));
  if (!modulus) throw Error(ErrorCode::Overflow, "p^l_p too large");
  if ((a + 1) % *modulus != 0) {
    throw Error(ErrorCode::CongruenceViolated,
                std::to_string(a) + " is not -1 mod " + std::to_string(*modulus));
  }
  std::vector<Part> extended{a};
  extended.insert(extended.end(), lambda.begin(), lambda.end());
  return h0_specht_nonzero(lambda, p) == h0_specht_nonzero(Partition(std::move(extended)), p);
}

}  // namespace twistlab
