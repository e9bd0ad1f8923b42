#include "twistlab/mullineux.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "twistlab/error.hpp"

namespace twistlab {

Part MullineuxSymbol::size() const {
  Part total = 0;
  for (const auto& column : columns) total += column.rim;
  return total;
}

std::string MullineuxSymbol::to_string() const {
  std::ostringstream top;
  std::ostringstream bottom;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) {
      top << ',';
      bottom << ',';
    }
    top << columns[i].rim;
    bottom << columns[i].rows;
  }
  return "((" + top.str() + ");(" + bottom.str() + "))";
}

RimRemoval remove_p_rim(const Partition& lambda, Part p) {
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "p must be at least 2");
  if (lambda.empty()) throw Error(ErrorCode::InvalidArgument, "cannot remove a rim from the empty partition");
  const std::size_t n = lambda.length();
  std::vector<Part> rows(lambda.begin(), lambda.end());
  Part budget = p;
  Part removed = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Part offered = (j + 1 < n) ? lambda[j] - lambda[j + 1] + 1 : lambda[j];
    Part take = std::min(budget, offered);
    rows[j] -= take;
    removed += take;
    budget = (take == budget) ? p : budget - take;
  }
  // Rows can only empty out at the bottom, so the result is already canonical
  // once trailing zeros are dropped.
  return {Partition(std::move(rows)), removed};
}

MullineuxSymbol mullineux_symbol(const Partition& lambda, Part p) {
  if (!is_p_regular(lambda, p)) {
    throw Error(ErrorCode::NotPRegular, lambda.to_exponent_string() + " at p=" + std::to_string(p));
  }
  MullineuxSymbol symbol{p, {}};
  Partition current = lambda;
  while (!current.empty()) {
    Part rows = current.length();
    auto step = remove_p_rim(current, p);
    symbol.columns.push_back({step.rim, rows});
    current = std::move(step.rest);
  }
  return symbol;
}

MullineuxSymbol transform_symbol(const MullineuxSymbol& symbol) {
  MullineuxSymbol out{symbol.p, {}};
  out.columns.reserve(symbol.columns.size());
  for (const auto& column : symbol.columns) {
    Part eps = (column.rim % symbol.p != 0) ? 1 : 0;
    if (column.rim + eps <= column.rows) {
      throw Error(ErrorCode::InvalidSymbol, "column (" + std::to_string(column.rim) + ";" +
                                                std::to_string(column.rows) + ") has no partner");
    }
    out.columns.push_back({column.rim, column.rim - column.rows + eps});
  }
  return out;
}

namespace {

// Counts the ways (capped at 2) to choose how many nodes each row of nu
// loses so that rim removal from nu takes exactly `rim` nodes and leaves mu.
// A state is (row j, nodes c taken from row j, budget entering row j, nodes
// taken above row j); completions depend only on the state.
class RimInsertion {
 public:
  RimInsertion(const Partition& mu, Part rim, Part rows, Part p)
      : mu_(mu), rim_(rim), rows_(rows), p_(p) {}

  Part count_from_top() {
    Part total = 0;
    for (Part c = 1; c <= p_ && total < 2; ++c) total += count(0, c, p_, 0);
    return std::min<Part>(total, 2);
  }

  std::vector<Part> build() {
    std::vector<Part> nu(rows_);
    Part c = 1;
    while (count(0, c, p_, 0) == 0) ++c;
    Part budget = p_;
    Part used = 0;
    for (std::size_t j = 0; j < rows_; ++j) {
      nu[j] = mu_[j] + c;
      used += c;
      if (j + 1 == rows_) break;
      if (c < budget) {
        budget -= c;
        c = mu_[j] + 1 - mu_[j + 1];
      } else {
        budget = p_;
        Part next = 1;
        while (count(j + 1, next, budget, used) == 0) ++next;
        c = next;
      }
    }
    return nu;
  }

 private:
  struct Key {
    std::size_t row;
    Part taken;
    Part budget;
    Part used;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      std::size_t h = k.row;
      h = h * 0x9E3779B97F4A7C15ULL + k.taken;
      h = h * 0x9E3779B97F4A7C15ULL + k.budget;
      h = h * 0x9E3779B97F4A7C15ULL + k.used;
      return h ^ (h >> 29);
    }
  };

  Part count(std::size_t j, Part c, Part budget, Part used) {
    if (c < 1 || c > budget) return 0;
    Part after = used + c;
    Part rows_below = rows_ - 1 - j;
    if (after + rows_below > rim_) return 0;
    Key key{j, c, budget, used};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Part result = 0;
    if (rows_below == 0) {
      bool closes = (c < budget && mu_[j] == 0) || (c == budget && mu_[j] + c >= budget);
      result = (after == rim_ && closes) ? 1 : 0;
    } else if (c < budget) {
      // Segment continues: row j offered exactly c nodes, which pins row j+1.
      result = count(j + 1, mu_[j] + 1 - mu_[j + 1], budget - c, after);
    } else {
      Part widest = std::min<Part>(p_, mu_[j] - mu_[j + 1] + 1);
      for (Part next = 1; next <= widest && result < 2; ++next) {
        result += count(j + 1, next, p_, after);
      }
      result = std::min<Part>(result, 2);
    }
    memo_.emplace(key, result);
    return result;
  }

  const Partition& mu_;
  Part rim_;
  std::size_t rows_;
  Part p_;
  std::unordered_map<Key, Part, KeyHash> memo_;
};

}  // namespace

Partition insert_p_rim(const Partition& mu, Part rim, Part rows, Part p) {
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "p must be at least 2");
  auto describe = [&] {
    return "rim " + std::to_string(rim) + " on " + std::to_string(rows) + " rows over " +
           mu.to_exponent_string();
  };
  if (rows == 0 || mu.length() > rows || rim < rows) {
    throw Error(ErrorCode::NoInsertion, describe());
  }
  RimInsertion search(mu, rim, rows, p);
  Part solutions = search.count_from_top();
  if (solutions == 0) throw Error(ErrorCode::NoInsertion, describe());
  if (solutions > 1) throw Error(ErrorCode::AmbiguousInsertion, describe());
  Partition nu(search.build());
  auto check = remove_p_rim(nu, p);
  if (check.rim != rim || check.rest != mu) {
    throw Error(ErrorCode::PostconditionFailed, "insertion does not invert removal: " + describe());
  }
  return nu;
}

Partition reconstruct(const MullineuxSymbol& symbol) {
  Partition current;
  for (auto it = symbol.columns.rbegin(); it != symbol.columns.rend(); ++it) {
    current = insert_p_rim(current, it->rim, it->rows, symbol.p);
  }
  return current;
}

Partition mullineux_map(const Partition& lambda, Part p) {
  return reconstruct(transform_symbol(mullineux_symbol(lambda, p)));
}

Partition mullineux_restricted(const Partition& lambda, Part p) {
  if (!is_p_restricted(lambda, p)) {
    throw Error(ErrorCode::NotPRestricted, lambda.to_exponent_string() + " at p=" + std::to_string(p));
  }
  return conjugate(mullineux_map(conjugate(lambda), p));
}

Partition tau(Part n, Part p) {
  if (n == 0) return {};
  return conjugate(mullineux_map(Partition{n}, p));
}

Partition tau_closed_form(Part n, Part p) {
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "p must be at least 2");
  if (n == 0) return {};
  Part parts = (n + p - 2) / (p - 1);
  std::vector<Part> out(parts, p - 1);
  out.back() = n - (p - 1) * (parts - 1);
  return Partition(std::move(out));
}

bool verify_hat_identity(const Partition& lambda, Part p) {
  return mullineux_map(hat(lambda, p), p) == scale(lambda, p - 1);
}

Partition steinberg_difference(const Partition& lambda, Part p) {
  if (!has_distinct_parts(lambda)) {
    throw Error(ErrorCode::NotDistinctParts, lambda.to_exponent_string());
  }
  Partition once = mullineux_map(scale(lambda, p), p);
  Partition twice = mullineux_map(scale(lambda, p * p), p);
  Partition difference = subtract(twice, once);
  if (difference != scale(hat(lambda, p), p)) {
    throw Error(ErrorCode::PostconditionFailed,
                "m(p^2 l) - m(p l) = " + difference.to_exponent_string() + " for " +
                    lambda.to_exponent_string());
  }
  return difference;
}

}  // namespace twistlab
