#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "output.hpp"
#include "twistlab/abacus.hpp"
#include "twistlab/cli.hpp"
#include "twistlab/criteria.hpp"
#include "twistlab/error.hpp"
#include "twistlab/homology.hpp"
#include "twistlab/mullineux.hpp"
#include "twistlab/search.hpp"

namespace twistlab::cli {

namespace {

// Thrown for fixtures that parse as JSON but are missing fields; carries the
// fixture id so the caller can find its line.
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const Json& field(const Json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    throw ShapeError(std::string("missing field '") + key + "'");
  }
  return object.at(key);
}

Part number(const Json& object, const char* key) {
  const Json& value = field(object, key);
  if (!value.is_number_unsigned()) throw ShapeError(std::string("'") + key + "' must be unsigned");
  return value.get<Part>();
}

Partition partition(const Json& object, const char* key) {
  return partition_from_json(field(object, key));
}

std::string text(const Json& object, const char* key) {
  const Json& value = field(object, key);
  if (!value.is_string()) throw ShapeError(std::string("'") + key + "' must be a string");
  return value.get<std::string>();
}

std::string op_of(const Json& in, const char* fallback) {
  return in.contains("op") ? text(in, "op") : std::string(fallback);
}

Json certificate_json(const CertificateValue& value) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Partition>) {
          return to_json(v);
        } else if constexpr (std::is_same_v<T, std::vector<Partition>>) {
          Json list = Json::array();
          for (const auto& lambda : v) list.push_back(to_json(lambda));
          return list;
        } else {
          return Json(v);
        }
      },
      value);
}

Json eval_partition(const Json& in) {
  std::string op = text(in, "op");
  if (op == "conjugate") return to_json(conjugate(partition(in, "lambda")));
  if (op == "scale") return to_json(scale(partition(in, "lambda"), number(in, "c")));
  if (op == "hat") return to_json(hat(partition(in, "lambda"), number(in, "p")));
  if (op == "is_p_restricted") return is_p_restricted(partition(in, "lambda"), number(in, "p"));
  if (op == "add") {
    Partition total;
    for (const auto& term : field(in, "terms")) total = add(total, partition_from_json(term));
    return to_json(total);
  }
  throw ShapeError("unknown partition op '" + op + "'");
}

Json eval_abacus(const Json& in) {
  std::string op = text(in, "op");
  Partition lambda = partition(in, "lambda");
  Part p = number(in, "p");
  if (op == "p_by_p") return is_p_by_p(lambda, p);
  if (op == "core") {
    BlockData block = p_core(lambda, p);
    return {{"core", to_json(block.core)}, {"weight", block.weight}};
  }
  throw ShapeError("unknown abacus op '" + op + "'");
}

Json eval_mull(const Json& in) {
  std::string op = op_of(in, "map");
  Partition lambda = partition(in, "lambda");
  Part p = number(in, "p");
  if (op == "map") return to_json(mullineux_map(lambda, p));
  if (op == "conjugate") return to_json(conjugate(mullineux_map(lambda, p)));
  if (op == "steinberg") return to_json(steinberg_difference(lambda, p));
  if (op == "symbol") return symbol_json(mullineux_symbol(lambda, p));
  throw ShapeError("unknown mull op '" + op + "'");
}

Json eval_ks(const Json& in) {
  std::string op = op_of(in, "ext");
  Part p = number(in, "p");
  Partition lambda = partition(in, "lambda");
  Partition mu = partition(in, "mu");
  if (op == "ext") return ks_ext1({p, lambda, mu}).dimension;
  if (op == "stable") return ks_twist_stable(p, lambda, mu);
  throw ShapeError("unknown ks op '" + op + "'");
}

Json eval_murphy(const Json& in) {
  MurphyHook hook{number(in, "d"), number(in, "r")};
  std::string quantity = text(in, "quantity");
  if (quantity == "end_dim") return murphy_end_dim(hook);
  if (quantity == "indecomposable") return murphy_indecomposable(hook);
  throw ShapeError("unknown murphy quantity '" + quantity + "'");
}

Json eval_specht(const Json& in) {
  std::string op = text(in, "op");
  Part p = number(in, "p");
  SpechtModule module = build_specht(partition(in, "lambda"), p);
  if (op == "hom") return hom_dim(module, build_specht(partition(in, "mu"), p));
  if (op == "end_dim") return end_ring(module).size();
  if (op == "decomposable") return is_decomposable(module).decomposable;
  if (op == "invariants") return invariants_dim(module);
  throw ShapeError("unknown specht op '" + op + "'");
}

SearchReport run_search(const Json& in) {
  std::string op = text(in, "op");
  Part p = number(in, "p");
  if (op == "fixed-points") return find_twist_commuting(number(in, "d"), p);
  if (op == "persistence") return check_twist_persistence(number(in, "d"), p);
  if (op == "p-image") return find_p_image(number(in, "d"), p);
  if (op == "ks-stability") return ks_stability_scan(number(in, "d"), p);
  if (op == "census") return census(number(in, "d"), p);
  if (op == "multi-twist") {
    return multi_twist_scan(partition(in, "lambda"), p, static_cast<unsigned>(number(in, "max_b")));
  }
  throw ShapeError("unknown search op '" + op + "'");
}

std::uint64_t certificate_number(const Finding& finding, const char* key) {
  const CertificateValue* value = finding.find(key);
  return value ? std::get<std::uint64_t>(*value) : 0;
}

Json eval_search(const Json& in) {
  SearchReport report = run_search(in);
  std::string quantity = text(in, "quantity");
  if (quantity == "hit_subjects") {
    Json list = Json::array();
    for (const auto& hit : report.hits) list.push_back(to_json(hit.subjects.front()));
    return list;
  }
  if (quantity == "counterexamples") return report.counterexamples.size();
  if (quantity == "hit_certificate") {
    Partition subject = partition(in, "subject");
    std::string key = text(in, "key");
    for (const auto& hit : report.hits) {
      if (hit.subjects.front() != subject) continue;
      const CertificateValue* value = hit.find(key);
      return value ? certificate_json(*value) : Json(nullptr);
    }
    return nullptr;
  }
  if (quantity == "witnesses") {
    Json list = Json::array();
    for (const auto& hit : report.hits) {
      list.push_back({certificate_number(hit, "a"), certificate_number(hit, "b")});
    }
    return list;
  }
  if (quantity == "witness_certificate") {
    Part a = number(in, "a");
    Part b = number(in, "b");
    std::string key = text(in, "key");
    for (const auto& hit : report.hits) {
      if (certificate_number(hit, "a") != a || certificate_number(hit, "b") != b) continue;
      const CertificateValue* value = hit.find(key);
      return value ? certificate_json(*value) : Json(nullptr);
    }
    return nullptr;
  }
  if (quantity == "observation_contains") {
    std::vector<Partition> subjects;
    for (const auto& s : field(in, "subjects")) subjects.push_back(partition_from_json(s));
    return std::any_of(report.observations.begin(), report.observations.end(),
                       [&](const Finding& f) { return f.subjects == subjects; });
  }
  throw ShapeError("unknown search quantity '" + quantity + "'");
}

Json eval_cli(const Json& in) {
  std::vector<std::string> args;
  for (const auto& arg : field(in, "args")) args.push_back(arg.get<std::string>());
  std::ostringstream out;
  std::ostringstream err;
  int code = run_command(args, out, err);
  Json result = {{"exit", code}};
  if (in.contains("key") && code == kExitOk) {
    result[text(in, "key")] = Json::parse(out.str()).at(text(in, "key"));
  }
  return result;
}

Json evaluate(const std::string& kind, const Json& in) {
  if (kind == "partition") return eval_partition(in);
  if (kind == "abacus") return eval_abacus(in);
  if (kind == "mull") return eval_mull(in);
  if (kind == "tau") return to_json(tau(number(in, "n"), number(in, "p")));
  if (kind == "ks") return eval_ks(in);
  if (kind == "murphy") return eval_murphy(in);
  if (kind == "h0") return h0_specht_nonzero(partition(in, "lambda"), number(in, "p"));
  if (kind == "specht") return eval_specht(in);
  if (kind == "search") return eval_search(in);
  if (kind == "cli") return eval_cli(in);
  throw ShapeError("unknown kind '" + kind + "'");
}

std::size_t line_of(const std::string& source, std::size_t offset) {
  offset = std::min(offset, source.size());
  return 1 + static_cast<std::size_t>(std::count(source.begin(), source.begin() + offset, '\n'));
}

// Line of the given occurrence (0-based) of the quoted id.
std::size_t line_of_id(const std::string& source, const std::string& id, int occurrence = 0) {
  const std::string quoted = '"' + id + '"';
  auto at = source.find(quoted);
  while (occurrence-- > 0 && at != std::string::npos) at = source.find(quoted, at + 1);
  return at == std::string::npos ? 0 : line_of(source, at);
}

FixtureOutcome run_fixture(const Json& fixture) {
  FixtureOutcome outcome;
  outcome.id = text(fixture, "id");
  const std::string kind = text(fixture, "kind");
  const Json& inputs = field(fixture, "inputs");
  const bool wants_error = fixture.contains("expected_error");
  if (!wants_error && !fixture.contains("expected")) throw ShapeError("missing field 'expected'");
  try {
    Json actual = evaluate(kind, inputs);
    if (wants_error) {
      outcome.detail = "expected error " + text(fixture, "expected_error") + ", got " + actual.dump();
      return outcome;
    }
    const Json& expected = fixture.at("expected");
    outcome.passed = actual == expected;
    if (!outcome.passed) outcome.detail = "expected " + expected.dump() + ", got " + actual.dump();
  } catch (const Error& e) {
    std::string code(to_string(e.code()));
    outcome.passed = wants_error && code == text(fixture, "expected_error");
    if (!outcome.passed) outcome.detail = std::string("error: ") + e.what();
  }
  return outcome;
}

}  // namespace

FixtureParseError::FixtureParseError(std::size_t line, const std::string& message)
    : std::runtime_error(message), line_(line) {}

std::size_t FixtureSummary::failed() const {
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) { return !o.passed; }));
}

const char* default_fixtures_path() noexcept { return TWISTLAB_FIXTURES_PATH; }

FixtureSummary verify_fixtures_text(const std::string& source) {
  FixtureSummary summary;
  if (source.find_first_not_of(" \t\r\n") == std::string::npos) return summary;

  Json document;
  try {
    document = Json::parse(source);
  } catch (const Json::parse_error& e) {
    throw FixtureParseError(line_of(source, e.byte == 0 ? 0 : e.byte - 1), e.what());
  }
  const Json* list = &document;
  if (document.is_object()) {
    if (!document.contains("fixtures")) throw FixtureParseError(1, "missing 'fixtures' array");
    list = &document.at("fixtures");
  }
  if (!list->is_array()) throw FixtureParseError(1, "fixtures must be an array");

  std::set<std::string> seen;
  for (const auto& fixture : *list) {
    std::string id = fixture.is_object() && fixture.contains("id") && fixture["id"].is_string()
                         ? fixture["id"].get<std::string>()
                         : std::string();
    if (id.empty()) throw FixtureParseError(0, "fixture without a string id");
    if (!seen.insert(id).second) {
      throw FixtureParseError(line_of_id(source, id, 1), "duplicate id '" + id + "'");
    }
    try {
      summary.outcomes.push_back(run_fixture(fixture));
    } catch (const ShapeError& e) {
      throw FixtureParseError(line_of_id(source, id), id + ": " + e.what());
    }
  }
  return summary;
}

FixtureSummary verify_fixtures(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return verify_fixtures_text(buffer.str());
}

}  // namespace twistlab::cli
