#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitCounterexample = 2;
inline constexpr int kExitUsage = 64;

/// args excludes the program name. Results go to out, diagnostics to err.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct FixtureOutcome {
  std::string id;
  bool passed = false;
  std::string detail;
};

struct FixtureSummary {
  std::vector<FixtureOutcome> outcomes;

  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
};

class FixtureParseError : public std::runtime_error {
 public:
  FixtureParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An empty (or whitespace-only) file is a valid, empty fixture set.
FixtureSummary verify_fixtures(const std::string& path);
FixtureSummary verify_fixtures_text(const std::string& text);

const char* default_fixtures_path() noexcept;

}  // namespace twistlab::cli
