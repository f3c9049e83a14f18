#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "syt/core.hpp"
#include "syt/document.hpp"
#include "syt/oracle.hpp"
#include "syt/qseries.hpp"
#include "syt/recursion.hpp"

namespace syt {

enum class Statistic { Des, Maj, Refined };
enum class Method { Auto, Formula, Recursion, Oracle };

Statistic parse_statistic(std::string_view name);
Method parse_method(std::string_view name);
std::string to_string(Statistic statistic);
std::string to_string(Method method);

/// The requested method has nothing to offer for this shape class.
class UnsupportedMethod : public DomainError {
 public:
  using DomainError::DomainError;
};

struct CommandContext {
  int oracle_cap = kDefaultOracleCap;
  RecurrenceSolver* solver = nullptr;  // shared_solver() when null

  RecurrenceSolver& recurrence() const { return solver ? *solver : shared_solver(); }
};

/// f^lambda as a one-row document (statistic "count").
OutputDocument cmd_count(const Shape& shape);

/// Full distribution of the statistic. `auto` tries the closed form, then
/// the recursion, then the oracle.
OutputDocument cmd_distribution(const Shape& shape, Statistic statistic, Method method,
                                const CommandContext& context = {});

/// Whether `method` can produce `statistic` for `shape` (Auto always can,
/// subject to the oracle cap).
bool method_applies(const Shape& shape, Statistic statistic, Method method);

struct MajGfResult {
  Shape shape;
  QPolynomial gf;
  std::optional<QPolynomial> oracle;  // present when checked

  bool check_failed() const { return oracle && *oracle != gf; }
};

/// Stanley hook formula; with `check`, also the brute-force polynomial.
MajGfResult cmd_maj_gf(const Shape& shape, bool check, const CommandContext& context = {});

std::string render(const MajGfResult& result, Format format);

enum class VerifyFamily { Hook, TwoRow, ThreeRowOne, All };

VerifyFamily parse_family(std::string_view name);
std::string to_string(VerifyFamily family);

struct Mismatch {
  std::string comparison;
  std::string params;
  std::string expected;
  std::string actual;
};

struct ComparisonSummary {
  std::string name;
  std::size_t cases = 0;     // shapes or parameter points swept
  std::size_t compared = 0;  // individual values compared
  std::size_t mismatches = 0;
};

struct VerifyReport {
  std::string family;
  int max_cells = 0;
  std::vector<ComparisonSummary> comparisons;
  std::vector<Mismatch> mismatches;
  /// Observations that are not failures, e.g. where a reduction identity
  /// stops holding outside the necessary conditions.
  std::vector<std::string> findings;

  bool passed() const { return mismatches.empty(); }
  std::string to_text() const;
  std::string to_json() const;
};

/// Cross-checks formula, recursion, Stanley and oracle on every shape of
/// the family with at most `max_cells` cells. Throws SizeCapExceeded when
/// max_cells is above the oracle's hard limit.
VerifyReport cmd_verify(VerifyFamily family, int max_cells, const CommandContext& context = {});

}  // namespace syt
