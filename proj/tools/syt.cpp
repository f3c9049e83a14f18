// syt: descent and major-index statistics of standard Young tableaux.
//
// Exit codes: 0 success, 1 usage error, 2 verification mismatch,
// 3 oracle size-cap refusal.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "syt/commands.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitSizeCap = 3;

struct Options {
  std::string shape;
  std::string family;
  std::string stat = "des";
  std::string method = "auto";
  std::string format = "text";
  std::optional<int> max_cells;
  bool check = false;
  std::string memo_dump;
  std::string memo_load;
  std::optional<std::size_t> memo_limit;
  bool no_memo = false;
};

void add_common_flags(CLI::App& cmd, Options& o) {
  cmd.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  cmd.add_option("--max-cells", o.max_cells, "Oracle size cap (verify: sweep bound)")
      ->check(CLI::PositiveNumber);
}

void add_memo_flags(CLI::App& cmd, Options& o) {
  cmd.add_option("--memo-load", o.memo_load, "Warm-start the recursion memo from a JSON dump");
  cmd.add_option("--memo-dump", o.memo_dump, "Write the recursion memo as JSON after the run");
  cmd.add_option("--memo-limit", o.memo_limit, "Stop memoizing beyond this many entries");
  cmd.add_flag("--no-memo", o.no_memo, "Disable memoization (differential testing)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counts standard Young tableaux by descent number and major index"};
  app.require_subcommand(1);
  Options o;

  auto* count = app.add_subcommand("count", "Number of standard tableaux of a shape");
  count->add_option("shape", o.shape, "Shape, e.g. 4,2,1")->required();
  add_common_flags(*count, o);

  auto* distribution = app.add_subcommand("distribution", "Distribution of des or maj");
  distribution->add_option("shape", o.shape, "Shape, e.g. 4,2,1")->required();
  distribution->add_option("--stat", o.stat, "Statistic")
      ->check(CLI::IsMember({"des", "maj", "refined"}));
  distribution->add_option("--method", o.method, "Counting method")
      ->check(CLI::IsMember({"auto", "formula", "recursion", "oracle"}));
  add_common_flags(*distribution, o);
  add_memo_flags(*distribution, o);

  auto* verify = app.add_subcommand("verify", "Cross-check every method against the oracle");
  verify->add_option("family", o.family, "hook | two-row | three-row-one | all")
      ->required()
      ->check(CLI::IsMember({"hook", "two-row", "three-row-one", "all"}));
  add_common_flags(*verify, o);
  add_memo_flags(*verify, o);

  auto* maj_gf = app.add_subcommand("maj-gf", "Major-index generating function");
  maj_gf->add_option("shape", o.shape, "Shape, e.g. 4,2,1")->required();
  maj_gf->add_flag("--check", o.check, "Compare against brute force when within the cap");
  add_common_flags(*maj_gf, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const auto format = syt::parse_format(o.format);
    syt::RecurrenceSolver solver(syt::SolverOptions{!o.no_memo, o.memo_limit, false});
    syt::CommandContext context{o.max_cells.value_or(syt::kDefaultOracleCap), &solver};
    if (!o.memo_load.empty()) solver.memo().load_json(read_file(o.memo_load));

    int status = 0;
    if (*count) {
      std::cout << syt::render(syt::cmd_count(syt::Shape::parse(o.shape)), format);
    } else if (*distribution) {
      const auto doc =
          syt::cmd_distribution(syt::Shape::parse(o.shape), syt::parse_statistic(o.stat),
                                syt::parse_method(o.method), context);
      std::cout << syt::render(doc, format);
    } else if (*verify) {
      const auto report =
          syt::cmd_verify(syt::parse_family(o.family), o.max_cells.value_or(10), context);
      std::cout << (format == syt::Format::Json ? report.to_json() : report.to_text());
      status = report.passed() ? 0 : kExitMismatch;
    } else if (*maj_gf) {
      const auto result = syt::cmd_maj_gf(syt::Shape::parse(o.shape), o.check, context);
      std::cout << syt::render(result, format);
      if (o.check && !result.oracle) {
        std::cerr << "note: shape above the oracle cap of " << context.oracle_cap
                  << ", --check skipped\n";
      }
      status = result.check_failed() ? kExitMismatch : 0;
    }

    if (!o.memo_dump.empty()) {
      std::ofstream out(o.memo_dump);
      out << solver.memo().dump_json() << '\n';
      if (!out) throw std::invalid_argument("cannot write " + o.memo_dump);
    }
    return status;
  } catch (const syt::SizeCapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSizeCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const syt::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
}
