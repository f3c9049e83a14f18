#include "syt/commands.hpp"

#include <set>

#include "json.hpp"

#include "syt/closed_forms.hpp"

namespace syt {

Statistic parse_statistic(std::string_view name) {
  if (name == "des") return Statistic::Des;
  if (name == "maj") return Statistic::Maj;
  if (name == "refined") return Statistic::Refined;
  throw std::invalid_argument("unknown statistic '" + std::string(name) + "'");
}

Method parse_method(std::string_view name) {
  if (name == "auto") return Method::Auto;
  if (name == "formula") return Method::Formula;
  if (name == "recursion") return Method::Recursion;
  if (name == "oracle") return Method::Oracle;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

std::string to_string(Statistic statistic) {
  switch (statistic) {
    case Statistic::Des:
      return "des";
    case Statistic::Maj:
      return "maj";
    case Statistic::Refined:
      return "refined";
  }
  return "?";
}

std::string to_string(Method method) {
  switch (method) {
    case Method::Auto:
      return "auto";
    case Method::Formula:
      return "formula";
    case Method::Recursion:
      return "recursion";
    case Method::Oracle:
      return "oracle";
  }
  return "?";
}

OutputDocument cmd_count(const Shape& shape) {
  const BigCount count = syt_count(shape);
  return OutputDocument{shape.to_string(), "count", "formula", {{{}, count}}, count};
}

bool method_applies(const Shape& shape, Statistic statistic, Method method) {
  const bool refinable = shape.is_two_row() || shape.is_three_row_one();
  switch (method) {
    case Method::Auto:
      return statistic != Statistic::Refined || refinable;
    case Method::Oracle:
      return statistic != Statistic::Refined || refinable;
    case Method::Formula:
      switch (statistic) {
        case Statistic::Des:
          return shape.is_hook() || shape.is_two_row();
        case Statistic::Maj:
          return true;
        case Statistic::Refined:
          return shape.is_two_row();
      }
      return false;
    case Method::Recursion:
      return statistic != Statistic::Maj && refinable;
  }
  return false;
}

namespace {

[[noreturn]] void unsupported(const Shape& shape, Statistic statistic, Method method) {
  std::string classes;
  if (method == Method::Formula) {
    classes = statistic == Statistic::Refined
                  ? "two-row shapes (n,m)"
                  : "hook shapes (n,1^m) and two-row shapes (n,m)";
    throw UnsupportedMethod("no closed form implemented for " + to_string(statistic) +
                            " on shape (" + shape.to_string() + "); closed forms exist for " +
                            classes);
  }
  if (method == Method::Recursion) {
    classes = statistic == Statistic::Maj ? "no shape (maj has no recursion; use formula)"
                                          : "two-row shapes (n,m) and shapes (n,m,1)";
    throw UnsupportedMethod("no recursion implemented for " + to_string(statistic) +
                            " on shape (" + shape.to_string() + "); recursions exist for " +
                            classes);
  }
  throw UnsupportedMethod("refined counts are defined for shapes (n,m) and (n,m,1), not (" +
                          shape.to_string() + ")");
}

Method resolve(const Shape& shape, Statistic statistic, Method method) {
  if (method != Method::Auto) {
    if (!method_applies(shape, statistic, method)) unsupported(shape, statistic, method);
    return method;
  }
  for (Method candidate : {Method::Formula, Method::Recursion, Method::Oracle}) {
    if (method_applies(shape, statistic, candidate)) return candidate;
  }
  unsupported(shape, statistic, Method::Oracle);
}

}  // namespace

OutputDocument cmd_distribution(const Shape& shape, Statistic statistic, Method method,
                                const CommandContext& context) {
  const Method chosen = resolve(shape, statistic, method);
  const int n = shape.row_length(1);
  const int m = shape.row_length(2);

  if (statistic == Statistic::Maj) {
    if (chosen == Method::Formula) {
      return make_maj_document(shape, "stanley", stanley_maj_gf(shape));
    }
    return make_maj_document(shape, "oracle", brute_maj_gf(shape, context.oracle_cap));
  }

  const std::string stat = to_string(statistic);
  const std::string how = to_string(chosen);
  const bool refined = statistic == Statistic::Refined;
  switch (chosen) {
    case Method::Formula:
      if (refined) return make_document(stat, how, two_row_refined(n, m));
      if (shape.is_hook()) return make_document(stat, how, hook_distribution(n, shape.rows() - 1));
      return make_document(stat, how, two_row_distribution(n, m));
    case Method::Recursion: {
      auto& solver = context.recurrence();
      if (shape.is_two_row()) {
        return make_document(stat, how,
                             refined ? solver.two_row_refined(n, m)
                                     : solver.two_row_distribution(n, m));
      }
      return make_document(stat, how,
                           refined ? solver.r_nm1_refined(n, m) : solver.r_nm1_distribution(n, m));
    }
    default:
      return make_document(stat, how,
                           refined ? brute_refined(shape, context.oracle_cap)
                                   : brute_des_distribution(shape, context.oracle_cap));
  }
}

MajGfResult cmd_maj_gf(const Shape& shape, bool check, const CommandContext& context) {
  MajGfResult result{shape, stanley_maj_gf(shape), std::nullopt};
  if (check && shape.size() <= context.oracle_cap) {
    result.oracle = brute_maj_gf(shape, context.oracle_cap);
  }
  return result;
}

std::string render(const MajGfResult& result, Format format) {
  std::string check;
  if (result.oracle) check = result.check_failed() ? "mismatch" : "match";
  switch (format) {
    case Format::Text: {
      std::string out = result.gf.to_string() + '\n';
      if (result.oracle) {
        out += "oracle: " + check;
        if (result.check_failed()) out += " (" + result.oracle->to_string() + ")";
        out += '\n';
      }
      return out;
    }
    case Format::Csv:
      return render(make_maj_document(result.shape, "stanley", result.gf), Format::Csv);
    case Format::Json: {
      nlohmann::ordered_json out = {{"shape", result.shape.to_string()}, {"method", "stanley"}};
      auto& coefficients = out["coefficients"] = nlohmann::ordered_json::array();
      for (const auto& c : result.gf.coefficients()) coefficients.push_back(c.str());
      if (result.oracle) out["oracle_check"] = check;
      return out.dump(2) + '\n';
    }
  }
  return {};
}

VerifyFamily parse_family(std::string_view name) {
  if (name == "hook") return VerifyFamily::Hook;
  if (name == "two-row") return VerifyFamily::TwoRow;
  if (name == "three-row-one") return VerifyFamily::ThreeRowOne;
  if (name == "all") return VerifyFamily::All;
  throw std::invalid_argument("unknown family '" + std::string(name) +
                              "' (expected hook, two-row, three-row-one or all)");
}

std::string to_string(VerifyFamily family) {
  switch (family) {
    case VerifyFamily::Hook:
      return "hook";
    case VerifyFamily::TwoRow:
      return "two-row";
    case VerifyFamily::ThreeRowOne:
      return "three-row-one";
    case VerifyFamily::All:
      return "all";
  }
  return "?";
}

namespace {

class Recorder {
 public:
  explicit Recorder(VerifyReport& report) : report_(report) {}

  std::size_t section(const std::string& name) {
    for (std::size_t i = 0; i < report_.comparisons.size(); ++i) {
      if (report_.comparisons[i].name == name) return i;
    }
    report_.comparisons.push_back({name, 0, 0, 0});
    return report_.comparisons.size() - 1;
  }

  void value(const std::string& name, const std::string& params, const BigCount& expected,
             const BigCount& actual) {
    auto& summary = report_.comparisons[section(name)];
    ++summary.cases;
    ++summary.compared;
    if (expected != actual) {
      ++summary.mismatches;
      report_.mismatches.push_back({name, params, expected.str(), actual.str()});
    }
  }

  /// Every key present in either table is compared.
  void tables(const std::string& name, const std::string& params, const CountTable& expected,
              const CountTable& actual) {
    auto& summary = report_.comparisons[section(name)];
    ++summary.cases;
    std::set<RefinedKey> keys;
    for (const auto& [key, count] : expected.entries()) keys.insert(key);
    for (const auto& [key, count] : actual.entries()) keys.insert(key);
    for (const auto& key : keys) {
      ++summary.compared;
      const BigCount want = expected.at(key);
      const BigCount got = actual.at(key);
      if (want != got) {
        ++summary.mismatches;
        report_.mismatches.push_back({name, params + " " + key.to_string(), want.str(), got.str()});
      }
    }
  }

  void polynomials(const std::string& name, const std::string& params, const QPolynomial& expected,
                   const QPolynomial& actual) {
    auto& summary = report_.comparisons[section(name)];
    ++summary.cases;
    const long top = std::max(expected.degree(), actual.degree());
    for (long e = 0; e <= top; ++e) {
      ++summary.compared;
      if (expected.coefficient(e) != actual.coefficient(e)) {
        ++summary.mismatches;
        report_.mismatches.push_back({name, params + " q^" + std::to_string(e),
                                      expected.coefficient(e).str(), actual.coefficient(e).str()});
      }
    }
  }

  /// Records `cases` and `compared` without any failure.
  void tally(const std::string& name, std::size_t cases, std::size_t compared) {
    auto& summary = report_.comparisons[section(name)];
    summary.cases += cases;
    summary.compared += compared;
  }

  void mismatch(const std::string& name, std::string params, std::string expected,
                std::string actual) {
    ++report_.comparisons[section(name)].mismatches;
    report_.mismatches.push_back({name, std::move(params), std::move(expected), std::move(actual)});
  }

  void finding(std::string text) { report_.findings.push_back(std::move(text)); }

 private:
  VerifyReport& report_;
};

std::string shape_params(const Shape& shape) { return "shape=(" + shape.to_string() + ")"; }

void verify_hooks(Recorder& rec, int max_cells, int cap) {
  for (int size = 1; size <= max_cells; ++size) {
    for (int m = 0; m < size; ++m) {
      const int n = size - m;
      const CountTable formula = hook_distribution(n, m);
      const CountTable oracle = brute_des_distribution(formula.shape(), cap);
      const auto params = shape_params(formula.shape());
      rec.tables("hook closed form vs oracle (des)", params, oracle, formula);
      rec.value("hook count C(n+m-1,m) vs FRT", params, syt_count(formula.shape()),
                binomial(n + m - 1, m));
    }
  }
}

void verify_two_rows(Recorder& rec, int max_cells, int cap, RecurrenceSolver& solver) {
  for (int n = 1; n < max_cells; ++n) {
    for (int m = 1; m <= n && n + m <= max_cells; ++m) {
      const Shape shape{n, m};
      const auto params = shape_params(shape);
      const CountTable oracle_des = brute_des_distribution(shape, cap);
      const CountTable oracle_refined = brute_refined(shape, cap);
      rec.tables("two-row closed form vs oracle (des)", params, oracle_des,
                 two_row_distribution(n, m));
      rec.tables("two-row refined closed form vs oracle (d,k)", params, oracle_refined,
                 two_row_refined(n, m));
      rec.tables("two-row recursion vs oracle (d,k)", params, oracle_refined,
                 solver.two_row_refined(n, m));
      rec.tables("oracle refined marginal vs oracle des", params, oracle_des,
                 oracle_refined.marginal());
    }
  }
  for (int n = 1; 2 * n <= max_cells; ++n) {
    BigCount narayana_total = 0;
    for (int d = 1; d <= n; ++d) {
      narayana_total += r_nn_d(n, d);
      const auto params = "n=" + std::to_string(n) + ",d=" + std::to_string(d);
      rec.value("Narayana symmetry N(n,d) = N(n,n+1-d)", params, r_nn_d(n, d),
                r_nn_d(n, n + 1 - d));
      BigCount refined_total = 0;
      for (int k = n; k < 2 * n; ++k) {
        refined_total += r_nn_dk(n, d, k);
        rec.value("(n,n) refined closed form vs recursion", params + ",k=" + std::to_string(k),
                  r_nn_dk(n, d, k), solver.r_nn_dk(n, d, k));
      }
      rec.value("sum_k R(n,n;d,k) vs Narayana", params, r_nn_d(n, d), refined_total);
    }
    rec.value("sum_d Narayana vs Catalan", "n=" + std::to_string(n), catalan(n), narayana_total);
  }
}

void verify_three_rows(Recorder& rec, int max_cells, int cap, RecurrenceSolver& solver) {
  RecurrenceSolver overlap_solver(SolverOptions{true, std::nullopt, true});
  for (int n = 1; n + 2 <= max_cells; ++n) {
    for (int m = 1; m <= n && n + m + 1 <= max_cells; ++m) {
      const Shape shape{n, m, 1};
      const auto params = shape_params(shape);
      const CountTable oracle = brute_refined(shape, cap);
      rec.tables("(n,m,1) recursions vs oracle (d,k,c)", params, oracle, solver.r_nm1_refined(n, m));
      rec.tables("oracle refined marginal vs oracle des", params, brute_des_distribution(shape, cap),
                 oracle.marginal());
      rec.value("(n,m,1) recursion total vs FRT", params, syt_count(shape),
                solver.r_nm1_distribution(n, m).total());
      overlap_solver.r_nm1_refined(n, m);

      for (int d = 0; d <= m + 2; ++d) {
        for (int k = 1; k <= n + m + 2; ++k) {
          for (int c = 1; c <= n + m + 2; ++c) {
            if (k == c) continue;
            const ThreeRowParams p{n, m, d, k, c};
            const BigCount truth = oracle.at(RefinedKey{d, k, c});
            const Reduction reduced = r_nm1_reduce(p);
            if (const auto* count = std::get_if<BigCount>(&reduced)) {
              rec.value("reduction identities vs oracle", p.to_string(), truth, *count);
            }
            for (const auto& branch : reduce_all_branches(p)) {
              const auto name = "reduction branch " + to_string(branch.branch) + " vs oracle";
              if (p.satisfies_necessary_conditions()) {
                rec.value(name, p.to_string(), truth, branch.value);
              } else if (branch.value != truth) {
                rec.finding("branch " + to_string(branch.branch) + " at " + p.to_string() +
                            " (outside the necessary conditions) gives " + branch.value.str() +
                            ", oracle " + truth.str());
              }
            }
          }
        }
      }
    }
  }
  constexpr const char* kOverlap = "(n,n,1) overlapping case guards agree";
  rec.tally(kOverlap, overlap_solver.overlap_points(), overlap_solver.overlap_points());
  for (const auto& f : overlap_solver.overlap_disagreements()) {
    std::string values;
    for (const auto& [number, value] : f.case_values) {
      values += (values.empty() ? "" : " ") + ("case" + std::to_string(number) + "=" + value.str());
    }
    const auto params = "n=" + std::to_string(f.n) + ",d=" + std::to_string(f.d) +
                        ",k=" + std::to_string(f.k) + ",c=" + std::to_string(f.c);
    rec.mismatch(kOverlap, params + " " + values, f.case_values.front().second.str(),
                 f.case_values.back().second.str());
  }
}

void verify_all_shapes(Recorder& rec, int max_cells, int cap) {
  for (int size = 0; size <= max_cells; ++size) {
    for (const Shape& shape : partitions_of(size)) {
      const auto params = shape_params(shape);
      constexpr const char* kConjugation = "conjugation des(T^t) = n-1-des(T)";
      std::size_t enumerated = 0;
      for_each_syt(
          shape,
          [&](const Tableau& t) {
            ++enumerated;
            const int des = descent_stats(t).des;
            const int des_t = descent_stats(transpose(t)).des;
            const int expected = t.size() == 0 ? 0 : t.size() - 1 - des;
            if (des_t != expected) {
              rec.mismatch(kConjugation, params + " T=" + t.to_string(), std::to_string(expected),
                           std::to_string(des_t));
            }
            return true;
          },
          cap);
      rec.tally(kConjugation, 1, enumerated);
      rec.value("FRT count vs enumeration", params, syt_count(shape), enumerated);
      rec.value("FRT count invariant under conjugation", params, syt_count(shape),
                syt_count(conjugate(shape)));
      if (shape.empty()) continue;
      const QPolynomial stanley = stanley_maj_gf(shape);
      rec.polynomials("Stanley hook formula vs oracle (maj)", params, brute_maj_gf(shape, cap),
                      stanley);
      rec.value("Stanley at q=1 vs FRT", params, syt_count(shape), stanley.evaluate(1));
    }
  }
}

}  // namespace

VerifyReport cmd_verify(VerifyFamily family, int max_cells, const CommandContext& context) {
  if (max_cells > kMaxOracleCap) throw SizeCapExceeded(max_cells, kMaxOracleCap);
  VerifyReport report;
  report.family = to_string(family);
  report.max_cells = max_cells;
  Recorder rec(report);
  const int cap = std::max(max_cells, 0);
  auto& solver = context.recurrence();
  const bool all = family == VerifyFamily::All;
  if (all || family == VerifyFamily::Hook) verify_hooks(rec, max_cells, cap);
  if (all || family == VerifyFamily::TwoRow) verify_two_rows(rec, max_cells, cap, solver);
  if (all || family == VerifyFamily::ThreeRowOne) verify_three_rows(rec, max_cells, cap, solver);
  if (all) verify_all_shapes(rec, max_cells, cap);
  return report;
}

std::string VerifyReport::to_text() const {
  std::string out = "verify " + family + " --max-cells " + std::to_string(max_cells) + '\n';
  for (const auto& c : comparisons) {
    out += std::string(c.mismatches == 0 ? "  [PASS] " : "  [FAIL] ") + c.name + ": " +
           std::to_string(c.cases) + " cases, " + std::to_string(c.compared) + " values";
    if (c.mismatches != 0) out += ", " + std::to_string(c.mismatches) + " mismatches";
    out += '\n';
  }
  if (!findings.empty()) {
    out += "findings (" + std::to_string(findings.size()) + "):\n";
    for (const auto& f : findings) out += "  " + f + '\n';
  }
  if (!mismatches.empty()) {
    out += "mismatches (" + std::to_string(mismatches.size()) + "):\n";
    for (const auto& m : mismatches) {
      out += "  " + m.comparison + " | " + m.params + " | expected " + m.expected + " | got " +
             m.actual + '\n';
    }
  }
  out += passed() ? "RESULT: PASS\n" : "RESULT: FAIL\n";
  return out;
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json out = {{"family", family}, {"max_cells", max_cells}, {"passed", passed()}};
  auto& comps = out["comparisons"] = nlohmann::ordered_json::array();
  for (const auto& c : comparisons) {
    comps.push_back(
        {{"name", c.name}, {"cases", c.cases}, {"compared", c.compared}, {"mismatches", c.mismatches}});
  }
  auto& bad = out["mismatches"] = nlohmann::ordered_json::array();
  for (const auto& m : mismatches) {
    bad.push_back({{"comparison", m.comparison},
                   {"params", m.params},
                   {"expected", m.expected},
                   {"actual", m.actual}});
  }
  out["findings"] = findings;
  return out.dump(2) + '\n';
}

}  // namespace syt
