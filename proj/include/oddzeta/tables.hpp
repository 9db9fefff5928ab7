#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "oddzeta/big_real.hpp"
#include "oddzeta/line_fit.hpp"
#include "oddzeta/odd_estimator.hpp"
#include "oddzeta/precision.hpp"
#include "oddzeta/zeta_core.hpp"

namespace oddzeta {

enum class Command { compute, table1, table2, table3, fit, figure };
enum class OutputFormat { csv, json, pretty };

std::string_view command_name(Command c);

struct RunConfig {
    Command command = Command::compute;
    long digits = 40;                 // >= 20
    Method method = Method::geomean;  // compute
    std::string s_text = "3";         // compute argument (integer or real)
    std::vector<unsigned> ns;         // table2/table3/fit row indices
    unsigned nodes = 25;              // N1, integral method
    unsigned terms = 25;              // N2, series method
    double s_min = 2.0;               // figure grid
    double s_max = 12.0;
    double step = 0.05;
    OutputFormat format = OutputFormat::pretty;
    std::string out_path;             // empty = stdout
    bool paper_quirks = false;
};

struct Table1Row {
    unsigned n;
    BigReal approx;    // geometric-mean estimate of zeta(2n+1)
    BigReal accurate;  // reference oracle
    BigReal error;     // signed approx - accurate
};

struct Table2Row {
    unsigned n;
    long digits;    // per-row precision actually used
    BigReal error;  // absolute error of the geometric-mean estimate
};

struct Table3Row {
    unsigned n;
    BigReal integral_error;
    BigReal series_error;
    BigReal geomean_error;
};

struct FigureRow {
    BigReal s;
    BigReal approx;                  // asymptotic-formula value
    std::optional<BigReal> accurate; // reference, integer s only
    std::optional<BigReal> lg_error; // lg |approx - accurate|, integer s only
    bool exact_identity = false;     // s = 2: formula exact, sentinel row
};

/// Rows n = 1..10 of the method-comparison table at the given precision.
std::vector<Table1Row> run_table1(const PrecisionContext& ctx);

/// Error rows ε(n) = |ζ_gm(2n+1) − reference| at per-row precision
/// max(digits, n + 30); raises and notes when the configured digits are
/// insufficient. Rows beyond the desk-scale cap run on the direct-sum
/// even-zeta path with a warning; infeasible rows are skipped with a notice.
std::vector<Table2Row> run_table2(std::span<const unsigned> ns, const PrecisionContext& ctx,
                                  std::ostream* notices = nullptr);

/// Per-row absolute errors of the integral (N1 nodes), series (N2 terms)
/// and geometric-mean methods against the reference oracle.
std::vector<Table3Row> run_table3(std::span<const unsigned> ns, unsigned n1, unsigned n2,
                                  const PrecisionContext& ctx);

/// Least-squares fit of lg ε(n) against n over table2 rows.
FitResult run_fit(std::span<const unsigned> ns, const PrecisionContext& ctx,
                  std::ostream* notices = nullptr);

/// Grid rows for the asymptotic-formula figure; integer grid points carry
/// the reference value and lg-error columns, the s = 2 row is the exact
/// sentinel (empty lg-error field).
std::vector<FigureRow> run_figure(double s_min, double s_max, double step,
                                  const PrecisionContext& ctx);

/// Rendered table: ordered config, column names, stringified cells.
struct TableDocument {
    std::string command;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> footnotes;
    long digits = 0;
};

TableDocument make_document(const RunConfig& config, const PrecisionContext& ctx,
                            std::ostream* notices = nullptr);

std::string render_csv(const TableDocument& doc);
std::string render_json(const TableDocument& doc);
std::string render_pretty(const TableDocument& doc);
std::string render(const TableDocument& doc, OutputFormat format);

}  // namespace oddzeta
