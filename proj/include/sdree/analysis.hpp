#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "sdree/errors.hpp"

namespace sdree {

// 256-bin frequency count of a byte sequence.
struct ByteHistogram {
  std::array<std::uint64_t, 256> counts{};
  std::uint64_t total = 0;
};

ByteHistogram histogram(std::span<const std::uint8_t> data);

// Index of coincidence over the 256-symbol alphabet, unnormalized:
//
//   IC = sum_b counts[b] * (counts[b] - 1) / (total * (total - 1))
//
// 1.0 for constant input, about 1/256 for uniform bytes. Throws
// InsufficientDataError when total < 2.
double index_of_coincidence(const ByteHistogram& h);

// Chi-square statistic against the uniform byte distribution:
// sum_b (counts[b] - total/256)^2 / (total/256). Throws
// InsufficientDataError when total == 0.
double chi_square_uniform(const ByteHistogram& h);

// Length of the longest run of equal adjacent bytes; 0 for empty input.
std::uint64_t max_run_length(std::span<const std::uint8_t> data);

// Number of byte values with a nonzero count.
int distinct_bytes(const ByteHistogram& h);

// Repetition metrics bundled for reporting. Statistics whose preconditions
// the input does not meet are absent rather than faked as zeros; rendered
// output shows them as "undefined".
struct AnalysisReport {
  ByteHistogram histogram;
  std::optional<double> index_of_coincidence;
  std::optional<double> chi_square_uniform;
  std::uint64_t max_run_length = 0;
  int distinct_bytes = 0;
};

AnalysisReport analyze(std::span<const std::uint8_t> data);

enum class ReportFormat {
  kCsv,
  kAsciiChart,
};

// csv: header "byte,count", 256 data rows in ascending byte order, then
// footer rows total/distinct/max_run/ic/chi2. The exact layout is frozen;
// downstream tooling parses it.
//
// ascii-chart: one metrics line, then a bar per nonzero bin scaled to a
// fixed width (bar lengths are monotone in the counts).
std::string render_report(const AnalysisReport& report, ReportFormat format);

}  // namespace sdree
