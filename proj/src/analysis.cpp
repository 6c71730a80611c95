#include "sdree/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace sdree {

namespace {

// Shortest round-trip decimal for a double; integral values print without a
// trailing ".0" (1.0 -> "1"), which the frozen csv layout relies on.
std::string format_double(double value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

}  // namespace

ByteHistogram histogram(std::span<const std::uint8_t> data) {
  ByteHistogram h;
  for (const std::uint8_t byte : data) {
    ++h.counts[byte];
  }
  h.total = data.size();
  return h;
}

double index_of_coincidence(const ByteHistogram& h) {
  if (h.total < 2) {
    throw InsufficientDataError(
        "index of coincidence needs at least 2 bytes, got " +
        std::to_string(h.total));
  }
  // Exact integer numerator and denominator, one rounding at the division.
  unsigned __int128 numerator = 0;
  for (const std::uint64_t count : h.counts) {
    if (count > 1) {
      numerator += static_cast<unsigned __int128>(count) * (count - 1);
    }
  }
  const unsigned __int128 denominator =
      static_cast<unsigned __int128>(h.total) * (h.total - 1);
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

double chi_square_uniform(const ByteHistogram& h) {
  if (h.total == 0) {
    throw InsufficientDataError("chi-square needs a non-empty input");
  }
  const double expected = static_cast<double>(h.total) / 256.0;
  double sum = 0.0;
  for (const std::uint64_t count : h.counts) {
    const double diff = static_cast<double>(count) - expected;
    sum += diff * diff / expected;
  }
  return sum;
}

std::uint64_t max_run_length(std::span<const std::uint8_t> data) {
  std::uint64_t best = 0;
  std::uint64_t run = 0;
  int previous = -1;
  for (const std::uint8_t byte : data) {
    run = (byte == previous) ? run + 1 : 1;
    previous = byte;
    best = std::max(best, run);
  }
  return best;
}

int distinct_bytes(const ByteHistogram& h) {
  int distinct = 0;
  for (const std::uint64_t count : h.counts) {
    distinct += count > 0;
  }
  return distinct;
}

AnalysisReport analyze(std::span<const std::uint8_t> data) {
  AnalysisReport report;
  report.histogram = histogram(data);
  if (report.histogram.total >= 2) {
    report.index_of_coincidence = index_of_coincidence(report.histogram);
  }
  if (report.histogram.total >= 1) {
    report.chi_square_uniform = chi_square_uniform(report.histogram);
  }
  report.max_run_length = max_run_length(data);
  report.distinct_bytes = distinct_bytes(report.histogram);
  return report;
}

namespace {

std::string render_csv(const AnalysisReport& report) {
  std::string out = "byte,count\n";
  for (int b = 0; b < 256; ++b) {
    out += std::to_string(b);
    out += ',';
    out += std::to_string(report.histogram.counts[b]);
    out += '\n';
  }
  const auto metric = [](std::optional<double> value) {
    return value ? format_double(*value) : std::string("undefined");
  };
  out += "total," + std::to_string(report.histogram.total) + "\n";
  out += "distinct," + std::to_string(report.distinct_bytes) + "\n";
  out += "max_run," + std::to_string(report.max_run_length) + "\n";
  out += "ic," + metric(report.index_of_coincidence) + "\n";
  out += "chi2," + metric(report.chi_square_uniform) + "\n";
  return out;
}

std::string render_chart(const AnalysisReport& report) {
  constexpr int kBarWidth = 60;
  const auto metric = [](std::optional<double> value) {
    return value ? format_double(*value) : std::string("undefined");
  };
  std::string out = "total=" + std::to_string(report.histogram.total) +
                    " distinct=" + std::to_string(report.distinct_bytes) +
                    " max_run=" + std::to_string(report.max_run_length) +
                    " ic=" + metric(report.index_of_coincidence) +
                    " chi2=" + metric(report.chi_square_uniform) + "\n";
  const std::uint64_t peak =
      *std::max_element(report.histogram.counts.begin(),
                        report.histogram.counts.end());
  for (int b = 0; b < 256; ++b) {
    const std::uint64_t count = report.histogram.counts[b];
    if (count == 0) {
      continue;
    }
    const int bar = std::max<int>(
        1, static_cast<int>(count * static_cast<std::uint64_t>(kBarWidth) /
                            peak));
    std::string label = std::to_string(b);
    out += std::string(3 - std::min<std::size_t>(3, label.size()), ' ');
    out += label;
    out += " | ";
    out.append(static_cast<std::size_t>(bar), '#');
    out += " (" + std::to_string(count) + ")\n";
  }
  return out;
}

}  // namespace

std::string render_report(const AnalysisReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kCsv:
      return render_csv(report);
    case ReportFormat::kAsciiChart:
      return render_chart(report);
  }
  return {};
}

}  // namespace sdree
