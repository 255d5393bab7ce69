#pragma once

// Experiment results and their on-disk form:
//   <out_dir>/<report name>/<series label>.csv   (one per series)
//   <out_dir>/<report name>/report.json          {name, scalars, metadata, series_files}

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace chebsig {

using Column = std::variant<std::vector<double>, std::vector<std::string>>;

/// A labelled table stored column by column.
struct Series {
  std::string label;
  std::vector<std::string> header;
  std::vector<Column> columns;

  std::size_t rows() const;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ExperimentReport {
 public:
  explicit ExperimentReport(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }

  /// Labels must be unique among scalars and series.
  void add_scalar(const std::string& label, double value);
  void add_series(Series series);
  void set_metadata(const std::string& key, std::string value);

  double scalar(const std::string& label) const;
  bool has_scalar(const std::string& label) const;
  const Series& series(const std::string& label) const;
  const std::vector<std::pair<std::string, double>>& scalars() const { return scalars_; }
  const std::vector<Series>& all_series() const { return series_; }
  const std::map<std::string, std::string>& metadata() const { return metadata_; }

 private:
  void claim_label(const std::string& label);

  std::string name_;
  std::vector<std::pair<std::string, double>> scalars_;
  std::vector<Series> series_;
  std::map<std::string, std::string> metadata_;
  std::vector<std::string> labels_;
};

/// Shortest text that round-trips a double (17 significant digits).
std::string format_real(double value);

/// Header row plus one line per row; numeric cells use format_real.
std::string to_csv(const Series& series);

/// report.json contents, pretty-printed.
std::string to_json(const ExperimentReport& report);

/// Minimal standalone SVG line plot: first column on x, remaining numeric
/// columns as polylines.
std::string to_svg(const Series& series);

/// Writes the report under out_dir/<name>/. Throws IoError with the
/// offending path on failure.
void write_report(const ExperimentReport& report, const std::filesystem::path& out_dir,
                  bool svg = false);

/// Header present, all rows complete, every numeric cell finite.
bool validate_series(const Series& series, std::string* why = nullptr);

}  // namespace chebsig
