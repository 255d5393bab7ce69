#include "chebsig/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace chebsig {

std::size_t Series::rows() const {
  if (columns.empty()) return 0;
  return std::visit([](const auto& col) { return col.size(); }, columns.front());
}

void ExperimentReport::claim_label(const std::string& label) {
  if (std::find(labels_.begin(), labels_.end(), label) != labels_.end()) {
    throw std::invalid_argument("duplicate report label: " + label);
  }
  labels_.push_back(label);
}

void ExperimentReport::add_scalar(const std::string& label, double value) {
  claim_label(label);
  scalars_.emplace_back(label, value);
}

void ExperimentReport::add_series(Series series) {
  if (series.header.size() != series.columns.size()) {
    throw std::invalid_argument("series header and columns differ: " + series.label);
  }
  claim_label(series.label);
  series_.push_back(std::move(series));
}

void ExperimentReport::set_metadata(const std::string& key, std::string value) {
  metadata_[key] = std::move(value);
}

double ExperimentReport::scalar(const std::string& label) const {
  for (const auto& [name, value] : scalars_) {
    if (name == label) return value;
  }
  throw std::out_of_range("no scalar named " + label);
}

bool ExperimentReport::has_scalar(const std::string& label) const {
  return std::any_of(scalars_.begin(), scalars_.end(),
                     [&](const auto& s) { return s.first == label; });
}

const Series& ExperimentReport::series(const std::string& label) const {
  for (const auto& s : series_) {
    if (s.label == label) return s;
  }
  throw std::out_of_range("no series named " + label);
}

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string to_csv(const Series& series) {
  std::string out;
  for (std::size_t c = 0; c < series.header.size(); ++c) {
    if (c) out += ',';
    out += series.header[c];
  }
  out += '\n';
  const std::size_t rows = series.rows();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < series.columns.size(); ++c) {
      if (c) out += ',';
      std::visit(
          [&](const auto& col) {
            using T = std::decay_t<decltype(col)>;
            if constexpr (std::is_same_v<T, std::vector<double>>) {
              out += format_real(col[r]);
            } else {
              out += col[r];
            }
          },
          series.columns[c]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const ExperimentReport& report) {
  nlohmann::ordered_json j;
  j["name"] = report.name();
  auto scalars = nlohmann::ordered_json::object();
  for (const auto& [label, value] : report.scalars()) {
    if (std::isfinite(value)) {
      scalars[label] = value;
    } else {
      scalars[label] = format_real(value);
    }
  }
  j["scalars"] = scalars;
  auto meta = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.metadata()) meta[key] = value;
  j["metadata"] = meta;
  auto files = nlohmann::ordered_json::array();
  for (const auto& s : report.all_series()) files.push_back(s.label + ".csv");
  j["series_files"] = files;
  return j.dump(2) + "\n";
}

std::string to_svg(const Series& series) {
  constexpr double width = 640.0;
  constexpr double height = 400.0;
  constexpr double margin = 40.0;
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

  std::vector<const std::vector<double>*> numeric;
  std::vector<std::string> names;
  for (std::size_t c = 0; c < series.columns.size(); ++c) {
    if (const auto* col = std::get_if<std::vector<double>>(&series.columns[c])) {
      numeric.push_back(col);
      names.push_back(series.header[c]);
    }
  }
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << margin << "\" y=\"20\" font-size=\"14\">" << series.label << "</text>\n";
  if (numeric.size() < 2 || numeric.front()->empty()) {
    svg << "</svg>\n";
    return svg.str();
  }

  const auto& xs = *numeric.front();
  auto finite_range = [](const std::vector<double>& v, double& lo, double& hi) {
    for (double x : v) {
      if (!std::isfinite(x)) continue;
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  };
  double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
  double ylo = xlo, yhi = -xlo;
  finite_range(xs, xlo, xhi);
  for (std::size_t c = 1; c < numeric.size(); ++c) finite_range(*numeric[c], ylo, yhi);
  if (!(xhi > xlo)) xhi = xlo + 1.0;
  if (!(yhi > ylo)) yhi = ylo + 1.0;

  auto px = [&](double x) { return margin + (x - xlo) / (xhi - xlo) * (width - 2 * margin); };
  auto py = [&](double y) { return height - margin - (y - ylo) / (yhi - ylo) * (height - 2 * margin); };

  svg << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << width - 2 * margin
      << "\" height=\"" << height - 2 * margin << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (std::size_t c = 1; c < numeric.size(); ++c) {
    svg << "<polyline fill=\"none\" stroke=\"" << colors[(c - 1) % 6] << "\" points=\"";
    const auto& ys = *numeric[c];
    for (std::size_t r = 0; r < xs.size() && r < ys.size(); ++r) {
      if (!std::isfinite(xs[r]) || !std::isfinite(ys[r])) continue;
      svg << px(xs[r]) << ',' << py(ys[r]) << ' ';
    }
    svg << "\"/>\n";
    svg << "<text x=\"" << width - margin - 150 << "\" y=\"" << margin + 15.0 * double(c)
        << "\" font-size=\"11\" fill=\"" << colors[(c - 1) % 6] << "\">" << names[c] << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << contents;
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace

void write_report(const ExperimentReport& report, const std::filesystem::path& out_dir,
                  bool svg) {
  const std::filesystem::path dir = out_dir / report.name();
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  for (const auto& s : report.all_series()) {
    write_file(dir / (s.label + ".csv"), to_csv(s));
    if (svg) write_file(dir / (s.label + ".svg"), to_svg(s));
  }
  write_file(dir / "report.json", to_json(report));
}

bool validate_series(const Series& series, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = series.label + ": " + msg;
    return false;
  };
  if (series.header.empty()) return fail("empty header");
  if (series.header.size() != series.columns.size()) return fail("header/column count mismatch");
  const std::size_t rows = series.rows();
  for (const auto& col : series.columns) {
    const bool ok = std::visit(
        [&](const auto& c) {
          if (c.size() != rows) return false;
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, std::vector<double>>) {
            return std::all_of(c.begin(), c.end(), [](double v) { return std::isfinite(v); });
          }
          return true;
        },
        col);
    if (!ok) return fail("ragged or non-finite column");
  }
  return true;
}

}  // namespace chebsig
