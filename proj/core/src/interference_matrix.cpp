#include "wifiplan/interference_matrix.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace wifiplan {

namespace {

constexpr double neg_inf = -std::numeric_limits<double>::infinity();

std::string format_cell(double v) {
  if (v == neg_inf) return "-inf";
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_cell(const std::string& raw, int row, int col) {
  const std::string cell = trim(raw);
  if (cell == "-inf" || cell == "inf-") return neg_inf;
  try {
    std::size_t pos = 0;
    const double v = std::stod(cell, &pos);
    if (pos != cell.size() || !std::isfinite(v)) throw std::invalid_argument(cell);
    return v;
  } catch (const std::exception&) {
    std::ostringstream os;
    os << "matrix cell (" << row + 1 << "," << col + 1 << ") is not a finite number or -inf: '"
       << cell << "'";
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

InterferenceMatrix::InterferenceMatrix(int k, std::vector<double> db)
    : k_(k), db_(std::move(db)), lin_(db_.size()) {
  for (std::size_t i = 0; i < db_.size(); ++i) {
    lin_[i] = db_[i] == neg_inf ? 0.0 : std::pow(10.0, db_[i] / 10.0);
  }
}

InterferenceMatrix InterferenceMatrix::rectangular_mask(int k, double channel_spacing_mhz,
                                                        double channel_bandwidth_mhz) {
  if (k < 1) throw std::invalid_argument("spectrum size must be >= 1");
  if (!(channel_spacing_mhz > 0.0) || !(channel_bandwidth_mhz > 0.0)) {
    throw std::invalid_argument("channel spacing and bandwidth must be positive");
  }
  std::vector<double> db(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const double overlap =
          std::max(0.0, 1.0 - std::abs(i - j) * channel_spacing_mhz / channel_bandwidth_mhz);
      db[static_cast<std::size_t>(i) * k + j] =
          overlap > 0.0 ? 10.0 * std::log10(overlap) : neg_inf;
    }
  }
  return InterferenceMatrix(k, std::move(db));
}

InterferenceMatrix default_interference_matrix(int k, double channel_spacing_mhz,
                                               double channel_bandwidth_mhz) {
  return InterferenceMatrix::rectangular_mask(k, channel_spacing_mhz, channel_bandwidth_mhz);
}

InterferenceMatrix InterferenceMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int k = static_cast<int>(rows.size());
  if (k < 1) throw std::invalid_argument("matrix must have at least one row");
  std::vector<double> db(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(rows[i].size()) != k) {
      throw std::invalid_argument("matrix must be square");
    }
    for (int j = 0; j < k; ++j) {
      const double v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (std::isnan(v) || v == std::numeric_limits<double>::infinity()) {
        throw std::invalid_argument("matrix entries must be finite or -inf");
      }
      db[static_cast<std::size_t>(i) * k + j] = v;
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (db[static_cast<std::size_t>(i) * k + j] != db[static_cast<std::size_t>(j) * k + i]) {
        std::ostringstream os;
        os << "matrix is not symmetric at (" << i + 1 << "," << j + 1 << ")";
        throw std::invalid_argument(os.str());
      }
    }
  }
  return InterferenceMatrix(k, std::move(db));
}

InterferenceMatrix InterferenceMatrix::load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matrix file: " + path.string());
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::vector<double> row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      row.push_back(parse_cell(cell, static_cast<int>(rows.size()), static_cast<int>(row.size())));
    }
    rows.push_back(std::move(row));
  }
  return from_rows(rows);
}

std::string InterferenceMatrix::to_csv() const {
  std::ostringstream os;
  for (int i = 0; i < k_; ++i) {
    for (int j = 0; j < k_; ++j) {
      if (j) os << ',';
      os << format_cell(db_[static_cast<std::size_t>(i) * k_ + j]);
    }
    os << '\n';
  }
  return os.str();
}

void InterferenceMatrix::save_csv(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write matrix file: " + path.string());
  out << to_csv();
}

double InterferenceMatrix::db(int ci, int cj) const {
  if (ci < 1 || ci > k_ || cj < 1 || cj > k_) {
    throw std::out_of_range("channel index outside [1, k]");
  }
  return db_[static_cast<std::size_t>(ci - 1) * k_ + (cj - 1)];
}

double InterferenceMatrix::overlap_linear(int ci, int cj) const {
  if (ci < 1 || ci > k_ || cj < 1 || cj > k_) {
    throw std::out_of_range("channel index outside [1, k]");
  }
  return lin_[static_cast<std::size_t>(ci - 1) * k_ + (cj - 1)];
}

}  // namespace wifiplan
