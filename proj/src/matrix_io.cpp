#include "aluthge/matrix_io.hpp"

#include <fstream>
#include <sstream>

namespace aluthge {

nlohmann::json matrix_to_json(const Matrix& a) {
  nlohmann::json j;
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      entries.push_back({a(r, c).real(), a(r, c).imag()});
  j["entries"] = std::move(entries);
  return j;
}

Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw IoError("matrix json: expected an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "rows" && key != "cols" && key != "entries")
      throw IoError("matrix json: unknown field '" + key + "'");
  }
  if (!j.contains("rows") || !j.at("rows").is_number_integer())
    throw IoError("matrix json: missing or non-integer field 'rows'");
  if (!j.contains("cols") || !j.at("cols").is_number_integer())
    throw IoError("matrix json: missing or non-integer field 'cols'");
  if (!j.contains("entries") || !j.at("entries").is_array())
    throw IoError("matrix json: missing or non-array field 'entries'");

  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  if (rows <= 0 || cols <= 0) throw IoError("matrix json: 'rows' and 'cols' must be positive");
  const auto& entries = j.at("entries");
  if (static_cast<Eigen::Index>(entries.size()) != rows * cols)
    throw IoError("matrix json: field 'entries' must hold rows*cols pairs");

  Matrix a(rows, cols);
  Eigen::Index k = 0;
  for (const auto& entry : entries) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number())
      throw IoError("matrix json: each entry must be a [re, im] pair");
    const double re = entry[0].get<double>();
    const double im = entry[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
      throw IoError("matrix json: entries must be finite");
    a(k / cols, k % cols) = Complex(re, im);
    ++k;
  }
  return a;
}

std::string matrix_to_csv(const Matrix& a) {
  std::ostringstream os;
  os.precision(17);
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      if (c > 0) os << ',';
      os << a(r, c).real() << ',' << a(r, c).imag();
    }
    os << '\n';
  }
  return os.str();
}

Matrix matrix_from_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    std::vector<double> values;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        values.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw IoError("matrix csv: cannot parse value '" + cell + "'");
      }
    }
    if (values.size() % 2 != 0)
      throw IoError("matrix csv: rows must hold alternating re,im columns");
    rows.push_back(std::move(values));
  }
  if (rows.empty()) throw IoError("matrix csv: no data");
  const size_t cols = rows.front().size() / 2;
  Matrix a(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != 2 * cols) throw IoError("matrix csv: ragged rows");
    for (size_t c = 0; c < cols; ++c)
      a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          Complex(rows[r][2 * c], rows[r][2 * c + 1]);
  }
  return a;
}

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

} // namespace

Matrix read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open matrix file: " + path);
  if (ends_with(path, ".json")) {
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw IoError("matrix file '" + path + "': " + e.what());
    }
    return matrix_from_json(j);
  }
  if (ends_with(path, ".csv")) {
    std::ostringstream os;
    os << in.rdbuf();
    return matrix_from_csv(os.str());
  }
  throw IoError("matrix file '" + path + "': unknown extension (want .json or .csv)");
}

void write_matrix(const std::string& path, const Matrix& a) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  if (ends_with(path, ".json")) {
    out << matrix_to_json(a).dump(2) << '\n';
  } else if (ends_with(path, ".csv")) {
    out << matrix_to_csv(a);
  } else {
    throw IoError("matrix file '" + path + "': unknown extension (want .json or .csv)");
  }
  if (!out) throw IoError("failed writing: " + path);
}

} // namespace aluthge
