#include "needlet/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "needlet/error.hpp"

namespace needlet {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
  return out;
}

[[noreturn]] void fail(const std::filesystem::path& path, std::size_t line_no, const std::string& what) {
  std::ostringstream msg;
  msg << path.string();
  if (line_no) msg << ':' << line_no;
  msg << ": " << what;
  throw IoError(msg.str());
}

double parse_double(const std::string& s, const std::filesystem::path& path, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) fail(path, line_no, "malformed number '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    fail(path, line_no, "malformed number '" + s + "'");
  }
}

long parse_index(const std::string& s, const std::filesystem::path& path, std::size_t line_no) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(path, line_no, "malformed index '" + s + "'");
  return v;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path.string() + ": cannot open file");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError(path.string() + ": cannot write file");
  out.precision(17);
  return out;
}

void write_metadata(std::ostream& out, const Metadata& metadata) {
  if (metadata.empty()) return;
  out << '#';
  for (const auto& [k, v] : metadata) out << ' ' << k << '=' << v;
  out << '\n';
}

void parse_metadata(const std::string& line, Metadata& metadata) {
  std::stringstream ss(line.substr(1));
  std::string token;
  while (ss >> token) {
    const auto eq = token.find('=');
    if (eq != std::string::npos) metadata[token.substr(0, eq)] = token.substr(eq + 1);
  }
}

}  // namespace

DataFile read_data_file(const std::filesystem::path& path, std::optional<DataKind> headerless) {
  auto in = open_in(path);
  DataFile file;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::vector<std::pair<long, std::vector<double>>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '#') {
      parse_metadata(t, file.metadata);
      continue;
    }
    const auto cells = split(t);
    if (!have_header) {
      have_header = true;
      if (cells == std::vector<std::string>{"l", "re", "im"}) {
        file.kind = DataKind::Coefficients;
        continue;
      }
      if (cells == std::vector<std::string>{"m", "value"}) {
        file.kind = DataKind::Samples;
        continue;
      }
      if (cells == std::vector<std::string>{"k", "beta"}) {
        file.kind = DataKind::Beta;
        continue;
      }
      if (!headerless) fail(path, line_no, "expected a column header 'l,re,im', 'm,value' or 'k,beta'");
      file.kind = *headerless;  // this line is already data
    }
    const std::size_t expected = file.kind == DataKind::Coefficients ? 3 : 2;
    if (cells.size() != expected) fail(path, line_no, "expected " + std::to_string(expected) + " columns");
    std::vector<double> values;
    for (std::size_t c = 1; c < cells.size(); ++c) values.push_back(parse_double(cells[c], path, line_no));
    rows.emplace_back(parse_index(cells[0], path, line_no), std::move(values));
  }
  if (!have_header) fail(path, 0, "no column header found");
  if (rows.empty()) fail(path, 0, "no data rows");

  const long first = file.kind == DataKind::Coefficients ? 1 : 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].first != first + static_cast<long>(i)) {
      fail(path, 0, "indices must run contiguously from " + std::to_string(first));
    }
  }
  switch (file.kind) {
    case DataKind::Coefficients: {
      std::vector<std::complex<double>> w(rows.size() + 1);
      for (std::size_t i = 0; i < rows.size(); ++i) w[i + 1] = {rows[i].second[0], rows[i].second[1]};
      file.field = make_field(std::move(w));
      break;
    }
    case DataKind::Samples:
      file.samples.M = rows.size();
      for (const auto& r : rows) file.samples.values.push_back(r.second[0]);
      break;
    case DataKind::Beta:
      for (const auto& r : rows) file.beta.push_back(r.second[0]);
      break;
  }
  return file;
}

void write_coefficients(const std::filesystem::path& path, const SpectralField& field, const Metadata& metadata) {
  auto out = open_out(path);
  write_metadata(out, metadata);
  out << "l,re,im\n";
  for (std::size_t l = 1; l <= field.l_max; ++l) out << l << ',' << field.w[l].real() << ',' << field.w[l].imag() << '\n';
  if (!out) throw IoError(path.string() + ": write failed");
}

void write_samples(const std::filesystem::path& path, const GridSample& samples, const Metadata& metadata) {
  auto out = open_out(path);
  write_metadata(out, metadata);
  out << "m,value\n";
  for (std::size_t m = 0; m < samples.values.size(); ++m) out << m << ',' << samples.values[m] << '\n';
  if (!out) throw IoError(path.string() + ": write failed");
}

void write_beta(const std::filesystem::path& path, const std::vector<double>& beta, const Metadata& metadata) {
  auto out = open_out(path);
  write_metadata(out, metadata);
  out << "k,beta\n";
  for (std::size_t k = 0; k < beta.size(); ++k) out << k << ',' << beta[k] << '\n';
  if (!out) throw IoError(path.string() + ": write failed");
}

std::map<std::size_t, double> read_g_table(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::map<std::size_t, double> table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto cells = split(t);
    if (cells == std::vector<std::string>{"l", "value"}) continue;
    if (cells.size() != 2) fail(path, line_no, "expected 'l,value'");
    const long l = parse_index(cells[0], path, line_no);
    if (l < 1) fail(path, line_no, "l must be >= 1");
    table[static_cast<std::size_t>(l)] = parse_double(cells[1], path, line_no);
  }
  if (table.empty()) fail(path, 0, "no g values");
  return table;
}

}  // namespace needlet
