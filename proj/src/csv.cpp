#include "funits/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <string_view>
#include <system_error>

namespace funits {

namespace {

std::string read_whole_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open file: " + path.string());
  }
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw IoError("read failure: " + path.string());
  }
  return text;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_field(std::string_view field, const std::filesystem::path& path, std::size_t line_no) {
  const std::string_view f = trim(field);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
  if (ec != std::errc() || ptr != f.data() + f.size() || f.empty()) {
    throw ParseError(path.string() + ":" + std::to_string(line_no) +
                     ": non-numeric field '" + std::string(field) + "'");
  }
  if (!std::isfinite(value)) {
    throw ParseError(path.string() + ":" + std::to_string(line_no) +
                     ": non-finite value '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

Mat load_matrix_csv(const std::filesystem::path& path) {
  const std::string text = read_whole_file(path);

  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    lines.emplace_back(text.data() + pos, eol - pos);
    pos = eol + 1;
  }
  if (!lines.empty() && trim(lines.back()).empty()) {
    lines.pop_back();  // trailing newline
  }

  std::vector<std::vector<double>> rows;
  std::size_t cols = 0;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::string_view line = lines[li];
    const std::size_t line_no = li + 1;
    std::vector<double> row;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      std::string_view field = (comma == std::string_view::npos)
                                   ? line.substr(start)
                                   : line.substr(start, comma - start);
      row.push_back(parse_field(field, path, line_no));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (cols == 0) {
      cols = row.size();
    } else if (row.size() != cols) {
      throw RaggedError(path.string() + ":" + std::to_string(line_no) + ": expected " +
                        std::to_string(cols) + " fields, got " + std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw ParseError(path.string() + ": empty input");
  }

  Mat m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
  }
  return m;
}

void save_matrix_csv(const Mat& m, const std::filesystem::path& path) {
  require_finite(m, "save_matrix_csv");
  std::string out;
  out.reserve(static_cast<std::size_t>(m.size()) * 12);
  char buf[32];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const auto res = std::to_chars(buf, buf + sizeof(buf), m(i, j));
      if (j) out.push_back(',');
      out.append(buf, res.ptr);
    }
    out.push_back('\n');
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    throw IoError("cannot open file for writing: " + path.string());
  }
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) {
    throw IoError("write failure: " + path.string());
  }
}

std::vector<int> load_labels_csv(const std::filesystem::path& path) {
  const Mat m = load_matrix_csv(path);
  if (m.cols() != 1) {
    throw RaggedError(path.string() + ": labels file must have one column, got " +
                      std::to_string(m.cols()));
  }
  std::vector<int> labels(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const double v = m(i, 0);
    const int li = static_cast<int>(std::llround(v));
    if (std::abs(v - li) > 0.0) {
      throw ParseError(path.string() + ":" + std::to_string(i + 1) +
                       ": label is not an integer");
    }
    labels[static_cast<std::size_t>(i)] = li;
  }
  return labels;
}

void save_labels_csv(const std::vector<int>& labels, const std::filesystem::path& path) {
  std::string out;
  for (int v : labels) {
    out += std::to_string(v);
    out.push_back('\n');
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    throw IoError("cannot open file for writing: " + path.string());
  }
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) {
    throw IoError("write failure: " + path.string());
  }
}

}  // namespace funits
