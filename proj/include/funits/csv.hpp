#pragma once

#include <filesystem>
#include <vector>

#include "funits/matrix.hpp"

namespace funits {

// Headerless CSV, LF line endings, one row per line. Values are written with
// the shortest decimal representation that round-trips exactly (<= 17
// significant digits), so save followed by load is the identity.
Mat load_matrix_csv(const std::filesystem::path& path);
void save_matrix_csv(const Mat& m, const std::filesystem::path& path);

// Single-column integer CSV used for cluster/truth labels.
std::vector<int> load_labels_csv(const std::filesystem::path& path);
void save_labels_csv(const std::vector<int>& labels, const std::filesystem::path& path);

// Shortest round-trip decimal form of one value (shared with report writers).
std::string format_double(double v);

}  // namespace funits
