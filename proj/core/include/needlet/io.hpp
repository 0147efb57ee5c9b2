#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "needlet/field.hpp"

namespace needlet {

/// Text formats. Every file starts with zero or more `# key=value ...`
/// metadata lines, then a column header that identifies the content:
///   l,re,im   spectral coefficients w_l, l >= 1
///   m,value   grid samples X(2 pi m / M), m = 0..M-1
///   k,beta    needlet coefficients beta_{N,k}, k = 0..N-1
enum class DataKind { Coefficients, Samples, Beta };

using Metadata = std::map<std::string, std::string>;

struct DataFile {
  DataKind kind = DataKind::Coefficients;
  Metadata metadata;
  SpectralField field;         // Coefficients
  GridSample samples;          // Samples
  std::vector<double> beta;    // Beta
};

/// Throws IoError naming the path (missing file, bad header, malformed row,
/// non-contiguous indices). A file without a column header is accepted
/// only when `headerless` says what it holds.
DataFile read_data_file(const std::filesystem::path& path, std::optional<DataKind> headerless = std::nullopt);

void write_coefficients(const std::filesystem::path& path, const SpectralField& field, const Metadata& metadata);
void write_samples(const std::filesystem::path& path, const GridSample& samples, const Metadata& metadata);
void write_beta(const std::filesystem::path& path, const std::vector<double>& beta, const Metadata& metadata = {});

/// `l,value` lines (an optional `l,value` header and `#` comments allowed).
std::map<std::size_t, double> read_g_table(const std::filesystem::path& path);

}  // namespace needlet
