// Flat-file formats: sample matrices as headerless CSV or a little-endian
// binary ("PRSAMPL1" magic, two u64 counts, row-major f64), and curve CSV.
#pragma once

#include <filesystem>
#include <string>

#include "prcurve/curve.hpp"
#include "prcurve/sample_set.hpp"

namespace prcurve {

inline constexpr char kMatrixMagic[8] = {'P', 'R', 'S', 'A', 'M', 'P', 'L', '1'};

void write_matrix_csv(const std::filesystem::path& path, const SampleSet& s);
void write_matrix_bin(const std::filesystem::path& path, const SampleSet& s);

SampleSet read_matrix_csv(const std::filesystem::path& path);
SampleSet read_matrix_bin(const std::filesystem::path& path);

// Dispatches on the magic bytes; anything else is parsed as CSV.
SampleSet read_matrix_auto(const std::filesystem::path& path);

// Curve CSV on disk; writes go through a temp file + rename.
void write_curve_file(const std::filesystem::path& path, const std::vector<CurvePoint>& pts);
PrCurve read_curve_file(const std::filesystem::path& path,
                        CurveKind kind = CurveKind::empirical);

// Text written atomically (temp file + rename in the same directory).
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace prcurve
