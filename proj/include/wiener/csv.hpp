#pragma once

#include "wiener/experiments.hpp"
#include "wiener/simulator.hpp"

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wiener::csv {

/// Thrown when a file cannot be opened or written. The CLI maps it to
/// exit code 3. Malformed file *content* is a ValidationError instead.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shortest decimal string that parses back to exactly the same double.
/// All CSV payload columns use this, so files round-trip bit-for-bit.
std::string format_double(double v);

// Formats: header row mandatory, comma separator, LF line endings.
//   samples  k,z          (k = 1..n)
//   paired   k,z1,z2
//   paths    t,path_1,...,path_m   (one column per trajectory)
//   frame    t,x                   (single trajectory, per-path emission)
//   sweep    n,estimate,true_value
//   rmse     n,rmse

void write_marginal(const std::filesystem::path& file,
                    std::span<const double> values);
std::vector<double> read_marginal(const std::filesystem::path& file);

void write_paired(const std::filesystem::path& file,
                  std::span<const std::pair<double, double>> pairs);
std::vector<std::pair<double, double>>
read_paired(const std::filesystem::path& file);

void write_paths(const std::filesystem::path& file,
                 const std::vector<PathGrid>& paths);
void write_path_frame(const std::filesystem::path& file, const PathGrid& path);

void write_sweep(const std::filesystem::path& file, const SweepResult& sweep);
void write_rmse(const std::filesystem::path& file,
                std::span<const RmseRow> rows);

} // namespace wiener::csv
