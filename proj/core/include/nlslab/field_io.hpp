#pragma once

#include <filesystem>
#include <string>

#include "nlslab/grid.hpp"

namespace nlslab {

// CSV with header "x,re,im", one node per row, 17 significant digits.
void write_field_csv(const std::filesystem::path& path, const Field& u);
Field read_field_csv(const std::filesystem::path& path);

// Binary dump: little-endian f64 n, f64 L, then n (re, im) f64 pairs.
// Round trip is bit exact.
void write_field_binary(const std::filesystem::path& path, const Field& u);
Field read_field_binary(const std::filesystem::path& path);

// Solver checkpoint: f64 t, f64 dt, u64 step index, then the field dump.
struct Checkpoint {
    double t = 0.0;
    double dt = 0.0;
    std::uint64_t step = 0;
    Field field;
};
void write_checkpoint(const std::filesystem::path& path, const Checkpoint& c);
Checkpoint read_checkpoint(const std::filesystem::path& path);

// All CSV output in this project goes through this: shortest representation
// that round-trips a double (printf %.17g).
std::string format_double(double x);

}  // namespace nlslab
