#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fbp/experiments.hpp"
#include "fbp/grid.hpp"
#include "fbp/phantom.hpp"

namespace fbp::io {

inline constexpr const char* kLibraryVersion = "1.0.0";

// Shortest-round-trip serialization (17 significant digits) so files are
// bit-reproducible; infinity is written as "inf".
std::string format_double(double v);
double parse_double(const std::string& s);

// Sinogram CSV: line 1 "d,M,N,L", line 2 the values, then (2M+1) rows of
// N comma-separated samples (row m = -M first).
void write_sinogram_csv(const Sinogram& sino, const std::filesystem::path& path);
Sinogram read_sinogram_csv(const std::filesystem::path& path);

// Image CSV: line 1 "side", line 2 the value, then `side` rows of `side`
// samples (row iy = 0 first).
void write_image_csv(const Image& img, const std::filesystem::path& path);
Image read_image_csv(const std::filesystem::path& path);

// 16-bit binary PGM, min-max scaled; the scaling (min, max) is recorded in
// "<path>.scale.txt" so values can be recovered.
void write_image_pgm(const Image& img, const std::filesystem::path& path);

// Phantom JSON: {"name": ..., "components": [{a,b,h,k,phi,weight,sigma}...]}
// with phi in radians. Bare arrays of component records are also accepted.
Phantom load_phantom_json(const std::filesystem::path& path);
void write_phantom_json(const Phantom& phantom,
                        const std::filesystem::path& path);

// Resolves a phantom argument: a built-in name ("shepp-logan", "unit-disk",
// "smooth:<sigma>") or a path to a phantom JSON file.
Phantom resolve_phantom(const std::string& name_or_path);

// Sweep CSV with header kind,phantom,nu,p,k,L,error,trials,seed,wall_ms.
// If `include_wall` is false the wall_ms column is written as 0 so repeated
// runs are byte-identical (used by the figure outputs).
void write_sweep_csv(const std::vector<ExperimentRecord>& records,
                     const std::filesystem::path& path,
                     bool include_wall = true);
std::vector<ExperimentRecord> read_sweep_csv(const std::filesystem::path& path);

// Slope CSV with header nu,p,slope,intercept,residual.
void write_slopes_csv(const std::map<SeriesKey, SlopeFit>& slopes,
                      const std::filesystem::path& path);

// Run manifest sidecar "<path>.manifest.json": command, resolved
// configuration, library version, timestamp, seeds.
void write_manifest(const std::filesystem::path& output_path,
                    const std::string& command,
                    const std::vector<std::pair<std::string, std::string>>& config,
                    const std::vector<std::uint64_t>& seeds);

}  // namespace fbp::io
