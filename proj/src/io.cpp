#include "fbp/io.hpp"

#include <cmath>
#include <cstdio>
#include <chrono>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fbp::io {

namespace {

using nlohmann::json;

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
    return in;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
}

std::string next_line(std::istream& in, const char* what) {
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error(std::string("truncated file: expected ") + what);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_double(const std::string& s) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size())
        throw std::runtime_error("malformed number: " + s);
    return v;
}

void write_sinogram_csv(const Sinogram& sino,
                        const std::filesystem::path& path) {
    sino.grid.validate();
    std::ofstream out = open_out(path);
    out << "d,M,N,L\n"
        << format_double(sino.grid.d) << ',' << sino.grid.M << ','
        << sino.grid.N << ',' << format_double(sino.grid.L) << '\n';
    for (int m = -sino.grid.M; m <= sino.grid.M; ++m) {
        for (int n = 0; n < sino.grid.N; ++n) {
            if (n) out << ',';
            out << format_double(sino.at(m, n));
        }
        out << '\n';
    }
}

Sinogram read_sinogram_csv(const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    if (next_line(in, "header") != "d,M,N,L")
        throw std::runtime_error("bad sinogram header in " + path.string());
    const auto meta = split_csv(next_line(in, "grid line"));
    if (meta.size() != 4)
        throw std::runtime_error("bad sinogram grid line in " + path.string());
    Sinogram sino;
    sino.grid.d = parse_double(meta[0]);
    sino.grid.M = std::stoi(meta[1]);
    sino.grid.N = std::stoi(meta[2]);
    sino.grid.L = parse_double(meta[3]);
    sino.grid.validate();
    sino.values.resize(sino.grid.size());
    for (int m = -sino.grid.M; m <= sino.grid.M; ++m) {
        const auto cells = split_csv(next_line(in, "sinogram row"));
        if (static_cast<int>(cells.size()) != sino.grid.N)
            throw std::runtime_error("bad sinogram row width in " + path.string());
        for (int n = 0; n < sino.grid.N; ++n)
            sino.at(m, n) = parse_double(cells[n]);
    }
    return sino;
}

void write_image_csv(const Image& img, const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "side\n" << img.side << '\n';
    for (int iy = 0; iy < img.side; ++iy) {
        for (int ix = 0; ix < img.side; ++ix) {
            if (ix) out << ',';
            out << format_double(img.at(ix, iy));
        }
        out << '\n';
    }
}

Image read_image_csv(const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    if (next_line(in, "header") != "side")
        throw std::runtime_error("bad image header in " + path.string());
    const int side = std::stoi(next_line(in, "side"));
    if (side <= 0) throw std::runtime_error("bad image side in " + path.string());
    Image img(side);
    for (int iy = 0; iy < side; ++iy) {
        const auto cells = split_csv(next_line(in, "image row"));
        if (static_cast<int>(cells.size()) != side)
            throw std::runtime_error("bad image row width in " + path.string());
        for (int ix = 0; ix < side; ++ix)
            img.at(ix, iy) = parse_double(cells[ix]);
    }
    return img;
}

void write_image_pgm(const Image& img, const std::filesystem::path& path) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (double v : img.values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double span = hi > lo ? hi - lo : 1.0;
    std::ofstream out = open_out(path);
    out << "P5\n" << img.side << ' ' << img.side << "\n65535\n";
    for (int iy = 0; iy < img.side; ++iy) {
        for (int ix = 0; ix < img.side; ++ix) {
            const double s = (img.at(ix, iy) - lo) / span;
            const auto q = static_cast<unsigned>(
                std::lround(s * 65535.0));
            out.put(static_cast<char>((q >> 8) & 0xff));  // big-endian sample
            out.put(static_cast<char>(q & 0xff));
        }
    }
    std::ofstream scale = open_out(path.string() + ".scale.txt");
    scale << "min=" << format_double(lo) << "\nmax=" << format_double(hi)
          << "\nvalue = min + (max - min) * sample / 65535\n";
}

namespace {

Phantom phantom_from_json(const json& j, const std::string& fallback_name) {
    const json* comps = &j;
    Phantom phantom;
    phantom.name = fallback_name;
    if (j.is_object()) {
        phantom.name = j.value("name", fallback_name);
        if (!j.contains("components"))
            throw std::runtime_error("phantom JSON object lacks \"components\"");
        comps = &j.at("components");
    }
    if (!comps->is_array())
        throw std::runtime_error("phantom components must be an array");
    for (const json& c : *comps) {
        PhantomComponent pc;
        pc.map.a = c.at("a").get<double>();
        pc.map.b = c.at("b").get<double>();
        pc.map.h = c.value("h", 0.0);
        pc.map.k = c.value("k", 0.0);
        pc.map.phi = c.value("phi", 0.0);
        pc.weight = c.value("weight", 1.0);
        pc.sigma = c.value("sigma", 0.0);
        if (pc.map.a <= 0.0 || pc.map.b <= 0.0)
            throw std::runtime_error("phantom semi-axes must be positive");
        if (pc.sigma < 0.0)
            throw std::runtime_error("phantom sigma must be non-negative");
        phantom.components.push_back(pc);
    }
    if (phantom.components.empty())
        throw std::runtime_error("phantom has no components");
    return phantom;
}

}  // namespace

Phantom load_phantom_json(const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    json j;
    in >> j;
    return phantom_from_json(j, path.stem().string());
}

void write_phantom_json(const Phantom& phantom,
                        const std::filesystem::path& path) {
    json comps = json::array();
    for (const PhantomComponent& c : phantom.components) {
        comps.push_back({{"a", c.map.a},
                         {"b", c.map.b},
                         {"h", c.map.h},
                         {"k", c.map.k},
                         {"phi", c.map.phi},
                         {"weight", c.weight},
                         {"sigma", c.sigma}});
    }
    const json j{{"name", phantom.name}, {"components", comps}};
    open_out(path) << j.dump(2) << '\n';
}

Phantom resolve_phantom(const std::string& name_or_path) {
    if (std::filesystem::exists(name_or_path) &&
        std::filesystem::is_regular_file(name_or_path))
        return load_phantom_json(name_or_path);
    return builtin_phantom(name_or_path);
}

void write_sweep_csv(const std::vector<ExperimentRecord>& records,
                     const std::filesystem::path& path, bool include_wall) {
    std::ofstream out = open_out(path);
    out << "kind,phantom,nu,p,k,L,error,trials,seed,wall_ms\n";
    for (const ExperimentRecord& r : records) {
        out << r.kind << ',' << r.phantom << ',' << r.nu << ','
            << format_double(r.p) << ',' << r.k << ',' << format_double(r.L)
            << ',' << format_double(r.error) << ',' << r.trials << ','
            << r.seed << ',' << format_double(include_wall ? r.wall_ms : 0.0)
            << '\n';
    }
}

std::vector<ExperimentRecord> read_sweep_csv(
    const std::filesystem::path& path) {
    std::ifstream in = open_in(path);
    if (next_line(in, "header") != "kind,phantom,nu,p,k,L,error,trials,seed,wall_ms")
        throw std::runtime_error("bad sweep header in " + path.string());
    std::vector<ExperimentRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto cells = split_csv(line);
        if (cells.size() != 10)
            throw std::runtime_error("bad sweep row in " + path.string());
        ExperimentRecord r;
        r.kind = cells[0];
        r.phantom = cells[1];
        r.nu = std::stoi(cells[2]);
        r.p = parse_double(cells[3]);
        r.k = std::stoi(cells[4]);
        r.L = parse_double(cells[5]);
        r.error = parse_double(cells[6]);
        r.trials = std::stoi(cells[7]);
        r.seed = std::stoull(cells[8]);
        r.wall_ms = parse_double(cells[9]);
        out.push_back(std::move(r));
    }
    return out;
}

void write_slopes_csv(const std::map<SeriesKey, SlopeFit>& slopes,
                      const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "nu,p,slope,intercept,residual\n";
    for (const auto& [key, fit] : slopes) {
        out << key.nu << ',' << format_double(key.p) << ','
            << format_double(fit.slope) << ',' << format_double(fit.intercept)
            << ',' << format_double(fit.residual) << '\n';
    }
}

void write_manifest(
    const std::filesystem::path& output_path, const std::string& command,
    const std::vector<std::pair<std::string, std::string>>& config,
    const std::vector<std::uint64_t>& seeds) {
    json cfg = json::object();
    for (const auto& [key, value] : config) cfg[key] = value;
    const auto now = std::chrono::system_clock::now();
    const json j{{"command", command},
                 {"config", cfg},
                 {"version", kLibraryVersion},
                 {"seeds", seeds},
                 {"timestamp_unix",
                  std::chrono::duration_cast<std::chrono::seconds>(
                      now.time_since_epoch())
                      .count()}};
    open_out(output_path.string() + ".manifest.json") << j.dump(2) << '\n';
}

}  // namespace fbp::io
