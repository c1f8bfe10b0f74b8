#include <cmath>
#include <doctest.h>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "fbp/grid.hpp"
#include "fbp/io.hpp"
#include "fbp/phantom.hpp"

namespace {

namespace fs = std::filesystem;
constexpr double kPi = std::numbers::pi;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / "fbp_io_test";
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("format_double round-trips exactly") {
    for (double v : {1.0 / 3.0, 0.1, -1e-30, 1e300, 0.0, 2.5,
                     0.30000000000000004}) {
        CHECK(fbp::io::parse_double(fbp::io::format_double(v)) == v);
    }
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(fbp::io::format_double(inf) == "inf");
    CHECK(fbp::io::parse_double("inf") == inf);
    CHECK(fbp::io::parse_double("-inf") == -inf);
}

TEST_CASE("sinogram CSV round-trip is byte-identical") {
    TempDir tmp;
    const fbp::SinogramGrid g = fbp::SinogramGrid::from_bandwidth(4.0 * kPi);
    const fbp::Sinogram sino =
        fbp::sample_sinogram(fbp::shepp_logan_phantom(), g);
    const fs::path a = tmp.path / "a.csv", b = tmp.path / "b.csv";
    fbp::io::write_sinogram_csv(sino, a);
    const fbp::Sinogram back = fbp::io::read_sinogram_csv(a);
    CHECK(back.grid.M == g.M);
    CHECK(back.grid.N == g.N);
    CHECK(back.grid.d == g.d);
    CHECK(back.grid.L == g.L);
    CHECK(back.values == sino.values);
    fbp::io::write_sinogram_csv(back, b);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("image CSV round-trip is byte-identical") {
    TempDir tmp;
    const fbp::Image img = fbp::render(fbp::smooth_phantom(1.0), 16);
    const fs::path a = tmp.path / "a.csv", b = tmp.path / "b.csv";
    fbp::io::write_image_csv(img, a);
    const fbp::Image back = fbp::io::read_image_csv(a);
    CHECK(back.side == img.side);
    CHECK(back.values == img.values);
    fbp::io::write_image_csv(back, b);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("PGM writer emits the image and its scale sidecar") {
    TempDir tmp;
    const fbp::Image img = fbp::render(fbp::unit_disk_phantom(), 12);
    const fs::path p = tmp.path / "img.pgm";
    fbp::io::write_image_pgm(img, p);
    const std::string data = slurp(p);
    CHECK(data.substr(0, 2) == "P5");
    CHECK(fs::exists(tmp.path / "img.pgm.scale.txt"));
}

TEST_CASE("phantom JSON round-trip preserves evaluation") {
    TempDir tmp;
    const fbp::Phantom p = fbp::shepp_logan_desk_phantom();
    const fs::path path = tmp.path / "ph.json";
    fbp::io::write_phantom_json(p, path);
    const fbp::Phantom back = fbp::io::load_phantom_json(path);
    CHECK(back.name == p.name);
    REQUIRE(back.components.size() == p.components.size());
    for (double x : {-0.4, 0.0, 0.3})
        for (double y : {-0.6, 0.1, 0.5})
            CHECK(back.evaluate(x, y) == p.evaluate(x, y));
}

TEST_CASE("resolve_phantom handles builtins and files") {
    TempDir tmp;
    CHECK(fbp::io::resolve_phantom("shepp-logan").components.size() == 10);
    const fs::path path = tmp.path / "one.json";
    {
        std::ofstream out(path);
        out << "[{\"a\":0.5,\"b\":0.5,\"h\":0,\"k\":0,\"phi\":0,"
               "\"weight\":2,\"sigma\":1}]";
    }
    const fbp::Phantom p = fbp::io::resolve_phantom(path.string());
    REQUIRE(p.components.size() == 1);
    CHECK(p.components[0].weight == 2.0);
    CHECK_THROWS(fbp::io::resolve_phantom("no-such-phantom"));
}

TEST_CASE("sweep CSV round-trip is byte-identical") {
    TempDir tmp;
    std::vector<fbp::ExperimentRecord> records;
    fbp::ExperimentRecord r;
    r.kind = "approx";
    r.phantom = "unit-disk";
    r.nu = 5;
    r.p = 4.0 / 3.0;
    r.k = 8;
    r.L = 8.0 * kPi;
    r.error = 1.0 / 3.0;
    r.trials = 3;
    r.seed = 42;
    r.wall_ms = 12.5;
    records.push_back(r);
    r.nu = 7;
    r.p = std::numeric_limits<double>::infinity();
    records.push_back(r);

    const fs::path a = tmp.path / "a.csv", b = tmp.path / "b.csv";
    fbp::io::write_sweep_csv(records, a);
    const auto back = fbp::io::read_sweep_csv(a);
    REQUIRE(back.size() == records.size());
    CHECK(back[0].p == records[0].p);
    CHECK(back[0].error == records[0].error);
    CHECK(back[1].p == records[1].p);
    CHECK(back[1].seed == records[1].seed);
    fbp::io::write_sweep_csv(back, b);
    CHECK(slurp(a) == slurp(b));

    std::istringstream header(slurp(a));
    std::string first;
    std::getline(header, first);
    CHECK(first == "kind,phantom,nu,p,k,L,error,trials,seed,wall_ms");
}

TEST_CASE("figure mode zeroes the wall-clock column") {
    TempDir tmp;
    std::vector<fbp::ExperimentRecord> records(1);
    records[0].kind = "approx";
    records[0].phantom = "x";
    records[0].wall_ms = 99.0;
    const fs::path p = tmp.path / "w.csv";
    fbp::io::write_sweep_csv(records, p, /*include_wall=*/false);
    const auto back = fbp::io::read_sweep_csv(p);
    CHECK(back[0].wall_ms == 0.0);
}

TEST_CASE("manifest sidecar is written next to the output") {
    TempDir tmp;
    const fs::path out = tmp.path / "result.csv";
    {
        std::ofstream f(out);
        f << "x\n";
    }
    fbp::io::write_manifest(out, "sweep", {{"nu", "5"}}, {42});
    const std::string m = slurp(tmp.path / "result.csv.manifest.json");
    CHECK(m.find("\"sweep\"") != std::string::npos);
    CHECK(m.find(fbp::io::kLibraryVersion) != std::string::npos);
}
