#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fbp/besov.hpp"
#include "fbp/experiments.hpp"
#include "fbp/filters.hpp"
#include "fbp/io.hpp"
#include "fbp/phantom.hpp"
#include "fbp/pipeline.hpp"
#include "fbp/report.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

double parse_p(const std::string& s) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (const auto slash = s.find('/'); slash != std::string::npos)
        return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
    return std::stod(s);
}

std::vector<double> parse_p_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(parse_p(cell));
    if (out.empty()) throw CLI::ValidationError("--p", "empty list");
    return out;
}

std::vector<int> parse_int_list(const std::string& s, const char* flag) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(std::stoi(cell));
    if (out.empty()) throw CLI::ValidationError(flag, "empty list");
    return out;
}

// "8,12,16" or "a:b:geometric" (a, 1.5a doubled up to b).
std::vector<int> parse_k_list(const std::string& s) {
    if (const auto colon = s.find(':'); colon != std::string::npos) {
        const auto colon2 = s.find(':', colon + 1);
        if (colon2 == std::string::npos || s.substr(colon2 + 1) != "geometric")
            throw CLI::ValidationError("--k", "expected a:b:geometric");
        const int a = std::stoi(s.substr(0, colon));
        const int b = std::stoi(s.substr(colon + 1, colon2 - colon - 1));
        if (a < 1 || b < a)
            throw CLI::ValidationError("--k", "need 1 <= a <= b");
        std::vector<int> out;
        for (int base = a; base <= b; base *= 2) {
            out.push_back(base);
            const int mid = base + base / 2;
            if (mid <= b && mid > base) out.push_back(mid);
        }
        return out;
    }
    auto out = parse_int_list(s, "--k");
    for (int k : out)
        if (k < 1) throw CLI::ValidationError("--k", "need k >= 1");
    return out;
}

// JSON config files mirroring the long option names; nested objects map to
// subcommand sections. Values given on the command line take precedence
// over the file, which takes precedence over built-in defaults.
class JsonConfig : public CLI::Config {
  public:
    std::string to_config(const CLI::App* app, bool default_also, bool,
                          std::string) const override {
        nlohmann::json j = nlohmann::json::object();
        for (const CLI::Option* opt : app->get_options({})) {
            if (opt->get_lnames().empty() || !opt->get_configurable()) continue;
            const std::string& name = opt->get_lnames().front();
            if (opt->count() > 0)
                j[name] = opt->results().front();
            else if (default_also)
                j[name] = opt->get_default_str();
        }
        for (const CLI::App* sub : app->get_subcommands({}))
            j[sub->get_name()] = nlohmann::json::parse(
                to_config(sub, default_also, false, ""));
        return j.dump(2) + "\n";
    }

    std::vector<CLI::ConfigItem> from_config(
        std::istream& input) const override {
        nlohmann::json j;
        input >> j;
        return walk(j, {});
    }

  private:
    static std::vector<CLI::ConfigItem> walk(
        const nlohmann::json& j, const std::vector<std::string>& parents) {
        std::vector<CLI::ConfigItem> out;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it->is_object()) {
                std::vector<std::string> deeper = parents;
                deeper.push_back(it.key());
                const auto sub = walk(*it, deeper);
                out.insert(out.end(), sub.begin(), sub.end());
                continue;
            }
            CLI::ConfigItem item;
            item.parents = parents;
            item.name = it.key();
            if (it->is_string()) {
                item.inputs = {it->get<std::string>()};
            } else if (it->is_array()) {
                for (const auto& e : *it)
                    item.inputs.push_back(
                        e.is_string() ? e.get<std::string>() : e.dump());
            } else {
                item.inputs = {it->dump()};
            }
            out.push_back(std::move(item));
        }
        return out;
    }
};

fbp::Interp parse_interp(const std::string& s) {
    if (s == "linear") return fbp::Interp::Linear;
    if (s == "cubic") return fbp::Interp::CubicSpline;
    throw CLI::ValidationError("--interp", "expected linear|cubic");
}

void write_image_any(const fbp::Image& img, const std::filesystem::path& path) {
    if (path.extension() == ".pgm")
        fbp::io::write_image_pgm(img, path);
    else
        fbp::io::write_image_csv(img, path);
}

int run(int argc, char** argv) {
    CLI::App app{"Filtered back projection for parallel-beam CT with "
                 "smooth low-pass filters and an error-analysis harness"};
    app.require_subcommand(1);
    app.config_formatter(std::make_shared<JsonConfig>());
    app.set_config("--config", "",
                   "JSON config file mirroring the long option names");

    // --- phantom ---
    auto* cmd_phantom = app.add_subcommand(
        "phantom", "Resolve a phantom and write its definition or a rendering");
    std::string ph_name = "shepp-logan", ph_out, ph_image;
    int ph_side = 256;
    cmd_phantom->add_option("--phantom", ph_name,
                            "Built-in name or JSON file");
    cmd_phantom->add_option("--out", ph_out, "Write phantom JSON here");
    cmd_phantom->add_option("--image", ph_image,
                            "Render to CSV or PGM image");
    cmd_phantom->add_option("--side", ph_side, "Render resolution");

    // --- sinogram ---
    auto* cmd_sino = app.add_subcommand(
        "sinogram", "Sample the analytic Radon transform on the lattice");
    std::string sg_name = "shepp-logan", sg_out = "sinogram.csv";
    int sg_k = 16;
    cmd_sino->add_option("--phantom", sg_name, "Built-in name or JSON file");
    cmd_sino->add_option("--k", sg_k, "Bandwidth multiple, L = k*pi")
        ->check(CLI::PositiveNumber);
    cmd_sino->add_option("--out", sg_out, "Output CSV path");

    // --- reconstruct ---
    auto* cmd_rec = app.add_subcommand("reconstruct",
                                       "FBP reconstruction of a phantom");
    std::string rc_name = "shepp-logan", rc_out = "reconstruction.csv";
    std::string rc_interp = "linear", rc_sino_in;
    int rc_k = 16, rc_nu = 5, rc_side = 256;
    cmd_rec->add_option("--phantom", rc_name, "Built-in name or JSON file");
    cmd_rec->add_option("--sinogram", rc_sino_in,
                        "Reconstruct from this sinogram CSV instead");
    cmd_rec->add_option("--k", rc_k, "Bandwidth multiple, L = k*pi")
        ->check(CLI::PositiveNumber);
    cmd_rec->add_option("--nu", rc_nu, "Smooth window order")
        ->check(CLI::NonNegativeNumber);
    cmd_rec->add_option("--interp", rc_interp, "linear|cubic");
    cmd_rec->add_option("--side", rc_side, "Image resolution")
        ->check(CLI::PositiveNumber);
    cmd_rec->add_option("--out", rc_out, "Output image (CSV or .pgm)");

    // --- sweep ---
    auto* cmd_sweep = app.add_subcommand(
        "sweep", "Error sweeps over the bandwidth or the noise level");
    std::string sw_kind, sw_name = "shepp-logan", sw_out = "results.csv";
    std::string sw_nu = "5", sw_p = "2", sw_k = "8:64:geometric";
    std::uint64_t sw_seed = 42;
    int sw_trials = 5, sw_side = 256, sw_fit_from = 0, sw_points = 8;
    double sw_noise = 0.1, sw_alpha = 1.5, sw_seminorm = 0.0, sw_delta0 = 0.02;
    cmd_sweep->add_option("kind", sw_kind, "approx|data|total")->required();
    cmd_sweep->add_option("--phantom", sw_name, "Built-in name or JSON file");
    cmd_sweep->add_option("--nu", sw_nu, "Comma list of window orders");
    cmd_sweep->add_option("--p", sw_p, "Comma list of norms (e.g. 1,4/3,2,inf)");
    cmd_sweep->add_option("--k", sw_k, "Comma list or a:b:geometric");
    cmd_sweep->add_option("--seed", sw_seed, "Noise seed");
    cmd_sweep->add_option("--trials", sw_trials, "Noise realizations per point");
    cmd_sweep->add_option("--side", sw_side, "Image resolution");
    cmd_sweep->add_option("--fit-from", sw_fit_from,
                          "Restrict slope fits to k >= this");
    std::string sw_interp = "linear";
    cmd_sweep->add_option("--interp", sw_interp, "linear|cubic");
    cmd_sweep->add_option("--noise", sw_noise,
                          "Relative noise level (data sweeps)");
    cmd_sweep->add_option("--alpha", sw_alpha,
                          "Smoothness order (total sweeps)");
    cmd_sweep->add_option("--seminorm", sw_seminorm,
                          "Besov semi-norm estimate (total sweeps; "
                          "0 = estimate internally)");
    cmd_sweep->add_option("--delta0", sw_delta0,
                          "Largest noise level (total sweeps)");
    cmd_sweep->add_option("--points", sw_points,
                          "Number of delta halvings (total sweeps)");
    cmd_sweep->add_option("--out", sw_out, "Output CSV path");

    // --- kernel-constant ---
    auto* cmd_kc = app.add_subcommand(
        "kernel-constant", "Radial kernel constant for the smooth window");
    int kc_nu = 5;
    double kc_alpha = 0.25;
    cmd_kc->add_option("--nu", kc_nu, "Smooth window order")->required();
    cmd_kc->add_option("--alpha", kc_alpha, "Moment order")->required();

    // --- filter-table ---
    auto* cmd_ft = app.add_subcommand(
        "filter-table", "Kernel-constant table for nu in {5,7} as CSV");

    // --- verify ---
    auto* cmd_verify = app.add_subcommand("verify", "Property verifications");
    cmd_verify->require_subcommand(1);
    auto* cmd_lemmas = cmd_verify->add_subcommand(
        "lemmas", "Weighted-norm embedding and limit lemmas");
    int vl_trials = 100;
    std::uint64_t vl_seed = 7;
    std::string vl_out;
    cmd_lemmas->add_option("--trials", vl_trials, "Randomized trials per lemma")
        ->check(CLI::PositiveNumber);
    cmd_lemmas->add_option("--seed", vl_seed, "RNG seed");
    cmd_lemmas->add_option("--out", vl_out, "CSV output (default stdout)");

    // --- reproduce ---
    auto* cmd_rep = app.add_subcommand(
        "reproduce", "Run all sweeps and checks, emit figure CSVs + summary");
    std::string rp_out = "report", rp_profile = "desk";
    std::uint64_t rp_seed = 42;
    cmd_rep->add_option("--out", rp_out, "Existing output directory");
    cmd_rep->add_option("--profile", rp_profile, "quick|desk|full");
    cmd_rep->add_option("--seed", rp_seed, "Experiment seed");

    // Argument problems (including a missing subcommand) exit with code 2;
    // explicit --help exits 0.
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (cmd_phantom->parsed()) {
        const fbp::Phantom phantom = fbp::io::resolve_phantom(ph_name);
        if (ph_out.empty() && ph_image.empty()) {
            std::cout << "phantom " << phantom.name << ": "
                      << phantom.components.size() << " components\n";
        }
        if (!ph_out.empty()) {
            fbp::io::write_phantom_json(phantom, ph_out);
            fbp::io::write_manifest(ph_out, "phantom",
                                    {{"phantom", ph_name}}, {});
        }
        if (!ph_image.empty()) {
            write_image_any(fbp::render(phantom, ph_side), ph_image);
            fbp::io::write_manifest(
                ph_image, "phantom",
                {{"phantom", ph_name}, {"side", std::to_string(ph_side)}}, {});
        }
        return 0;
    }

    if (cmd_sino->parsed()) {
        const fbp::Phantom phantom = fbp::io::resolve_phantom(sg_name);
        const auto grid = fbp::SinogramGrid::from_bandwidth(sg_k * kPi);
        fbp::io::write_sinogram_csv(fbp::sample_sinogram(phantom, grid), sg_out);
        fbp::io::write_manifest(
            sg_out, "sinogram",
            {{"phantom", sg_name}, {"k", std::to_string(sg_k)}}, {});
        return 0;
    }

    if (cmd_rec->parsed()) {
        const auto config = fbp::ReconstructionConfig::smooth(
            rc_k, rc_nu, parse_interp(rc_interp), rc_side);
        fbp::Sinogram sino;
        if (!rc_sino_in.empty()) {
            sino = fbp::io::read_sinogram_csv(rc_sino_in);
            if (std::abs(sino.grid.L - rc_k * kPi) > 1e-9)
                throw std::runtime_error(
                    "sinogram bandwidth does not match --k");
        } else {
            sino = fbp::sample_sinogram(fbp::io::resolve_phantom(rc_name),
                                        config.grid());
        }
        write_image_any(fbp::reconstruct(sino, config), rc_out);
        fbp::io::write_manifest(rc_out, "reconstruct",
                                {{"phantom", rc_name},
                                 {"sinogram", rc_sino_in},
                                 {"k", std::to_string(rc_k)},
                                 {"nu", std::to_string(rc_nu)},
                                 {"interp", rc_interp},
                                 {"side", std::to_string(rc_side)}},
                                {});
        return 0;
    }

    if (cmd_sweep->parsed()) {
        const fbp::Phantom phantom = fbp::io::resolve_phantom(sw_name);
        fbp::SweepConfig config;
        config.p_list = parse_p_list(sw_p);
        config.nu_list = parse_int_list(sw_nu, "--nu");
        config.k_list = parse_k_list(sw_k);
        config.fit_from_k = sw_fit_from;
        config.side = sw_side;
        config.interp = parse_interp(sw_interp);
        fbp::NoiseSpec noise{sw_noise, sw_seed};
        fbp::SweepResult result;
        if (sw_kind == "approx") {
            result = fbp::sweep_approximation(phantom, config);
        } else if (sw_kind == "data") {
            result = fbp::sweep_data_error(phantom, config, noise, sw_trials);
        } else if (sw_kind == "total") {
            double seminorm = sw_seminorm;
            if (seminorm <= 0.0)
                seminorm = fbp::besov_seminorm(phantom, sw_alpha,
                                               config.p_list.front(),
                                               config.p_list.front())
                               .value;
            std::vector<double> deltas;
            for (int i = 0; i < sw_points; ++i)
                deltas.push_back(sw_delta0 * std::pow(0.5, i));
            result = fbp::sweep_total_error(
                phantom, sw_alpha, seminorm, deltas, config.p_list.front(),
                config.nu_list.front(), noise, sw_trials, sw_side);
        } else {
            throw CLI::ValidationError("kind", "expected approx|data|total");
        }
        fbp::io::write_sweep_csv(result.records, sw_out);
        fbp::io::write_slopes_csv(
            result.slopes, std::filesystem::path(sw_out).string() + ".slopes.csv");
        fbp::io::write_manifest(sw_out, "sweep " + sw_kind,
                                {{"phantom", sw_name},
                                 {"nu", sw_nu},
                                 {"p", sw_p},
                                 {"k", sw_k},
                                 {"trials", std::to_string(sw_trials)},
                                 {"side", std::to_string(sw_side)},
                                 {"noise", fbp::io::format_double(sw_noise)}},
                                {sw_seed});
        return 0;
    }

    if (cmd_kc->parsed()) {
        const fbp::AlphaConstant c = fbp::kernel_alpha_constant(kc_nu, kc_alpha);
        if (c.divergent)
            std::cout << "divergent\n";
        else
            std::cout << fbp::io::format_double(c.value) << '\n';
        return 0;
    }

    if (cmd_ft->parsed()) {
        std::cout << "nu";
        for (int col = 1; col <= 8; ++col)
            std::cout << ",alpha=" << fbp::io::format_double(0.25 * col);
        std::cout << '\n';
        for (int nu : {5, 7}) {
            std::cout << nu;
            for (int col = 1; col <= 8; ++col) {
                const auto c = fbp::kernel_alpha_constant(nu, 0.25 * col);
                std::cout << ','
                          << (c.divergent ? std::string("divergent")
                                          : fbp::io::format_double(c.value));
            }
            std::cout << '\n';
        }
        return 0;
    }

    if (cmd_lemmas->parsed()) {
        std::ofstream file;
        if (!vl_out.empty()) {
            file.open(vl_out, std::ios::binary);
            if (!file) throw std::runtime_error("cannot open " + vl_out);
        }
        std::ostream& out = vl_out.empty() ? std::cout : file;
        std::mt19937_64 rng(vl_seed);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        auto random_steps = [&]() {
            const int n = 3 + static_cast<int>(rng() % 10);
            std::vector<double> t(n), v(n);
            for (int i = 0; i < n; ++i)
                t[i] = std::exp(std::log(1e-3) +
                                uni(rng) * (std::log(50.0) - std::log(1e-3)));
            std::sort(t.begin(), t.end());
            double acc = 0.0;
            for (int i = 0; i < n; ++i) {
                acc += 0.05 + uni(rng);
                v[i] = acc;
            }
            return fbp::IncreasingFunction::steps(std::move(t), std::move(v));
        };
        out << "trial,lemma,alpha,p,q,c,lhs,rhs,holds\n";
        int failures = 0;
        for (int trial = 0; trial < vl_trials; ++trial) {
            const auto g = random_steps();
            const double alpha = 0.05 + 0.4 * uni(rng);
            const double q = 1.0 + 2.0 * uni(rng);
            const double p = q + 0.5 + 2.5 * uni(rng);
            const double c = 1.1 + 8.9 * uni(rng);
            const auto emb = fbp::verify_lemma_embedding_p(g, alpha, p, q, c);
            const auto sup = fbp::verify_lemma_embedding_inf(g, alpha, q, c);
            failures += !emb.holds + !sup.holds;
            out << trial << ",embedding_p," << fbp::io::format_double(alpha)
                << ',' << fbp::io::format_double(p) << ','
                << fbp::io::format_double(q) << ','
                << fbp::io::format_double(c) << ','
                << fbp::io::format_double(emb.lhs) << ','
                << fbp::io::format_double(emb.rhs) << ','
                << (emb.holds ? 1 : 0) << '\n';
            out << trial << ",embedding_inf," << fbp::io::format_double(alpha)
                << ",inf," << fbp::io::format_double(q) << ','
                << fbp::io::format_double(c) << ','
                << fbp::io::format_double(sup.lhs) << ','
                << fbp::io::format_double(sup.rhs) << ','
                << (sup.holds ? 1 : 0) << '\n';
        }
        std::cerr << (failures == 0 ? "all lemma trials passed\n"
                                    : "lemma trials FAILED\n");
        return failures == 0 ? 0 : 1;
    }

    if (cmd_rep->parsed()) {
        fbp::report::Options opts;
        opts.profile = fbp::report::parse_profile(rp_profile);
        opts.seed = rp_seed;
        const fbp::report::Report report =
            fbp::report::reproduce_paper(rp_out, opts);
        for (const auto& c : report.criteria)
            std::cout << "criterion " << c.id << " [" << c.name << "]: "
                      << (c.pass ? "PASS" : "FAIL") << " - " << c.detail
                      << '\n';
        std::cout << (report.all_pass ? "ALL CRITERIA PASS\n"
                                      : "SOME CRITERIA FAILED\n");
        return report.all_pass ? 0 : 1;
    }

    return 2;  // unreachable: require_subcommand enforces a choice
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::Error&) {
        return 2;  // CLI11_PARSE handles most of these; safety net
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
