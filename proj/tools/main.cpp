#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "sliclab/config.hpp"
#include "sliclab/runner.hpp"

namespace {

std::string resolve_out_dir(const slic::Config& cfg, const std::string& override_dir) {
    std::string dir = override_dir.empty()
                          ? cfg.get_or("experiment.output_dir", "out")
                          : override_dir;
    std::filesystem::path p(dir);
    if (p.is_relative()) {
        if (const char* root = std::getenv("SLICLAB_OUTPUT_ROOT"))
            p = std::filesystem::path(root) / p;
    }
    return p.string();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sliclab: singular self-similar wave fans, mollified residuals, "
                 "and energy balances"};
    app.require_subcommand(1);

    std::string config_path, out_override, manifest_path;

    auto* run = app.add_subcommand("run", "run an experiment from a config file");
    run->add_option("config", config_path, "config file")->required();
    run->add_option("-o,--out", out_override, "output directory override");

    auto* plot = app.add_subcommand("plotdata", "derive plot tables from a manifest");
    plot->add_option("manifest", manifest_path, "manifest.json of a finished run")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            const auto cfg = slic::Config::parse_file(config_path);
            const auto out_dir = resolve_out_dir(cfg, out_override);
            const auto manifest = slic::run_experiment(cfg, out_dir);
            for (const auto& c : manifest.checks)
                std::cout << c.name << ": " << c.status << " (value=" << c.value
                          << ", target=" << c.target << ")\n";
            std::cout << "manifest: " << out_dir << "/manifest.json\n";
            return manifest.all_ok() ? 0 : 1;
        }
        const auto files = slic::emit_plot_data(manifest_path);
        for (const auto& f : files) std::cout << f << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
