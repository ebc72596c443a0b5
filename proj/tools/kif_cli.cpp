// kif: salt & pepper noise injection, kriging/median denoising, quality
// metrics and density sweeps over binary PGM images.
//
// Exit codes: 0 success, 1 usage error, 2 I/O or format error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kif/bench.hpp"
#include "kif/image_io.hpp"
#include "kif/metrics.hpp"
#include "kif/noise_model.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct FilterFlags {
    std::string filter = "kif";
    int window = 8;
    std::string model = "linear";
    int min_samples = 3;
    int max_expansion = 3;
    std::size_t min_pairs = 30;
    int smf_window = 3;
    int amf_max_window = 7;

    CLI::Option* window_opt = nullptr;
    CLI::Option* model_opt = nullptr;
    CLI::Option* min_samples_opt = nullptr;
    CLI::Option* max_expansion_opt = nullptr;
    CLI::Option* min_pairs_opt = nullptr;
    CLI::Option* smf_window_opt = nullptr;
    CLI::Option* amf_window_opt = nullptr;

    void add_to(CLI::App& cmd)
    {
        window_opt = cmd.add_option("--window", window, "KIF tile size k (k x k)")->capture_default_str();
        model_opt = cmd.add_option("--model", model, "KIF variogram model: nugget, linear, exponential")
                        ->capture_default_str();
        min_samples_opt = cmd.add_option("--min-samples", min_samples, "KIF minimum samples per tile")
                              ->capture_default_str();
        max_expansion_opt = cmd.add_option("--max-expansion", max_expansion,
                                           "KIF tile growth steps for sample-starved tiles")
                                ->capture_default_str();
        min_pairs_opt = cmd.add_option("--min-pairs", min_pairs,
                                       "KIF minimum pairs for a lag bin to enter the variogram fit")
                            ->capture_default_str();
        smf_window_opt = cmd.add_option("--smf-window", smf_window, "SMF window size (odd)")->capture_default_str();
        amf_window_opt = cmd.add_option("--amf-max-window", amf_max_window, "AMF maximum window size (odd)")
                             ->capture_default_str();
    }

    kif::FilterOptions options() const
    {
        kif::FilterOptions opts;
        opts.kif.window_size = window;
        const auto kind = kif::parse_model_kind(model);
        if (!kind)
            throw UsageError("unknown variogram model '" + model + "'");
        opts.kif.model_kind = *kind;
        opts.kif.min_samples = min_samples;
        opts.kif.max_expansion = max_expansion;
        opts.kif.min_pairs_per_bin = min_pairs;
        opts.smf_window = smf_window;
        opts.amf_max_window = amf_max_window;
        try {
            opts.validate();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return opts;
    }

    // Rejects flags that belong to a filter other than `kind`.
    void check_applicable(kif::FilterKind kind) const
    {
        auto reject = [](const CLI::Option* opt, std::string_view filter) {
            if (opt->count() > 0)
                throw UsageError(opt->get_name() + " does not apply to filter '" + std::string(filter) + "'");
        };
        const auto name = kif::to_string(kind);
        if (kind != kif::FilterKind::kif) {
            for (const auto* opt : {window_opt, model_opt, min_samples_opt, max_expansion_opt, min_pairs_opt})
                reject(opt, name);
        }
        if (kind != kif::FilterKind::smf)
            reject(smf_window_opt, name);
        if (kind != kif::FilterKind::amf)
            reject(amf_window_opt, name);
    }
};

kif::FilterKind parse_filter(const std::string& name)
{
    const auto kind = kif::parse_filter_kind(name);
    if (!kind)
        throw UsageError("unknown filter '" + name + "' (expected kif, smf or amf)");
    return *kind;
}

int run_inject(const std::string& input, const std::string& output, double density, double salt_fraction,
               std::uint64_t seed)
{
    const kif::NoiseSpec spec{density, salt_fraction, seed};
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto result = kif::inject_salt_pepper_counted(kif::load_pgm(input), spec);
    kif::save_pgm(output, result.image);
    std::cout << "corrupted=" << result.corrupted << '\n';
    return 0;
}

int run_denoise(const std::string& input, const std::string& output, const FilterFlags& flags)
{
    const auto kind = parse_filter(flags.filter);
    flags.check_applicable(kind);
    const auto options = flags.options();

    const auto image = kif::load_pgm(input);
    const auto start = std::chrono::steady_clock::now();
    const auto restored = kif::apply_filter(kind, image, options);
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    kif::save_pgm(output, restored);
    std::cout << "wall_time_ms=" << kif::format_number(elapsed.count()) << '\n';
    return 0;
}

int run_evaluate(const std::string& reference, const std::string& test)
{
    const auto a = kif::load_pgm(reference);
    const auto b = kif::load_pgm(test);
    if (a.width() != b.width() || a.height() != b.height())
        throw std::runtime_error("dimension mismatch between " + reference + " and " + test);
    const auto report = kif::psnr(a, b);
    std::cout << "mse=" << kif::format_number(report.mse) << " psnr=" << kif::format_psnr(report) << '\n';
    return 0;
}

int run_sweep(const std::string& input, const std::vector<std::string>& filters,
              const std::vector<double>& densities, std::uint64_t seed, double salt_fraction,
              const std::string& csv_path, const FilterFlags& flags)
{
    kif::SweepOptions options;
    options.filters.clear();
    for (const auto& f : filters)
        options.filters.push_back(parse_filter(f));
    options.densities = densities;
    for (const double d : densities) {
        if (!(d > 0.0 && d <= 1.0))
            throw UsageError("densities must lie in (0, 1], got " + kif::format_number(d));
    }
    if (!(salt_fraction >= 0.0 && salt_fraction <= 1.0))
        throw UsageError("salt fraction must lie in [0, 1]");
    options.seed = seed;
    options.salt_fraction = salt_fraction;
    options.filter_options = flags.options();

    const auto image = kif::load_pgm(input);
    if (csv_path == "-") {
        kif::run_sweep(image, options, &std::cout);
        return 0;
    }
    std::ofstream csv(csv_path, std::ios::binary | std::ios::trunc);
    if (!csv)
        throw std::runtime_error("cannot open " + csv_path + " for writing");
    kif::run_sweep(image, options, &csv);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Kriging interpolation filter for salt & pepper noise"};
    app.require_subcommand(1);

    std::string input, output;
    double density = 0.0;
    double salt_fraction = 0.5;
    std::uint64_t seed = 0;

    auto* inject = app.add_subcommand("inject", "Corrupt a PGM with salt & pepper noise");
    inject->add_option("-i,--input", input, "Input PGM")->required();
    inject->add_option("-o,--output", output, "Output PGM")->required();
    inject->add_option("-d,--density", density, "Fraction of pixels to corrupt, in [0, 1]")->required();
    inject->add_option("--salt-fraction", salt_fraction, "Share of corrupted pixels set to 255")
        ->capture_default_str();
    inject->add_option("-s,--seed", seed, "Generator seed (mt19937_64)")->capture_default_str();

    FilterFlags denoise_flags;
    auto* denoise = app.add_subcommand("denoise", "Filter a PGM with kif, smf or amf");
    denoise->add_option("-i,--input", input, "Input PGM")->required();
    denoise->add_option("-o,--output", output, "Output PGM")->required();
    denoise->add_option("-f,--filter", denoise_flags.filter, "kif, smf or amf")->capture_default_str();
    denoise_flags.add_to(*denoise);

    std::string reference, test;
    auto* evaluate = app.add_subcommand("evaluate", "Print MSE and PSNR between two PGMs");
    evaluate->add_option("reference", reference, "Reference PGM")->required();
    evaluate->add_option("test", test, "Test PGM")->required();

    std::vector<std::string> filters{"kif", "smf", "amf"};
    std::vector<double> densities{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    std::string csv_path = "-";
    FilterFlags sweep_flags;
    auto* sweep = app.add_subcommand("sweep", "Benchmark filters over a range of noise densities");
    sweep->add_option("-i,--input", input, "Original (noise-free) PGM")->required();
    sweep->add_option("--filters", filters, "Filters to run")->delimiter(',')->capture_default_str();
    sweep->add_option("--densities", densities, "Noise densities in (0, 1]")->delimiter(',')->capture_default_str();
    sweep->add_option("-s,--seed", seed, "Base seed; each density uses seed XOR round(100 * density)")
        ->capture_default_str();
    sweep->add_option("--salt-fraction", salt_fraction, "Share of corrupted pixels set to 255")
        ->capture_default_str();
    sweep->add_option("--csv", csv_path, "CSV output path, '-' for stdout")->capture_default_str();
    sweep_flags.add_to(*sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*inject)
            return run_inject(input, output, density, salt_fraction, seed);
        if (*denoise)
            return run_denoise(input, output, denoise_flags);
        if (*evaluate)
            return run_evaluate(reference, test);
        if (*sweep)
            return run_sweep(input, filters, densities, seed, salt_fraction, csv_path, sweep_flags);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitUsage;
}
