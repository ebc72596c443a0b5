#include "kif/bench.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "kif/baseline_filters.hpp"
#include "kif/noise_model.hpp"

namespace kif {

std::string_view to_string(FilterKind kind)
{
    switch (kind) {
    case FilterKind::kif: return "kif";
    case FilterKind::smf: return "smf";
    case FilterKind::amf: return "amf";
    }
    return "unknown";
}

std::optional<FilterKind> parse_filter_kind(std::string_view name)
{
    if (name == "kif") return FilterKind::kif;
    if (name == "smf") return FilterKind::smf;
    if (name == "amf") return FilterKind::amf;
    return std::nullopt;
}

void FilterOptions::validate() const
{
    kif.validate();
    if (smf_window < 3 || smf_window % 2 == 0)
        throw std::invalid_argument("SMF window must be an odd integer >= 3");
    if (amf_max_window < 3 || amf_max_window % 2 == 0)
        throw std::invalid_argument("AMF max window must be an odd integer >= 3");
}

GrayImage apply_filter(FilterKind kind, const GrayImage& image, const FilterOptions& options)
{
    switch (kind) {
    case FilterKind::kif: return kif_denoise(image, options.kif);
    case FilterKind::smf: return median_filter(image, options.smf_window);
    case FilterKind::amf: return adaptive_median_filter(image, options.amf_max_window);
    }
    throw std::invalid_argument("unknown filter");
}

std::uint64_t derive_seed(std::uint64_t base_seed, double density)
{
    return base_seed ^ static_cast<std::uint64_t>(std::llround(density * 100.0));
}

std::string format_csv_row(const SweepRow& row)
{
    return std::to_string(row.density_percent) + "," + std::string(to_string(row.filter)) + ","
           + format_psnr(row.quality) + "," + format_number(row.quality.mse) + ","
           + format_number(row.wall_time_ms);
}

std::vector<SweepRow> run_sweep(const GrayImage& original, const SweepOptions& options, std::ostream* csv)
{
    options.filter_options.validate();
    for (const double d : options.densities) {
        if (!(d > 0.0 && d <= 1.0))
            throw std::invalid_argument("sweep densities must lie in (0, 1]");
    }
    if (csv)
        *csv << kSweepCsvHeader << '\n' << std::flush;

    std::vector<SweepRow> rows;
    for (const double density : options.densities) {
        const NoiseSpec spec{density, options.salt_fraction, derive_seed(options.seed, density)};
        const GrayImage noisy = inject_salt_pepper(original, spec);
        for (const FilterKind filter : options.filters) {
            const auto start = std::chrono::steady_clock::now();
            const GrayImage restored = apply_filter(filter, noisy, options.filter_options);
            const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;

            SweepRow row{static_cast<int>(std::lround(density * 100.0)), filter, psnr(original, restored),
                         elapsed.count()};
            if (csv)
                *csv << format_csv_row(row) << '\n' << std::flush;
            rows.push_back(row);
        }
    }
    return rows;
}

} // namespace kif
