#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kif/gray_image.hpp"
#include "kif/kif_filter.hpp"
#include "kif/metrics.hpp"

namespace kif {

enum class FilterKind { kif, smf, amf };

std::string_view to_string(FilterKind kind);
std::optional<FilterKind> parse_filter_kind(std::string_view name);

struct FilterOptions {
    FilterConfig kif;
    int smf_window = 3;
    int amf_max_window = 7;

    void validate() const;
};

GrayImage apply_filter(FilterKind kind, const GrayImage& image, const FilterOptions& options);

struct SweepRow {
    int density_percent = 0;
    FilterKind filter = FilterKind::kif;
    QualityReport quality;
    double wall_time_ms = 0;
};

struct SweepOptions {
    std::vector<FilterKind> filters{FilterKind::kif, FilterKind::smf, FilterKind::amf};
    std::vector<double> densities{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    std::uint64_t seed = 0;
    double salt_fraction = 0.5;
    FilterOptions filter_options;
};

/// Noise seed for one density: base_seed XOR round(density · 100).
std::uint64_t derive_seed(std::uint64_t base_seed, double density);

inline constexpr std::string_view kSweepCsvHeader = "density_percent,filter,psnr_db,mse,wall_time_ms";

std::string format_csv_row(const SweepRow& row);

/// Runs every (density, filter) cell in density-major order, scoring each
/// filtered image against `original`. When `csv` is given the header and
/// each row are written and flushed as soon as they are ready.
std::vector<SweepRow> run_sweep(const GrayImage& original, const SweepOptions& options,
                                std::ostream* csv = nullptr);

} // namespace kif
