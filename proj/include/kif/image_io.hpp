#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kif/gray_image.hpp"

namespace kif {

/// Raised for malformed PGM input; `offset()` is the byte position where
/// parsing failed.
class PgmError : public std::runtime_error {
public:
    PgmError(const std::string& what, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Parses a binary (P5) graymap with maxval 255. Header tokens may be
/// separated by any whitespace and '#' comments.
GrayImage read_pgm(std::span<const std::uint8_t> bytes);

/// Emits "P5\n<w> <h>\n255\n" followed by the raw row-major pixels.
std::vector<std::uint8_t> write_pgm(const GrayImage& image);

// File helpers; I/O failures throw std::runtime_error.
GrayImage load_pgm(const std::filesystem::path& path);
void save_pgm(const std::filesystem::path& path, const GrayImage& image);

} // namespace kif
