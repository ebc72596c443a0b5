#include "kif/image_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <limits>

namespace kif {

PgmError::PgmError(const std::string& what, std::size_t offset)
    : std::runtime_error("PGM parse error at byte " + std::to_string(offset) + ": " + what)
    , offset_(offset)
{
}

namespace {

class HeaderReader {
public:
    HeaderReader(std::span<const std::uint8_t> bytes, std::size_t start) : bytes_(bytes), pos_(start) {}

    std::size_t position() const { return pos_; }

    void skip_whitespace_and_comments()
    {
        while (pos_ < bytes_.size()) {
            const auto c = bytes_[pos_];
            if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r')
                    ++pos_;
            } else if (std::isspace(c)) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    // Reads an unsigned decimal token and returns it with its start offset.
    std::pair<unsigned long long, std::size_t> read_number(const char* name)
    {
        skip_whitespace_and_comments();
        const std::size_t start = pos_;
        if (pos_ >= bytes_.size())
            throw PgmError(std::string("unexpected end of header reading ") + name, pos_);
        unsigned long long value = 0;
        while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
            value = value * 10 + static_cast<unsigned>(bytes_[pos_] - '0');
            if (value > std::numeric_limits<int>::max())
                throw PgmError(std::string(name) + " is too large", start);
            ++pos_;
        }
        if (pos_ == start)
            throw PgmError(std::string("expected a number for ") + name, start);
        return {value, start};
    }

    // Exactly one whitespace byte separates maxval from the raster.
    void expect_single_whitespace()
    {
        if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_]))
            throw PgmError("expected whitespace after maxval", pos_);
        ++pos_;
    }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_;
};

} // namespace

GrayImage read_pgm(std::span<const std::uint8_t> bytes)
{
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
        if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '2')
            throw PgmError("ASCII (P2) graymaps are not supported", 0);
        throw PgmError("bad magic, expected \"P5\"", 0);
    }
    HeaderReader r(bytes, 2);
    if (bytes.size() > 2 && !std::isspace(bytes[2]) && bytes[2] != '#')
        throw PgmError("bad magic, expected \"P5\"", 2);

    const auto [width, width_at] = r.read_number("width");
    const auto [height, height_at] = r.read_number("height");
    const auto [maxval, maxval_at] = r.read_number("maxval");
    if (width == 0)
        throw PgmError("zero width", width_at);
    if (height == 0)
        throw PgmError("zero height", height_at);
    if (maxval != 255)
        throw PgmError("maxval must be 255, got " + std::to_string(maxval), maxval_at);
    r.expect_single_whitespace();

    const std::size_t payload_at = r.position();
    const std::size_t expected = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    if (bytes.size() - payload_at < expected) {
        throw PgmError("truncated payload: expected " + std::to_string(expected) + " bytes, found "
                           + std::to_string(bytes.size() - payload_at),
                       bytes.size());
    }
    return GrayImage::from_row_major(static_cast<int>(width), static_cast<int>(height),
                                     bytes.subspan(payload_at, expected));
}

std::vector<std::uint8_t> write_pgm(const GrayImage& image)
{
    const std::string header =
        "P5\n" + std::to_string(image.width()) + " " + std::to_string(image.height()) + "\n255\n";
    std::vector<std::uint8_t> out;
    out.reserve(header.size() + image.size());
    out.insert(out.end(), header.begin(), header.end());
    const auto pixels = image.data();
    out.insert(out.end(), pixels.begin(), pixels.end());
    return out;
}

GrayImage load_pgm(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return read_pgm(bytes);
}

void save_pgm(const std::filesystem::path& path, const GrayImage& image)
{
    const auto bytes = write_pgm(image);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw std::runtime_error("write failed for " + path.string());
}

} // namespace kif
