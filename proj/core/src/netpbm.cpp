#include "sigroi/netpbm.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>

#include "sigroi/errors.hpp"

namespace sigroi {
namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::byte> data) : data_(data) {}

  std::size_t offset() const noexcept { return pos_; }
  std::size_t field_start() const noexcept { return field_start_; }

  char magic() {
    if (data_.size() < 2 || static_cast<char>(data_[0]) != 'P') {
      throw FormatError("missing netpbm magic number", 0);
    }
    const char kind = static_cast<char>(data_[1]);
    if (kind != '4' && kind != '5' && kind != '6') {
      throw FormatError(std::string("unsupported netpbm magic P") + kind, 1);
    }
    pos_ = 2;
    return kind;
  }

  // Skips whitespace and comments, then reads a decimal field.
  int field(const char* name) {
    skip_separators();
    const std::size_t start = pos_;
    field_start_ = start;
    long long value = 0;
    while (pos_ < data_.size() && std::isdigit(byte_at(pos_))) {
      value = value * 10 + (byte_at(pos_) - '0');
      if (value > std::numeric_limits<int>::max()) throw FormatError(std::string(name) + " too large", start);
      ++pos_;
    }
    if (pos_ == start) {
      if (pos_ >= data_.size()) throw FormatError(std::string("truncated header, expected ") + name, pos_);
      throw FormatError(std::string("expected ") + name, pos_);
    }
    return static_cast<int>(value);
  }

  // Exactly one whitespace byte separates the header from the raster.
  void end_of_header() {
    if (pos_ >= data_.size()) throw FormatError("truncated header", pos_);
    if (!std::isspace(byte_at(pos_))) throw FormatError("expected whitespace after header", pos_);
    ++pos_;
  }

 private:
  int byte_at(std::size_t i) const { return static_cast<unsigned char>(data_[i]); }

  void skip_separators() {
    while (pos_ < data_.size()) {
      const int c = byte_at(pos_);
      if (c == '#') {
        while (pos_ < data_.size() && byte_at(pos_) != '\n') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        return;
      }
    }
  }

  std::span<const std::byte> data_;
  std::size_t pos_ = 0;
  std::size_t field_start_ = 0;
};

void append_header(std::vector<std::byte>& out, const std::string& header) {
  for (char ch : header) out.push_back(static_cast<std::byte>(ch));
}

std::size_t packed_row_bytes(int width) { return (static_cast<std::size_t>(width) + 7) / 8; }

}  // namespace

std::vector<std::byte> encode_netpbm(const AnyImage& img) {
  std::vector<std::byte> out;
  std::visit(
      [&out](const auto& im) {
        using T = std::decay_t<decltype(im)>;
        const std::string dims = std::to_string(im.width()) + " " + std::to_string(im.height()) + "\n";
        if constexpr (std::is_same_v<T, RgbImage>) {
          append_header(out, "P6\n" + dims + "255\n");
          for (auto v : im.pixels()) out.push_back(static_cast<std::byte>(v));
        } else if constexpr (std::is_same_v<T, GrayImage>) {
          append_header(out, "P5\n" + dims + "255\n");
          for (auto v : im.pixels()) out.push_back(static_cast<std::byte>(v));
        } else {
          append_header(out, "P4\n" + dims);
          const bool flip = im.convention() == Convention::BackgroundIsOne;
          const std::size_t row_bytes = packed_row_bytes(im.width());
          for (int r = 0; r < im.height(); ++r) {
            std::vector<unsigned> row(row_bytes, 0U);
            for (int c = 0; c < im.width(); ++c) {
              const unsigned bit = im.at(r, c) ^ (flip ? 1U : 0U);
              row[static_cast<std::size_t>(c) / 8] |= bit << (7 - c % 8);
            }
            for (unsigned b : row) out.push_back(static_cast<std::byte>(b));
          }
        }
      },
      img);
  return out;
}

AnyImage decode_netpbm(std::span<const std::byte> data) {
  HeaderReader header(data);
  const char kind = header.magic();
  const int width = header.field("width");
  const int height = header.field("height");
  if (width < 1 || height < 1) throw FormatError("image dimensions must be positive", header.offset());
  if (kind != '4') {
    const int maxval = header.field("maxval");
    if (maxval != 255) {
      throw FormatError("maxval must be 255, got " + std::to_string(maxval), header.field_start());
    }
  }
  header.end_of_header();

  const std::size_t start = header.offset();
  const std::size_t pixels = static_cast<std::size_t>(width) * height;
  const std::size_t expected = kind == '6'   ? pixels * 3
                               : kind == '5' ? pixels
                                             : packed_row_bytes(width) * height;
  if (data.size() - start < expected) {
    throw FormatError("truncated payload: expected " + std::to_string(expected) + " bytes, found " +
                          std::to_string(data.size() - start),
                      data.size());
  }
  const auto payload = data.subspan(start, expected);

  if (kind == '6' || kind == '5') {
    std::vector<std::uint8_t> px(expected);
    for (std::size_t i = 0; i < expected; ++i) px[i] = static_cast<std::uint8_t>(payload[i]);
    if (kind == '6') return RgbImage(width, height, std::move(px));
    return GrayImage(width, height, std::move(px));
  }

  std::vector<std::uint8_t> bits(pixels);
  const std::size_t row_bytes = packed_row_bytes(width);
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      const auto byte = static_cast<unsigned>(payload[static_cast<std::size_t>(r) * row_bytes + c / 8]);
      bits[static_cast<std::size_t>(r) * width + c] = static_cast<std::uint8_t>((byte >> (7 - c % 8)) & 1U);
    }
  }
  return BinaryImage(width, height, Convention::InkIsOne, std::move(bits));
}

AnyImage read_image(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::vector<char> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error reading " + path.string());
  try {
    return decode_netpbm(std::as_bytes(std::span<const char>(raw)));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.detail(), e.offset());
  }
}

RgbImage read_rgb(const std::filesystem::path& path) {
  return std::visit(
      [](auto&& im) -> RgbImage {
        using T = std::decay_t<decltype(im)>;
        if constexpr (std::is_same_v<T, RgbImage>) {
          return std::move(im);
        } else {
          return to_rgb(im);
        }
      },
      read_image(path));
}

void write_image(const AnyImage& img, const std::filesystem::path& path) {
  const auto bytes = encode_netpbm(img);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("error writing " + path.string());
}

std::string_view netpbm_extension(const AnyImage& img) noexcept {
  switch (img.index()) {
    case 0:
      return ".ppm";
    case 1:
      return ".pgm";
    default:
      return ".pbm";
  }
}

}  // namespace sigroi
