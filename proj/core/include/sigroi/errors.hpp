#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sigroi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Zero or otherwise unusable image/target dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Invalid operator parameters (e.g. canny low >= high, empty angle list).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An operation that requires ink=1 received a background=1 image.
class ConventionError : public Error {
 public:
  using Error::Error;
};

/// Histogram with no samples.
class EmptyInputError : public Error {
 public:
  using Error::Error;
};

/// Crop rectangle that does not fit inside the image.
class BoundsError : public Error {
 public:
  using Error::Error;
};

/// No foreground pixel anywhere: a blank scan.
class NoForegroundError : public Error {
 public:
  NoForegroundError() : Error("no foreground pixel in image") {}
};

/// Malformed netpbm data. offset() is the byte position where parsing failed.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), detail_(what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }
  /// The message without the offset suffix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t offset_;
};

/// Filesystem failure; the message names the file.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace sigroi
