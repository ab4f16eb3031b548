#pragma once

#include <atomic>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace dclr {

// Error hierarchy; message names the offending field/shape where possible.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error("config error: " + msg) {}
};

class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& msg) : Error("shape error: " + msg) {}
};

class IndexError : public Error {
 public:
  explicit IndexError(const std::string& msg) : Error("index error: " + msg) {}
};

class DataError : public Error {
 public:
  explicit DataError(const std::string& msg) : Error("data error: " + msg) {}
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& msg) : Error("numerical error: " + msg) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error("io error: " + msg) {}
};

class IntegrityError : public Error {
 public:
  explicit IntegrityError(const std::string& msg) : Error("integrity error: " + msg) {}
};

#define DCLR_CHECK(cond, exc_type, msg)        \
  do {                                         \
    if (!(cond)) {                             \
      std::ostringstream oss__;                \
      oss__ << msg;                            \
      throw exc_type(oss__.str());             \
    }                                          \
  } while (0)

// Named warning events. Rare fallback paths (zero-weight pooling, empty
// retrieval, non-positive prior similarities) bump a counter and print once
// per event kind; tests read the counters.
namespace events {

enum Kind : int {
  kWeightedPoolZeroWeights = 0,
  kRetrievalEmpty,
  kPriorWeightsUniformFallback,
  kShortVideoFewerClips,
  kRecallKClamped,
  kKindCount,
};

std::uint64_t count(Kind k);
void record(Kind k, const std::string& detail);
void reset_all();

}  // namespace events

// FNV-1a 64-bit; used for config hashes and checkpoint checksums.
std::uint64_t fnv1a64(const void* data, std::size_t n, std::uint64_t seed = 0xcbf29ce484222325ull);
std::uint64_t fnv1a64(const std::string& s);

std::string hex64(std::uint64_t v);

}  // namespace dclr
