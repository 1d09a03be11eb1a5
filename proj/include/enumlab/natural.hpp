#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace enumlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unbounded natural number. Register contents, listing values and SAT codes
/// all live here; step counts stay in std::uint64_t.
using Natural = boost::multiprecision::cpp_int;

/// Parses a non-empty run of decimal digits. Throws Error otherwise.
Natural parse_natural(std::string_view text);

std::string to_string(const Natural& value);

/// The value as uint64 when it fits, nothing otherwise.
std::optional<std::uint64_t> to_u64(const Natural& value);

}  // namespace enumlab
