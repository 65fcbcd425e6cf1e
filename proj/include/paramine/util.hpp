#ifndef PARAMINE_UTIL_HPP
#define PARAMINE_UTIL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace paramine {

// Bad or inconsistent input data (malformed files, contract violations).
class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Caller misuse (bad flag values, out-of-range parameters).
class UsageError : public std::runtime_error {
public:
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

inline std::uint64_t fnv1a(std::string_view data, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string lowercase_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

} // namespace paramine

#endif
