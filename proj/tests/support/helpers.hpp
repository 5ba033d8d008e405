#pragma once

#include "stokes/enumerate.hpp"
#include "stokes/io.hpp"
#include "stokes/level_datum.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace testing {

inline stokes::LevelDatum L(std::string_view text) { return stokes::parse_level_datum(text); }

inline std::string S(const stokes::LevelDatum& datum) { return stokes::format_datum(datum); }

inline std::vector<std::string> S(const std::vector<stokes::LevelDatum>& data) {
  std::vector<std::string> out;
  for (const auto& d : data) out.push_back(S(d));
  return out;
}

// Every valid level datum with ramification <= max_ram and top level below
// `top`, plus the empty datum.
inline std::vector<stokes::LevelDatum> corpus(std::int64_t max_ram = 24, std::int64_t top = 4) {
  std::vector<stokes::LevelDatum> out{stokes::LevelDatum()};
  for (std::int64_t r = 2; r <= max_ram; ++r) {
    auto batch = stokes::level_data_with_ram(r, stokes::OpenInterval{stokes::Rational(0), stokes::Rational(top)});
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

}  // namespace testing
