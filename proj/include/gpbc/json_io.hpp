#pragma once

#include <cstdint>
#include <limits>

#include <json.hpp>

#include "gpbc/rational.hpp"

namespace gpbc {

// Integers that fit int64 serialize as JSON numbers, larger ones as strings.
inline nlohmann::ordered_json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

// {"num": p, "den": q}
inline nlohmann::ordered_json rational_to_json(const Rational& r) {
  nlohmann::ordered_json out;
  out["num"] = big_to_json(r.num());
  out["den"] = big_to_json(r.den());
  return out;
}

}  // namespace gpbc
