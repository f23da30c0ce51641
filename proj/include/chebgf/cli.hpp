#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage error.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "chebgf/genfun.hpp"

namespace chebgf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// {"t_coeffs": [[c_{0,0}, c_{0,1}, ...], ...]}: entry [i][j] is the
/// coefficient of t^i x^j as a decimal string.
nlohmann::json bipoly_to_json(const BiPoly& p);

/// Inverse of bipoly_to_json. Accepts integer or rational ("p/q") strings.
BiPoly bipoly_from_json(const nlohmann::json& j);

/// {"s": s, "numerator": {...}, "denominator": {...}}.
nlohmann::json fs_to_json(unsigned s, const RatFun& f);

/// Parses and runs; argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chebgf::cli
