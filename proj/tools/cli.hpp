#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "tverberg/geom.hpp"
#include "tverberg/solver.hpp"

namespace tverberg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, hex encoded.
std::string fnv1a64(std::string_view bytes);

/// JSON result of a solve, keys in a fixed order.
nlohmann::ordered_json result_document(const PointSet& s, const SolveResult& result);

}  // namespace tverberg::cli
