#pragma once

#include <optional>
#include <string>

#include "prony/hankel.hpp"
#include "prony/signal.hpp"
#include "prony/solver.hpp"
#include "prony/types.hpp"

namespace prony {

// JSON schemas (complex numbers are [re, im] pairs):
//   signal:   { "support": [ { "node": [re, im],
//                              "amplitudes": [[re, im], ...] }, ... ] }
//   moments:  { "moments": [[re, im], ...] }
//             optionally with "clean_moments" alongside noisy data
//   solution: { "signal": {...}, "diagnostics": {...} }
// Malformed input throws IoError.

std::string signal_to_json(const Signal& f);
Signal signal_from_json(const std::string& text);

std::string moments_to_json(const MomentVector& mu,
                            const std::optional<MomentVector>& clean = std::nullopt);
MomentVector moments_from_json(const std::string& text);

std::string solution_to_json(const SolveResult& result);
std::string classification_to_json(const SolvabilityReport& report);
std::string error_to_json(const std::string& type, const std::string& message);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace prony
