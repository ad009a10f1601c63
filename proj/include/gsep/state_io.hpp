#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "gsep/gaussian_state.hpp"

namespace gsep {

/// Covariance-matrix document:
///
///   {"n_modes": 2, "ordering": "xp-interleaved",
///    "matrix": [[...], ...], "partition": {"A": [0], "B": [1]}}
///
/// "ordering" and "partition" are optional on input. Input whose matrix is
/// asymmetric by more than 1e-9 is rejected, never symmetrized.
struct StateDocument {
  CovarianceMatrix state;
  std::optional<ModePartition> partition;
};

inline constexpr double kMaxInputAsymmetry = 1e-9;

StateDocument parse_state_document(std::string_view text);
StateDocument read_state_document(const std::filesystem::path& path);

/// Doubles are written in shortest round-trip form, so parse(dump(x)) == x.
std::string dump_state_document(const StateDocument& doc);
void write_state_document(const std::filesystem::path& path, const StateDocument& doc);

}  // namespace gsep
