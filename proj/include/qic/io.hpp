#pragma once

#include <stdexcept>
#include <string>

#include "qic/channels.hpp"
#include "qic/states.hpp"

namespace qic {

// Malformed document structure. Domain violations (non-PSD state, broken
// completeness relation) surface as the constructors' invalid_argument
// instead, so callers can map the two failure classes to different exits.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// State documents: {"dim": n, "matrix": [[[re, im], ...], ...]} or the
// named-mixture convenience {"mixture": [[weight, name], ...]} with names
// from {bell0, bell3, ket00, ket01, ket10, ket11}. Dimension-4 states are
// treated as two-qubit systems.
DensityMatrix parse_state(const std::string &text);
DensityMatrix read_state_file(const std::string &path);
std::string format_state(const DensityMatrix &m);

// Channel documents: {"kraus": [matrix, ...], "label": optional}.
KrausChannel parse_channel(const std::string &text);
KrausChannel read_channel_file(const std::string &path);
std::string format_channel(const KrausChannel &ch);

} // namespace qic
