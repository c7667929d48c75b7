#pragma once

#include <string>

#include "qcorr/density.hpp"

namespace qcorr {

/// Parse {"dimA": int, "dimB": int, "matrix": [[[re, im], ...], ...]}.
/// Syntax and shape problems throw ParseError; a well-formed matrix that is
/// not a density matrix throws InvalidState or DimensionMismatch.
DensityMatrix parseState(const std::string& text);

/// Reads and parses a state file. Unreadable files throw ParseError.
DensityMatrix readStateFile(const std::string& path);

/// Serialize in the same format, every number with 17 significant digits.
std::string serializeState(const DensityMatrix& rho);

void writeStateFile(const DensityMatrix& rho, const std::string& path);

}  // namespace qcorr
