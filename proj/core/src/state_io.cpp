#include "qcorr/state_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

std::size_t readDim(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("state file: missing \"") + key + "\"");
  const auto& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1)
    throw ParseError(std::string("state file: \"") + key + "\" must be a positive integer");
  return v.get<std::size_t>();
}

void appendNumber(std::string& out, double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
}

}  // namespace

DensityMatrix parseState(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("state file: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("state file: top level must be an object");
  const std::size_t dimA = readDim(doc, "dimA");
  const std::size_t dimB = readDim(doc, "dimB");
  if (!doc.contains("matrix") || !doc.at("matrix").is_array())
    throw ParseError("state file: \"matrix\" must be an array of rows");
  const auto& rows = doc.at("matrix");
  const std::size_t n = rows.size();
  if (n == 0) throw ParseError("state file: empty matrix");

  ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = rows[r];
    if (!row.is_array() || row.size() != n)
      throw ParseError("state file: row " + std::to_string(r) + " must have " + std::to_string(n) +
                       " entries (matrix must be square)");
    for (std::size_t c = 0; c < n; ++c) {
      const auto& z = row[c];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
        throw ParseError("state file: entry (" + std::to_string(r) + ", " + std::to_string(c) +
                         ") must be [re, im]");
      m(r, c) = Complex(z[0].get<double>(), z[1].get<double>());
    }
  }
  if (dimA * dimB != n)
    throw DimensionMismatch("state file: dimA * dimB = " + std::to_string(dimA * dimB) +
                            " but the matrix is " + std::to_string(n) + " x " + std::to_string(n));
  return DensityMatrix(std::move(m), dimA, dimB);
}

DensityMatrix readStateFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open state file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parseState(ss.str());
}

std::string serializeState(const DensityMatrix& rho) {
  std::string out = "{\"dimA\": " + std::to_string(rho.dimA()) +
                    ", \"dimB\": " + std::to_string(rho.dimB()) + ", \"matrix\": [\n";
  const auto& m = rho.matrix();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += "  [";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ", ";
      out += '[';
      appendNumber(out, m(r, c).real());
      out += ", ";
      appendNumber(out, m(r, c).imag());
      out += ']';
    }
    out += r + 1 < m.rows() ? "],\n" : "]\n";
  }
  out += "]}\n";
  return out;
}

void writeStateFile(const DensityMatrix& rho, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write state file '" + path + "'");
  out << serializeState(rho);
}

}  // namespace qcorr
