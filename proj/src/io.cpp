#include "qic/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace qic {

namespace {

using nlohmann::json;

ComplexMatrix matrix_from_json(const json &rows) {
  if (!rows.is_array() || rows.empty())
    throw ParseError("matrix: expected a non-empty array of rows");
  const std::size_t dim = rows.size();
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const json &row = rows.at(i);
    if (!row.is_array() || row.size() != dim)
      throw ParseError("matrix: rows must be square");
    for (std::size_t j = 0; j < dim; ++j) {
      const json &entry = row.at(j);
      if (!entry.is_array() || entry.size() != 2 ||
          !entry.at(0).is_number() || !entry.at(1).is_number())
        throw ParseError("matrix: entries must be [real, imaginary] pairs");
      m(i, j) = cxd(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  return m;
}

json matrix_to_json(const ComplexMatrix &m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

const std::map<std::string, std::vector<cxd>> &named_states() {
  static const std::map<std::string, std::vector<cxd>> table = {
      {"bell0", bell_state(0).amplitudes()},
      {"bell3", bell_state(3).amplitudes()},
      {"ket00", {cxd(1, 0), cxd(0, 0), cxd(0, 0), cxd(0, 0)}},
      {"ket01", {cxd(0, 0), cxd(1, 0), cxd(0, 0), cxd(0, 0)}},
      {"ket10", {cxd(0, 0), cxd(0, 0), cxd(1, 0), cxd(0, 0)}},
      {"ket11", {cxd(0, 0), cxd(0, 0), cxd(0, 0), cxd(1, 0)}},
  };
  return table;
}

std::string slurp(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace

DensityMatrix parse_state(const std::string &text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception &e) {
    throw ParseError(std::string("state document: ") + e.what());
  }
  if (!j.is_object())
    throw ParseError("state document: expected an object");

  if (j.contains("mixture")) {
    const json &mix = j.at("mixture");
    if (!mix.is_array() || mix.empty())
      throw ParseError("mixture: expected a non-empty array");
    if (j.contains("dim") && j.at("dim") != 4)
      throw ParseError("mixture: named states are two-qubit (dim 4)");
    ComplexMatrix m(4, 4);
    for (const json &item : mix) {
      if (!item.is_array() || item.size() != 2 || !item.at(0).is_number() ||
          !item.at(1).is_string())
        throw ParseError("mixture: entries must be [weight, name] pairs");
      const double w = item.at(0).get<double>();
      const std::string name = item.at(1).get<std::string>();
      const auto it = named_states().find(name);
      if (it == named_states().end())
        throw ParseError("mixture: unknown state name '" + name + "'");
      m = m + w * outer(it->second, it->second);
    }
    return DensityMatrix(std::move(m), 2, 2);
  }

  std::size_t dim = 0;
  ComplexMatrix m;
  try {
    if (!j.contains("dim") || !j.at("dim").is_number_integer())
      throw ParseError("state document: integer field 'dim' required");
    dim = j.at("dim").get<std::size_t>();
    if (dim < 1 || dim > 8)
      throw ParseError("state document: dim must be between 1 and 8");
    m = matrix_from_json(j.at("matrix"));
  } catch (const json::exception &e) {
    throw ParseError(std::string("state document: ") + e.what());
  }
  if (m.rows() != dim)
    throw ParseError("state document: matrix size does not match dim");
  if (dim == 4)
    return DensityMatrix(std::move(m), 2, 2);
  return DensityMatrix(std::move(m), dim, 1);
}

DensityMatrix read_state_file(const std::string &path) {
  return parse_state(slurp(path));
}

std::string format_state(const DensityMatrix &m) {
  json j;
  j["dim"] = m.dim();
  j["matrix"] = matrix_to_json(m.matrix());
  return j.dump(2) + "\n";
}

KrausChannel parse_channel(const std::string &text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception &e) {
    throw ParseError(std::string("channel document: ") + e.what());
  }
  if (!j.is_object())
    throw ParseError("channel document: expected an object");

  std::vector<ComplexMatrix> ops;
  std::string label;
  try {
    if (!j.contains("kraus") || !j.at("kraus").is_array())
      throw ParseError("channel document: array field 'kraus' required");
    for (const json &mj : j.at("kraus"))
      ops.push_back(matrix_from_json(mj));
    if (j.contains("label"))
      label = j.at("label").get<std::string>();
  } catch (const json::exception &e) {
    throw ParseError(std::string("channel document: ") + e.what());
  }
  return KrausChannel(std::move(ops), std::move(label));
}

KrausChannel read_channel_file(const std::string &path) {
  return parse_channel(slurp(path));
}

std::string format_channel(const KrausChannel &ch) {
  json j;
  json ops = json::array();
  for (const ComplexMatrix &a : ch.kraus_ops())
    ops.push_back(matrix_to_json(a));
  j["kraus"] = std::move(ops);
  if (!ch.label().empty())
    j["label"] = ch.label();
  return j.dump(2) + "\n";
}

} // namespace qic
