// Copyright 2026 The qcomb developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcomb/io.hpp"

#include <cmath>
#include <fstream>

namespace qcomb {

namespace {

constexpr int kFormatVersion = 1;

const json& require(const json& j, const char* key, const std::string& context) {
  if (!j.is_object() || !j.contains(key))
    throw FormatError(context + ": missing field '" + key + "'");
  return j.at(key);
}

Index require_index(const json& j, const char* key, const std::string& context) {
  const json& v = require(j, key, context);
  if (!v.is_number_integer())
    throw FormatError(context + ": field '" + key + "' must be an integer");
  return v.get<Index>();
}

void check_version(const json& j, const std::string& context) {
  if (require_index(j, "version", context) != kFormatVersion)
    throw FormatError(context + ": unsupported format version");
}

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError(path + ": cannot open file for writing");
  out << j.dump(2) << "\n";
  if (!out) throw FormatError(path + ": write failed");
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json data = json::array();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      data.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const json& j, const std::string& context) {
  const Index rows = require_index(j, "rows", context);
  const Index cols = require_index(j, "cols", context);
  if (rows < 1 || cols < 1) throw FormatError(context + ": matrix shape must be positive");
  const json& data = require(j, "data", context);
  if (!data.is_array() || static_cast<Index>(data.size()) != rows * cols)
    throw FormatError(context + ": 'data' must hold rows*cols entries");

  ComplexMatrix m(rows, cols);
  Index idx = 0;
  for (const json& entry : data) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
        !entry[1].is_number())
      throw FormatError(context + ": entry " + std::to_string(idx) +
                        " must be a [re, im] pair");
    const double re = entry[0].get<double>();
    const double im = entry[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
      throw FormatError(context + ": entry " + std::to_string(idx) + " is not finite");
    m(idx / cols, idx % cols) = Complex(re, im);
    ++idx;
  }
  return m;
}

json layout_to_json(const WireLayout& layout) {
  json wires = json::array();
  for (int w = 0; w < layout.num_wires(); ++w)
    wires.push_back(json{{"label", w}, {"dim", layout.dim(w)}});
  return json{{"wires", std::move(wires)}};
}

WireLayout layout_from_json(const json& j, const std::string& context) {
  const json& wires = require(j, "wires", context);
  if (!wires.is_array() || wires.empty())
    throw FormatError(context + ": 'wires' must be a non-empty array");
  std::vector<int> dims;
  int expected = 0;
  for (const json& wire : wires) {
    const Index label = require_index(wire, "label", context + ".wires");
    const Index dim = require_index(wire, "dim", context + ".wires");
    if (label != expected)
      throw FormatError(context + ": wire labels must be consecutive from 0");
    if (dim < 1) throw FormatError(context + ": wire dimensions must be positive");
    dims.push_back(static_cast<int>(dim));
    ++expected;
  }
  try {
    return WireLayout(dims);
  } catch (const Error& e) {
    throw FormatError(context + ": " + e.what());
  }
}

json comb_to_json(const QuantumComb& comb) {
  json j = layout_to_json(comb.layout);
  j = json{{"version", kFormatVersion}, {"wires", j.at("wires")},
           {"matrix", matrix_to_json(comb.matrix)}};
  return j;
}

QuantumComb comb_from_json(const json& j) {
  const std::string context = "comb";
  check_version(j, context);
  const WireLayout layout = layout_from_json(j, context);
  ComplexMatrix m = matrix_from_json(require(j, "matrix", context), context + ".matrix");
  if (m.rows() != m.cols() || m.rows() != layout.total_dim())
    throw FormatError(context + ": matrix size does not match the wire dimensions");
  return QuantumComb(layout, std::move(m));
}

json network_to_json(const SynthesizedNetwork& net) {
  json steps = json::array();
  for (const IsometryStep& step : net.steps) {
    steps.push_back(json{{"k", step.k},
                         {"d_in", step.d_in},
                         {"d_out", step.d_out},
                         {"r_prev", step.r_prev},
                         {"r_next", step.r_next},
                         {"matrix", matrix_to_json(step.matrix)}});
  }
  json bases = json::array();
  for (const ComplexMatrix& basis : net.ancilla_bases) bases.push_back(matrix_to_json(basis));
  return json{{"version", kFormatVersion},
              {"layout", layout_to_json(net.layout)},
              {"ancilla_dims", net.ancilla_dims},
              {"steps", std::move(steps)},
              {"ancilla_bases", std::move(bases)}};
}

SynthesizedNetwork network_from_json(const json& j) {
  const std::string context = "network";
  check_version(j, context);
  const WireLayout layout = layout_from_json(require(j, "layout", context), context + ".layout");

  const json& anc = require(j, "ancilla_dims", context);
  if (!anc.is_array()) throw FormatError(context + ": 'ancilla_dims' must be an array");
  std::vector<Index> ancilla_dims;
  for (const json& a : anc) {
    if (!a.is_number_integer() || a.get<Index>() < 1)
      throw FormatError(context + ": ancilla dimensions must be positive integers");
    ancilla_dims.push_back(a.get<Index>());
  }

  const json& steps = require(j, "steps", context);
  if (!steps.is_array()) throw FormatError(context + ": 'steps' must be an array");
  SynthesizedNetwork net{layout, std::move(ancilla_dims), {}, {}};
  int idx = 0;
  for (const json& s : steps) {
    const std::string step_context = context + ".steps[" + std::to_string(idx++) + "]";
    IsometryStep step;
    step.k = static_cast<int>(require_index(s, "k", step_context));
    step.d_in = static_cast<int>(require_index(s, "d_in", step_context));
    step.d_out = static_cast<int>(require_index(s, "d_out", step_context));
    step.r_prev = require_index(s, "r_prev", step_context);
    step.r_next = require_index(s, "r_next", step_context);
    step.matrix = matrix_from_json(require(s, "matrix", step_context), step_context);
    net.steps.push_back(std::move(step));
  }

  const json& bases = require(j, "ancilla_bases", context);
  if (!bases.is_array()) throw FormatError(context + ": 'ancilla_bases' must be an array");
  int bidx = 0;
  for (const json& b : bases)
    net.ancilla_bases.push_back(
        matrix_from_json(b, context + ".ancilla_bases[" + std::to_string(bidx++) + "]"));

  try {
    validate_network(net);
  } catch (const Error& e) {
    throw FormatError(context + ": " + e.what());
  }
  return net;
}

void save_comb(const QuantumComb& comb, const std::string& path) {
  write_file(comb_to_json(comb), path);
}

QuantumComb load_comb(const std::string& path) {
  try {
    return comb_from_json(parse_file(path));
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void save_network(const SynthesizedNetwork& net, const std::string& path) {
  write_file(network_to_json(net), path);
}

SynthesizedNetwork load_network(const std::string& path) {
  try {
    return network_from_json(parse_file(path));
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

ComplexMatrix load_matrix(const std::string& path) {
  return matrix_from_json(parse_file(path), path);
}

}  // namespace qcomb
