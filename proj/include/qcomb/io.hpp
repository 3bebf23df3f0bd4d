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

#ifndef QCOMB_IO_HPP
#define QCOMB_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "qcomb/comb.hpp"
#include "qcomb/synthesis.hpp"
#include "qcomb/types.hpp"

// JSON persistence. Matrices are stored dense row-major as [re, im] pairs;
// the serializer emits shortest round-trip decimal literals, so every IEEE
// double survives a save/load cycle bit-exactly. Comb matrices are stored in
// canonical ascending-label factor ordering.

namespace qcomb {

using json = nlohmann::ordered_json;

json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j, const std::string& context);

json layout_to_json(const WireLayout& layout);
WireLayout layout_from_json(const json& j, const std::string& context);

json comb_to_json(const QuantumComb& comb);
QuantumComb comb_from_json(const json& j);

json network_to_json(const SynthesizedNetwork& net);
SynthesizedNetwork network_from_json(const json& j);

// File helpers; all failures (I/O, parse, schema) surface as FormatError with
// the offending file and field in the message.
void save_comb(const QuantumComb& comb, const std::string& path);
QuantumComb load_comb(const std::string& path);
void save_network(const SynthesizedNetwork& net, const std::string& path);
SynthesizedNetwork load_network(const std::string& path);

// Bare matrix file ({"rows":..,"cols":..,"data":[[re,im],..]}), used for
// passing unitaries to the command line.
ComplexMatrix load_matrix(const std::string& path);

}  // namespace qcomb

#endif  // QCOMB_IO_HPP
