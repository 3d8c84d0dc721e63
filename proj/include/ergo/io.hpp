// Copyright 2026 The Ergo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "json.hpp"

#include "ergo/entangle.hpp"
#include "ergo/epo.hpp"
#include "ergo/passive.hpp"
#include "ergo/qcore.hpp"
#include "ergo/tripartite.hpp"

// JSON wire format. Objects use sorted keys; doubles are written in the
// shortest form that round-trips exactly, and +-inf as the strings "inf" and
// "-inf".
namespace ergo::io {

using Json = nlohmann::json;

Json number(double x);
double to_double(const Json& j, const std::string& path = "");

/// {"dims":[...], "re":[[...]], "im":[[...]]}
Json matrix_to_json(const ComplexMatrix& m, const Dims& dims = {});
ComplexMatrix matrix_from_json(const Json& j, Dims* dims = nullptr, const std::string& path = "");

Json to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const Json& j, const std::string& path = "");

/// {"dims":[...], "re":[...], "im":[...]}
Json to_json(const PureState& psi);
PureState pure_from_json(const Json& j, const std::string& path = "");

/// {"energies":[...], "basis_re":[[...]], "basis_im":[[...]]}; the basis is
/// optional on input and defaults to the identity.
Json to_json(const Hamiltonian& h);
Hamiltonian hamiltonian_from_json(const Json& j, const std::string& path = "");

/// {"probs":[...]}
Json to_json(const Spectrum& s);
Spectrum spectrum_from_json(const Json& j, const std::string& path = "");

/// {"H_S": hamiltonian, "kraus": [matrix, ...]}
Json to_json(const EpoChannel& c);
EpoChannel channel_from_json(const Json& j, const std::string& path = "");

Json to_json(const WorkReport& r);
Json to_json(const ThermalState& t);
Json to_json(const MeasureValue& m);
Json to_json(const EpoValidation& v);
/// [{"name","lhs","rhs","pass"}, ...]
Json to_json(const MonotoneReport& r);
Json to_json(const GapSignature& g);
Json to_json(const ClassificationReport& r);
Json to_json(const DiagramPoint& p);

/// Reads and parses a JSON file, throwing ValidationError with the path on
/// I/O or syntax failure.
Json read_file(const std::string& path);
std::string dump(const Json& j);

}  // namespace ergo::io
