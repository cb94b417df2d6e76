// Copyright 2026 The pstkit Authors
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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pstkit/oracle.hpp"
#include "pstkit/pst.hpp"
#include "pstkit/switching.hpp"
#include "pstkit/tensor.hpp"

namespace pstkit {

/// JSON documents emitted by the command-line tool. Field order is fixed so
/// that output is byte-for-byte reproducible.
using Json = nlohmann::ordered_json;

/// Exact integers fit a JSON number when they fit 64 bits; otherwise they
/// are written as decimal strings.
Json integer_json(const Integer &v);

Json spectrum_json(const Graph &g, const SpectralDecomposition &d);

/// {"type":"pst",...} for a certificate, {"type":"pst_failure",...} otherwise.
/// `graph6` names the graph in which the walk runs, so the document can be
/// re-verified on its own.
Json pst_json(const PSTResult &r, const Graph &g, std::size_t u, std::size_t v);

/// `host` is the product graph X x Y (or X x Y^{box k}) and `nx` the order
/// of X; product vertices are w * (order of Y) + u.
Json tensor_json(const TensorPSTReport &r, const Graph &host, std::size_t nx,
                 std::optional<std::size_t> k0 = std::nullopt);
/// `name` describes the product X x Y.
Json tensor_necessary_json(const TensorNecessaryResult &r, const std::string &name);

/// `host` is the layered graph.
Json switching_json(const std::vector<SwitchingReport> &reports, const Graph &host);
Json complement_json(const ComplementReport &r, const Graph &host);

Json scan_json(const ScanResult &r, const Graph &g, std::size_t u, std::size_t v);
Json verify_json(const VerifyResult &r, const Graph &g, std::size_t u, std::size_t v, const ExactTime &tau,
                 const Phase &phase);

/// One transfer claim extracted from a document: walk on `graph6`, u -> v at
/// tau with the given phase.
struct TransferClaim {
  std::string graph6;
  std::size_t u = 0;
  std::size_t v = 0;
  ExactTime tau{1, 1};
  Phase phase;
};

/// Every transfer claim carried by a "pst", "tensor", "min_power",
/// "switching", "complement_switching" or "search" document. Documents that
/// claim nothing yield an empty list. Throws ParseError on malformed input.
std::vector<TransferClaim> transfer_claims(const Json &doc);

}  // namespace pstkit
