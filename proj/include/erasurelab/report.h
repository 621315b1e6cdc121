// Copyright 2026 The erasurelab Authors
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

#ifndef ERASURELAB_REPORT_H
#define ERASURELAB_REPORT_H

#include <string>

#include <json.hpp>

#include "erasurelab/codes.h"
#include "erasurelab/verify.h"

namespace erasurelab {

using json_t = nlohmann::ordered_json;

// Pretty-printed JSON with a stable layout: two-space indent, keys in
// insertion order, floating point numbers written with 17 significant digits.
std::string dump_json(const json_t& value);

// [{name, pass, worst_deviation}, ...]
json_t checks_to_json(const VerificationReport& report);

// {n_sites, dims, logical_basis: [[[re, im], ...], ...], label}
json_t code_to_json(const CodeSpec& code);
CodeSpec code_from_json(const json_t& value);
CodeSpec load_code_file(const std::string& path);

}  // namespace erasurelab

#endif  // ERASURELAB_REPORT_H
