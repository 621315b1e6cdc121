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

#include "erasurelab/report.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace erasurelab {

namespace {

void write_number(std::ostream& os, double v) {
  if (!std::isfinite(v)) {
    os << "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  os << buf;
}

void write_value(std::ostream& os, const json_t& v, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  switch (v.type()) {
    case json_t::value_t::object: {
      if (v.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << pad << json_t(it.key()).dump() << ": ";
        write_value(os, it.value(), depth + 1);
      }
      os << '\n' << close << '}';
      return;
    }
    case json_t::value_t::array: {
      if (v.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",\n";
        os << pad;
        write_value(os, v[i], depth + 1);
      }
      os << '\n' << close << ']';
      return;
    }
    case json_t::value_t::number_float:
      write_number(os, v.get<double>());
      return;
    default:
      os << v.dump();
      return;
  }
}

json_t complex_pair(complex_t z) { return json_t::array({z.real(), z.imag()}); }

}  // namespace

std::string dump_json(const json_t& value) {
  std::ostringstream os;
  write_value(os, value, 0);
  os << '\n';
  return os.str();
}

json_t checks_to_json(const VerificationReport& report) {
  json_t out = json_t::array();
  for (const CheckResult& c : report.checks) {
    out.push_back({{"name", c.name}, {"pass", c.pass}, {"worst_deviation", c.worst_deviation}});
  }
  return out;
}

json_t code_to_json(const CodeSpec& code) {
  json_t basis = json_t::array();
  for (const PureState& s : code.logical_basis()) {
    json_t amps = json_t::array();
    for (Eigen::Index i = 0; i < s.amplitudes().size(); ++i) amps.push_back(complex_pair(s.amplitudes()(i)));
    basis.push_back(std::move(amps));
  }
  return json_t{{"n_sites", code.n_physical()},
                {"dims", code.dims().dims()},
                {"logical_basis", std::move(basis)},
                {"label", code.label()}};
}

CodeSpec code_from_json(const json_t& value) {
  try {
    const int n_sites = value.at("n_sites").get<int>();
    std::vector<int> dims_list = value.contains("dims") ? value.at("dims").get<std::vector<int>>()
                                                        : std::vector<int>(static_cast<std::size_t>(n_sites), 2);
    if (static_cast<int>(dims_list.size()) != n_sites) {
      throw std::invalid_argument("dims length differs from n_sites");
    }
    SiteDims dims(std::move(dims_list));
    std::vector<PureState> basis;
    for (const json_t& state : value.at("logical_basis")) {
      if (state.size() != dims.total()) throw std::invalid_argument("logical state has wrong amplitude count");
      cvector_t amps(static_cast<Eigen::Index>(dims.total()));
      for (std::size_t i = 0; i < state.size(); ++i) {
        const json_t& pair = state.at(i);
        if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("amplitudes must be [re, im] pairs");
        amps(static_cast<Eigen::Index>(i)) = complex_t(pair.at(0).get<double>(), pair.at(1).get<double>());
      }
      if (std::abs(amps.norm() - 1.0) > kExactTol) {
        throw std::invalid_argument("logical state is not normalized");
      }
      basis.emplace_back(dims, std::move(amps));
    }
    const std::string label = value.value("label", std::string("user code"));
    return CodeSpec(label, std::move(dims), std::move(basis));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed code file: ") + e.what());
  }
}

CodeSpec load_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open code file " + path);
  json_t value;
  try {
    value = json_t::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("code file " + path + " is not valid JSON: " + e.what());
  }
  return code_from_json(value);
}

}  // namespace erasurelab
