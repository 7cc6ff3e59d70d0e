// Copyright 2026 The Authors.
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

#include "aiplab/instance_io.h"

#include <fstream>
#include <sstream>
#include <utility>

#include "aiplab/error.h"
#include "json.hpp"

namespace aiplab {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(std::string_view source, const std::string& field,
                       const std::string& what) {
  throw ParseError(std::string(source) + ": field '" + field + "': " + what);
}

// Schema reader that tracks the JSON path of the value being read.
class Reader {
 public:
  explicit Reader(std::string_view source) : source_(source) {}

  const json& Require(const json& obj, const std::string& key,
                      const std::string& path = "") const {
    const std::string field = path.empty() ? key : path + "." + key;
    if (!obj.is_object() || !obj.contains(key)) {
      Fail(source_, field, "missing required field");
    }
    return obj.at(key);
  }

  int64_t Int(const json& v, const std::string& field) const {
    if (!v.is_number_integer()) Fail(source_, field, "expected an integer");
    return v.get<int64_t>();
  }

  int32_t Int32(const json& v, const std::string& field) const {
    const int64_t x = Int(v, field);
    if (x < 0 || x > std::numeric_limits<int32_t>::max()) {
      Fail(source_, field, "expected a nonnegative 32-bit integer");
    }
    return static_cast<int32_t>(x);
  }

  Money Amount(const json& v, const std::string& field,
               bool allow_infinite) const {
    if (v.is_string()) {
      if (allow_infinite && v.get<std::string>() == "inf") {
        return Money::Infinite();
      }
      Fail(source_, field,
           allow_infinite ? "expected a number or \"inf\""
                          : "expected a finite number");
    }
    if (!v.is_number()) Fail(source_, field, "expected a number");
    const double x = v.get<double>();
    if (!(x >= 0) || !std::isfinite(x)) {
      Fail(source_, field, "expected a finite nonnegative number");
    }
    return Money::FromDouble(x);
  }

  const json& Array(const json& v, const std::string& field) const {
    if (!v.is_array()) Fail(source_, field, "expected an array");
    return v;
  }

  std::vector<int32_t> IntList(const json& v, const std::string& field) const {
    Array(v, field);
    std::vector<int32_t> out;
    for (size_t i = 0; i < v.size(); ++i) {
      out.push_back(Int32(v[i], field + "[" + std::to_string(i) + "]"));
    }
    return out;
  }

  std::vector<std::vector<int32_t>> IntLists(const json& v,
                                             const std::string& field) const {
    Array(v, field);
    std::vector<std::vector<int32_t>> out;
    for (size_t i = 0; i < v.size(); ++i) {
      out.push_back(IntList(v[i], field + "[" + std::to_string(i) + "]"));
    }
    return out;
  }

  std::vector<Money> Amounts(const json& v, const std::string& field,
                             bool allow_infinite) const {
    Array(v, field);
    std::vector<Money> out;
    for (size_t i = 0; i < v.size(); ++i) {
      out.push_back(
          Amount(v[i], field + "[" + std::to_string(i) + "]", allow_infinite));
    }
    return out;
  }

  void ExpectSize(size_t actual, int64_t expected,
                  const std::string& field) const {
    if (static_cast<int64_t>(actual) != expected) {
      Fail(source_, field,
           "expected " + std::to_string(expected) + " entries, found " +
               std::to_string(actual));
    }
  }

  std::string_view source() const { return source_; }

 private:
  std::string_view source_;
};

json AmountJson(Money m) {
  if (m.is_infinite()) return "inf";
  if (m.micros() % Money::kScale == 0) return m.micros() / Money::kScale;
  return m.ToDouble();
}

json AmountsJson(const std::vector<Money>& amounts) {
  json out = json::array();
  for (const Money m : amounts) out.push_back(AmountJson(m));
  return out;
}

std::pair<int, int> LineAndColumn(std::string_view text, size_t byte) {
  int line = 1;
  int col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::shared_ptr<const Problem> ReadSetCover(const Reader& r, const json& doc) {
  const int32_t n = r.Int32(r.Require(doc, "N"), "N");
  const int32_t m = r.Int32(r.Require(doc, "m"), "m");
  auto sets = r.IntLists(r.Require(doc, "sets"), "sets");
  auto costs = r.Amounts(r.Require(doc, "costs"), "costs", false);
  r.ExpectSize(sets.size(), m, "sets");
  r.ExpectSize(costs.size(), m, "costs");
  return std::make_shared<const SetCoverInstance>(n, std::move(sets),
                                                  std::move(costs));
}

std::shared_ptr<const Problem> ReadMulticover(const Reader& r,
                                              const json& doc) {
  const int32_t n = r.Int32(r.Require(doc, "n"), "n");
  const int32_t m = r.Int32(r.Require(doc, "m"), "m");
  auto rows = r.IntLists(r.Require(doc, "rows"), "rows");
  auto demands = r.IntList(r.Require(doc, "demands"), "demands");
  auto costs = r.Amounts(r.Require(doc, "costs"), "costs", false);
  r.ExpectSize(rows.size(), n, "rows");
  r.ExpectSize(demands.size(), n, "demands");
  r.ExpectSize(costs.size(), m, "costs");
  for (size_t j = 0; j < costs.size(); ++j) {
    if (costs[j] != Money::FromUnits(1)) {
      Fail(r.source(), "costs[" + std::to_string(j) + "]",
           "multicover costs must all be 1");
    }
  }
  return std::make_shared<const SmcInstance>(m, std::move(rows),
                                             std::move(demands));
}

std::shared_ptr<const Problem> ReadFacilityLocation(const Reader& r,
                                                    const json& doc) {
  const int32_t m = r.Int32(r.Require(doc, "m"), "m");
  const int32_t n = r.Int32(r.Require(doc, "n"), "n");
  auto opening = r.Amounts(r.Require(doc, "costs"), "costs", false);
  r.ExpectSize(opening.size(), m, "costs");
  const json& conn = r.Array(r.Require(doc, "connection_costs"),
                             "connection_costs");
  r.ExpectSize(conn.size(), n, "connection_costs");
  std::vector<std::vector<Money>> connection;
  for (size_t v = 0; v < conn.size(); ++v) {
    const std::string field = "connection_costs[" + std::to_string(v) + "]";
    connection.push_back(r.Amounts(conn[v], field, true));
    r.ExpectSize(connection.back().size(), m, field);
  }
  bool metric = false;
  if (doc.contains("metric")) {
    if (!doc["metric"].is_boolean()) {
      Fail(r.source(), "metric", "expected a boolean");
    }
    metric = doc["metric"].get<bool>();
  }
  return std::make_shared<const FlInstance>(std::move(opening),
                                            std::move(connection), metric);
}

std::vector<DiscreteDistribution> ReadDistributions(const Reader& r,
                                                    const json& doc,
                                                    int32_t num_requests) {
  std::vector<DiscreteDistribution> out;
  if (!doc.contains("distributions")) return out;
  const json& list = r.Array(doc["distributions"], "distributions");
  for (size_t t = 0; t < list.size(); ++t) {
    const std::string path = "distributions[" + std::to_string(t) + "]";
    const auto ids = r.IntList(r.Require(list[t], "support", path),
                               path + ".support");
    const json& wj = r.Array(r.Require(list[t], "weights", path),
                             path + ".weights");
    r.ExpectSize(wj.size(), static_cast<int64_t>(ids.size()),
                 path + ".weights");
    std::vector<Request> support;
    std::vector<uint64_t> weights;
    for (size_t i = 0; i < ids.size(); ++i) {
      if (ids[i] >= num_requests) {
        Fail(r.source(), path + ".support[" + std::to_string(i) + "]",
             "request id out of range");
      }
      support.push_back(Request{ids[i]});
      const std::string wf = path + ".weights[" + std::to_string(i) + "]";
      const int64_t w = r.Int(wj[i], wf);
      if (w < 0) Fail(r.source(), wf, "weights must be nonnegative");
      weights.push_back(static_cast<uint64_t>(w));
    }
    try {
      out.emplace_back(std::move(support), std::move(weights));
    } catch (const StructuralError& e) {
      Fail(r.source(), path, e.what());
    }
  }
  return out;
}

}  // namespace

bool SameInstance(const InstanceBundle& a, const InstanceBundle& b) {
  if (!a.problem || !b.problem) return a.problem == b.problem;
  if (a.problem->kind() != b.problem->kind()) return false;
  if (a.distributions != b.distributions) return false;
  switch (a.problem->kind()) {
    case ProblemKind::kSetCover:
      return *a.set_cover() == *b.set_cover();
    case ProblemKind::kSetMulticover:
      return *a.multicover() == *b.multicover();
    case ProblemKind::kFacilityLocation:
      return *a.facility_location() == *b.facility_location();
  }
  return false;
}

InstanceBundle ParseInstance(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = LineAndColumn(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(std::string(source) + ":" + std::to_string(line) + ":" +
                     std::to_string(col) + ": malformed JSON: " + e.what());
  }
  const Reader r(source);
  if (!doc.is_object()) Fail(source, "<root>", "expected an object");
  const json& type = r.Require(doc, "type");
  if (!type.is_string()) Fail(source, "type", "expected a string");
  const std::string kind = type.get<std::string>();

  InstanceBundle bundle;
  if (doc.contains("id")) {
    if (!doc["id"].is_string()) Fail(source, "id", "expected a string");
    bundle.id = doc["id"].get<std::string>();
  }
  try {
    if (kind == "setcover") {
      bundle.problem = ReadSetCover(r, doc);
    } else if (kind == "smc") {
      bundle.problem = ReadMulticover(r, doc);
    } else if (kind == "fl") {
      bundle.problem = ReadFacilityLocation(r, doc);
    } else {
      Fail(source, "type", "unknown instance type '" + kind + "'");
    }
  } catch (const StructuralError& e) {
    throw ParseError(std::string(source) + ": invalid instance: " + e.what());
  }
  bundle.distributions =
      ReadDistributions(r, doc, bundle.problem->num_requests());
  return bundle;
}

InstanceBundle LoadInstance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  InstanceBundle bundle = ParseInstance(buffer.str(), path.string());
  if (bundle.id.empty()) bundle.id = path.stem().string();
  return bundle;
}

std::string SerializeInstance(const InstanceBundle& bundle) {
  if (!bundle.problem) throw StructuralError("empty instance bundle");
  json doc = json::object();
  doc["type"] = ProblemKindName(bundle.problem->kind());
  if (!bundle.id.empty()) doc["id"] = bundle.id;
  if (const auto* sc = bundle.set_cover()) {
    doc["N"] = sc->universe_size();
    doc["m"] = sc->num_sets();
    doc["sets"] = sc->sets();
    doc["costs"] = AmountsJson(sc->costs());
  } else if (const auto* smc = bundle.multicover()) {
    doc["n"] = smc->num_rows();
    doc["m"] = smc->num_columns();
    doc["rows"] = smc->rows();
    doc["demands"] = smc->demands();
    doc["costs"] = AmountsJson(smc->costs());
  } else if (const auto* fl = bundle.facility_location()) {
    doc["m"] = fl->num_facilities();
    doc["n"] = fl->num_clients();
    doc["metric"] = fl->metric();
    std::vector<Money> opening(fl->costs().begin(),
                               fl->costs().begin() + fl->num_facilities());
    doc["costs"] = AmountsJson(opening);
    json conn = json::array();
    for (int32_t v = 0; v < fl->num_clients(); ++v) {
      json row = json::array();
      for (int32_t f = 0; f < fl->num_facilities(); ++f) {
        row.push_back(AmountJson(fl->connection_cost(f, v)));
      }
      conn.push_back(std::move(row));
    }
    doc["connection_costs"] = std::move(conn);
  }
  if (!bundle.distributions.empty()) {
    json list = json::array();
    for (const auto& d : bundle.distributions) {
      json ids = json::array();
      for (const Request r : d.support()) ids.push_back(r.id);
      list.push_back({{"support", ids}, {"weights", d.weights()}});
    }
    doc["distributions"] = std::move(list);
  }
  return doc.dump(1) + "\n";
}

void SaveInstance(const InstanceBundle& bundle,
                  const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write instance file " + path.string());
  out << SerializeInstance(bundle);
  if (!out) throw Error("failed writing instance file " + path.string());
}

}  // namespace aiplab
