// Copyright 2026 The Trigscan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "trigscan/report.h"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json_codec.h"

namespace trigscan {

std::string_view AnalysisStatusName(AnalysisStatus status) {
  switch (status) {
    case AnalysisStatus::kOk:
      return "ok";
    case AnalysisStatus::kTimeout:
      return "timeout";
    case AnalysisStatus::kError:
      return "error";
  }
  return "error";
}

std::optional<AnalysisStatus> ParseAnalysisStatus(std::string_view name) {
  for (auto s :
       {AnalysisStatus::kOk, AnalysisStatus::kTimeout, AnalysisStatus::kError}) {
    if (AnalysisStatusName(s) == name) return s;
  }
  return std::nullopt;
}

Histograms ComputeHistograms(const std::vector<LogicBombFinding>& findings) {
  Histograms h;
  for (auto kind : {TriggerKind::kTime, TriggerKind::kLocation,
                    TriggerKind::kSms}) {
    h.trigger_kind[std::string(TriggerKindName(kind))] = 0;
  }
  for (ComponentKind kind : kAllComponentKinds) {
    h.component[std::string(ComponentKindShortName(kind))] = 0;
    h.starting_component[std::string(ComponentKindShortName(kind))] = 0;
  }
  for (const auto& f : findings) {
    ++h.trigger_kind[std::string(TriggerKindName(f.check.kind))];
    ++h.component[std::string(ComponentKindShortName(f.component))];
    ++h.starting_component[std::string(
        ComponentKindShortName(f.starting_component))];
    ++h.formula_size[f.formula_size];
    ++h.guarded_count[f.guarded_count];
  }
  return h;
}

namespace json_codec {

namespace {

using json_codec::ToJson;

void Require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("report schema: " + what);
}

Json ToJson(StmtId id) { return Json::array({id.method, id.index}); }

StmtId StmtIdFromJson(const Json& j) {
  Require(j.is_array() && j.size() == 2, "statement id must be [method, index]");
  return {j[0].get<MethodId>(), j[1].get<uint32_t>()};
}

Json ToJson(const std::vector<StmtId>& ids) {
  Json out = Json::array();
  for (StmtId id : ids) out.push_back(ToJson(id));
  return out;
}

std::vector<StmtId> StmtIdsFromJson(const Json& j) {
  std::vector<StmtId> out;
  for (const auto& e : j) out.push_back(StmtIdFromJson(e));
  return out;
}

ComponentKind ComponentFromJson(const Json& j) {
  auto kind = ParseComponentKind(j.get<std::string>());
  Require(kind.has_value(), "unknown component kind");
  return *kind;
}

Json ToJson(const SuspiciousCheck& c) {
  Json compared = Json::array();
  for (const auto& v : c.compared) compared.push_back(ToJson(v));
  return {
      {"stmt", ToJson(c.id)},
      {"trigger_kind", TriggerKindName(c.kind)},
      {"descriptor", c.descriptor},
      {"tagged", ToJson(c.tagged)},
      {"compared", compared},
      {"symbolic", c.symbolic},
      {"satisfied_on_taken", c.satisfied_on_taken},
      {"polarity", c.negated ? "negated" : "positive"},
  };
}

SuspiciousCheck CheckFromJson(const Json& j) {
  SuspiciousCheck c;
  c.id = StmtIdFromJson(j.at("stmt"));
  auto kind = ParseTriggerKind(j.at("trigger_kind").get<std::string>());
  Require(kind.has_value(), "unknown trigger kind");
  c.kind = *kind;
  c.descriptor = j.at("descriptor").get<std::string>();
  c.tagged = SymValueFromJson(j.at("tagged"));
  for (const auto& v : j.at("compared")) c.compared.push_back(SymValueFromJson(v));
  c.symbolic = j.at("symbolic").get<bool>();
  c.satisfied_on_taken = j.at("satisfied_on_taken").get<bool>();
  c.negated = j.at("polarity").get<std::string>() == "negated";
  return c;
}

Json ToJson(const LogicBombFinding& f) {
  Json calls = Json::array();
  for (const auto& call : f.sensitive_calls) {
    Json stack = Json::array();
    for (const auto& frame : call.stack) {
      stack.push_back({{"site", ToJson(frame.site)},
                       {"site_label", frame.site_label},
                       {"callee", frame.callee}});
    }
    calls.push_back({{"signature", call.signature}, {"stack", stack}});
  }
  return {
      {"check", ToJson(f.check)},
      {"method", f.method},
      {"unit", f.unit},
      {"package", f.package},
      {"component", ComponentKindName(f.component)},
      {"starting_component", ComponentKindName(f.starting_component)},
      {"guarded_stmts", ToJson(f.guarded_stmts)},
      {"negative_stmts", ToJson(f.negative_stmts)},
      {"sensitive_calls", calls},
      {"via_switch", f.via_switch ? Json(*f.via_switch) : Json(nullptr)},
      {"switch_checks", ToJson(f.switch_checks)},
      {"nested", f.nested},
      {"formula", ToJson(f.formula)},
      {"formula_text", f.formula_text},
      {"formula_size", f.formula_size},
      {"guarded_count", f.guarded_count},
      {"check_formula", ToJson(f.check_formula)},
      {"partial", f.partial},
  };
}

LogicBombFinding FindingFromJson(const Json& j) {
  LogicBombFinding f;
  f.check = CheckFromJson(j.at("check"));
  f.method = j.at("method").get<std::string>();
  f.unit = j.at("unit").get<std::string>();
  f.package = j.at("package").get<std::string>();
  f.component = ComponentFromJson(j.at("component"));
  f.starting_component = ComponentFromJson(j.at("starting_component"));
  f.guarded_stmts = StmtIdsFromJson(j.at("guarded_stmts"));
  f.negative_stmts = StmtIdsFromJson(j.at("negative_stmts"));
  for (const auto& call : j.at("sensitive_calls")) {
    SensitiveCall sc;
    sc.signature = call.at("signature").get<std::string>();
    for (const auto& frame : call.at("stack")) {
      sc.stack.push_back({StmtIdFromJson(frame.at("site")),
                          frame.at("site_label").get<std::string>(),
                          frame.at("callee").get<std::string>()});
    }
    f.sensitive_calls.push_back(std::move(sc));
  }
  if (!j.at("via_switch").is_null()) {
    f.via_switch = j.at("via_switch").get<std::string>();
  }
  f.switch_checks = StmtIdsFromJson(j.at("switch_checks"));
  f.nested = j.at("nested").get<bool>();
  f.formula = FormulaFromJson(j.at("formula"));
  f.formula_text = j.at("formula_text").get<std::string>();
  f.formula_size = j.at("formula_size").get<int>();
  f.guarded_count = j.at("guarded_count").get<int>();
  f.check_formula = FormulaFromJson(j.at("check_formula"));
  f.partial = j.at("partial").get<bool>();
  return f;
}

template <typename K>
Json HistogramJson(const std::map<K, int>& h) {
  Json out = Json::object();
  for (const auto& [k, v] : h) {
    if constexpr (std::is_same_v<K, std::string>) {
      out[k] = v;
    } else {
      out[std::to_string(k)] = v;
    }
  }
  return out;
}

}  // namespace

Json ToJson(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kTrue:
      return true;
    case Formula::Kind::kFalse:
      return false;
    case Formula::Kind::kAtom:
      return {{"atom", f.atom()}, {"positive", f.positive()}};
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr: {
      Json kids = Json::array();
      for (const auto& c : f.children()) kids.push_back(ToJson(c));
      return {{f.kind() == Formula::Kind::kAnd ? "and" : "or", kids}};
    }
  }
  return true;
}

Formula FormulaFromJson(const Json& j) {
  if (j.is_boolean()) return j.get<bool>() ? Formula::True() : Formula::False();
  Require(j.is_object(), "formula must be a boolean or an object");
  if (j.contains("atom")) {
    return Formula::Atom(j.at("atom").get<uint64_t>(),
                         j.at("positive").get<bool>());
  }
  const bool is_and = j.contains("and");
  Require(is_and || j.contains("or"), "formula object needs atom, and, or");
  std::vector<Formula> kids;
  for (const auto& c : j.at(is_and ? "and" : "or")) {
    kids.push_back(FormulaFromJson(c));
  }
  return is_and ? Formula::And(std::move(kids)) : Formula::Or(std::move(kids));
}

Json ToJson(const SymValue& v) {
  auto list = [](const std::vector<SymValue>& values) {
    Json out = Json::array();
    for (const auto& x : values) out.push_back(ToJson(x));
    return out;
  };
  switch (v.kind) {
    case SymValue::Kind::kOpaque:
      return {{"kind", "opaque"}, {"id", v.opaque_id}};
    case SymValue::Kind::kInt:
      return {{"kind", "int"}, {"value", v.int_value}, {"long", v.is_long}};
    case SymValue::Kind::kString:
      return {{"kind", "string"}, {"value", v.text}};
    case SymValue::Kind::kBool:
      return {{"kind", "bool"}, {"value", v.int_value != 0}};
    case SymValue::Kind::kNull:
      return {{"kind", "null"}};
    case SymValue::Kind::kConstObject:
      return {{"kind", "object"}, {"type", v.text}, {"args", list(v.operands)}};
    case SymValue::Kind::kTagged:
      return {{"kind", "tagged"},
              {"tag", v.text},
              {"op", v.op},
              {"operands", list(v.operands)}};
  }
  return nullptr;
}

SymValue SymValueFromJson(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  auto list = [](const Json& arr) {
    std::vector<SymValue> out;
    for (const auto& x : arr) out.push_back(SymValueFromJson(x));
    return out;
  };
  if (kind == "opaque") return SymValue::Opaque(j.at("id").get<uint64_t>());
  if (kind == "int") {
    return SymValue::Int(j.at("value").get<int64_t>(), j.at("long").get<bool>());
  }
  if (kind == "string") return SymValue::String(j.at("value").get<std::string>());
  if (kind == "bool") return SymValue::Bool(j.at("value").get<bool>());
  if (kind == "null") return SymValue::Null();
  if (kind == "object") {
    return SymValue::ConstObject(j.at("type").get<std::string>(),
                                 list(j.at("args")));
  }
  Require(kind == "tagged", "unknown value kind '" + kind + "'");
  return SymValue::Tagged(j.at("tag").get<std::string>(),
                          j.at("op").get<std::string>(), list(j.at("operands")));
}

Json ToJson(const AnalysisReport& r) {
  Json findings = Json::array();
  for (const auto& f : r.findings) findings.push_back(ToJson(f));
  Json filtered = Json::array();
  for (const auto& rf : r.filtered) {
    filtered.push_back({{"filter", FilterKindName(rf.filter)},
                        {"reason", rf.reason},
                        {"finding", ToJson(rf.finding)}});
  }
  Json post = Json::array();
  for (const auto& rc : r.post_filtered) {
    post.push_back({{"reason", rc.reason}, {"check", ToJson(rc.check)}});
  }
  const Histograms h = ComputeHistograms(r.findings);
  Json counts = HistogramJson(h.trigger_kind);
  counts["total"] = r.findings.size();
  const ConfigEcho& c = r.config;
  return {
      {"schema_version", kReportSchemaVersion},
      {"source_id", r.source_id},
      {"status", AnalysisStatusName(r.status)},
      {"error", r.error},
      {"duration_ms", r.duration_ms},
      {"phase_durations",
       {{"graphs", r.phases.graphs_ms},
        {"symex", r.phases.symex_ms},
        {"predicate_recovery", r.phases.predicate_recovery_ms},
        {"classification", r.phases.classification_ms},
        {"controldep", r.phases.controldep_ms},
        {"filters", r.phases.filters_ms}}},
      {"partial", r.partial},
      {"findings", findings},
      {"filtered", filtered},
      {"post_filtered", post},
      {"counts", counts},
      {"histograms",
       {{"component", HistogramJson(h.component)},
        {"starting_component", HistogramJson(h.starting_component)},
        {"formula_size", HistogramJson(h.formula_size)},
        {"guarded_count", HistogramJson(h.guarded_count)}}},
      {"config",
       {{"callgraph", c.callgraph},
        {"filters", c.filters},
        {"app_package", c.app_package},
        {"library_list", c.library_list},
        {"library_list_size", c.library_list_size},
        {"sensitive_list", c.sensitive_list},
        {"sensitive_list_size", c.sensitive_list_size},
        {"catalog", c.catalog},
        {"atom_cap", c.atom_cap},
        {"formula_cap", c.formula_cap},
        {"switch_depth", c.switch_depth},
        {"max_depth", c.max_depth},
        {"timeout_secs", c.timeout_secs},
        {"prefix_match", c.prefix_match}}},
      {"diagnostics", r.diagnostics},
  };
}

AnalysisReport ReportFromJson(const Json& j) {
  Require(j.is_object(), "report must be an object");
  Require(j.value("schema_version", 0) == kReportSchemaVersion,
          "unsupported schema_version");
  AnalysisReport r;
  r.source_id = j.at("source_id").get<std::string>();
  auto status = ParseAnalysisStatus(j.at("status").get<std::string>());
  Require(status.has_value(), "unknown status");
  r.status = *status;
  r.error = j.at("error").get<std::string>();
  r.duration_ms = j.at("duration_ms").get<double>();
  const Json& p = j.at("phase_durations");
  r.phases.graphs_ms = p.at("graphs").get<double>();
  r.phases.symex_ms = p.at("symex").get<double>();
  r.phases.predicate_recovery_ms = p.at("predicate_recovery").get<double>();
  r.phases.classification_ms = p.at("classification").get<double>();
  r.phases.controldep_ms = p.at("controldep").get<double>();
  r.phases.filters_ms = p.at("filters").get<double>();
  r.partial = j.at("partial").get<bool>();
  for (const auto& f : j.at("findings")) r.findings.push_back(FindingFromJson(f));
  for (const auto& rf : j.at("filtered")) {
    auto kind = ParseFilterKind(rf.at("filter").get<std::string>());
    Require(kind.has_value(), "unknown filter");
    r.filtered.push_back({FindingFromJson(rf.at("finding")), *kind,
                          rf.at("reason").get<std::string>()});
  }
  for (const auto& rc : j.at("post_filtered")) {
    r.post_filtered.push_back(
        {CheckFromJson(rc.at("check")), rc.at("reason").get<std::string>()});
  }
  const Json& c = j.at("config");
  r.config.callgraph = c.at("callgraph").get<std::string>();
  r.config.filters = c.at("filters").get<std::vector<std::string>>();
  r.config.app_package = c.at("app_package").get<std::string>();
  r.config.library_list = c.at("library_list").get<std::string>();
  r.config.library_list_size = c.at("library_list_size").get<size_t>();
  r.config.sensitive_list = c.at("sensitive_list").get<std::string>();
  r.config.sensitive_list_size = c.at("sensitive_list_size").get<size_t>();
  r.config.catalog = c.at("catalog").get<std::string>();
  r.config.atom_cap = c.at("atom_cap").get<size_t>();
  r.config.formula_cap = c.at("formula_cap").get<size_t>();
  r.config.switch_depth = c.at("switch_depth").get<int>();
  r.config.max_depth = c.at("max_depth").get<int>();
  r.config.timeout_secs = c.at("timeout_secs").get<double>();
  r.config.prefix_match = c.at("prefix_match").get<bool>();
  r.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
  return r;
}

}  // namespace json_codec

std::string RenderReportJson(const AnalysisReport& report, int indent) {
  return json_codec::ToJson(report).dump(indent);
}

AnalysisReport ParseReportJson(std::string_view json) {
  json_codec::Json j;
  try {
    j = json_codec::Json::parse(json);
  } catch (const json_codec::Json::exception& e) {
    throw std::invalid_argument(std::string("report is not valid JSON: ") +
                                e.what());
  }
  try {
    return json_codec::ReportFromJson(j);
  } catch (const json_codec::Json::exception& e) {
    throw std::invalid_argument(std::string("report schema: ") + e.what());
  }
}

std::string RenderReportText(const AnalysisReport& r) {
  std::ostringstream out;
  out << "source: " << r.source_id << "\n";
  out << "status: " << AnalysisStatusName(r.status);
  if (!r.error.empty()) out << " (" << r.error << ")";
  out << std::fixed << std::setprecision(1) << ", " << r.duration_ms
      << " ms\n";
  out << "config: callgraph=" << r.config.callgraph << " list="
      << r.config.sensitive_list << " (" << r.config.sensitive_list_size
      << ") filters=";
  if (r.config.filters.empty()) out << "none";
  for (size_t i = 0; i < r.config.filters.size(); ++i) {
    out << (i ? "," : "") << r.config.filters[i];
  }
  out << "\n";
  out << "findings: " << r.findings.size() << (r.partial ? " (partial)" : "")
      << "\n";
  for (size_t i = 0; i < r.findings.size(); ++i) {
    const LogicBombFinding& f = r.findings[i];
    out << "  [" << i + 1 << "] " << TriggerKindName(f.check.kind) << "  "
        << f.check.descriptor;
    if (f.check.negated) out << "  (negated)";
    if (f.nested) out << "  (nested)";
    if (f.via_switch) out << "  (via switch " << *f.via_switch << ")";
    out << "\n      check: " << f.method << "#" << f.check.id.index << " in "
        << ComponentKindName(f.component) << ", entered from "
        << ComponentKindName(f.starting_component) << "\n";
    for (const auto& call : f.sensitive_calls) {
      out << "      sensitive: " << call.signature << "\n";
      for (const auto& frame : call.stack) {
        out << "        " << frame.site_label << " -> " << frame.callee << "\n";
      }
    }
    out << "      formula: " << f.formula_text << "  (size " << f.formula_size
        << ", guarded " << f.guarded_count << ")\n";
  }
  for (const auto& rf : r.filtered) {
    out << "  filtered [" << FilterKindName(rf.filter) << "] "
        << rf.finding.check.descriptor << ": " << rf.reason << "\n";
  }
  for (const auto& rc : r.post_filtered) {
    out << "  set aside " << rc.check.descriptor << ": " << rc.reason << "\n";
  }
  for (const auto& d : r.diagnostics) out << "  note: " << d << "\n";
  return out.str();
}

std::string RenderReport(const AnalysisReport& report, ReportFormat format) {
  return format == ReportFormat::kJson ? RenderReportJson(report) + "\n"
                                       : RenderReportText(report);
}

}  // namespace trigscan
