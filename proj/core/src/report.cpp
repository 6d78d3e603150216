#include "gradedq/report.hpp"

#include <utility>

#include "json.hpp"

#include "gradedq/dsl.hpp"
#include "gradedq/errors.hpp"

namespace gradedq {

using nlohmann::json;

namespace {

constexpr const char* kFlowLogFormat = "gradedq-flowlog-1";

json context_value(const Context& ctx) {
  json vars = json::array();
  for (int i = 0; i < ctx.size(); ++i) vars.push_back(json::array({ctx.name(i), ctx.degree(i)}));
  return json{{"vars", std::move(vars)},
              {"jet", ctx.jet_order()},
              {"filtration", ctx.filtration_order()}};
}

json derivation_value(const Derivation& d) {
  json values = json::object();
  const Context& ctx = d.context();
  for (int i = 0; i < ctx.size(); ++i)
    if (!d.value(i).is_zero()) values[ctx.name(i)] = d.value(i).str();
  return json{{"degree", d.degree()}, {"values", std::move(values)}};
}

Context context_from_value(const json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("jet") || !j.contains("filtration"))
    throw UsageError("malformed chart object");
  std::vector<VarDecl> vars;
  for (const auto& entry : j.at("vars")) {
    if (!entry.is_array() || entry.size() != 2)
      throw UsageError("malformed variable entry in chart object");
    vars.push_back(VarDecl{entry.at(0).get<std::string>(), entry.at(1).get<int>()});
  }
  return Context::make(std::move(vars), j.at("jet").get<int>(), j.at("filtration").get<int>());
}

}  // namespace

std::string context_json(const Context& ctx) { return context_value(ctx).dump(); }

std::string polynomial_json(const GradedPolynomial& p) { return json(p.str()).dump(); }

std::string derivation_json(const Derivation& d) { return derivation_value(d).dump(); }

std::string automorphism_json(const ChartAutomorphism& a) {
  json images = json::object();
  const Context& ctx = a.context();
  for (int i = 0; i < ctx.size(); ++i) images[ctx.name(i)] = a.image(i).str();
  return json{{"images", std::move(images)}}.dump();
}

std::string matrix_json(const QMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows.dump();
}

std::string flowlog_json(const FlowLog& log) {
  json steps = json::array();
  for (const FlowStep& s : log.steps()) {
    json gen = json::object();
    const Context& ctx = s.generator.context();
    for (int i = 0; i < ctx.size(); ++i)
      if (!s.generator.value(i).is_zero()) gen[ctx.name(i)] = s.generator.value(i).str();
    steps.push_back(json{{"generator", std::move(gen)}, {"gain", s.gain}, {"label", s.label}});
  }
  return json{{"format", kFlowLogFormat},
              {"context", context_value(log.context())},
              {"steps", std::move(steps)}}
      .dump();
}

Context context_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw UsageError("malformed JSON chart");
  return context_from_value(j);
}

FlowLog flowlog_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw UsageError("malformed JSON flow log");
  if (!j.is_object() || j.value("format", "") != kFlowLogFormat)
    throw UsageError("not a gradedq flow log (bad or missing format tag)");
  Context ctx = context_from_value(j.at("context"));
  FlowLog log(ctx);
  for (const auto& step : j.at("steps")) {
    std::vector<GradedPolynomial> values(static_cast<size_t>(ctx.size()),
                                         GradedPolynomial::zero(ctx));
    for (const auto& [name, expr] : step.at("generator").items()) {
      auto idx = ctx.index_of(name);
      if (!idx) throw UsageError("flow log generator mentions unknown variable '" + name + "'");
      values[static_cast<size_t>(*idx)] = parse_polynomial(ctx, expr.get<std::string>());
    }
    log.append(Derivation::make(ctx, 0, std::move(values)), step.value("gain", 0),
               step.value("label", std::string()));
  }
  return log;
}

}  // namespace gradedq
