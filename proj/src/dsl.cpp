#include "umlmeter/dsl.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "umlmeter/errors.hpp"
#include "umlmeter/pattern.hpp"
#include "umlmeter/xml.hpp"

namespace umlmeter {

namespace {

const std::set<std::string>& relation_names() {
  static const std::set<std::string> names = {
      "ownedAttribute", "ownedOperation",  "ownedClass",
      "ownedPackage",   "ownedUseCase",    "ownedElement",
      "children",       "parents",         "ancestors",
      "descendants",    "referencedClasses", "states",
      "transitions",    "allClasses",      "allPackages",
      "allActors",      "allUseCases",     "allStateMachines",
      "allActivities",
  };
  return names;
}

[[noreturn]] void parse_fail(const xml::Node& node, const std::string& what) {
  throw DslParseError(what, node.line, node.column);
}

DslPredicate parse_predicate(const xml::Node& node) {
  DslPredicate p;
  if (const std::string* attribute = node.attr("attribute")) {
    p.attribute = *attribute;
    const std::string* equals = node.attr("equals");
    if (!equals) parse_fail(node, "<where attribute=...> needs 'equals'");
    p.equals = *equals;
  } else if (const std::string* matches = node.attr("matches")) {
    p.name_matches = *matches;
    try {
      validate_glob(*matches);
    } catch (const ConfigError& e) {
      parse_fail(node, e.what());
    }
  } else {
    parse_fail(node, "<where> needs attribute=/equals= or matches=");
  }
  return p;
}

std::unique_ptr<DslExpr> parse_expr(const xml::Node& node) {
  auto expr = std::make_unique<DslExpr>();
  std::string_view op = xml::local_name(node.name);

  auto need_relation = [&]() {
    const std::string* relation = node.attr("relation");
    if (!relation) {
      parse_fail(node, "<" + std::string(op) + "> needs a 'relation'");
    }
    if (!is_dsl_relation(*relation)) {
      parse_fail(node, "unknown relation '" + *relation + "'");
    }
    expr->relation = *relation;
  };
  auto need_metric = [&]() {
    const std::string* metric = node.attr("metric");
    if (!metric) {
      parse_fail(node, "<" + std::string(op) + "> needs a 'metric'");
    }
    expr->metric = *metric;
  };
  auto parse_children = [&](std::size_t expected) {
    for (const xml::Node& child : node.children) {
      expr->children.push_back(parse_expr(child));
    }
    if (expr->children.size() != expected) {
      parse_fail(node, "<" + std::string(op) + "> takes exactly " +
                           std::to_string(expected) + " operands");
    }
  };

  if (op == "literal") {
    expr->op = DslExpr::Op::Literal;
    const std::string* value = node.attr("value");
    if (!value) parse_fail(node, "<literal> needs a 'value'");
    auto end = value->data() + value->size();
    auto res = std::from_chars(value->data(), end, expr->literal);
    if (res.ec != std::errc() || res.ptr != end) {
      parse_fail(node, "malformed literal '" + *value + "'");
    }
  } else if (op == "count") {
    expr->op = DslExpr::Op::Count;
    need_relation();
    for (const xml::Node& child : node.children) {
      if (xml::local_name(child.name) != "where") {
        parse_fail(child, "<count> only admits <where> children");
      }
      expr->predicates.push_back(parse_predicate(child));
    }
  } else if (op == "sum" || op == "min" || op == "max" || op == "avg") {
    expr->op = op == "sum"   ? DslExpr::Op::Sum
               : op == "min" ? DslExpr::Op::Min
               : op == "max" ? DslExpr::Op::Max
                             : DslExpr::Op::Avg;
    need_relation();
    need_metric();
  } else if (op == "metricref") {
    expr->op = DslExpr::Op::MetricRef;
    const std::string* name = node.attr("name");
    if (!name) parse_fail(node, "<metricref> needs a 'name'");
    expr->metric = *name;
  } else if (op == "add" || op == "sub" || op == "mul" || op == "div") {
    expr->op = op == "add"   ? DslExpr::Op::Add
               : op == "sub" ? DslExpr::Op::Sub
               : op == "mul" ? DslExpr::Op::Mul
                             : DslExpr::Op::Div;
    parse_children(2);
  } else {
    parse_fail(node, "unknown expression element <" + std::string(op) + ">");
  }
  return expr;
}

void collect_references(const DslExpr& expr, std::set<std::string>& out) {
  if (!expr.metric.empty()) out.insert(expr.metric);
  for (const auto& child : expr.children) collect_references(*child, out);
}

bool is_builtin_anywhere(const std::string& name) {
  for (const MetricInfo& metric : builtin_metrics()) {
    if (metric.name == name) return true;
  }
  return false;
}

// --- evaluation -------------------------------------------------------------

struct Evaluator {
  const AnalysisContext& ctx;
  const std::vector<MetricDefinition>& definitions;

  const MetricDefinition* find_definition(const std::string& name) const {
    for (const MetricDefinition& def : definitions) {
      if (def.name == name) return &def;
    }
    return nullptr;
  }

  // Tags with UML defaults read as their default when absent.
  static std::string effective_tag(const ModelElement& e,
                                   const std::string& key) {
    auto it = e.tags.find(key);
    if (it != e.tags.end()) return it->second;
    if (key == "visibility") return "public";
    if (key == "subkind") return "normal";
    return {};
  }

  bool matches(const ModelElement& e, const DslPredicate& p) const {
    if (!p.name_matches.empty()) return glob_match(p.name_matches, e.name);
    if (p.attribute == "kind") return kind_name(e.kind) == p.equals;
    if (p.attribute == "name") return e.name == p.equals;
    if (p.attribute == "id") return e.id == p.equals;
    return effective_tag(e, p.attribute) == p.equals;
  }

  std::vector<ElementId> related(const ElementId& id,
                                 const std::string& relation) const {
    const UmlModel& model = ctx.model;
    auto owned = [&](ElementKind kind) {
      return model.owned_of_kind(id, kind);
    };
    if (relation == "ownedAttribute") return owned(ElementKind::Attribute);
    if (relation == "ownedOperation") return owned(ElementKind::Operation);
    if (relation == "ownedClass") return owned(ElementKind::Class);
    if (relation == "ownedPackage") return owned(ElementKind::Package);
    if (relation == "ownedUseCase") return owned(ElementKind::UseCase);
    if (relation == "ownedElement") return model.children(id);
    if (relation == "children" || relation == "parents" ||
        relation == "ancestors" || relation == "descendants" ||
        relation == "referencedClasses") {
      if (!is_classifier_kind(model.at(id).kind)) {
        throw EvaluationError("relation '" + relation +
                              "' does not apply to element '" + id +
                              "' of kind " +
                              std::string(kind_name(model.at(id).kind)));
      }
      if (relation == "children") return model.specifics(id);
      if (relation == "parents") return model.generals(id);
      if (relation == "ancestors") return model.ancestors(id);
      if (relation == "descendants") {
        auto set = model.descendants(id);
        return {set.begin(), set.end()};
      }
      auto set = model.referenced_classes(id);
      return {set.begin(), set.end()};
    }
    if (relation == "states" || relation == "transitions") {
      if (model.at(id).kind != ElementKind::StateMachine) {
        throw EvaluationError("relation '" + relation +
                              "' only applies to state machines, not '" + id +
                              "'");
      }
      return model.owned_transitive(id, relation == "states"
                                            ? ElementKind::State
                                            : ElementKind::Transition);
    }
    if (relation == "allClasses") return model.of_kind(ElementKind::Class);
    if (relation == "allPackages") return model.of_kind(ElementKind::Package);
    if (relation == "allActors") return model.of_kind(ElementKind::Actor);
    if (relation == "allUseCases") return model.of_kind(ElementKind::UseCase);
    if (relation == "allStateMachines") {
      return model.of_kind(ElementKind::StateMachine);
    }
    if (relation == "allActivities") {
      return model.of_kind(ElementKind::Activity);
    }
    throw EvaluationError("unknown relation '" + relation + "'");
  }

  MetricValue metric_on(const std::string& name, const ElementId& id) const {
    if (const MetricDefinition* def = find_definition(name)) {
      if (def->target != ctx.model.at(id).kind) {
        throw EvaluationError(
            "metric '" + name + "' targets " +
            std::string(kind_name(def->target)) + " but was applied to '" +
            id + "' of kind " +
            std::string(kind_name(ctx.model.at(id).kind)));
      }
      return eval(*def->expression, id);
    }
    if (const MetricInfo* builtin =
            find_metric(name, ctx.model.at(id).kind)) {
      return builtin->compute(ctx, id);
    }
    throw EvaluationError("metric '" + name + "' is not defined for kind " +
                          std::string(kind_name(ctx.model.at(id).kind)) +
                          " (element '" + id + "')");
  }

  MetricValue eval(const DslExpr& expr, const ElementId& id) const {
    switch (expr.op) {
      case DslExpr::Op::Literal:
        return MetricValue(expr.literal);
      case DslExpr::Op::Count: {
        int count = 0;
        for (const ElementId& rel : related(id, expr.relation)) {
          const ModelElement& e = ctx.model.at(rel);
          bool ok = std::all_of(
              expr.predicates.begin(), expr.predicates.end(),
              [&](const DslPredicate& p) { return matches(e, p); });
          if (ok) ++count;
        }
        return MetricValue(count);
      }
      case DslExpr::Op::Sum:
      case DslExpr::Op::Min:
      case DslExpr::Op::Max:
      case DslExpr::Op::Avg: {
        std::vector<MetricValue> values;
        for (const ElementId& rel : related(id, expr.relation)) {
          values.push_back(metric_on(expr.metric, rel));
        }
        if (expr.op == DslExpr::Op::Sum) {
          MetricValue total(0);
          for (const MetricValue& v : values) total = total + v;
          return total;
        }
        if (values.empty()) return MetricValue::unavailable();
        if (expr.op == DslExpr::Op::Avg) {
          MetricValue total(0);
          for (const MetricValue& v : values) total = total + v;
          return total / MetricValue(values.size());
        }
        MetricValue best = values.front();
        for (const MetricValue& v : values) {
          if (!v.available() || !best.available()) {
            return MetricValue::unavailable();
          }
          bool take = expr.op == DslExpr::Op::Min ? v.get() < best.get()
                                                  : v.get() > best.get();
          if (take) best = v;
        }
        return best;
      }
      case DslExpr::Op::MetricRef:
        return metric_on(expr.metric, id);
      case DslExpr::Op::Add:
        return eval(*expr.children[0], id) + eval(*expr.children[1], id);
      case DslExpr::Op::Sub:
        return eval(*expr.children[0], id) - eval(*expr.children[1], id);
      case DslExpr::Op::Mul:
        return eval(*expr.children[0], id) * eval(*expr.children[1], id);
      case DslExpr::Op::Div:
        return eval(*expr.children[0], id) / eval(*expr.children[1], id);
    }
    return MetricValue::unavailable();
  }
};

}  // namespace

bool is_dsl_relation(const std::string& name) {
  return relation_names().count(name) != 0;
}

std::vector<MetricDefinition> parse_definitions(std::string_view bytes) {
  xml::Document doc;
  try {
    doc = xml::parse(bytes);
  } catch (const ParseError& e) {
    throw DslParseError(e.what(), e.line(), e.column());
  }
  if (xml::local_name(doc.root.name) != "metrics") {
    throw DslParseError("definitions document must be rooted at <metrics>",
                        doc.root.line, doc.root.column);
  }

  std::vector<MetricDefinition> definitions;
  for (const xml::Node& node : doc.root.children) {
    if (xml::local_name(node.name) != "metric") {
      parse_fail(node, "expected a <metric> element");
    }
    MetricDefinition def;
    const std::string* name = node.attr("name");
    if (!name || name->empty()) parse_fail(node, "<metric> needs a 'name'");
    def.name = *name;
    const std::string* target = node.attr("target");
    if (!target) parse_fail(node, "<metric> needs a 'target' kind");
    auto kind = kind_from_name(*target);
    if (!kind) parse_fail(node, "unknown target kind '" + *target + "'");
    def.target = *kind;
    if (const std::string* description = node.attr("description")) {
      def.description = *description;
    }
    if (node.children.size() != 1) {
      parse_fail(node, "<metric> takes exactly one expression");
    }
    def.expression = std::shared_ptr<const DslExpr>(
        parse_expr(node.children.front()).release());
    for (const MetricDefinition& existing : definitions) {
      if (existing.name == def.name) {
        parse_fail(node, "duplicate metric definition '" + def.name + "'");
      }
    }
    definitions.push_back(std::move(def));
  }

  // Second pass: references must resolve to a definition (any order) or a
  // built-in, and the definition graph must be acyclic.
  auto find_def = [&](const std::string& name) -> const MetricDefinition* {
    for (const MetricDefinition& def : definitions) {
      if (def.name == name) return &def;
    }
    return nullptr;
  };
  for (const MetricDefinition& def : definitions) {
    std::set<std::string> refs;
    collect_references(*def.expression, refs);
    for (const std::string& ref : refs) {
      if (!find_def(ref) && !is_builtin_anywhere(ref)) {
        throw UnresolvedMetric("metric '" + def.name +
                               "' references unknown metric '" + ref + "'");
      }
    }
  }
  std::map<std::string, int> state;  // 0 new, 1 visiting, 2 done
  std::function<void(const MetricDefinition&, std::vector<std::string>&)>
      visit = [&](const MetricDefinition& def,
                  std::vector<std::string>& path) {
        state[def.name] = 1;
        path.push_back(def.name);
        std::set<std::string> refs;
        collect_references(*def.expression, refs);
        for (const std::string& ref : refs) {
          const MetricDefinition* next = find_def(ref);
          if (!next) continue;  // built-in
          if (state[next->name] == 1) {
            std::string cycle;
            for (const std::string& p : path) cycle += p + " -> ";
            throw CyclicDefinition("definition cycle: " + cycle + ref);
          }
          if (state[next->name] == 0) visit(*next, path);
        }
        path.pop_back();
        state[def.name] = 2;
      };
  for (const MetricDefinition& def : definitions) {
    if (state[def.name] == 0) {
      std::vector<std::string> path;
      visit(def, path);
    }
  }
  return definitions;
}

std::vector<MetricDefinition> parse_definitions_file(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open definitions file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string bytes = buffer.str();
  return parse_definitions(bytes);
}

std::map<ElementId, MetricValue> evaluate_definition(
    const AnalysisContext& ctx, const MetricDefinition& def,
    const std::vector<MetricDefinition>& all_definitions) {
  Evaluator evaluator{ctx, all_definitions};
  std::map<ElementId, MetricValue> column;
  for (const ElementId& id : ctx.model.of_kind(def.target)) {
    column[id] = evaluator.eval(*def.expression, id);
  }
  return column;
}

}  // namespace umlmeter
