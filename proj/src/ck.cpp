#include "umlmeter/ck.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>

#include "umlmeter/errors.hpp"

namespace umlmeter {

namespace {

const ModelElement& require_classifier(const UmlModel& model,
                                       const ElementId& cls) {
  const ModelElement& e = model.at(cls);
  if (!is_classifier_kind(e.kind)) {
    throw WrongElementKind("'" + cls + "' is not a Class or Interface (kind " +
                           std::string(kind_name(e.kind)) + ")");
  }
  return e;
}

bool admissible_in_hierarchy(const UmlModel& model, const ElementId& id,
                             const HierarchyOptions& options) {
  ElementKind kind = model.at(id).kind;
  if (kind == ElementKind::Class) return true;
  return kind == ElementKind::Interface && options.interfaces_in_hierarchy;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

// "getPrice"/"setPrice"/"isOpen"/"price" all name an accessor of the
// attribute with the matching name.
bool names_accessor_of(const std::string& op_name,
                       const std::string& attr_name) {
  if (attr_name.empty() || op_name.empty()) return false;
  std::string op = lower(op_name);
  std::string attr = lower(attr_name);
  if (op == attr) return true;
  for (const char* prefix : {"get", "set", "is"}) {
    std::string candidate = std::string(prefix) + attr;
    if (op == candidate) return true;
  }
  return false;
}

}  // namespace

int wmc1(const UmlModel& model, const ElementId& cls) {
  require_classifier(model, cls);
  return static_cast<int>(
      model.owned_of_kind(cls, ElementKind::Operation).size());
}

int cyclomatic_of_behavior(const UmlModel& model, const ElementId& behavior) {
  const ModelElement& e = model.at(behavior);
  int decisions = 0;
  if (e.kind == ElementKind::Activity) {
    for (const ElementId& node :
         model.owned_transitive(behavior, ElementKind::DecisionNode)) {
      int out_degree = static_cast<int>(model.flows_from(node).size());
      decisions += std::max(0, out_degree - 1);
    }
  } else if (e.kind == ElementKind::StateMachine) {
    for (const ElementId& state :
         model.owned_transitive(behavior, ElementKind::State)) {
      auto subkind = model.at(state).tags.find("subkind");
      if (subkind == model.at(state).tags.end()) continue;
      if (subkind->second != "choice" && subkind->second != "junction") {
        continue;
      }
      int out_degree = static_cast<int>(model.transitions_from(state).size());
      decisions += std::max(0, out_degree - 1);
    }
  } else {
    throw WrongElementKind("'" + behavior +
                           "' is not an Activity or StateMachine (kind " +
                           std::string(kind_name(e.kind)) + ")");
  }
  return 1 + decisions;
}

int wmc_cc(const UmlModel& model, const ElementId& cls) {
  require_classifier(model, cls);
  int total = 0;
  for (const ElementId& op : model.owned_of_kind(cls, ElementKind::Operation)) {
    auto behavior = model.behavior_of_operation(op);
    total += behavior ? cyclomatic_of_behavior(model, *behavior) : 1;
  }
  return total;
}

int dit(const UmlModel& model, const ElementId& cls,
        const HierarchyOptions& options) {
  require_classifier(model, cls);
  std::map<ElementId, int> memo;
  std::function<int(const ElementId&)> depth = [&](const ElementId& id) {
    auto it = memo.find(id);
    if (it != memo.end()) return it->second;
    int best = 0;
    for (const ElementId& parent : model.generals(id)) {
      if (!admissible_in_hierarchy(model, parent, options)) continue;
      best = std::max(best, 1 + depth(parent));
    }
    memo[id] = best;
    return best;
  };
  return depth(cls);
}

std::pair<int, int> noc(const UmlModel& model, const ElementId& cls,
                        const HierarchyOptions& options) {
  require_classifier(model, cls);
  int children = 0;
  for (const ElementId& child : model.specifics(cls)) {
    if (admissible_in_hierarchy(model, child, options)) ++children;
  }
  std::set<ElementId> seen;
  std::deque<ElementId> queue{cls};
  while (!queue.empty()) {
    ElementId cur = queue.front();
    queue.pop_front();
    for (const ElementId& child : model.specifics(cur)) {
      if (!admissible_in_hierarchy(model, child, options)) continue;
      if (child != cls && seen.insert(child).second) queue.push_back(child);
    }
  }
  return {children, static_cast<int>(seen.size())};
}

MetricValue rfc(const UmlModel& model, const ElementId& cls) {
  require_classifier(model, cls);
  if (!model.has_interactions()) return MetricValue::unavailable();
  std::set<ElementId> responses;
  for (const ElementId& op : model.owned_of_kind(cls, ElementKind::Operation)) {
    responses.insert(op);
  }
  for (const ElementId& lifeline : model.lifelines_of(cls)) {
    for (const ElementId& message : model.messages_sent_by(lifeline)) {
      auto signature = model.at(message).refs.find("signature");
      if (signature != model.at(message).refs.end()) {
        responses.insert(signature->second);
      }
    }
  }
  return MetricValue(static_cast<int>(responses.size()));
}

int cbo(const UmlModel& model, const ElementId& cls) {
  std::set<ElementId> coupled = model.referenced_classes(cls);
  if (model.has_interactions()) {
    for (const ElementId& lifeline : model.lifelines_of(cls)) {
      for (const ElementId& message : model.messages_sent_by(lifeline)) {
        auto receive = model.at(message).refs.find("receive_lifeline");
        if (receive == model.at(message).refs.end()) continue;
        auto target = model.lifeline_classifier(receive->second);
        if (target && *target != cls) coupled.insert(*target);
      }
    }
  }
  return static_cast<int>(coupled.size());
}

UsageMap derive_usage_map(const UmlModel& model) {
  UsageMap usage;

  auto attribute_belongs_to_op_class = [&](const ElementId& op,
                                           const ElementId& attr) {
    const ElementId& op_class = model.at(op).owner;
    if (op_class.empty() || !is_classifier_kind(model.at(op_class).kind)) {
      return false;
    }
    const ElementId& attr_class = model.at(attr).owner;
    if (attr_class == op_class) return true;
    auto ancestors = model.ancestors(op_class);
    return std::find(ancestors.begin(), ancestors.end(), attr_class) !=
           ancestors.end();
  };

  // Evidence (a): explicit operation -> attribute dependencies.
  for (const ElementId& dep : model.of_kind(ElementKind::Dependency)) {
    const ModelElement& d = model.at(dep);
    auto client = d.refs.find("client");
    auto supplier = d.refs.find("supplier");
    if (client == d.refs.end() || supplier == d.refs.end()) continue;
    if (model.at(client->second).kind != ElementKind::Operation) continue;
    if (model.at(supplier->second).kind != ElementKind::Attribute) continue;
    if (!attribute_belongs_to_op_class(client->second, supplier->second)) {
      continue;
    }
    usage[client->second].insert(supplier->second);
  }

  // Evidence (b): self-messages whose signature names an accessor of an
  // attribute of the class (or an ancestor).
  for (const ElementId& message : model.of_kind(ElementKind::Message)) {
    const ModelElement& m = model.at(message);
    auto send = m.refs.find("send_lifeline");
    auto receive = m.refs.find("receive_lifeline");
    auto signature = m.refs.find("signature");
    if (send == m.refs.end() || receive == m.refs.end() ||
        signature == m.refs.end()) {
      continue;
    }
    auto send_cls = model.lifeline_classifier(send->second);
    auto receive_cls = model.lifeline_classifier(receive->second);
    if (!send_cls || !receive_cls || *send_cls != *receive_cls) continue;
    const ModelElement& op = model.at(signature->second);
    if (op.kind != ElementKind::Operation) continue;

    std::vector<ElementId> scope{*send_cls};
    for (const ElementId& ancestor : model.ancestors(*send_cls)) {
      scope.push_back(ancestor);
    }
    for (const ElementId& owner : scope) {
      for (const ElementId& attr :
           model.owned_of_kind(owner, ElementKind::Attribute)) {
        if (names_accessor_of(op.name, model.at(attr).name) &&
            attribute_belongs_to_op_class(signature->second, attr)) {
          usage[signature->second].insert(attr);
        }
      }
    }
  }
  return usage;
}

MetricValue lcom(const UmlModel& model, const ElementId& cls,
                 const UsageMap& usage) {
  require_classifier(model, cls);
  std::vector<ElementId> ops = model.owned_of_kind(cls, ElementKind::Operation);
  if (ops.size() < 2) return MetricValue(0);

  static const std::set<ElementId> kEmpty;
  bool any_evidence = false;
  std::vector<const std::set<ElementId>*> sets;
  for (const ElementId& op : ops) {
    auto it = usage.find(op);
    if (it != usage.end() && !it->second.empty()) {
      any_evidence = true;
      sets.push_back(&it->second);
    } else {
      sets.push_back(&kEmpty);
    }
  }
  if (!any_evidence) return MetricValue::unavailable();

  int disjoint = 0, intersecting = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      bool overlap = std::any_of(sets[i]->begin(), sets[i]->end(),
                                 [&](const ElementId& a) {
                                   return sets[j]->count(a) != 0;
                                 });
      overlap ? ++intersecting : ++disjoint;
    }
  }
  return MetricValue(std::max(0, disjoint - intersecting));
}

CkRecord ck_record(const UmlModel& model, const ElementId& cls,
                   const UsageMap& usage, const HierarchyOptions& options) {
  CkRecord record;
  record.class_id = cls;
  record.wmc1 = wmc1(model, cls);
  record.wmc_cc = wmc_cc(model, cls);
  record.dit = dit(model, cls, options);
  auto [children, descendants] = noc(model, cls, options);
  record.noc = children;
  record.num_desc = descendants;
  record.rfc = rfc(model, cls);
  record.cbo = cbo(model, cls);
  record.lcom = lcom(model, cls, usage);
  return record;
}

}  // namespace umlmeter
