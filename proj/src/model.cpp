#include "umlmeter/model.hpp"

#include <algorithm>
#include <deque>

#include "umlmeter/errors.hpp"

namespace umlmeter {

namespace {

struct KindInfo {
  ElementKind kind;
  std::string_view name;
};

constexpr KindInfo kKinds[] = {
    {ElementKind::Package, "Package"},
    {ElementKind::Class, "Class"},
    {ElementKind::Interface, "Interface"},
    {ElementKind::Attribute, "Attribute"},
    {ElementKind::Operation, "Operation"},
    {ElementKind::Parameter, "Parameter"},
    {ElementKind::Association, "Association"},
    {ElementKind::Generalization, "Generalization"},
    {ElementKind::Dependency, "Dependency"},
    {ElementKind::Actor, "Actor"},
    {ElementKind::UseCase, "UseCase"},
    {ElementKind::Include, "Include"},
    {ElementKind::Extend, "Extend"},
    {ElementKind::ExtensionPoint, "ExtensionPoint"},
    {ElementKind::StateMachine, "StateMachine"},
    {ElementKind::State, "State"},
    {ElementKind::Transition, "Transition"},
    {ElementKind::Trigger, "Trigger"},
    {ElementKind::Activity, "Activity"},
    {ElementKind::Action, "Action"},
    {ElementKind::ObjectNode, "ObjectNode"},
    {ElementKind::Pin, "Pin"},
    {ElementKind::ControlFlow, "ControlFlow"},
    {ElementKind::ObjectFlow, "ObjectFlow"},
    {ElementKind::DecisionNode, "DecisionNode"},
    {ElementKind::ActivityPartition, "ActivityPartition"},
    {ElementKind::ExceptionHandler, "ExceptionHandler"},
    {ElementKind::Interaction, "Interaction"},
    {ElementKind::Lifeline, "Lifeline"},
    {ElementKind::Message, "Message"},
};

static_assert(sizeof(kKinds) / sizeof(kKinds[0]) == kElementKindCount);

const std::vector<ElementId>& empty_ids() {
  static const std::vector<ElementId> empty;
  return empty;
}

void push_unique(std::vector<ElementId>& list, const ElementId& id) {
  if (std::find(list.begin(), list.end(), id) == list.end()) {
    list.push_back(id);
  }
}

}  // namespace

std::string_view kind_name(ElementKind kind) {
  return kKinds[static_cast<int>(kind)].name;
}

std::optional<ElementKind> kind_from_name(std::string_view name) {
  for (const KindInfo& info : kKinds) {
    if (info.name == name) return info.kind;
  }
  return std::nullopt;
}

bool is_classifier_kind(ElementKind kind) {
  return kind == ElementKind::Class || kind == ElementKind::Interface;
}

const std::set<std::string>& allowed_ref_keys(ElementKind kind) {
  static const std::set<std::string> none;
  static const std::map<ElementKind, std::set<std::string>> table = {
      {ElementKind::Attribute, {"type", "association"}},
      {ElementKind::Parameter, {"type"}},
      {ElementKind::Generalization, {"general"}},
      {ElementKind::Dependency, {"client", "supplier"}},
      {ElementKind::Include, {"addition"}},
      {ElementKind::Extend, {"extended_case"}},
      {ElementKind::Transition, {"source", "target"}},
      {ElementKind::ControlFlow, {"source", "target"}},
      {ElementKind::ObjectFlow, {"source", "target"}},
      {ElementKind::Lifeline, {"represents"}},
      {ElementKind::Message, {"signature", "send_lifeline", "receive_lifeline"}},
      {ElementKind::StateMachine, {"specification"}},
      {ElementKind::Activity, {"specification"}},
  };
  auto it = table.find(kind);
  return it == table.end() ? none : it->second;
}

const std::set<std::string>& allowed_tag_keys(ElementKind kind) {
  static const std::set<std::string> none;
  static const std::map<ElementKind, std::set<std::string>> table = {
      {ElementKind::Attribute, {"visibility"}},
      {ElementKind::Operation, {"visibility"}},
      {ElementKind::Parameter, {"direction"}},
      {ElementKind::State, {"subkind", "entry", "exit", "do_activity"}},
      {ElementKind::Transition, {"guard", "effect"}},
      {ElementKind::ControlFlow, {"guard"}},
      {ElementKind::ObjectFlow, {"guard"}},
      {ElementKind::Dependency, {"stereotype"}},
  };
  auto it = table.find(kind);
  return it == table.end() ? none : it->second;
}

// --- ModelBuilder -----------------------------------------------------------

ModelBuilder& ModelBuilder::source(std::string provenance) {
  source_ = std::move(provenance);
  return *this;
}

ModelBuilder& ModelBuilder::add(ModelElement element) {
  if (element.id.empty()) {
    throw InvalidModel("element without an id (kind " +
                       std::string(kind_name(element.kind)) + ")");
  }
  if (!seen_.insert(element.id).second) {
    throw InvalidModel("duplicate element id '" + element.id + "'");
  }
  const auto& refs_ok = allowed_ref_keys(element.kind);
  for (const auto& [key, target] : element.refs) {
    (void)target;
    if (!refs_ok.count(key)) {
      throw WrongElementKind("ref '" + key + "' is not valid on a " +
                             std::string(kind_name(element.kind)) + " ('" +
                             element.id + "')");
    }
  }
  const auto& tags_ok = allowed_tag_keys(element.kind);
  for (const auto& [key, value] : element.tags) {
    (void)value;
    if (!tags_ok.count(key)) {
      throw WrongElementKind("tag '" + key + "' is not valid on a " +
                             std::string(kind_name(element.kind)) + " ('" +
                             element.id + "')");
    }
  }
  if (!element.end_types.empty() &&
      element.kind != ElementKind::Association) {
    throw WrongElementKind("end_types are only valid on an Association ('" +
                           element.id + "')");
  }
  elements_.push_back(std::move(element));
  return *this;
}

ModelBuilder& ModelBuilder::note_unrecognized(const std::string& tag) {
  ++unrecognized_[tag];
  return *this;
}

UmlModel ModelBuilder::build() {
  UmlModel model;
  model.source_ = std::move(source_);
  model.unrecognized_ = std::move(unrecognized_);
  for (ModelElement& e : elements_) {
    model.order_.push_back(e.id);
    model.elements_.emplace(e.id, std::move(e));
  }
  elements_.clear();
  seen_.clear();
  model.build_indices();
  return model;
}

// --- UmlModel ---------------------------------------------------------------

void UmlModel::build_indices() {
  by_kind_.assign(kElementKindCount, {});

  // Resolve references; quarantine what does not resolve. Unresolved targets
  // are treated as absent by every metric, never silently dropped.
  for (const ElementId& id : order_) {
    ModelElement& e = elements_.at(id);
    if (!e.owner.empty() && !elements_.count(e.owner)) {
      unresolved_.push_back({id, "owner", e.owner});
      e.owner.clear();
    }
    for (auto it = e.refs.begin(); it != e.refs.end();) {
      if (!elements_.count(it->second)) {
        unresolved_.push_back({id, it->first, it->second});
        it = e.refs.erase(it);
      } else {
        ++it;
      }
    }
    std::vector<ElementId> kept;
    for (const ElementId& t : e.end_types) {
      if (elements_.count(t)) {
        kept.push_back(t);
      } else {
        unresolved_.push_back({id, "end_type", t});
      }
    }
    e.end_types = std::move(kept);
  }

  // Containment must be acyclic.
  for (const ElementId& id : order_) {
    std::set<ElementId> seen;
    ElementId cur = id;
    while (!cur.empty()) {
      if (!seen.insert(cur).second) {
        throw InvalidModel("containment cycle through '" + cur + "'");
      }
      cur = elements_.at(cur).owner;
    }
  }

  for (const ElementId& id : order_) {
    const ModelElement& e = elements_.at(id);
    by_kind_[static_cast<int>(e.kind)].push_back(id);
    if (!e.owner.empty()) children_[e.owner].push_back(id);

    switch (e.kind) {
      case ElementKind::Generalization: {
        auto general = e.refs.find("general");
        if (general != e.refs.end() && !e.owner.empty()) {
          push_unique(generals_[e.owner], general->second);
          push_unique(specifics_[general->second], e.owner);
        }
        break;
      }
      case ElementKind::Association: {
        std::set<ElementId> distinct(e.end_types.begin(), e.end_types.end());
        for (const ElementId& t : distinct) {
          associations_of_[t].push_back(id);
        }
        break;
      }
      case ElementKind::Dependency: {
        auto client = e.refs.find("client");
        auto supplier = e.refs.find("supplier");
        if (client != e.refs.end()) deps_from_[client->second].push_back(id);
        if (supplier != e.refs.end()) deps_to_[supplier->second].push_back(id);
        break;
      }
      case ElementKind::Transition: {
        auto source = e.refs.find("source");
        auto target = e.refs.find("target");
        if (source != e.refs.end()) {
          transitions_from_[source->second].push_back(id);
        }
        if (target != e.refs.end()) {
          transitions_to_[target->second].push_back(id);
        }
        break;
      }
      case ElementKind::ControlFlow:
      case ElementKind::ObjectFlow: {
        auto source = e.refs.find("source");
        if (source != e.refs.end()) flows_from_[source->second].push_back(id);
        break;
      }
      case ElementKind::Message: {
        auto send = e.refs.find("send_lifeline");
        if (send != e.refs.end()) {
          messages_sent_by_[send->second].push_back(id);
        }
        break;
      }
      case ElementKind::StateMachine:
      case ElementKind::Activity: {
        auto spec = e.refs.find("specification");
        if (spec != e.refs.end()) {
          behavior_of_op_.emplace(spec->second, id);
        }
        break;
      }
      default:
        break;
    }
  }

  // No metric is defined on a cyclic hierarchy: abort with the cycle listed.
  std::map<ElementId, int> color;  // 0 new, 1 on stack, 2 done
  for (const auto& [start, parents] : generals_) {
    (void)parents;
    if (color[start] != 0) continue;
    std::vector<std::pair<ElementId, std::size_t>> stack{{start, 0}};
    std::vector<ElementId> path{start};
    color[start] = 1;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      auto it = generals_.find(node);
      if (it == generals_.end() || next >= it->second.size()) {
        color[node] = 2;
        stack.pop_back();
        path.pop_back();
        continue;
      }
      const ElementId& parent = it->second[next++];
      if (color[parent] == 1) {
        std::string cycle = parent;
        auto from = std::find(path.begin(), path.end(), parent);
        for (auto p = from + 1; p != path.end(); ++p) cycle += " -> " + *p;
        cycle += " -> " + parent;
        throw InvalidModel("generalization cycle: " + cycle);
      }
      if (color[parent] == 0) {
        color[parent] = 1;
        stack.emplace_back(parent, 0);
        path.push_back(parent);
      }
    }
  }
}

const ModelElement* UmlModel::find(const ElementId& id) const {
  auto it = elements_.find(id);
  return it == elements_.end() ? nullptr : &it->second;
}

const ModelElement& UmlModel::at(const ElementId& id) const {
  const ModelElement* e = find(id);
  if (!e) throw NotFound("no element with id '" + id + "'");
  return *e;
}

const std::vector<ElementId>& UmlModel::of_kind(ElementKind kind) const {
  return by_kind_[static_cast<int>(kind)];
}

std::size_t UmlModel::kind_count(ElementKind kind) const {
  return of_kind(kind).size();
}

const std::vector<ElementId>& UmlModel::children(const ElementId& id) const {
  auto it = children_.find(id);
  return it == children_.end() ? empty_ids() : it->second;
}

std::vector<ElementId> UmlModel::owned_of_kind(const ElementId& id,
                                               ElementKind kind) const {
  std::vector<ElementId> out;
  for (const ElementId& c : children(id)) {
    if (at(c).kind == kind) out.push_back(c);
  }
  return out;
}

std::vector<ElementId> UmlModel::owned_transitive(const ElementId& id,
                                                  ElementKind kind) const {
  std::vector<ElementId> out;
  std::vector<ElementId> stack(children(id).rbegin(), children(id).rend());
  while (!stack.empty()) {
    ElementId cur = std::move(stack.back());
    stack.pop_back();
    if (at(cur).kind == kind) out.push_back(cur);
    const auto& kids = children(cur);
    stack.insert(stack.end(), kids.rbegin(), kids.rend());
  }
  return out;
}

ElementId UmlModel::package_of(const ElementId& id) const {
  ElementId cur = at(id).owner;
  while (!cur.empty()) {
    const ModelElement& e = at(cur);
    if (e.kind == ElementKind::Package) return cur;
    cur = e.owner;
  }
  return {};
}

std::string UmlModel::qualified_name(const ElementId& id) const {
  const ModelElement& e = at(id);
  std::vector<const ModelElement*> chain;
  ElementId cur = e.owner;
  while (!cur.empty()) {
    const ModelElement& owner = at(cur);
    chain.push_back(&owner);
    cur = owner.owner;
  }
  std::string out;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    out += (*it)->name.empty() ? "#" + (*it)->id : (*it)->name;
    out += "::";
  }
  out += e.name.empty() ? "#" + e.id : e.name;
  return out;
}

const std::vector<ElementId>& UmlModel::generals(const ElementId& id) const {
  auto it = generals_.find(id);
  return it == generals_.end() ? empty_ids() : it->second;
}

const std::vector<ElementId>& UmlModel::specifics(const ElementId& id) const {
  auto it = specifics_.find(id);
  return it == specifics_.end() ? empty_ids() : it->second;
}

const std::vector<ElementId>& UmlModel::associations_of(
    const ElementId& id) const {
  auto it = associations_of_.find(id);
  return it == associations_of_.end() ? empty_ids() : it->second;
}

const std::vector<ElementId>& UmlModel::dependencies_from(
    const ElementId& id) const {
  auto it = deps_from_.find(id);
  return it == deps_from_.end() ? empty_ids() : it->second;
}

const std::vector<ElementId>& UmlModel::dependencies_to(
    const ElementId& id) const {
  auto it = deps_to_.find(id);
  return it == deps_to_.end() ? empty_ids() : it->second;
}

const std::vector<ElementId>& UmlModel::transitions_from(
    const ElementId& id) const {
  auto it = transitions_from_.find(id);
  return it == transitions_from_.end() ? empty_ids() : it->second;
}

const std::vector<ElementId>& UmlModel::transitions_to(
    const ElementId& id) const {
  auto it = transitions_to_.find(id);
  return it == transitions_to_.end() ? empty_ids() : it->second;
}

const std::vector<ElementId>& UmlModel::flows_from(const ElementId& id) const {
  auto it = flows_from_.find(id);
  return it == flows_from_.end() ? empty_ids() : it->second;
}

const std::vector<ElementId>& UmlModel::messages_sent_by(
    const ElementId& lifeline) const {
  auto it = messages_sent_by_.find(lifeline);
  return it == messages_sent_by_.end() ? empty_ids() : it->second;
}

std::optional<ElementId> UmlModel::behavior_of_operation(
    const ElementId& op) const {
  auto it = behavior_of_op_.find(op);
  if (it == behavior_of_op_.end()) return std::nullopt;
  return it->second;
}

std::optional<ElementId> UmlModel::lifeline_classifier(
    const ElementId& lifeline) const {
  const ModelElement& life = at(lifeline);
  if (life.kind != ElementKind::Lifeline) {
    throw WrongElementKind("'" + lifeline + "' is not a Lifeline");
  }
  auto rep = life.refs.find("represents");
  if (rep == life.refs.end()) return std::nullopt;
  const ModelElement& target = at(rep->second);
  if (is_classifier_kind(target.kind)) return target.id;
  if (target.kind == ElementKind::Attribute) {
    auto type = target.refs.find("type");
    if (type != target.refs.end() &&
        is_classifier_kind(at(type->second).kind)) {
      return type->second;
    }
  }
  return std::nullopt;
}

std::vector<ElementId> UmlModel::lifelines_of(
    const ElementId& classifier) const {
  std::vector<ElementId> out;
  for (const ElementId& life : of_kind(ElementKind::Lifeline)) {
    if (lifeline_classifier(life) == classifier) out.push_back(life);
  }
  return out;
}

bool UmlModel::has_interactions() const {
  return !of_kind(ElementKind::Interaction).empty();
}

std::vector<ElementId> UmlModel::ancestors(const ElementId& classifier) const {
  const ModelElement& e = at(classifier);
  if (!is_classifier_kind(e.kind)) {
    throw WrongElementKind("'" + classifier +
                           "' is not a Class or Interface (kind " +
                           std::string(kind_name(e.kind)) + ")");
  }
  std::vector<ElementId> out;
  std::set<ElementId> seen{classifier};
  std::deque<ElementId> queue(generals(classifier).begin(),
                              generals(classifier).end());
  while (!queue.empty()) {
    ElementId cur = queue.front();
    queue.pop_front();
    if (!seen.insert(cur).second) continue;
    out.push_back(cur);
    for (const ElementId& parent : generals(cur)) queue.push_back(parent);
  }
  return out;
}

std::set<ElementId> UmlModel::descendants(const ElementId& classifier) const {
  const ModelElement& e = at(classifier);
  if (!is_classifier_kind(e.kind)) {
    throw WrongElementKind("'" + classifier +
                           "' is not a Class or Interface (kind " +
                           std::string(kind_name(e.kind)) + ")");
  }
  std::set<ElementId> out;
  std::deque<ElementId> queue(specifics(classifier).begin(),
                              specifics(classifier).end());
  while (!queue.empty()) {
    ElementId cur = queue.front();
    queue.pop_front();
    if (cur == classifier || !out.insert(cur).second) continue;
    for (const ElementId& child : specifics(cur)) queue.push_back(child);
  }
  return out;
}

std::set<ElementId> UmlModel::referenced_classes(
    const ElementId& classifier) const {
  const ModelElement& e = at(classifier);
  if (!is_classifier_kind(e.kind)) {
    throw WrongElementKind("'" + classifier +
                           "' is not a Class or Interface (kind " +
                           std::string(kind_name(e.kind)) + ")");
  }
  std::set<ElementId> out;
  auto add_if_classifier = [&](const ElementId& id) {
    if (id != classifier && is_classifier_kind(at(id).kind)) out.insert(id);
  };
  for (const ElementId& child : children(classifier)) {
    const ModelElement& member = at(child);
    if (member.kind == ElementKind::Attribute) {
      auto type = member.refs.find("type");
      if (type != member.refs.end()) add_if_classifier(type->second);
    } else if (member.kind == ElementKind::Operation) {
      for (const ElementId& param : children(child)) {
        const ModelElement& p = at(param);
        if (p.kind != ElementKind::Parameter) continue;
        auto type = p.refs.find("type");
        if (type != p.refs.end()) add_if_classifier(type->second);
      }
    }
  }
  for (const ElementId& assoc : associations_of(classifier)) {
    for (const ElementId& end : at(assoc).end_types) {
      add_if_classifier(end);
    }
  }
  return out;
}

}  // namespace umlmeter
