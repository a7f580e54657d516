#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace umlmeter {

using ElementId = std::string;

enum class ElementKind {
  Package,
  Class,
  Interface,
  Attribute,
  Operation,
  Parameter,
  Association,
  Generalization,
  Dependency,
  Actor,
  UseCase,
  Include,
  Extend,
  ExtensionPoint,
  StateMachine,
  State,
  Transition,
  Trigger,
  Activity,
  Action,
  ObjectNode,
  Pin,
  ControlFlow,
  ObjectFlow,
  DecisionNode,
  ActivityPartition,
  ExceptionHandler,
  Interaction,
  Lifeline,
  Message,
};

inline constexpr int kElementKindCount = 30;

std::string_view kind_name(ElementKind kind);
std::optional<ElementKind> kind_from_name(std::string_view name);

// One model node. `refs` and `tags` only admit keys registered for the
// element's kind: a State never carries a Message signature.
//
// Ref keys by kind:
//   Attribute:    type, association        Parameter:  type
//   Generalization: general                Include:    addition
//   Extend:       extended_case            Dependency: client, supplier
//   Transition / ControlFlow / ObjectFlow: source, target
//   Lifeline:     represents
//   Message:      signature, send_lifeline, receive_lifeline
//   StateMachine / Activity: specification (the operation it realizes)
// Tag keys by kind:
//   Attribute/Operation: visibility        Parameter: direction
//   State:        subkind (normal|initial|final|choice|junction),
//                 entry, exit, do_activity
//   Transition:   guard, effect            ControlFlow/ObjectFlow: guard
//   Dependency:   stereotype
struct ModelElement {
  ElementId id;
  ElementKind kind = ElementKind::Class;
  std::string name;  // empty = unnamed (ingestion must not invent names)
  ElementId owner;   // empty = top-level
  std::map<std::string, ElementId> refs;
  std::vector<ElementId> end_types;  // Association participants, in order
  std::map<std::string, std::string> tags;
};

struct UnresolvedRef {
  ElementId source;     // element holding the dangling reference
  std::string ref_key;  // which reference (or "end_type" / "owner")
  ElementId target;     // the id that did not resolve
};

class UmlModel;

// Accumulates elements (document order), then validates and freezes them
// into an immutable UmlModel. Dangling references are quarantined, never
// silently dropped; containment or generalization cycles abort the build.
class ModelBuilder {
 public:
  ModelBuilder& source(std::string provenance);
  ModelBuilder& add(ModelElement element);  // throws on bad id/refs/tags
  ModelBuilder& note_unrecognized(const std::string& tag);
  UmlModel build();

 private:
  std::string source_;
  std::vector<ModelElement> elements_;
  std::set<ElementId> seen_;
  std::map<std::string, int> unrecognized_;
};

// Immutable-after-construction model graph. All read operations are safe to
// call concurrently.
class UmlModel {
 public:
  const ModelElement* find(const ElementId& id) const;
  const ModelElement& at(const ElementId& id) const;  // throws NotFound

  // Elements in document order.
  const std::vector<ElementId>& ids() const { return order_; }
  const std::vector<ElementId>& of_kind(ElementKind kind) const;
  std::size_t kind_count(ElementKind kind) const;

  // Containment.
  const std::vector<ElementId>& children(const ElementId& id) const;
  std::vector<ElementId> owned_of_kind(const ElementId& id,
                                       ElementKind kind) const;
  // All transitively contained elements of a kind, containment pre-order.
  std::vector<ElementId> owned_transitive(const ElementId& id,
                                          ElementKind kind) const;
  // Nearest enclosing Package, empty when none.
  ElementId package_of(const ElementId& id) const;
  // Package path + name; unnamed elements use "#id" as the leaf.
  std::string qualified_name(const ElementId& id) const;

  // Generalization graph (document order, deduplicated).
  const std::vector<ElementId>& generals(const ElementId& id) const;
  const std::vector<ElementId>& specifics(const ElementId& id) const;

  // Relationship indices.
  const std::vector<ElementId>& associations_of(const ElementId& id) const;
  const std::vector<ElementId>& dependencies_from(const ElementId& id) const;
  const std::vector<ElementId>& dependencies_to(const ElementId& id) const;
  const std::vector<ElementId>& transitions_from(const ElementId& id) const;
  const std::vector<ElementId>& transitions_to(const ElementId& id) const;
  const std::vector<ElementId>& flows_from(const ElementId& id) const;
  const std::vector<ElementId>& messages_sent_by(const ElementId& lifeline) const;
  std::optional<ElementId> behavior_of_operation(const ElementId& op) const;

  // The classifier a lifeline stands for: its `represents` target when that
  // is a Class/Interface, or the target's type when it is an Attribute.
  std::optional<ElementId> lifeline_classifier(const ElementId& lifeline) const;
  std::vector<ElementId> lifelines_of(const ElementId& classifier) const;

  bool has_interactions() const;

  // Transitive generalization targets in breadth-first order from the
  // element, deduplicated. Throws NotFound / WrongElementKind.
  std::vector<ElementId> ancestors(const ElementId& classifier) const;
  // Transitive specializations; never contains the element itself.
  std::set<ElementId> descendants(const ElementId& classifier) const;
  // Classifier types named by the class's attributes, operation parameters
  // and returns, plus association ends touching it. Self excluded; only
  // model classifiers count (primitives contribute nothing).
  std::set<ElementId> referenced_classes(const ElementId& classifier) const;

  const std::vector<UnresolvedRef>& unresolved_refs() const {
    return unresolved_;
  }
  const std::map<std::string, int>& unrecognized_tags() const {
    return unrecognized_;
  }
  const std::string& source() const { return source_; }

 private:
  friend class ModelBuilder;
  UmlModel() = default;
  void build_indices();  // validates acyclicity, resolves refs

  std::string source_;
  std::map<ElementId, ModelElement> elements_;
  std::vector<ElementId> order_;
  std::map<std::string, int> unrecognized_;
  std::vector<UnresolvedRef> unresolved_;

  std::vector<std::vector<ElementId>> by_kind_;
  std::map<ElementId, std::vector<ElementId>> children_;
  std::map<ElementId, std::vector<ElementId>> generals_;
  std::map<ElementId, std::vector<ElementId>> specifics_;
  std::map<ElementId, std::vector<ElementId>> associations_of_;
  std::map<ElementId, std::vector<ElementId>> deps_from_;
  std::map<ElementId, std::vector<ElementId>> deps_to_;
  std::map<ElementId, std::vector<ElementId>> transitions_from_;
  std::map<ElementId, std::vector<ElementId>> transitions_to_;
  std::map<ElementId, std::vector<ElementId>> flows_from_;
  std::map<ElementId, std::vector<ElementId>> messages_sent_by_;
  std::map<ElementId, ElementId> behavior_of_op_;
};

// True for Class/Interface.
bool is_classifier_kind(ElementKind kind);

// The ref/tag keys a kind admits (see the ModelElement comment).
const std::set<std::string>& allowed_ref_keys(ElementKind kind);
const std::set<std::string>& allowed_tag_keys(ElementKind kind);

}  // namespace umlmeter
