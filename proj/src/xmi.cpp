#include "umlmeter/xmi.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "umlmeter/errors.hpp"
#include "umlmeter/xml.hpp"

namespace umlmeter {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool contains_ci(std::string_view haystack, std::string_view needle) {
  return lower(haystack).find(lower(needle)) != std::string::npos;
}

DialectTable make_canonical() {
  DialectTable t;
  t.type_attrs = {"xmi:type", "xsi:type"};
  t.id_attrs = {"xmi:id", "id"};
  t.ref_attrs = {
      {"type", {"type"}},
      {"association", {"association"}},
      {"general", {"general"}},
      {"client", {"client"}},
      {"supplier", {"supplier", "contract"}},
      {"addition", {"addition"}},
      {"extended_case", {"extendedCase"}},
      {"source", {"source"}},
      {"target", {"target"}},
      {"represents", {"represents"}},
      {"signature", {"signature"}},
      {"send_lifeline", {"sendLifeline"}},
      {"receive_lifeline", {"receiveLifeline"}},
      {"specification", {"specification"}},
  };

  auto& types = t.type_map;
  types["Package"] = KindMapping::element(ElementKind::Package);
  types["Model"] = KindMapping::container();
  types["Class"] = KindMapping::element(ElementKind::Class);
  types["Interface"] = KindMapping::element(ElementKind::Interface);
  types["Property"] = KindMapping::element(ElementKind::Attribute);
  types["Operation"] = KindMapping::element(ElementKind::Operation);
  types["Parameter"] = KindMapping::element(ElementKind::Parameter);
  types["Association"] = KindMapping::element(ElementKind::Association);
  types["Generalization"] = KindMapping::element(ElementKind::Generalization);
  types["Dependency"] = KindMapping::element(ElementKind::Dependency);
  types["Usage"] = KindMapping::element(ElementKind::Dependency);
  types["Abstraction"] = KindMapping::element(ElementKind::Dependency);
  {
    KindMapping realize = KindMapping::element(ElementKind::Dependency);
    realize.tags["stereotype"] = "realize";
    types["Realization"] = realize;
    types["InterfaceRealization"] = realize;
  }
  types["Actor"] = KindMapping::element(ElementKind::Actor);
  types["UseCase"] = KindMapping::element(ElementKind::UseCase);
  types["Include"] = KindMapping::element(ElementKind::Include);
  types["Extend"] = KindMapping::element(ElementKind::Extend);
  types["ExtensionPoint"] = KindMapping::element(ElementKind::ExtensionPoint);
  types["StateMachine"] = KindMapping::element(ElementKind::StateMachine);
  types["Region"] = KindMapping::container();
  {
    KindMapping state = KindMapping::element(ElementKind::State);
    state.tags["subkind"] = "normal";
    types["State"] = state;
    KindMapping final_state = KindMapping::element(ElementKind::State);
    final_state.tags["subkind"] = "final";
    types["FinalState"] = final_state;
    KindMapping pseudo = KindMapping::element(ElementKind::State);
    pseudo.tags["subkind"] = "initial";  // the UML default pseudostate kind
    pseudo.attr_tags["kind"] = "subkind";
    types["Pseudostate"] = pseudo;
  }
  {
    KindMapping transition = KindMapping::element(ElementKind::Transition);
    transition.attr_tags["guard"] = "guard";
    transition.attr_tags["effect"] = "effect";
    types["Transition"] = transition;
  }
  types["Trigger"] = KindMapping::element(ElementKind::Trigger);
  types["Activity"] = KindMapping::element(ElementKind::Activity);
  for (const char* action :
       {"Action", "OpaqueAction", "CallOperationAction", "CallBehaviorAction",
        "SendSignalAction", "AcceptEventAction", "CreateObjectAction",
        "ReadSelfAction", "ValueSpecificationAction"}) {
    types[action] = KindMapping::element(ElementKind::Action);
  }
  for (const char* node : {"ObjectNode", "CentralBufferNode", "DataStoreNode",
                           "ActivityParameterNode"}) {
    types[node] = KindMapping::element(ElementKind::ObjectNode);
  }
  for (const char* pin : {"InputPin", "OutputPin", "ValuePin"}) {
    types[pin] = KindMapping::element(ElementKind::Pin);
  }
  {
    KindMapping flow = KindMapping::element(ElementKind::ControlFlow);
    flow.attr_tags["guard"] = "guard";
    types["ControlFlow"] = flow;
    flow.kind = ElementKind::ObjectFlow;
    types["ObjectFlow"] = flow;
  }
  types["DecisionNode"] = KindMapping::element(ElementKind::DecisionNode);
  types["ActivityPartition"] =
      KindMapping::element(ElementKind::ActivityPartition);
  types["ExceptionHandler"] =
      KindMapping::element(ElementKind::ExceptionHandler);
  types["Interaction"] = KindMapping::element(ElementKind::Interaction);
  types["Lifeline"] = KindMapping::element(ElementKind::Lifeline);
  types["Message"] = KindMapping::element(ElementKind::Message);
  types["Collaboration"] = KindMapping::container();

  // Recognized noise: skipped without an unrecognized-tag report.
  for (const char* noise :
       {"Comment", "PrimitiveType", "DataType", "Enumeration",
        "EnumerationLiteral", "Constraint", "OpaqueExpression",
        "LiteralInteger", "LiteralString", "LiteralBoolean",
        "LiteralUnlimitedNatural", "Signal", "SignalEvent", "CallEvent",
        "TimeEvent", "ChangeEvent", "OpaqueBehavior", "FunctionBehavior",
        "Profile", "Stereotype", "Extension", "InstanceSpecification"}) {
    types[noise] = KindMapping::ignore();
  }

  auto& tags = t.tag_map;
  tags["XMI"] = KindMapping::container();
  tags["Model"] = KindMapping::container();
  tags["Package"] = KindMapping::element(ElementKind::Package);
  tags["handler"] = KindMapping::element(ElementKind::ExceptionHandler);
  {
    KindMapping attribute = KindMapping::element(ElementKind::Attribute);
    attribute.attr_tags["visibility"] = "visibility";
    tags["ownedAttribute"] = attribute;
    tags["ownedEnd"] = attribute;
    types["Property"].attr_tags["visibility"] = "visibility";
  }
  {
    KindMapping operation = KindMapping::element(ElementKind::Operation);
    operation.attr_tags["visibility"] = "visibility";
    tags["ownedOperation"] = operation;
    types["Operation"].attr_tags["visibility"] = "visibility";
  }
  {
    KindMapping parameter = KindMapping::element(ElementKind::Parameter);
    parameter.attr_tags["direction"] = "direction";
    tags["ownedParameter"] = parameter;
    types["Parameter"].attr_tags["direction"] = "direction";
  }
  tags["generalization"] = KindMapping::element(ElementKind::Generalization);
  tags["interfaceRealization"] = types["InterfaceRealization"];
  tags["include"] = KindMapping::element(ElementKind::Include);
  tags["extend"] = KindMapping::element(ElementKind::Extend);
  tags["extensionPoint"] = KindMapping::element(ElementKind::ExtensionPoint);
  tags["ownedUseCase"] = KindMapping::element(ElementKind::UseCase);
  tags["lifeline"] = KindMapping::element(ElementKind::Lifeline);
  tags["message"] = KindMapping::element(ElementKind::Message);
  tags["transition"] = types["Transition"];
  tags["trigger"] = KindMapping::element(ElementKind::Trigger);
  tags["region"] = KindMapping::container();

  for (const char* noise :
       {"ownedComment", "eAnnotations", "Documentation", "documentation",
        "Extension", "packageImport", "elementImport", "profileApplication",
        "defaultValue", "lowerValue", "upperValue", "ownedRule",
        "precondition", "postcondition"}) {
    tags[noise] = KindMapping::ignore();
  }
  return t;
}

struct ResolvedRef {
  std::string key;
  std::string value;
};

// Splits space-separated idref lists ("a b c").
std::vector<std::string> split_ids(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string id;
  while (in >> id) out.push_back(id);
  return out;
}

// href="other.xmi#id" stays whole (cross-file, quarantined); "#id" -> "id".
std::string href_to_id(const std::string& href) {
  auto hash = href.find('#');
  if (hash == std::string::npos) return href;
  if (hash == 0) return href.substr(1);
  return href;
}

class Ingestor {
 public:
  Ingestor(const xml::Document& doc, const std::string& source,
           const DialectTable& dialect)
      : doc_(doc), dialect_(dialect) {
    builder_.source(source);
  }

  UmlModel run() {
    walk(doc_.root, /*owner=*/"");
    resolve_message_events();
    assemble_association_ends();
    for (PendingElement& p : pending_) {
      builder_.add(std::move(p.element));
    }
    return builder_.build();
  }

 private:
  struct PendingElement {
    ModelElement element;
    std::vector<std::string> member_end_ids;  // Association only
    std::string send_event;                   // Message only
    std::string receive_event;
  };

  const xml::Document& doc_;
  const DialectTable& dialect_;
  ModelBuilder builder_;
  std::vector<PendingElement> pending_;
  std::map<std::string, std::size_t> pending_index_;  // id -> index
  std::map<std::string, std::string> event_covers_;   // occurrence id -> lifeline
  int synth_counter_ = 0;

  const KindMapping* mapping_for(const xml::Node& node) const {
    for (const std::string& attr : dialect_.type_attrs) {
      if (const std::string* type = node.attr(attr)) {
        std::string local(xml::local_name(*type));
        auto it = dialect_.type_map.find(local);
        if (it != dialect_.type_map.end()) return &it->second;
        return nullptr;
      }
    }
    auto it = dialect_.tag_map.find(std::string(xml::local_name(node.name)));
    if (it != dialect_.tag_map.end()) return &it->second;
    return nullptr;
  }

  std::string element_id(const xml::Node& node) {
    for (const std::string& attr : dialect_.id_attrs) {
      if (const std::string* id = node.attr(attr)) return *id;
      if (const std::string* id = node.attr_local(attr)) return *id;
    }
    return "auto#" + std::to_string(++synth_counter_);
  }

  const std::string* ref_attr(const xml::Node& node,
                              const std::string& key) const {
    auto it = dialect_.ref_attrs.find(key);
    if (it == dialect_.ref_attrs.end()) return nullptr;
    for (const std::string& synonym : it->second) {
      if (const std::string* v = node.attr_local(synonym)) return v;
    }
    return nullptr;
  }

  // Child-element reference form: <type xmi:idref="x"/> or href.
  std::optional<std::string> child_ref(const xml::Node& node,
                                       const std::string& key) const {
    auto it = dialect_.ref_attrs.find(key);
    if (it == dialect_.ref_attrs.end()) return std::nullopt;
    for (const std::string& synonym : it->second) {
      if (const xml::Node* child = node.child_local(synonym)) {
        if (const std::string* idref = child->attr_local("idref")) {
          return *idref;
        }
        if (const std::string* href = child->attr_local("href")) {
          return href_to_id(*href);
        }
      }
    }
    return std::nullopt;
  }

  // Guard/effect/entry text: name or body or value attr, else inner text,
  // else a bare presence marker.
  static std::string behavior_text(const xml::Node& node) {
    for (const char* attr : {"name", "body", "value"}) {
      if (const std::string* v = node.attr_local(attr)) {
        if (!v->empty()) return *v;
      }
    }
    for (const xml::Node& child : node.children) {
      for (const char* attr : {"body", "value"}) {
        if (const std::string* v = child.attr_local(attr)) {
          if (!v->empty()) return *v;
        }
      }
    }
    std::string text = node.text;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "present";
    auto last = text.find_last_not_of(" \t\r\n");
    return text.substr(first, last - first + 1);
  }

  bool is_occurrence(const xml::Node& node) const {
    for (const std::string& attr : dialect_.type_attrs) {
      if (const std::string* type = node.attr(attr)) {
        std::string_view local = xml::local_name(*type);
        return local == "MessageOccurrenceSpecification" ||
               local == "OccurrenceSpecification" ||
               local == "ExecutionOccurrenceSpecification";
      }
    }
    return false;
  }

  void walk(const xml::Node& node, const ElementId& owner) {
    if (is_occurrence(node)) {
      if (const std::string* covered = node.attr_local("covered")) {
        auto ids = split_ids(*covered);
        if (!ids.empty()) {
          for (const std::string& id : dialect_.id_attrs) {
            if (const std::string* own = node.attr(id)) {
              event_covers_[*own] = ids.front();
              break;
            }
          }
        }
      }
      return;
    }

    const KindMapping* mapping = mapping_for(node);
    if (!mapping) {
      builder_.note_unrecognized(std::string(xml::local_name(node.name)));
      for (const xml::Node& child : node.children) walk(child, owner);
      return;
    }
    switch (mapping->action) {
      case KindMapping::Action::Ignore:
        return;
      case KindMapping::Action::Container:
        for (const xml::Node& child : node.children) walk(child, owner);
        return;
      case KindMapping::Action::Element:
        break;
    }

    PendingElement pending;
    ModelElement& e = pending.element;
    e.kind = mapping->kind;
    e.id = element_id(node);
    e.owner = owner;
    if (const std::string* name = node.attr_local("name")) e.name = *name;
    e.tags = mapping->tags;
    for (const auto& [xml_attr, tag_key] : mapping->attr_tags) {
      if (const std::string* v = node.attr_local(xml_attr)) {
        e.tags[tag_key] = *v;
      }
    }

    std::set<std::string> consumed_children;
    for (const auto& [key, synonyms] : dialect_.ref_attrs) {
      if (!allowed_ref_keys(e.kind).count(key)) continue;
      if (const std::string* v = ref_attr(node, key)) {
        e.refs[key] = href_to_id(*v);
      } else if (auto from_child = child_ref(node, key)) {
        e.refs[key] = *from_child;
        for (const std::string& synonym : synonyms) {
          consumed_children.insert(synonym);
        }
      }
    }

    switch (e.kind) {
      case ElementKind::Dependency:
        // A dependency serialized inside a classifier implies the owner is
        // the client.
        if (!e.refs.count("client") && !owner.empty()) {
          e.refs["client"] = owner;
        }
        break;
      case ElementKind::Association: {
        if (const std::string* ends = node.attr_local("memberEnd")) {
          pending.member_end_ids = split_ids(*ends);
        }
        for (const xml::Node& child : node.children) {
          if (xml::local_name(child.name) == "memberEnd") {
            if (const std::string* idref = child.attr_local("idref")) {
              pending.member_end_ids.push_back(*idref);
            }
          }
        }
        consumed_children.insert("memberEnd");
        break;
      }
      case ElementKind::Message: {
        if (const std::string* v = node.attr_local("sendEvent")) {
          pending.send_event = *v;
        }
        if (const std::string* v = node.attr_local("receiveEvent")) {
          pending.receive_event = *v;
        }
        break;
      }
      case ElementKind::State: {
        static const std::map<std::string, std::string> kBehaviorTags = {
            {"entry", "entry"},
            {"exit", "exit"},
            {"doActivity", "do_activity"},
        };
        for (const xml::Node& child : node.children) {
          auto it = kBehaviorTags.find(std::string(xml::local_name(child.name)));
          if (it != kBehaviorTags.end()) {
            e.tags[it->second] = behavior_text(child);
            consumed_children.insert(it->first);
          }
        }
        break;
      }
      case ElementKind::Transition:
      case ElementKind::ControlFlow:
      case ElementKind::ObjectFlow: {
        for (const xml::Node& child : node.children) {
          std::string local(xml::local_name(child.name));
          if (local == "guard") {
            e.tags["guard"] = behavior_text(child);
            consumed_children.insert("guard");
          } else if (local == "effect" && e.kind == ElementKind::Transition) {
            e.tags["effect"] = behavior_text(child);
            consumed_children.insert("effect");
          }
        }
        break;
      }
      default:
        break;
    }

    ElementId id = e.id;
    pending_index_[id] = pending_.size();
    pending_.push_back(std::move(pending));

    for (const xml::Node& child : node.children) {
      if (consumed_children.count(std::string(xml::local_name(child.name)))) {
        continue;
      }
      walk(child, id);
    }
  }

  void resolve_message_events() {
    for (PendingElement& p : pending_) {
      if (p.element.kind != ElementKind::Message) continue;
      auto resolve = [&](const std::string& event, const char* key) {
        if (event.empty() || p.element.refs.count(key)) return;
        auto it = event_covers_.find(event);
        // An unresolvable event keeps the raw id so the quarantine records it.
        p.element.refs[key] = it == event_covers_.end() ? event : it->second;
      };
      resolve(p.send_event, "send_lifeline");
      resolve(p.receive_event, "receive_lifeline");
    }
  }

  void assemble_association_ends() {
    // End properties can be owned by the association (ownedEnd), referenced
    // via memberEnd, or owned by a classifier with an `association` backref.
    for (PendingElement& p : pending_) {
      if (p.element.kind != ElementKind::Association) continue;
      std::vector<std::string> end_properties;
      auto add_end = [&](const std::string& property_id) {
        if (std::find(end_properties.begin(), end_properties.end(),
                      property_id) == end_properties.end()) {
          end_properties.push_back(property_id);
        }
      };
      for (const PendingElement& other : pending_) {
        if (other.element.kind == ElementKind::Attribute &&
            other.element.owner == p.element.id) {
          add_end(other.element.id);
        }
      }
      for (const std::string& id : p.member_end_ids) add_end(id);
      for (const PendingElement& other : pending_) {
        auto assoc = other.element.refs.find("association");
        if (other.element.kind == ElementKind::Attribute &&
            assoc != other.element.refs.end() &&
            assoc->second == p.element.id) {
          add_end(other.element.id);
        }
      }
      for (const std::string& property_id : end_properties) {
        auto idx = pending_index_.find(property_id);
        if (idx == pending_index_.end()) {
          // Missing end property: keep the raw id; it will be quarantined.
          p.element.end_types.push_back(property_id);
          continue;
        }
        const ModelElement& property = pending_[idx->second].element;
        auto type = property.refs.find("type");
        if (type != property.refs.end()) {
          p.element.end_types.push_back(type->second);
        }
      }
    }
  }
};

struct RootInfo {
  const xml::Node* root = nullptr;
  std::string version;
  std::optional<std::string> exporter;
};

RootInfo inspect_root(const xml::Document& doc) {
  RootInfo info;
  const xml::Node& root = doc.root;
  std::string_view local = xml::local_name(root.name);

  bool xmi_ns = false, uml_ns = false;
  std::string ns_version;
  for (const xml::Attr& attr : root.attrs) {
    if (attr.name.rfind("xmlns", 0) == 0) {
      if (contains_ci(attr.value, "xmi")) {
        xmi_ns = true;
        auto slash = attr.value.rfind('/');
        if (slash != std::string::npos && slash + 1 < attr.value.size()) {
          std::string tail = attr.value.substr(slash + 1);
          if (!tail.empty() && std::isdigit(static_cast<unsigned char>(tail[0]))) {
            ns_version = tail;
          }
        }
      }
      if (contains_ci(attr.value, "uml")) uml_ns = true;
    }
  }

  bool looks_like_xmi_root = local == "XMI" && xmi_ns;
  bool looks_like_model_root =
      (local == "Model" || local == "Package") &&
      (uml_ns || xml::name_prefix(root.name) == "uml");
  if (!looks_like_xmi_root && !looks_like_model_root) {
    throw NotXmi("document root <" + root.name +
                 "> is not a recognizable XMI or UML model root");
  }

  if (const std::string* v = root.attr_local("version")) {
    info.version = *v;
  } else if (!ns_version.empty()) {
    info.version = ns_version;
  } else {
    info.version = "2.0";
  }

  for (const xml::Node& child : root.children) {
    std::string_view child_local = xml::local_name(child.name);
    if (child_local == "Documentation" || child_local == "documentation") {
      if (const std::string* exporter = child.attr_local("exporter")) {
        info.exporter = *exporter;
      }
    }
  }
  info.root = &root;
  return info;
}

const DialectTable& select_dialect(const std::optional<std::string>& exporter,
                                   const IngestOptions& options,
                                   DialectTable& merged_storage) {
  if (exporter) {
    for (const DialectTable& table : options.dialects) {
      if (!table.exporter.empty() &&
          lower(table.exporter) == lower(*exporter)) {
        merged_storage = canonical_dialect();
        merged_storage.merge(table);
        return merged_storage;
      }
    }
  }
  return canonical_dialect();
}

KindMapping mapping_from_json(const nlohmann::json& value,
                              const std::string& context) {
  auto parse_kind = [&](const std::string& name) {
    if (name == "@container") return KindMapping::container();
    if (name == "@ignore") return KindMapping::ignore();
    auto kind = kind_from_name(name);
    if (!kind) {
      throw ConfigError("unknown element kind '" + name + "' in " + context);
    }
    return KindMapping::element(*kind);
  };
  if (value.is_string()) return parse_kind(value.get<std::string>());
  if (!value.is_object() || !value.contains("kind")) {
    throw ConfigError("dialect mapping in " + context +
                      " must be a kind name or an object with 'kind'");
  }
  KindMapping m = parse_kind(value["kind"].get<std::string>());
  if (value.contains("tags")) {
    for (auto& [k, v] : value["tags"].items()) {
      m.tags[k] = v.get<std::string>();
    }
  }
  if (value.contains("attr_tags")) {
    for (auto& [k, v] : value["attr_tags"].items()) {
      m.attr_tags[k] = v.get<std::string>();
    }
  }
  return m;
}

}  // namespace

void DialectTable::merge(const DialectTable& other) {
  if (!other.exporter.empty()) exporter = other.exporter;
  for (const auto& [k, v] : other.type_map) type_map[k] = v;
  for (const auto& [k, v] : other.tag_map) tag_map[k] = v;
  for (const std::string& a : other.type_attrs) {
    if (std::find(type_attrs.begin(), type_attrs.end(), a) ==
        type_attrs.end()) {
      type_attrs.push_back(a);
    }
  }
  for (const std::string& a : other.id_attrs) {
    if (std::find(id_attrs.begin(), id_attrs.end(), a) == id_attrs.end()) {
      id_attrs.push_back(a);
    }
  }
  for (const auto& [key, synonyms] : other.ref_attrs) {
    auto& mine = ref_attrs[key];
    for (const std::string& s : synonyms) {
      if (std::find(mine.begin(), mine.end(), s) == mine.end()) {
        mine.push_back(s);
      }
    }
  }
}

const DialectTable& canonical_dialect() {
  static const DialectTable table = make_canonical();
  return table;
}

DialectTable load_dialect_table(const std::filesystem::path& json_file) {
  std::ifstream in(json_file);
  if (!in) throw ConfigError("cannot open dialect table: " + json_file.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("malformed dialect table " + json_file.string() + ": " +
                      e.what());
  }
  DialectTable table;
  std::string context = json_file.filename().string();
  if (doc.contains("exporter")) {
    table.exporter = doc["exporter"].get<std::string>();
  }
  if (doc.contains("type_map")) {
    for (auto& [k, v] : doc["type_map"].items()) {
      table.type_map[k] = mapping_from_json(v, context);
    }
  }
  if (doc.contains("tag_map")) {
    for (auto& [k, v] : doc["tag_map"].items()) {
      table.tag_map[k] = mapping_from_json(v, context);
    }
  }
  if (doc.contains("type_attrs")) {
    for (auto& v : doc["type_attrs"]) {
      table.type_attrs.push_back(v.get<std::string>());
    }
  }
  if (doc.contains("id_attrs")) {
    for (auto& v : doc["id_attrs"]) {
      table.id_attrs.push_back(v.get<std::string>());
    }
  }
  if (doc.contains("ref_attrs")) {
    for (auto& [k, v] : doc["ref_attrs"].items()) {
      for (auto& synonym : v) {
        table.ref_attrs[k].push_back(synonym.get<std::string>());
      }
    }
  }
  return table;
}

std::vector<DialectTable> load_dialect_dir(const std::filesystem::path& dir) {
  std::vector<DialectTable> tables;
  if (!std::filesystem::is_directory(dir)) return tables;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& file : files) tables.push_back(load_dialect_table(file));
  return tables;
}

XmiDialect detect_dialect(std::string_view bytes) {
  xml::Document doc = xml::parse(bytes);
  RootInfo info = inspect_root(doc);
  return XmiDialect{info.version, info.exporter};
}

UmlModel parse_xmi(std::string_view bytes, const std::string& source_name,
                   const IngestOptions& options) {
  xml::Document doc = xml::parse(bytes);
  RootInfo info = inspect_root(doc);
  DialectTable merged;
  const DialectTable& dialect = select_dialect(info.exporter, options, merged);
  std::string source = source_name.empty() ? "<memory>" : source_name;
  source += " (XMI " + info.version;
  if (info.exporter) source += ", exporter " + *info.exporter;
  source += ")";
  return Ingestor(doc, source, dialect).run();
}

UmlModel parse_xmi_file(const std::filesystem::path& path,
                        const IngestOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_xmi(buffer.str(), path.string(), options);
}

}  // namespace umlmeter
