#include "umlmeter/structural.hpp"

#include <set>
#include <utility>

#include "umlmeter/errors.hpp"

namespace umlmeter {

namespace {

// Missing visibility falls back to public (the UML default); unknown
// visibilities likewise.
double responsibility_weight(const WeightConfig& weights,
                             const ModelElement& member) {
  auto vis = member.tags.find("visibility");
  std::string key = vis == member.tags.end() ? "public" : vis->second;
  auto it = weights.responsibility_weights.find(key);
  if (it != weights.responsibility_weights.end()) return it->second;
  auto pub = weights.responsibility_weights.find("public");
  return pub != weights.responsibility_weights.end() ? pub->second : 1.0;
}

double dependency_weight(const WeightConfig& weights, const std::string& kind) {
  auto it = weights.dependency_weights.find(kind);
  return it != weights.dependency_weights.end() ? it->second : 0.0;
}

double weighted_responsibilities(const UmlModel& model, const ElementId& cls,
                                 const WeightConfig& weights) {
  double total = 0;
  for (const ElementId& child : model.children(cls)) {
    const ModelElement& member = model.at(child);
    if (member.kind == ElementKind::Attribute ||
        member.kind == ElementKind::Operation) {
      total += responsibility_weight(weights, member);
    }
  }
  return total;
}

// Relations with ends in more than one package, as (source pkg, target pkg,
// relation id) triples.
struct CrossLink {
  ElementId source_package;
  ElementId relation;
};

std::vector<CrossLink> cross_package_links(const UmlModel& model) {
  std::vector<CrossLink> links;
  for (const ElementId& id : model.of_kind(ElementKind::Association)) {
    const ModelElement& assoc = model.at(id);
    if (assoc.end_types.empty()) continue;
    ElementId source_pkg = model.package_of(assoc.end_types.front());
    bool cross = false;
    for (const ElementId& end : assoc.end_types) {
      if (model.package_of(end) != source_pkg) cross = true;
    }
    if (cross) links.push_back({source_pkg, id});
  }
  for (const ElementId& id : model.of_kind(ElementKind::Dependency)) {
    const ModelElement& dep = model.at(id);
    auto client = dep.refs.find("client");
    auto supplier = dep.refs.find("supplier");
    if (client == dep.refs.end() || supplier == dep.refs.end()) continue;
    ElementId from = model.package_of(client->second);
    if (from != model.package_of(supplier->second)) {
      links.push_back({from, id});
    }
  }
  for (const ElementId& id : model.of_kind(ElementKind::Generalization)) {
    const ModelElement& gen = model.at(id);
    auto general = gen.refs.find("general");
    if (general == gen.refs.end() || gen.owner.empty()) continue;
    ElementId from = model.package_of(gen.owner);
    if (from != model.package_of(general->second)) {
      links.push_back({from, id});
    }
  }
  return links;
}

}  // namespace

WeightConfig WeightConfig::defaults() {
  WeightConfig w;
  w.responsibility_weights = {
      {"public", 1.0}, {"protected", 0.5}, {"private", 0.25}};
  w.dependency_weights = {
      {"association", 1.0}, {"dependency", 0.5}, {"generalization", 0.0}};
  return w;
}

void WeightConfig::validate() const {
  for (const auto& [key, value] : responsibility_weights) {
    if (value < 0) {
      throw InvalidConfig("responsibility weight for '" + key +
                          "' must be >= 0");
    }
  }
  for (const auto& [key, value] : dependency_weights) {
    if (value < 0) {
      throw InvalidConfig("dependency weight for '" + key + "' must be >= 0");
    }
  }
}

ClassMetricsRecord class_metrics(const UmlModel& model, const ElementId& cls,
                                 const WeightConfig& weights,
                                 const HierarchyOptions& options) {
  const ModelElement& e = model.at(cls);
  if (!is_classifier_kind(e.kind)) {
    throw WrongElementKind("'" + cls + "' is not a Class or Interface (kind " +
                           std::string(kind_name(e.kind)) + ")");
  }
  ClassMetricsRecord r;
  r.class_id = cls;
  r.num_attr =
      static_cast<int>(model.owned_of_kind(cls, ElementKind::Attribute).size());
  r.num_ops =
      static_cast<int>(model.owned_of_kind(cls, ElementKind::Operation).size());

  std::vector<ElementId> ancestors = model.ancestors(cls);
  r.num_ancestors = static_cast<int>(ancestors.size());
  for (const ElementId& ancestor : ancestors) {
    r.num_inherited_attr += static_cast<int>(
        model.owned_of_kind(ancestor, ElementKind::Attribute).size());
  }

  std::set<ElementId> implemented;
  for (const ElementId& parent : model.generals(cls)) {
    if (model.at(parent).kind == ElementKind::Interface) {
      implemented.insert(parent);
    }
  }
  for (const ElementId& dep : model.dependencies_from(cls)) {
    const ModelElement& d = model.at(dep);
    auto stereotype = d.tags.find("stereotype");
    if (stereotype == d.tags.end() || stereotype->second != "realize") {
      continue;
    }
    auto supplier = d.refs.find("supplier");
    if (supplier != d.refs.end() &&
        model.at(supplier->second).kind == ElementKind::Interface) {
      implemented.insert(supplier->second);
    }
  }
  r.num_interfaces_impl = static_cast<int>(implemented.size());

  r.cl1 = weighted_responsibilities(model, cls, weights);
  r.cl2 = static_cast<double>(model.associations_of(cls).size()) *
              dependency_weight(weights, "association") +
          static_cast<double>(model.dependencies_from(cls).size()) *
              dependency_weight(weights, "dependency") +
          static_cast<double>(model.generals(cls).size()) *
              dependency_weight(weights, "generalization");
  r.cl3 = dit(model, cls, options);
  auto [children, descendants] = noc(model, cls, options);
  r.cl4 = children;
  r.num_desc = descendants;
  r.cl5 = static_cast<int>(model.referenced_classes(cls).size());
  return r;
}

PackageMetricsRecord package_metrics(const UmlModel& model,
                                     const ElementId& package,
                                     const WeightConfig& weights) {
  const ModelElement& e = model.at(package);
  if (e.kind != ElementKind::Package) {
    throw WrongElementKind("'" + package + "' is not a Package (kind " +
                           std::string(kind_name(e.kind)) + ")");
  }
  PackageMetricsRecord r;
  r.package_id = package;
  for (const ElementId& cls :
       model.owned_of_kind(package, ElementKind::Class)) {
    ++r.pk1;
    r.pk2 += weighted_responsibilities(model, cls, weights);
  }
  for (const CrossLink& link : cross_package_links(model)) {
    if (link.source_package == package) ++r.pk3;
  }
  return r;
}

ModelTotals model_totals(const UmlModel& model) {
  ModelTotals t;
  t.nc = static_cast<int>(model.kind_count(ElementKind::Class));
  t.np = static_cast<int>(model.kind_count(ElementKind::Package));
  t.cross_package_links =
      static_cast<int>(cross_package_links(model).size());
  return t;
}

UseCaseMetricsRecord usecase_metrics(const UmlModel& model,
                                     const WeightConfig& weights) {
  UseCaseMetricsRecord r;
  r.na = static_cast<int>(model.kind_count(ElementKind::Actor));
  r.uc1 = static_cast<int>(model.kind_count(ElementKind::UseCase));

  std::set<std::pair<ElementId, ElementId>> distinct;
  for (const ElementId& id : model.of_kind(ElementKind::Association)) {
    const ModelElement& assoc = model.at(id);
    std::vector<ElementId> actors, usecases;
    for (const ElementId& end : assoc.end_types) {
      ElementKind kind = model.at(end).kind;
      if (kind == ElementKind::Actor) actors.push_back(end);
      if (kind == ElementKind::UseCase) usecases.push_back(end);
    }
    for (const ElementId& actor : actors) {
      for (const ElementId& usecase : usecases) {
        ++r.uc2;
        distinct.emplace(actor, usecase);
      }
    }
  }
  r.uc3 = static_cast<int>(distinct.size());
  r.uc4 = weights.uc4_alpha * r.uc1 + weights.uc4_beta * r.uc2 +
          weights.uc4_gamma * r.uc3;

  for (const ElementId& usecase : model.of_kind(ElementKind::UseCase)) {
    UseCaseMetricsRecord::PerUseCase per;
    per.usecase_id = usecase;
    per.ext_pts = static_cast<int>(
        model.owned_of_kind(usecase, ElementKind::ExtensionPoint).size());
    per.includes = static_cast<int>(
        model.owned_of_kind(usecase, ElementKind::Include).size());
    per.extends = static_cast<int>(
        model.owned_of_kind(usecase, ElementKind::Extend).size());
    r.per_usecase.push_back(per);
  }
  return r;
}

}  // namespace umlmeter
