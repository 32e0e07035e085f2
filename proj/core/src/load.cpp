#include "dpvkit/vocab/load.hpp"

#include <algorithm>
#include <deque>

#include "dpvkit/rdf/namespaces.hpp"

namespace dpvkit::vocab {

namespace ns = rdf::ns;

namespace {

bool reaches(const std::map<rdf::Iri, std::set<rdf::Iri>>& parents, const rdf::Iri& from,
             const rdf::Iri& to) {
    std::deque<rdf::Iri> queue{from};
    std::set<rdf::Iri> seen{from};
    while (!queue.empty()) {
        rdf::Iri node = queue.front();
        queue.pop_front();
        auto it = parents.find(node);
        if (it == parents.end()) continue;
        for (const rdf::Iri& parent : it->second) {
            if (parent == to) return true;
            if (seen.insert(parent).second) queue.push_back(parent);
        }
    }
    return false;
}

std::optional<std::string> literal_of(const rdf::Graph& g, const rdf::Term& subject,
                                      const rdf::Iri& predicate) {
    for (const rdf::Term& o : g.objects(subject, predicate))
        if (o.is_literal()) return o.value();
    return std::nullopt;
}

}  // namespace

SemanticsMode detect_mode(const rdf::Graph& g) {
    bool skos_markers = !g.with_predicate(ns::skos_broader).empty() ||
                        !g.subjects_of_type(ns::skos_concept).empty();
    bool owl_markers = !g.with_predicate(ns::rdfs_sub_class_of).empty() ||
                       !g.subjects_of_type(ns::owl_class).empty();
    if (skos_markers && owl_markers) throw MixedModeError();
    return owl_markers ? SemanticsMode::Owl2 : SemanticsMode::RdfsSkos;
}

ConceptGraph load_vocabulary(const rdf::Graph& g, SemanticsMode mode,
                             const std::set<rdf::Iri>& top_concepts) {
    if (!g.with_predicate(ns::skos_broader).empty() &&
        !g.with_predicate(ns::rdfs_sub_class_of).empty())
        throw MixedModeError();

    const bool skos = mode == SemanticsMode::RdfsSkos;
    const rdf::Iri concept_type = skos ? ns::skos_concept : ns::owl_class;
    const rdf::Iri hierarchy_predicate = skos ? ns::skos_broader : ns::rdfs_sub_class_of;
    const HierarchyRelation relation =
        skos ? HierarchyRelation::Broader : HierarchyRelation::SubClassOf;

    std::set<rdf::Iri> concept_iris;
    for (const rdf::Term& s : g.subjects_of_type(concept_type))
        if (s.is_iri()) concept_iris.insert(s.as_iri());

    // Typings by a declared top concept introduce concepts; a referenced top
    // concept becomes a concept even when the document never types it.
    for (const rdf::Triple& t : g.with_predicate(ns::rdf_type)) {
        if (!t.object.is_iri()) continue;
        rdf::Iri type = t.object.as_iri();
        if (top_concepts.count(type) == 0) continue;
        concept_iris.insert(type);
        if (skos && t.subject.is_iri()) concept_iris.insert(t.subject.as_iri());
    }
    for (const rdf::Triple& t : g.with_predicate(hierarchy_predicate)) {
        if (t.subject.is_iri() && top_concepts.count(t.subject.as_iri()) != 0)
            concept_iris.insert(t.subject.as_iri());
        if (t.object.is_iri() && top_concepts.count(t.object.as_iri()) != 0)
            concept_iris.insert(t.object.as_iri());
    }

    std::map<rdf::Iri, Concept> concepts;
    for (const rdf::Iri& iri : concept_iris) {
        Concept c{iri, std::nullopt, std::nullopt, {}, ConceptStatus::Accepted};
        rdf::Term subject = rdf::Term::iri(iri);
        c.label = literal_of(g, subject, ns::skos_pref_label);
        if (!c.label) c.label = literal_of(g, subject, ns::rdfs_label);
        c.definition = literal_of(g, subject, ns::skos_definition);
        if (auto status = literal_of(g, subject, ns::term_status); status && *status == "deprecated")
            c.status = ConceptStatus::Deprecated;
        concepts.emplace(iri, std::move(c));
    }

    std::set<HierarchyEdge> edges;
    std::map<rdf::Iri, std::set<rdf::Iri>> parents;
    for (const rdf::Triple& t : g.with_predicate(hierarchy_predicate)) {
        if (!t.subject.is_iri()) throw DanglingEdgeError(rdf::Iri("_:" + t.subject.value()));
        if (!t.object.is_iri())
            throw LoadError("hierarchy edge from <" + t.subject.value() +
                            "> does not point at an IRI");
        rdf::Iri child = t.subject.as_iri();
        rdf::Iri parent = t.object.as_iri();
        if (concepts.count(child) == 0) throw DanglingEdgeError(child);
        if (concepts.count(parent) == 0) throw DanglingEdgeError(parent);
        edges.insert(HierarchyEdge{child, parent, relation});
        parents[child].insert(parent);
    }

    // Normalize membership typings the hierarchy does not already entail
    // into edges: `loc:IE a dpv:Location` with no broader chain gets the
    // edge IE -> Location. Deterministic: typings processed in term order.
    if (skos) {
        for (const rdf::Triple& t : g.with_predicate(ns::rdf_type)) {
            if (!t.subject.is_iri() || !t.object.is_iri()) continue;
            rdf::Iri child = t.subject.as_iri();
            rdf::Iri target = t.object.as_iri();
            if (child == target) continue;
            if (concepts.count(child) == 0 || concepts.count(target) == 0) continue;
            if (reaches(parents, child, target)) continue;
            edges.insert(HierarchyEdge{child, target, relation});
            parents[child].insert(target);
        }
    }

    std::map<rdf::Iri, rdf::Iri> properties;
    std::set<rdf::Iri> property_iris;
    for (const rdf::Term& s : g.subjects_of_type(ns::rdf_property))
        if (s.is_iri()) property_iris.insert(s.as_iri());
    for (const rdf::Term& s : g.subjects_of_type(ns::owl_object_property))
        if (s.is_iri()) property_iris.insert(s.as_iri());
    for (const rdf::Iri& p : property_iris) {
        auto range = g.object(rdf::Term::iri(p), ns::rdfs_range);
        if (range && range->is_iri()) properties.emplace(p, range->as_iri());
    }

    return ConceptGraph(mode, std::move(concepts), std::move(edges), std::move(properties),
                        top_concepts, g);
}

Diagnostics validate_wellformed(const ConceptGraph& cg) {
    Diagnostics out;

    for (const auto& [iri, c] : cg.concepts()) {
        if (c.top_concepts.empty())
            out.push_back({"orphan-concept", iri.str(),
                           "concept <" + iri.str() + "> has no path to any top concept"});
    }

    // Duplicate labels within one family.
    std::map<std::pair<rdf::Iri, std::string>, std::vector<rdf::Iri>> by_family_label;
    for (const auto& [iri, c] : cg.concepts()) {
        if (!c.label) continue;
        for (const rdf::Iri& family : c.top_concepts)
            by_family_label[{family, *c.label}].push_back(iri);
    }
    for (const auto& [key, members] : by_family_label) {
        if (members.size() < 2) continue;
        std::string listing;
        for (const rdf::Iri& iri : members) listing += " <" + iri.str() + ">";
        out.push_back({"duplicate-label", key.first.str(),
                       "label \"" + key.second + "\" used by" + listing + " within family <" +
                           key.first.str() + ">"});
    }

    for (const HierarchyEdge& e : cg.edges()) {
        if (cg.concept_at(e.parent).status == ConceptStatus::Deprecated)
            out.push_back({"deprecated-parent", e.child.str(),
                           "concept <" + e.child.str() + "> has deprecated parent <" +
                               e.parent.str() + ">"});
    }

    return out;
}

}  // namespace dpvkit::vocab
