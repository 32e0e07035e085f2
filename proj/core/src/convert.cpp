#include "dpvkit/vocab/convert.hpp"

#include "dpvkit/rdf/namespaces.hpp"

namespace dpvkit::vocab {

namespace ns = rdf::ns;

namespace {

// Typing and hierarchy triples are the only ones the two serializations
// disagree on; everything else is copied verbatim.
rdf::Graph rewrite_source(const ConceptGraph& cg, SemanticsMode target) {
    const bool to_skos = target == SemanticsMode::RdfsSkos;

    rdf::Graph out;
    for (const auto& [label, ns_iri] : cg.source().prefixes()) out.add_prefix(label, ns_iri);
    const std::string wanted_label = to_skos ? "skos" : "owl";
    const rdf::Iri wanted_ns = rdf::Iri(to_skos ? ns::skos : ns::owl);
    if (out.prefixes().count(wanted_label) == 0) out.add_prefix(wanted_label, wanted_ns);

    auto is_concept = [&cg](const rdf::Term& t) {
        return t.is_iri() && cg.has_concept(t.as_iri());
    };

    for (const rdf::Triple& t : cg.source().triples()) {
        if (t.predicate == ns::skos_broader || t.predicate == ns::rdfs_sub_class_of) continue;
        if (t.predicate == ns::rdf_type && is_concept(t.subject) && t.object.is_iri()) {
            rdf::Iri type = t.object.as_iri();
            if (type == ns::skos_concept || type == ns::owl_class || type == ns::rdfs_class ||
                cg.has_concept(type))
                continue;
        }
        out.insert(t);
    }

    const rdf::Iri concept_type = to_skos ? ns::skos_concept : ns::owl_class;
    const rdf::Iri hierarchy_predicate = to_skos ? ns::skos_broader : ns::rdfs_sub_class_of;
    for (const auto& [iri, c] : cg.concepts()) {
        rdf::Term subject = rdf::Term::iri(iri);
        out.insert(rdf::Triple(subject, ns::rdf_type, rdf::Term::iri(concept_type)));
        if (to_skos)
            for (const rdf::Iri& family : c.top_concepts)
                if (family != iri)
                    out.insert(rdf::Triple(subject, ns::rdf_type, rdf::Term::iri(family)));
    }
    for (const HierarchyEdge& e : cg.edges())
        out.insert(rdf::Triple(rdf::Term::iri(e.child), hierarchy_predicate,
                               rdf::Term::iri(e.parent)));
    return out;
}

ConceptGraph convert(const ConceptGraph& cg, SemanticsMode target) {
    const HierarchyRelation relation = target == SemanticsMode::RdfsSkos
                                           ? HierarchyRelation::Broader
                                           : HierarchyRelation::SubClassOf;
    std::set<HierarchyEdge> edges;
    for (const HierarchyEdge& e : cg.edges())
        edges.insert(HierarchyEdge{e.child, e.parent, relation});

    return ConceptGraph(target, cg.concepts(), std::move(edges), cg.properties(),
                        cg.declared_tops(), rewrite_source(cg, target));
}

}  // namespace

ConceptGraph to_owl2(const ConceptGraph& cg) {
    if (cg.mode() != SemanticsMode::RdfsSkos)
        throw Error("to_owl2 expects an rdfs-skos vocabulary");
    return convert(cg, SemanticsMode::Owl2);
}

ConceptGraph to_rdfs_skos(const ConceptGraph& cg) {
    if (cg.mode() != SemanticsMode::Owl2)
        throw Error("to_rdfs_skos expects an owl2 vocabulary");
    // An instance must be an instance *of* something: classes outside every
    // family cannot be rendered.
    for (const auto& [iri, c] : cg.concepts())
        if (c.top_concepts.empty()) throw UnknownFamilyError(iri);
    return convert(cg, SemanticsMode::RdfsSkos);
}

Diagnostics diagnose_usage(const ConceptGraph& vocab, const rdf::Graph& usage) {
    Diagnostics out;

    // Terms the usage graph itself declares as classes or uses as instances.
    std::set<rdf::Iri> usage_classes;
    std::set<rdf::Iri> usage_instances;
    for (const rdf::Triple& t : usage.with_predicate(ns::rdf_type)) {
        if (!t.subject.is_iri() || !t.object.is_iri()) continue;
        rdf::Iri type = t.object.as_iri();
        if (type == ns::owl_class || type == ns::rdfs_class)
            usage_classes.insert(t.subject.as_iri());
        else
            usage_instances.insert(t.subject.as_iri());
    }

    auto is_class_term = [&](const rdf::Iri& iri) {
        if (usage_classes.count(iri) != 0) return true;
        return vocab.mode() == SemanticsMode::Owl2 && vocab.has_concept(iri);
    };
    auto is_instance_term = [&](const rdf::Iri& iri) {
        if (usage_instances.count(iri) != 0) return true;
        return vocab.mode() == SemanticsMode::RdfsSkos && vocab.has_concept(iri);
    };

    for (const rdf::Triple& t : usage.triples()) {
        if (t.object.is_iri() && vocab.properties().count(t.predicate) != 0) {
            rdf::Iri object = t.object.as_iri();
            if (is_class_term(object) && !is_instance_term(object))
                out.push_back({"class-as-object", t.predicate.str(),
                               "object <" + object.str() + "> of property <" + t.predicate.str() +
                                   "> is a class; the property expects instances of <" +
                                   vocab.properties().at(t.predicate).str() + ">"});
        }
        if (t.predicate == ns::rdfs_sub_class_of && t.subject.is_iri() && t.object.is_iri()) {
            rdf::Iri parent = t.object.as_iri();
            if (is_instance_term(parent) && !is_class_term(parent))
                out.push_back({"subclass-of-instance", t.subject.value(),
                               "<" + t.subject.value() + "> is declared a subclass of <" +
                                   parent.str() + ">, but that term is an instance, not a class"});
        }
    }

    return out;
}

}  // namespace dpvkit::vocab
