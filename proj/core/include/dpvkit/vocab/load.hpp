#pragma once

#include <set>

#include "dpvkit/diagnostics.hpp"
#include "dpvkit/rdf/graph.hpp"
#include "dpvkit/vocab/concept_graph.hpp"

namespace dpvkit::vocab {

/// Interprets a parsed graph as a vocabulary.
///
/// In rdfs-skos mode a concept is any subject typed `skos:Concept` or typed
/// directly by a declared top concept; `skos:broader` triples become edges.
/// In owl2 mode a concept is any subject typed `owl:Class`; `rdfs:subClassOf`
/// triples become edges. Declared top concepts that are merely referenced
/// are materialized as concepts. A typing by a known concept that the
/// hierarchy does not already entail (`loc:IE a dpv:Location` with no broader
/// chain) is normalized into an edge, so family membership is always
/// hierarchy reachability.
///
/// Throws MixedModeError when both `skos:broader` and `rdfs:subClassOf`
/// hierarchies occur, CycleError / DanglingEdgeError per ConceptGraph rules.
ConceptGraph load_vocabulary(const rdf::Graph& g, SemanticsMode mode,
                             const std::set<rdf::Iri>& top_concepts);

/// Picks the semantics mode a document is written in from its typing and
/// hierarchy markers. Empty or marker-free graphs default to rdfs-skos;
/// documents carrying both idioms raise MixedModeError.
SemanticsMode detect_mode(const rdf::Graph& g);

/// Non-fatal shape findings: orphan concepts (no family), duplicate labels
/// within one top-concept family, deprecated concepts used as parents.
/// An empty result means well-formed.
Diagnostics validate_wellformed(const ConceptGraph& cg);

}  // namespace dpvkit::vocab
