#pragma once

#include <vector>

#include "dpvkit/vocab/concept_graph.hpp"

namespace dpvkit::vocab {

/// Everything reachable from `c` via hierarchy edges, excluding `c` itself.
/// Breadth-first order with a lexicographic tie-break among equal-depth
/// ancestors; each concept appears once, at its shallowest depth.
/// Queries ignore the relation label, so results are identical across the
/// rdfs-skos and owl2 renderings of one vocabulary.
std::vector<rdf::Iri> ancestors(const ConceptGraph& cg, const rdf::Iri& c);

/// True iff c == family or family is an ancestor of c.
bool is_a(const ConceptGraph& cg, const rdf::Iri& c, const rdf::Iri& family);

/// True iff `object` belongs to the family the property's declared range
/// names. Throws UnknownPropertyError for properties without a range.
bool in_range(const ConceptGraph& cg, const rdf::Iri& property, const rdf::Iri& object);

/// Marker-based categorization (e.g. "is this sensitive personal data?"):
/// true iff c is the marker or descends from it. Marker assertions made by
/// typing are folded into the hierarchy at load, so this is an upward
/// lookup only; markers never propagate downward by themselves.
bool categorize(const ConceptGraph& cg, const rdf::Iri& c, const rdf::Iri& marker);

}  // namespace dpvkit::vocab
