#pragma once

#include "dpvkit/diagnostics.hpp"
#include "dpvkit/rdf/graph.hpp"
#include "dpvkit/vocab/concept_graph.hpp"

namespace dpvkit::vocab {

/// Rewrites an rdfs-skos vocabulary as owl2: concepts become `owl:Class`,
/// broader edges become `rdfs:subClassOf` with the same endpoints. Concept
/// and edge counts are preserved; labels, definitions, property declarations
/// and unrecognized triples carry through unchanged.
ConceptGraph to_owl2(const ConceptGraph& cg);

/// Inverse of to_owl2 on its image: classes become instances typed
/// `skos:Concept` plus their top-concept families, subclass edges become
/// broader edges. Throws UnknownFamilyError for a class that reaches no
/// declared top concept (it cannot be expressed as an instance of anything).
ConceptGraph to_rdfs_skos(const ConceptGraph& cg);

/// Checks a usage graph against a vocabulary for the idiom mismatches that
/// only exist under owl2 semantics:
///   class-as-object      — a ranged property whose object is a class rather
///                          than an instance of one
///   subclass-of-instance — `rdfs:subClassOf` whose parent is an instance
/// Against an rdfs-skos vocabulary, instance-style usage of the same graph
/// yields no findings. Diagnostics, not errors: severity is the caller's.
Diagnostics diagnose_usage(const ConceptGraph& vocab, const rdf::Graph& usage);

}  // namespace dpvkit::vocab
