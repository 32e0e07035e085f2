#include "dpvkit/vocab/query.hpp"

#include <algorithm>
#include <set>

namespace dpvkit::vocab {

std::vector<rdf::Iri> ancestors(const ConceptGraph& cg, const rdf::Iri& c) {
    if (!cg.has_concept(c)) throw UnknownConceptError(c);

    std::vector<rdf::Iri> out;
    std::set<rdf::Iri> seen{c};
    std::vector<rdf::Iri> level{c};
    while (!level.empty()) {
        std::set<rdf::Iri> next;
        for (const rdf::Iri& node : level)
            for (const rdf::Iri& parent : cg.parents_of(node))
                if (seen.insert(parent).second) next.insert(parent);
        // One set per depth: lexicographic within the level.
        out.insert(out.end(), next.begin(), next.end());
        level.assign(next.begin(), next.end());
    }
    return out;
}

bool is_a(const ConceptGraph& cg, const rdf::Iri& c, const rdf::Iri& family) {
    if (!cg.has_concept(c)) throw UnknownConceptError(c);
    if (!cg.has_concept(family)) throw UnknownConceptError(family);
    if (c == family) return true;

    std::set<rdf::Iri> seen{c};
    std::vector<rdf::Iri> stack{c};
    while (!stack.empty()) {
        rdf::Iri node = stack.back();
        stack.pop_back();
        for (const rdf::Iri& parent : cg.parents_of(node)) {
            if (parent == family) return true;
            if (seen.insert(parent).second) stack.push_back(parent);
        }
    }
    return false;
}

bool in_range(const ConceptGraph& cg, const rdf::Iri& property, const rdf::Iri& object) {
    auto it = cg.properties().find(property);
    if (it == cg.properties().end()) throw UnknownPropertyError(property);
    return is_a(cg, object, it->second);
}

bool categorize(const ConceptGraph& cg, const rdf::Iri& c, const rdf::Iri& marker) {
    // Typing-based marker assertions are already hierarchy edges (see
    // load_vocabulary), so membership is plain upward reachability.
    return is_a(cg, c, marker);
}

}  // namespace dpvkit::vocab
