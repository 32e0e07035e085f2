#include "dpvkit/rdf/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace dpvkit::rdf {

BlankNodeLimitError::BlankNodeLimitError(std::size_t count, std::size_t limit)
    : Error("graph has " + std::to_string(count) + " blank nodes, isomorphism limit is " +
            std::to_string(limit)),
      count_(count),
      limit_(limit) {}

namespace {

std::string term_key(const Term& t) {
    switch (t.kind()) {
        case TermKind::Iri: return "I" + t.value();
        case TermKind::BlankNode: return "B" + t.value();
        case TermKind::Literal:
            return "L" + t.value() + "|" + (t.datatype() ? t.datatype()->str() : "") + "|" +
                   (t.language() ? *t.language() : "");
    }
    return "";
}

bool has_blank(const Triple& t) { return t.subject.is_blank() || t.object.is_blank(); }

// Shape of one blank node: the sorted patterns of every triple it occurs in,
// with other blank nodes collapsed to a wildcard. Mappable nodes must agree.
std::string signature(const Graph& g, const std::string& label) {
    std::vector<std::string> patterns;
    for (const Triple& t : g.triples()) {
        bool subj = t.subject.is_blank() && t.subject.value() == label;
        bool obj = t.object.is_blank() && t.object.value() == label;
        if (!subj && !obj) continue;
        auto part = [&](const Term& term, bool is_self) -> std::string {
            if (is_self) return "@self";
            if (term.is_blank()) return "@blank";
            return term_key(term);
        };
        std::string pattern = (subj ? "S" : "O") + std::string("|") + t.predicate.str() + "|" +
                              part(t.subject, subj) + "|" + part(t.object, obj);
        patterns.push_back(std::move(pattern));
    }
    std::sort(patterns.begin(), patterns.end());
    std::string sig;
    for (const std::string& p : patterns) sig += p + ";";
    return sig;
}

struct Matcher {
    const Graph& a;
    const Graph& b;
    std::vector<std::string> a_blanks;
    std::map<std::string, std::vector<std::string>> b_by_signature;
    std::map<std::string, std::string> a_signatures;
    std::map<std::string, std::string> mapping;  // a label -> b label
    std::map<std::string, bool> taken;

    bool extend(std::size_t i) {
        if (i == a_blanks.size()) return true;
        const std::string& x = a_blanks[i];
        auto candidates = b_by_signature.find(a_signatures.at(x));
        if (candidates == b_by_signature.end()) return false;
        for (const std::string& y : candidates->second) {
            if (taken[y]) continue;
            mapping[x] = y;
            taken[y] = true;
            if (consistent(x) && extend(i + 1)) return true;
            taken[y] = false;
            mapping.erase(x);
        }
        return false;
    }

    // Every triple of `a` mentioning `x` whose blanks are all mapped must
    // exist in `b` under the current mapping.
    bool consistent(const std::string& x) {
        for (const Triple& t : a.triples()) {
            bool touches = (t.subject.is_blank() && t.subject.value() == x) ||
                           (t.object.is_blank() && t.object.value() == x);
            if (!touches) continue;
            if (t.subject.is_blank() && mapping.find(t.subject.value()) == mapping.end()) continue;
            if (t.object.is_blank() && mapping.find(t.object.value()) == mapping.end()) continue;
            Term s = t.subject.is_blank() ? Term::blank(mapping.at(t.subject.value())) : t.subject;
            Term o = t.object.is_blank() ? Term::blank(mapping.at(t.object.value())) : t.object;
            if (!b.contains(Triple(s, t.predicate, o))) return false;
        }
        return true;
    }
};

}  // namespace

bool graph_isomorphic(const Graph& a, const Graph& b, std::size_t max_blank_nodes) {
    std::set<std::string> a_labels = a.blank_labels();
    std::set<std::string> b_labels = b.blank_labels();
    if (a_labels.size() > max_blank_nodes)
        throw BlankNodeLimitError(a_labels.size(), max_blank_nodes);
    if (b_labels.size() > max_blank_nodes)
        throw BlankNodeLimitError(b_labels.size(), max_blank_nodes);

    if (a.size() != b.size() || a_labels.size() != b_labels.size()) return false;

    // Ground triples must match exactly.
    for (const Triple& t : a.triples())
        if (!has_blank(t) && !b.contains(t)) return false;

    Matcher m{a, b, {}, {}, {}, {}, {}};
    std::map<std::string, std::size_t> a_sig_counts;
    for (const std::string& label : a_labels) {
        std::string sig = signature(a, label);
        m.a_signatures[label] = sig;
        ++a_sig_counts[sig];
        m.a_blanks.push_back(label);
    }
    std::map<std::string, std::size_t> b_sig_counts;
    for (const std::string& label : b_labels) {
        std::string sig = signature(b, label);
        m.b_by_signature[sig].push_back(label);
        ++b_sig_counts[sig];
    }
    if (a_sig_counts != b_sig_counts) return false;

    // Most-constrained first: nodes from the rarest signature classes.
    std::sort(m.a_blanks.begin(), m.a_blanks.end(),
              [&](const std::string& lhs, const std::string& rhs) {
                  std::size_t cl = a_sig_counts[m.a_signatures[lhs]];
                  std::size_t cr = a_sig_counts[m.a_signatures[rhs]];
                  if (cl != cr) return cl < cr;
                  return lhs < rhs;
              });

    return m.extend(0);
}

}  // namespace dpvkit::rdf
