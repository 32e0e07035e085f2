#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dpvkit/diagnostics.hpp"
#include "dpvkit/error.hpp"
#include "dpvkit/rdf/graph.hpp"
#include "dpvkit/vocab/concept_graph.hpp"

namespace dpvkit::consent {

class ExtractError : public Error {
public:
    using Error::Error;
};

class EventOrderError : public Error {
public:
    using Error::Error;
};

// Storage terms attached to one process: where and for how long.
struct StorageCondition {
    rdf::Term node;  // the source graph node, kept for lossless output
    std::optional<rdf::Iri> location;
    std::optional<std::string> duration;  // ISO 8601 duration lexical form

    bool operator==(const StorageCondition&) const = default;
};

// One processing activity inside a consent record: what is done, with which
// data, why, and under which legal basis.
struct ProcessDescription {
    rdf::Term node;
    std::optional<std::string> title;
    std::optional<std::string> title_language;
    std::set<rdf::Iri> purpose;
    std::set<rdf::Iri> legal_basis;
    std::set<rdf::Iri> personal_data;
    std::optional<rdf::Iri> controller;
    std::set<rdf::Iri> processing;
    std::optional<StorageCondition> storage;
    std::optional<rdf::Iri> jurisdiction;
    std::set<rdf::Iri> recipients;

    bool operator==(const ProcessDescription&) const = default;
};

// A consent status change: what was indicated, how, when, by whom.
struct ConsentEvent {
    rdf::Term node;
    rdf::Iri status;
    std::optional<rdf::Iri> expression;
    std::string timestamp;  // ISO 8601 date-time lexical form, compared lexically
    std::optional<std::string> duration;
    std::optional<std::string> entity;

    bool operator==(const ConsentEvent&) const = default;
};

struct ConsentRecord {
    rdf::Iri iri;
    std::optional<std::string> schema_version;  // e.g. "ISO-27560"
    std::string identifier;
    std::string data_subject;
    std::optional<rdf::Iri> notice;
    std::vector<ProcessDescription> processes;
    std::optional<rdf::Iri> current_status;
    std::vector<ConsentEvent> events;  // ordered by timestamp
    // Triples the schema does not know, preserved verbatim (with the source
    // prefix map) so re-serialization is lossless.
    rdf::Graph residue;

    bool operator==(const ConsentRecord&) const = default;
};

enum class ValidationLevel { Structural, Complete };

/// Builds a ConsentRecord from a graph containing exactly one subject typed
/// `dpv:ConsentRecord`. Throws ExtractError when there is none or more than
/// one. Event parts are recognized by their status typing; parts without any
/// typing stay in the residue. Without a vocabulary the event status is the
/// type matching the record's own status (falling back to the first type in
/// term order); the overload taking a vocabulary picks the type belonging to
/// the consent-status family instead.
ConsentRecord extract_record(const rdf::Graph& g);
ConsentRecord extract_record(const rdf::Graph& g, const vocab::ConceptGraph& cg);

/// Inverse of extract_record: rebuilds the record's triples and merges the
/// preserved residue. extract(record_to_graph(r)) == r.
rdf::Graph record_to_graph(const ConsentRecord& r);

/// Structural level: required fields (identifier, data subject, at least one
/// process, a status) and status/event consistency. Complete level adds
/// range checks for every vocabulary-valued field (purposes under Purpose,
/// processing under Processing, and so on), per-process non-emptiness, and
/// lexical checks for durations and timestamps. Structural findings are a
/// subset of complete ones. Empty result means valid.
Diagnostics validate_record(const ConsentRecord& r, const vocab::ConceptGraph& cg,
                            ValidationLevel level);

/// Returns a copy with the event appended and the record status updated to
/// the event's status. The input is untouched. Throws EventOrderError when
/// the event is older than the newest recorded one (or not a date-time).
ConsentRecord append_event(const ConsentRecord& r, const ConsentEvent& e);

/// {"record": ..., "level": ..., "diagnostics": [{code, path, message}]}
/// with stable field order, 2-space indent, trailing newline.
std::string validation_report_json(const ConsentRecord& r, ValidationLevel level,
                                   const Diagnostics& diagnostics);

bool valid_xsd_duration(std::string_view lexical);
bool valid_xsd_date_time(std::string_view lexical);

}  // namespace dpvkit::consent
