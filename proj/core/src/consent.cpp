#include "dpvkit/consent/record.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

#include "dpvkit/dpv.hpp"
#include "dpvkit/rdf/namespaces.hpp"
#include "dpvkit/vocab/query.hpp"

namespace dpvkit::consent {

namespace ns = rdf::ns;

namespace {

// Tracks which triples the schema consumed; everything else is residue.
class Extractor {
public:
    explicit Extractor(const rdf::Graph& g) : g_(g) {}

    void consume(const rdf::Term& s, const rdf::Iri& p, const rdf::Term& o) {
        consumed_.insert(rdf::Triple(s, p, o));
    }

    std::optional<rdf::Term> take_first(const rdf::Term& s, const rdf::Iri& p,
                                        rdf::TermKind kind) {
        for (const rdf::Term& o : g_.objects(s, p)) {
            if (o.kind() != kind) continue;
            consume(s, p, o);
            return o;
        }
        return std::nullopt;
    }

    std::optional<std::string> take_literal(const rdf::Term& s, const rdf::Iri& p) {
        auto term = take_first(s, p, rdf::TermKind::Literal);
        if (!term) return std::nullopt;
        return term->value();
    }

    std::optional<rdf::Iri> take_iri(const rdf::Term& s, const rdf::Iri& p) {
        auto term = take_first(s, p, rdf::TermKind::Iri);
        if (!term) return std::nullopt;
        return term->as_iri();
    }

    std::set<rdf::Iri> take_iri_set(const rdf::Term& s, const rdf::Iri& p) {
        std::set<rdf::Iri> out;
        for (const rdf::Term& o : g_.objects(s, p)) {
            if (!o.is_iri()) continue;
            consume(s, p, o);
            out.insert(o.as_iri());
        }
        return out;
    }

    std::vector<rdf::Term> take_nodes(const rdf::Term& s, const rdf::Iri& p) {
        std::vector<rdf::Term> out;
        for (const rdf::Term& o : g_.objects(s, p)) {
            if (o.is_literal()) continue;
            consume(s, p, o);
            out.push_back(o);
        }
        return out;
    }

    std::vector<rdf::Iri> types_of(const rdf::Term& s) const {
        std::vector<rdf::Iri> out;
        for (const rdf::Term& o : g_.objects(s, ns::rdf_type))
            if (o.is_iri()) out.push_back(o.as_iri());
        return out;
    }

    rdf::Graph residue() const {
        rdf::Graph out;
        for (const auto& [label, ns_iri] : g_.prefixes()) out.add_prefix(label, ns_iri);
        for (const rdf::Triple& t : g_.triples())
            if (consumed_.count(t) == 0) out.insert(t);
        return out;
    }

    const rdf::Graph& graph() const { return g_; }

private:
    const rdf::Graph& g_;
    std::set<rdf::Triple> consumed_;
};

StorageCondition extract_storage(Extractor& x, const rdf::Term& node) {
    StorageCondition storage{node, std::nullopt, std::nullopt};
    storage.location = x.take_iri(node, dpv::hasLocation);
    storage.duration = x.take_literal(node, dpv::hasDuration);
    return storage;
}

ProcessDescription extract_process(Extractor& x, const rdf::Term& node) {
    ProcessDescription p{node,         std::nullopt, std::nullopt, {}, {}, {},
                         std::nullopt, {},           std::nullopt, std::nullopt, {}};
    const rdf::Term process_type = rdf::Term::iri(dpv::Process);
    if (x.graph().has(node, ns::rdf_type, process_type))
        x.consume(node, ns::rdf_type, process_type);

    if (auto title = x.take_first(node, ns::dct_title, rdf::TermKind::Literal)) {
        p.title = title->value();
        p.title_language = title->language();
    }
    p.purpose = x.take_iri_set(node, dpv::hasPurpose);
    p.legal_basis = x.take_iri_set(node, dpv::hasLegalBasis);
    p.personal_data = x.take_iri_set(node, dpv::hasPersonalData);
    p.controller = x.take_iri(node, dpv::hasDataController);
    p.processing = x.take_iri_set(node, dpv::hasProcessing);
    p.jurisdiction = x.take_iri(node, dpv::hasJurisdiction);
    p.recipients = x.take_iri_set(node, dpv::hasRecipient);

    auto storage_nodes = x.take_nodes(node, dpv::hasStorageCondition);
    if (!storage_nodes.empty()) p.storage = extract_storage(x, storage_nodes.front());
    return p;
}

// The status is the event type in the consent-status family when a
// vocabulary is at hand; otherwise the type matching the record's own
// status, falling back to the first type in term order. The remaining type,
// if any, is the expression; further types stay in the residue.
std::optional<std::pair<rdf::Iri, std::optional<rdf::Iri>>> classify_event_types(
    const std::vector<rdf::Iri>& types, const std::optional<rdf::Iri>& record_status,
    const vocab::ConceptGraph* cg) {
    if (types.empty()) return std::nullopt;

    std::optional<rdf::Iri> status;
    if (cg != nullptr) {
        for (const rdf::Iri& t : types) {
            if (!cg->has_concept(t) || !cg->has_concept(dpv::ConsentStatus)) continue;
            if (vocab::is_a(*cg, t, dpv::ConsentStatus)) {
                status = t;
                break;
            }
        }
    }
    if (!status && record_status &&
        std::find(types.begin(), types.end(), *record_status) != types.end())
        status = *record_status;
    if (!status) status = types.front();

    std::optional<rdf::Iri> expression;
    for (const rdf::Iri& t : types) {
        if (t == *status) continue;
        expression = t;
        break;
    }
    return std::make_pair(*status, expression);
}

ConsentRecord extract_impl(const rdf::Graph& g, const vocab::ConceptGraph* cg) {
    auto subjects = g.subjects_of_type(dpv::ConsentRecord);
    if (subjects.empty())
        throw ExtractError("no subject typed dpv:ConsentRecord in document");
    if (subjects.size() > 1)
        throw ExtractError("ambiguous document: " + std::to_string(subjects.size()) +
                           " subjects typed dpv:ConsentRecord");
    const rdf::Term& subject = subjects.front();
    if (!subject.is_iri())
        throw ExtractError("the dpv:ConsentRecord subject must be an IRI");

    Extractor x(g);
    x.consume(subject, ns::rdf_type, rdf::Term::iri(dpv::ConsentRecord));

    ConsentRecord r{subject.as_iri(), std::nullopt, "", "", std::nullopt, {}, std::nullopt, {},
                    rdf::Graph{}};
    r.schema_version = x.take_literal(subject, ns::dct_has_version);
    r.identifier = x.take_literal(subject, dpv::hasIdentifier).value_or("");
    r.data_subject = x.take_literal(subject, dpv::hasDataSubject).value_or("");
    r.notice = x.take_iri(subject, dpv::hasNotice);
    r.current_status = x.take_iri(subject, dpv::hasConsentStatus);

    for (const rdf::Term& node : x.take_nodes(subject, dpv::hasProcess))
        r.processes.push_back(extract_process(x, node));

    for (const rdf::Term& node : x.take_nodes(subject, ns::dct_has_part)) {
        std::vector<rdf::Iri> types = x.types_of(node);
        auto classified = classify_event_types(types, r.current_status, cg);
        if (!classified) continue;  // untyped part: not an event, stays in residue
        auto [status, expression] = *classified;
        x.consume(node, ns::rdf_type, rdf::Term::iri(status));
        if (expression) x.consume(node, ns::rdf_type, rdf::Term::iri(*expression));

        ConsentEvent e{node, status, expression, "", std::nullopt, std::nullopt};
        e.timestamp = x.take_literal(node, dpv::isIndicatedAtTime).value_or("");
        e.duration = x.take_literal(node, dpv::hasDuration);
        e.entity = x.take_literal(node, dpv::hasEntity);
        r.events.push_back(std::move(e));
    }
    std::stable_sort(r.events.begin(), r.events.end(),
                     [](const ConsentEvent& a, const ConsentEvent& b) {
                         if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
                         return a.node < b.node;
                     });

    r.residue = x.residue();
    return r;
}

void insert_literal(rdf::Graph& g, const rdf::Term& s, const rdf::Iri& p, const std::string& value,
                    const std::optional<rdf::Iri>& datatype = std::nullopt,
                    const std::optional<std::string>& language = std::nullopt) {
    g.insert(rdf::Triple(s, p, rdf::Term::literal(value, datatype, language)));
}

}  // namespace

ConsentRecord extract_record(const rdf::Graph& g) { return extract_impl(g, nullptr); }

ConsentRecord extract_record(const rdf::Graph& g, const vocab::ConceptGraph& cg) {
    return extract_impl(g, &cg);
}

rdf::Graph record_to_graph(const ConsentRecord& r) {
    rdf::Graph g = r.residue;
    const rdf::Term subject = rdf::Term::iri(r.iri);

    g.insert(rdf::Triple(subject, ns::rdf_type, rdf::Term::iri(dpv::ConsentRecord)));
    if (r.schema_version) insert_literal(g, subject, ns::dct_has_version, *r.schema_version);
    if (!r.identifier.empty()) insert_literal(g, subject, dpv::hasIdentifier, r.identifier);
    if (!r.data_subject.empty()) insert_literal(g, subject, dpv::hasDataSubject, r.data_subject);
    if (r.notice) g.insert(rdf::Triple(subject, dpv::hasNotice, rdf::Term::iri(*r.notice)));
    if (r.current_status)
        g.insert(rdf::Triple(subject, dpv::hasConsentStatus, rdf::Term::iri(*r.current_status)));

    for (const ProcessDescription& p : r.processes) {
        g.insert(rdf::Triple(subject, dpv::hasProcess, p.node));
        g.insert(rdf::Triple(p.node, ns::rdf_type, rdf::Term::iri(dpv::Process)));
        if (p.title) insert_literal(g, p.node, ns::dct_title, *p.title, std::nullopt,
                                    p.title_language);
        for (const rdf::Iri& iri : p.purpose)
            g.insert(rdf::Triple(p.node, dpv::hasPurpose, rdf::Term::iri(iri)));
        for (const rdf::Iri& iri : p.legal_basis)
            g.insert(rdf::Triple(p.node, dpv::hasLegalBasis, rdf::Term::iri(iri)));
        for (const rdf::Iri& iri : p.personal_data)
            g.insert(rdf::Triple(p.node, dpv::hasPersonalData, rdf::Term::iri(iri)));
        if (p.controller)
            g.insert(rdf::Triple(p.node, dpv::hasDataController, rdf::Term::iri(*p.controller)));
        for (const rdf::Iri& iri : p.processing)
            g.insert(rdf::Triple(p.node, dpv::hasProcessing, rdf::Term::iri(iri)));
        if (p.jurisdiction)
            g.insert(rdf::Triple(p.node, dpv::hasJurisdiction, rdf::Term::iri(*p.jurisdiction)));
        for (const rdf::Iri& iri : p.recipients)
            g.insert(rdf::Triple(p.node, dpv::hasRecipient, rdf::Term::iri(iri)));
        if (p.storage) {
            g.insert(rdf::Triple(p.node, dpv::hasStorageCondition, p.storage->node));
            if (p.storage->location)
                g.insert(rdf::Triple(p.storage->node, dpv::hasLocation,
                                     rdf::Term::iri(*p.storage->location)));
            if (p.storage->duration)
                insert_literal(g, p.storage->node, dpv::hasDuration, *p.storage->duration,
                               ns::xsd_duration);
        }
    }

    for (const ConsentEvent& e : r.events) {
        g.insert(rdf::Triple(subject, ns::dct_has_part, e.node));
        g.insert(rdf::Triple(e.node, ns::rdf_type, rdf::Term::iri(e.status)));
        if (e.expression)
            g.insert(rdf::Triple(e.node, ns::rdf_type, rdf::Term::iri(*e.expression)));
        if (!e.timestamp.empty())
            insert_literal(g, e.node, dpv::isIndicatedAtTime, e.timestamp, ns::xsd_date_time);
        if (e.duration) insert_literal(g, e.node, dpv::hasDuration, *e.duration, ns::xsd_duration);
        if (e.entity) insert_literal(g, e.node, dpv::hasEntity, *e.entity);
    }

    return g;
}

namespace {

void check_range(const vocab::ConceptGraph& cg, const rdf::Iri& property, const rdf::Iri& value,
                 const std::string& path, Diagnostics& out) {
    if (cg.properties().count(property) == 0) {
        out.push_back({"unknown-property", path,
                       "property <" + property.str() + "> has no declared range in the vocabulary"});
        return;
    }
    if (!cg.has_concept(value)) {
        out.push_back({"unknown-concept", path,
                       "<" + value.str() + "> is not a known vocabulary concept"});
        return;
    }
    if (!vocab::in_range(cg, property, value))
        out.push_back({"range", path,
                       "<" + value.str() + "> is outside the range of <" + property.str() +
                           "> (expected the <" + cg.properties().at(property).str() +
                           "> family)"});
}

void check_iri_set(const vocab::ConceptGraph& cg, const rdf::Iri& property,
                   const std::set<rdf::Iri>& values, const std::string& path,
                   const char* field, Diagnostics& out) {
    if (values.empty()) {
        out.push_back({"empty-field", path, std::string(field) + " must not be empty"});
        return;
    }
    std::size_t i = 0;
    for (const rdf::Iri& value : values)
        check_range(cg, property, value, path + "[" + std::to_string(i++) + "]", out);
}

}  // namespace

Diagnostics validate_record(const ConsentRecord& r, const vocab::ConceptGraph& cg,
                            ValidationLevel level) {
    Diagnostics out;

    if (r.identifier.empty())
        out.push_back({"missing-field", "identifier", "record has no dpv:hasIdentifier value"});
    if (r.data_subject.empty())
        out.push_back({"missing-field", "dataSubject", "record has no dpv:hasDataSubject value"});
    if (r.processes.empty())
        out.push_back({"missing-field", "processes", "record describes no process"});
    if (!r.current_status)
        out.push_back({"missing-field", "status", "record has no dpv:hasConsentStatus value"});
    if (!r.events.empty() && r.current_status && r.events.back().status != *r.current_status)
        out.push_back({"status-mismatch", "status",
                       "record status <" + r.current_status->str() +
                           "> differs from the latest event status <" +
                           r.events.back().status.str() + ">"});

    if (level == ValidationLevel::Structural) return out;

    for (std::size_t i = 0; i < r.processes.size(); ++i) {
        const ProcessDescription& p = r.processes[i];
        const std::string base = "processes[" + std::to_string(i) + "]";
        check_iri_set(cg, dpv::hasPurpose, p.purpose, base + ".purpose", "purpose", out);
        check_iri_set(cg, dpv::hasLegalBasis, p.legal_basis, base + ".legalBasis", "legal basis",
                      out);
        check_iri_set(cg, dpv::hasPersonalData, p.personal_data, base + ".personalData",
                      "personal data", out);
        check_iri_set(cg, dpv::hasProcessing, p.processing, base + ".processing", "processing",
                      out);
        if (p.jurisdiction)
            check_range(cg, dpv::hasJurisdiction, *p.jurisdiction, base + ".jurisdiction", out);
        if (p.storage) {
            if (p.storage->location)
                check_range(cg, dpv::hasLocation, *p.storage->location, base + ".storage.location",
                            out);
            if (p.storage->duration && !valid_xsd_duration(*p.storage->duration))
                out.push_back({"invalid-duration", base + ".storage.duration",
                               "\"" + *p.storage->duration +
                                   "\" is not an ISO 8601 duration"});
        }
    }

    if (r.current_status)
        check_range(cg, dpv::hasConsentStatus, *r.current_status, "status", out);
    for (std::size_t i = 0; i < r.events.size(); ++i) {
        const ConsentEvent& e = r.events[i];
        const std::string base = "events[" + std::to_string(i) + "]";
        check_range(cg, dpv::hasConsentStatus, e.status, base + ".status", out);
        if (e.timestamp.empty() || !valid_xsd_date_time(e.timestamp))
            out.push_back({"invalid-timestamp", base + ".timestamp",
                           "\"" + e.timestamp + "\" is not an ISO 8601 date-time"});
        if (e.duration && !valid_xsd_duration(*e.duration))
            out.push_back({"invalid-duration", base + ".duration",
                           "\"" + *e.duration + "\" is not an ISO 8601 duration"});
    }

    return out;
}

ConsentRecord append_event(const ConsentRecord& r, const ConsentEvent& e) {
    if (!valid_xsd_date_time(e.timestamp))
        throw EventOrderError("event timestamp \"" + e.timestamp +
                              "\" is not an ISO 8601 date-time");
    if (!r.events.empty() && e.timestamp < r.events.back().timestamp)
        throw EventOrderError("event timestamp \"" + e.timestamp +
                              "\" is older than the latest recorded event \"" +
                              r.events.back().timestamp + "\"");
    ConsentRecord updated = r;
    updated.events.push_back(e);
    updated.current_status = e.status;
    return updated;
}

std::string validation_report_json(const ConsentRecord& r, ValidationLevel level,
                                   const Diagnostics& diagnostics) {
    nlohmann::ordered_json doc;
    doc["record"] = r.iri.str();
    doc["level"] = level == ValidationLevel::Structural ? "structural" : "complete";
    doc["diagnostics"] = nlohmann::ordered_json::array();
    for (const Diagnostic& d : diagnostics) {
        nlohmann::ordered_json entry;
        entry["code"] = d.code;
        entry["path"] = d.path;
        entry["message"] = d.message;
        doc["diagnostics"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

bool valid_xsd_duration(std::string_view s) {
    std::size_t i = 0;
    const std::size_t n = s.size();
    if (i < n && s[i] == '-') ++i;
    if (i >= n || s[i] != 'P') return false;
    ++i;

    auto digits = [&]() {
        std::size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        return i > start;
    };

    bool any = false;
    const std::string date_units = "YMD";
    std::size_t unit_at = 0;
    while (i < n && s[i] != 'T') {
        if (!digits()) return false;
        if (i >= n) return false;
        std::size_t pos = date_units.find(s[i]);
        if (pos == std::string::npos || pos < unit_at) return false;
        unit_at = pos + 1;
        ++i;
        any = true;
    }

    if (i < n && s[i] == 'T') {
        ++i;
        bool time_any = false;
        const std::string time_units = "HMS";
        std::size_t time_at = 0;
        while (i < n) {
            if (!digits()) return false;
            if (i < n && s[i] == '.') {  // fractional seconds only
                ++i;
                if (!digits()) return false;
                if (i >= n || s[i] != 'S') return false;
            }
            if (i >= n) return false;
            std::size_t pos = time_units.find(s[i]);
            if (pos == std::string::npos || pos < time_at) return false;
            time_at = pos + 1;
            ++i;
            time_any = true;
        }
        if (!time_any) return false;
        any = true;
    }

    return i == n && any;
}

bool valid_xsd_date_time(std::string_view s) {
    std::size_t i = 0;
    const std::size_t n = s.size();

    auto fixed_digits = [&](int count, int& value) {
        value = 0;
        for (int k = 0; k < count; ++k) {
            if (i >= n || !std::isdigit(static_cast<unsigned char>(s[i]))) return false;
            value = value * 10 + (s[i++] - '0');
        }
        return true;
    };
    auto expect = [&](char c) {
        if (i >= n || s[i] != c) return false;
        ++i;
        return true;
    };

    if (i < n && s[i] == '-') ++i;
    int year = 0, month = 0, day = 0, hour = 0, minute = 0, second = 0;
    if (!fixed_digits(4, year)) return false;
    while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;  // >4-digit years
    if (!expect('-') || !fixed_digits(2, month) || !expect('-') || !fixed_digits(2, day))
        return false;
    if (!expect('T') || !fixed_digits(2, hour) || !expect(':') || !fixed_digits(2, minute) ||
        !expect(':') || !fixed_digits(2, second))
        return false;
    if (month < 1 || month > 12 || day < 1 || day > 31) return false;
    if (hour > 23 || minute > 59 || second > 59) return false;

    if (i < n && s[i] == '.') {
        ++i;
        if (i >= n || !std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    }
    if (i < n) {
        if (s[i] == 'Z') {
            ++i;
        } else if (s[i] == '+' || s[i] == '-') {
            ++i;
            int tz_hour = 0, tz_minute = 0;
            if (!fixed_digits(2, tz_hour) || !expect(':') || !fixed_digits(2, tz_minute))
                return false;
            if (tz_hour > 14 || tz_minute > 59) return false;
        }
    }
    return i == n;
}

}  // namespace dpvkit::consent
