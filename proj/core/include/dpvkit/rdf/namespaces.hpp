#pragma once

#include <string>

#include "dpvkit/rdf/term.hpp"

// Well-known W3C namespaces and the handful of their terms the toolkit needs.
namespace dpvkit::rdf::ns {

inline const std::string rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline const std::string rdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline const std::string owl = "http://www.w3.org/2002/07/owl#";
inline const std::string skos = "http://www.w3.org/2004/02/skos/core#";
inline const std::string xsd = "http://www.w3.org/2001/XMLSchema#";
inline const std::string dct = "http://purl.org/dc/terms/";
inline const std::string vocab_status = "https://www.w3.org/2003/06/sw-vocab-status/ns#";

inline const Iri rdf_type{rdf + "type"};
inline const Iri rdf_property{rdf + "Property"};
inline const Iri rdfs_class{rdfs + "Class"};
inline const Iri rdfs_sub_class_of{rdfs + "subClassOf"};
inline const Iri rdfs_sub_property_of{rdfs + "subPropertyOf"};
inline const Iri rdfs_range{rdfs + "range"};
inline const Iri rdfs_label{rdfs + "label"};
inline const Iri owl_class{owl + "Class"};
inline const Iri owl_object_property{owl + "ObjectProperty"};
inline const Iri skos_concept{skos + "Concept"};
inline const Iri skos_broader{skos + "broader"};
inline const Iri skos_narrower{skos + "narrower"};
inline const Iri skos_pref_label{skos + "prefLabel"};
inline const Iri skos_definition{skos + "definition"};
inline const Iri xsd_duration{xsd + "duration"};
inline const Iri xsd_date_time{xsd + "dateTime"};
inline const Iri dct_has_version{dct + "hasVersion"};
inline const Iri dct_title{dct + "title"};
inline const Iri dct_has_part{dct + "hasPart"};
inline const Iri term_status{vocab_status + "term_status"};

}  // namespace dpvkit::rdf::ns
