#pragma once

#include <string>

#include "dpvkit/rdf/term.hpp"

// DPV term IRIs used by the toolkit itself: the consent-record schema and the
// core family roots the bundled registry declares. Vocabulary content beyond
// these lives in data files, not in code.
namespace dpvkit::dpv {

inline const std::string core_ns = "https://w3id.org/dpv#";
inline const std::string pd_ns = "https://w3id.org/dpv/pd#";
inline const std::string loc_ns = "https://w3id.org/dpv/loc#";

inline const rdf::Iri Purpose{core_ns + "Purpose"};
inline const rdf::Iri Processing{core_ns + "Processing"};
inline const rdf::Iri PersonalData{core_ns + "PersonalData"};
inline const rdf::Iri SensitivePersonalData{core_ns + "SensitivePersonalData"};
inline const rdf::Iri LegalBasis{core_ns + "LegalBasis"};
inline const rdf::Iri ConsentStatus{core_ns + "ConsentStatus"};
inline const rdf::Iri Location{core_ns + "Location"};

inline const rdf::Iri ConsentRecord{core_ns + "ConsentRecord"};
inline const rdf::Iri Process{core_ns + "Process"};

inline const rdf::Iri hasPurpose{core_ns + "hasPurpose"};
inline const rdf::Iri hasLegalBasis{core_ns + "hasLegalBasis"};
inline const rdf::Iri hasPersonalData{core_ns + "hasPersonalData"};
inline const rdf::Iri hasProcessing{core_ns + "hasProcessing"};
inline const rdf::Iri hasConsentStatus{core_ns + "hasConsentStatus"};
inline const rdf::Iri hasDataController{core_ns + "hasDataController"};
inline const rdf::Iri hasDataSubject{core_ns + "hasDataSubject"};
inline const rdf::Iri hasIdentifier{core_ns + "hasIdentifier"};
inline const rdf::Iri hasNotice{core_ns + "hasNotice"};
inline const rdf::Iri hasProcess{core_ns + "hasProcess"};
inline const rdf::Iri hasStorageCondition{core_ns + "hasStorageCondition"};
inline const rdf::Iri hasLocation{core_ns + "hasLocation"};
inline const rdf::Iri hasDuration{core_ns + "hasDuration"};
inline const rdf::Iri hasJurisdiction{core_ns + "hasJurisdiction"};
inline const rdf::Iri hasRecipient{core_ns + "hasRecipient"};
inline const rdf::Iri hasEntity{core_ns + "hasEntity"};
inline const rdf::Iri isIndicatedAtTime{core_ns + "isIndicatedAtTime"};

}  // namespace dpvkit::dpv
