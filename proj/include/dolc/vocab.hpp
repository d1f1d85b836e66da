#pragma once

#include <string_view>

// Well-known IRIs used across modules.
namespace dolc::vocab {

inline constexpr std::string_view owl_ns = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view owl_thing = "http://www.w3.org/2002/07/owl#Thing";
inline constexpr std::string_view owl_nothing = "http://www.w3.org/2002/07/owl#Nothing";

inline constexpr std::string_view rdf_ns = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view rdf_type = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view rdfs_ns = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view xsd_ns = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view xsd_string = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view xsd_boolean = "http://www.w3.org/2001/XMLSchema#boolean";
inline constexpr std::string_view xsd_integer = "http://www.w3.org/2001/XMLSchema#integer";

// DOL RDF vocabulary namespace; the term list lives in docs/rdf-vocabulary.md.
inline constexpr std::string_view dol_ns = "http://purl.net/dol/1.0/rdf#";
inline constexpr std::string_view dol_xml_ns = "http://purl.net/dol/1.0/xml#";

inline constexpr std::string_view logics_ns = "http://purl.net/dol/logics/";
inline constexpr std::string_view languages_ns = "http://purl.net/dol/languages/";
inline constexpr std::string_view serializations_ns = "http://purl.net/dol/serializations/";
inline constexpr std::string_view translations_ns = "http://purl.net/dol/translations/";
inline constexpr std::string_view projections_ns = "http://purl.net/dol/projections/";

inline constexpr std::string_view logic_propositional = "http://purl.net/dol/logics/Propositional";
inline constexpr std::string_view logic_sroiq = "http://purl.net/dol/logics/SROIQ";
inline constexpr std::string_view logic_common_logic = "http://purl.net/dol/logics/CommonLogic";
inline constexpr std::string_view logic_rdf = "http://purl.net/dol/logics/RDF";

inline constexpr std::string_view ser_prop_hets = "http://purl.net/dol/serializations/Prop/Hets";
inline constexpr std::string_view ser_manchester = "http://purl.net/dol/serializations/OWL2/Manchester";
inline constexpr std::string_view ser_clif = "http://purl.net/dol/serializations/CommonLogic/CLIF";
inline constexpr std::string_view ser_turtle = "http://purl.net/dol/serializations/RDF/Turtle";

inline constexpr std::string_view trans_prop_to_sroiq = "http://purl.net/dol/translations/PropositionalToSROIQ";
inline constexpr std::string_view trans_sroiq_to_cl = "http://purl.net/dol/translations/SROIQtoCL";
inline constexpr std::string_view trans_rdf_to_sroiq = "http://purl.net/dol/translations/RDFtoSROIQ";
inline constexpr std::string_view proj_sroiq_to_rdf = "http://purl.net/dol/projections/SROIQtoRDF";

}  // namespace dolc::vocab
