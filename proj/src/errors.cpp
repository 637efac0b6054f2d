#include "navtest/errors.hpp"

namespace navtest {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::duplicate_vertex_id: return "DuplicateVertexId";
    case Errc::duplicate_edge_id: return "DuplicateEdgeId";
    case Errc::unknown_vertex: return "UnknownVertex";
    case Errc::unknown_edge: return "UnknownEdge";
    case Errc::negative_weight: return "NegativeWeight";
    case Errc::not_reachable_from_home: return "NotReachableFromHome";
    case Errc::not_strongly_connected_after_augmentation: return "NotStronglyConnectedAfterAugmentation";
    case Errc::not_strongly_connected: return "NotStronglyConnected";
    case Errc::not_a_walk: return "NotAWalk";
    case Errc::does_not_start_at_home: return "DoesNotStartAtHome";
    case Errc::fixture_syntax: return "FixtureSyntax";
    case Errc::expansion_too_large: return "ExpansionTooLarge";
    case Errc::home_eliminated: return "HomeEliminated";
    case Errc::xml_syntax: return "XmlSyntax";
    case Errc::schema_violation: return "SchemaViolation";
    case Errc::unknown_state_ref: return "UnknownStateRef";
    case Errc::duplicate_state_id: return "DuplicateStateId";
    case Errc::guard_syntax: return "GuardSyntax";
    case Errc::html_syntax: return "HtmlSyntax";
    case Errc::unsupported_command: return "UnsupportedCommand";
    case Errc::dsl_syntax: return "DslSyntax";
    case Errc::xpath_syntax: return "XPathSyntax";
    case Errc::unsupported_xpath_feature: return "UnsupportedXPathFeature";
    case Errc::missing_required_field: return "MissingRequiredField";
    case Errc::csv_syntax: return "CsvSyntax";
    case Errc::header_mismatch: return "HeaderMismatch";
    case Errc::unknown_state: return "UnknownState";
    case Errc::no_such_transition: return "NoSuchTransition";
    case Errc::config_error: return "ConfigError";
    case Errc::io_error: return "IoError";
    }
    return "Error";
}

} // namespace navtest
