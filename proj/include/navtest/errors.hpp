#pragma once

#include <stdexcept>
#include <string>

namespace navtest {

/// Machine-checkable failure category carried by every Error.
enum class Errc {
    // graph
    duplicate_vertex_id,
    duplicate_edge_id,
    unknown_vertex,
    unknown_edge,
    negative_weight,
    not_reachable_from_home,
    not_strongly_connected_after_augmentation,
    not_strongly_connected,
    not_a_walk,
    does_not_start_at_home,
    fixture_syntax,
    // path algebra
    expansion_too_large,
    home_eliminated,
    // model parsing
    xml_syntax,
    schema_violation,
    unknown_state_ref,
    duplicate_state_id,
    guard_syntax,
    html_syntax,
    unsupported_command,
    dsl_syntax,
    // locator
    xpath_syntax,
    unsupported_xpath_feature,
    // test generation / tabular data
    missing_required_field,
    csv_syntax,
    header_mismatch,
    // simulator
    unknown_state,
    no_such_transition,
    // cli
    config_error,
    io_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace navtest
