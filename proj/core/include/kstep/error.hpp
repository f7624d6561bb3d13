#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kstep {

enum class ErrorKind {
    malformed,
    unknown_name,
    duplicate_event,
    duplicate_state,
    overlapping_secret,
    empty_initial,
    index_out_of_range,
    no_events,
    nondeterministic,
    neutral_states,
    not_normal,
    alphabet_mismatch,
    invalid_parameter,
};

std::string_view to_string(ErrorKind kind);

/// Rejected input model or parameter. The kind lets callers tell the
/// failure modes apart without parsing the message.
class ModelError : public std::invalid_argument {
public:
    ModelError(ErrorKind kind, const std::string& what)
        : std::invalid_argument(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace kstep
