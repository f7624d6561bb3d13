#include "kstep/error.hpp"

namespace kstep {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::malformed: return "malformed";
        case ErrorKind::unknown_name: return "unknown_name";
        case ErrorKind::duplicate_event: return "duplicate_event";
        case ErrorKind::duplicate_state: return "duplicate_state";
        case ErrorKind::overlapping_secret: return "overlapping_secret";
        case ErrorKind::empty_initial: return "empty_initial";
        case ErrorKind::index_out_of_range: return "index_out_of_range";
        case ErrorKind::no_events: return "no_events";
        case ErrorKind::nondeterministic: return "nondeterministic";
        case ErrorKind::neutral_states: return "neutral_states";
        case ErrorKind::not_normal: return "not_normal";
        case ErrorKind::alphabet_mismatch: return "alphabet_mismatch";
        case ErrorKind::invalid_parameter: return "invalid_parameter";
    }
    return "unknown";
}

}  // namespace kstep
