#pragma once

#include <string>
#include <string_view>

#include "kstep/des.hpp"
#include "kstep/observer.hpp"
#include "kstep/weak.hpp"

namespace kstep {

/// How to fill the nonsecret set when a document omits it.
enum class MissingNonsecret {
    empty,       // every non-secret state is neutral
    complement,  // Q − Q_S
};

/// Parses a JSON document with the fields
///   states, initial, events [{name, observable}], transitions [[src, event, dst]],
///   secret, nonsecret (optional).
/// Names map to indices in document order. Throws ModelError.
Des parse_des(std::string_view document, MissingNonsecret missing = MissingNonsecret::empty);

/// Inverse of parse_des; always writes the nonsecret field.
std::string serialize_des(const Des& des);

Des load_des(const std::string& path, MissingNonsecret missing = MissingNonsecret::empty);
void save_des(const Des& des, const std::string& path);

/// Observation string as space-separated event names; ε is the empty string.
std::string format_word(const Des& des, const Word& word);
/// "{1,2,4}" using state names.
std::string format_set(const Des& des, const StateSet& set);

/// Observer as a DOT digraph; the empty estimate and edges into it are omitted.
std::string observer_to_dot(const Des& des, const ObserverAutomaton& obs);

/// Explored part of P(G) × H as a DOT digraph; seeds get an entry arrow.
std::string product_to_dot(const Des& des, const ProductTrace& trace);

}  // namespace kstep
