#include "kstep/des_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "kstep/error.hpp"

namespace kstep {
namespace {

using nlohmann::json;

const json& require(const json& doc, const char* field) {
    auto it = doc.find(field);
    if (it == doc.end()) throw ModelError(ErrorKind::malformed, std::string("missing field '") + field + "'");
    if (!it->is_array()) throw ModelError(ErrorKind::malformed, std::string("field '") + field + "' must be a list");
    return *it;
}

std::string as_name(const json& v, const char* what) {
    if (!v.is_string()) throw ModelError(ErrorKind::malformed, std::string(what) + " must be a string");
    return v.get<std::string>();
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

Des parse_des(std::string_view document, MissingNonsecret missing) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw ModelError(ErrorKind::malformed, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ModelError(ErrorKind::malformed, "document must be a JSON object");

    std::vector<std::string> names;
    std::unordered_map<std::string, StateId> state_index;
    for (const auto& v : require(doc, "states")) {
        auto name = as_name(v, "state name");
        if (!state_index.emplace(name, static_cast<StateId>(names.size())).second)
            throw ModelError(ErrorKind::duplicate_state, "duplicate state name '" + name + "'");
        names.push_back(std::move(name));
    }
    if (names.empty()) throw ModelError(ErrorKind::malformed, "states must not be empty");
    const std::size_t n = names.size();

    std::vector<Event> events;
    for (const auto& v : require(doc, "events")) {
        if (!v.is_object() || !v.contains("name") || !v.contains("observable") || !v["observable"].is_boolean())
            throw ModelError(ErrorKind::malformed, "events must be objects {name, observable}");
        events.push_back({as_name(v["name"], "event name"), v["observable"].get<bool>()});
    }
    EventTable table(std::move(events));

    auto state = [&](const json& v) {
        auto name = as_name(v, "state reference");
        auto it = state_index.find(name);
        if (it == state_index.end()) throw ModelError(ErrorKind::unknown_name, "unknown state '" + name + "'");
        return it->second;
    };
    auto state_set = [&](const json& list) {
        StateSet s(n);
        for (const auto& v : list) s.insert(state(v));
        return s;
    };

    std::vector<Transition> transitions;
    for (const auto& v : require(doc, "transitions")) {
        if (!v.is_array() || v.size() != 3)
            throw ModelError(ErrorKind::malformed, "transitions must be [source, event, target] triples");
        auto event_name = as_name(v[1], "event reference");
        auto e = table.find(event_name);
        if (!e) throw ModelError(ErrorKind::unknown_name, "unknown event '" + event_name + "'");
        transitions.push_back({state(v[0]), *e, state(v[2])});
    }

    StateSet initial = state_set(require(doc, "initial"));
    StateSet secret = state_set(require(doc, "secret"));
    StateSet nonsecret(n);
    if (doc.contains("nonsecret"))
        nonsecret = state_set(require(doc, "nonsecret"));
    else if (missing == MissingNonsecret::complement)
        nonsecret = StateSet::full(n) - secret;

    return Des(n, std::move(table), std::move(transitions), std::move(initial), std::move(secret),
               std::move(nonsecret), std::move(names));
}

std::string serialize_des(const Des& des) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    doc["states"] = des.state_names();
    auto names_of = [&](const StateSet& s) {
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        s.for_each([&](StateId q) { list.push_back(des.state_name(q)); });
        return list;
    };
    doc["initial"] = names_of(des.initial());
    nlohmann::ordered_json events = nlohmann::ordered_json::array();
    for (const auto& e : des.events().events()) events.push_back({{"name", e.name}, {"observable", e.observable}});
    doc["events"] = std::move(events);
    nlohmann::ordered_json transitions = nlohmann::ordered_json::array();
    for (const auto& t : des.transitions())
        transitions.push_back({des.state_name(t.source), des.events().name(t.event), des.state_name(t.target)});
    doc["transitions"] = std::move(transitions);
    doc["secret"] = names_of(des.secret());
    doc["nonsecret"] = names_of(des.nonsecret());
    return doc.dump(2) + "\n";
}

Des load_des(const std::string& path, MissingNonsecret missing) {
    std::ifstream in(path);
    if (!in) throw ModelError(ErrorKind::malformed, "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_des(buf.str(), missing);
}

void save_des(const Des& des, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ModelError(ErrorKind::malformed, "cannot write '" + path + "'");
    out << serialize_des(des);
}

std::string format_word(const Des& des, const Word& word) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ' ';
        out += des.events().name(word[i]);
    }
    return out;
}

std::string format_set(const Des& des, const StateSet& set) {
    std::string out = "{";
    bool first = true;
    set.for_each([&](StateId q) {
        if (!first) out += ',';
        first = false;
        out += des.state_name(q);
    });
    return out + "}";
}

std::string observer_to_dot(const Des& des, const ObserverAutomaton& obs) {
    std::ostringstream out;
    out << "digraph observer {\n  rankdir=LR;\n  init [shape=point];\n";
    for (std::size_t i = 0; i < obs.size(); ++i) {
        const bool secret = obs.states[i].intersects(des.secret());
        out << "  s" << i << " [label=\"" << escape(format_set(des, obs.states[i])) << "\""
            << (secret ? ", peripheries=2" : "") << "];\n";
    }
    out << "  init -> s0;\n";
    for (std::size_t i = 0; i < obs.size(); ++i)
        for (std::size_t j = 0; j < obs.alphabet.size(); ++j) {
            const auto t = obs.successor(static_cast<std::uint32_t>(i), j);
            if (t == ObserverAutomaton::kSink) continue;
            out << "  s" << i << " -> s" << t << " [label=\"" << escape(des.events().name(obs.alphabet[j])) << "\"];\n";
        }
    out << "}\n";
    return out.str();
}

std::string product_to_dot(const Des& des, const ProductTrace& trace) {
    std::ostringstream out;
    out << "digraph product {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < trace.states.size(); ++i) {
        const auto& st = trace.states[i];
        const std::string z = st.is_sink() ? "∅" : format_set(des, st.set_state);
        out << "  p" << i << " [label=\"(" << escape(des.state_name(st.nfa_state)) << "," << escape(z) << ")\""
            << (st.is_sink() ? ", color=red" : "") << "];\n";
    }
    for (std::size_t i = 0; i < trace.seeds.size(); ++i)
        out << "  y" << i << " [shape=point];\n  y" << i << " -> p" << trace.seeds[i] << ";\n";
    for (const auto& e : trace.edges)
        out << "  p" << e.from << " -> p" << e.to << " [label=\"" << escape(des.events().name(e.event)) << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace kstep
