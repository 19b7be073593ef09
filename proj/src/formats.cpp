#include "boxkit/formats.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace boxkit {

namespace {

using nlohmann::json;

std::size_t line_of_byte(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("line " + std::to_string(line_of_byte(text, e.byte)) + ": " + e.what());
  }
}

Outcome parse_outcome(const json& entry, const ProductSpace& space, const char* what) {
  if (!entry.is_array() || entry.size() != space.arity())
    throw ParseError(std::string(what) + " must list one element label per factor");
  Outcome outcome(space.arity());
  for (std::size_t i = 0; i < space.arity(); ++i) {
    const std::string label = entry[i].get<std::string>();
    const int e = space.factor(i).index_of(label);
    if (e < 0)
      throw ParseError("unknown element '" + label + "' for factor " + std::to_string(i + 1));
    outcome[i] = e;
  }
  return outcome;
}

Event parse_event_entry(const json& entry, const ProductSpace& space) {
  if (!entry.is_object() || !entry.contains("type"))
    throw ParseError("event entry needs a \"type\" field");
  const std::string type = entry.at("type").get<std::string>();
  if (type == "cylinder") {
    const auto coord = entry.at("coord").get<long long>();
    if (coord < 1 || coord > static_cast<long long>(space.arity()))
      throw ParseError("cylinder coord " + std::to_string(coord) + " out of range (1-based)");
    std::vector<int> allowed;
    for (const auto& v : entry.at("values")) {
      const std::string label = v.get<std::string>();
      const int e = space.factor(static_cast<std::size_t>(coord - 1)).index_of(label);
      if (e < 0) throw ParseError("unknown element '" + label + "' in cylinder values");
      allowed.push_back(e);
    }
    return Event::cylinder(space, static_cast<std::size_t>(coord - 1), allowed);
  }
  if (type == "upset" || type == "downset") {
    std::vector<Outcome> generators;
    for (const auto& g : entry.at("generators"))
      generators.push_back(parse_outcome(g, space, "generator"));
    return type == "upset" ? Event::up_set(space, generators) : Event::down_set(space, generators);
  }
  if (type == "explicit") {
    std::vector<Outcome> outcomes;
    for (const auto& o : entry.at("outcomes")) outcomes.push_back(parse_outcome(o, space, "outcome"));
    return Event::explicit_outcomes(space, outcomes);
  }
  if (type == "not" || type == "and" || type == "or") {
    const auto& args = entry.at("args");
    if (!args.is_array() || args.empty()) throw ParseError("'" + type + "' needs args");
    if (type == "not") {
      if (args.size() != 1) throw ParseError("'not' takes exactly one argument");
      return ~parse_event_entry(args[0], space);
    }
    Event acc = parse_event_entry(args[0], space);
    for (std::size_t i = 1; i < args.size(); ++i) {
      Event next = parse_event_entry(args[i], space);
      acc = (type == "and") ? (acc & next) : (acc | next);
    }
    return acc;
  }
  throw ParseError("unknown event type '" + type + "'");
}

}  // namespace

ProductSpace parse_space_json(const std::string& text) {
  const json doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("factors") || !doc.at("factors").is_array() ||
      doc.at("factors").empty())
    throw ParseError("space file needs a nonempty \"factors\" array");
  std::vector<Factor> factors;
  for (const auto& fj : doc.at("factors")) {
    std::vector<std::string> elements;
    for (const auto& e : fj.at("elements")) elements.push_back(e.get<std::string>());
    std::vector<std::pair<std::string, std::string>> order;
    if (fj.contains("order"))
      for (const auto& pair : fj.at("order")) {
        if (!pair.is_array() || pair.size() != 2)
          throw ParseError("order entries must be [a, b] pairs");
        order.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
      }
    const auto& wj = fj.at("weights");
    std::vector<Rat> weights;
    weights.reserve(elements.size());
    for (const auto& label : elements) {
      if (!wj.contains(label))
        throw ParseError("missing weight for element '" + label + "' (factor " +
                         std::to_string(factors.size() + 1) + ")");
      try {
        weights.push_back(parse_rational(wj.at(label).get<std::string>()));
      } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad weight for element '") + label + "': " + e.what());
      }
    }
    factors.emplace_back(std::move(elements), std::move(order), std::move(weights));
  }
  return ProductSpace(std::move(factors));
}

std::vector<Event> parse_events_json(const std::string& text, const ProductSpace& space) {
  const json doc = parse_document(text);
  const json* list = nullptr;
  if (doc.is_array()) list = &doc;
  else if (doc.is_object() && doc.contains("events") && doc.at("events").is_array())
    list = &doc.at("events");
  else
    throw ParseError("events file needs an \"events\" array");
  std::vector<Event> events;
  for (const auto& entry : *list) events.push_back(parse_event_entry(entry, space));
  return events;
}

std::string space_to_json(const ProductSpace& space) {
  json factors = json::array();
  for (std::size_t i = 0; i < space.arity(); ++i) {
    const Factor& f = space.factor(i);
    json fj;
    fj["elements"] = f.elements();
    json order = json::array();
    // Emit the strict relation; re-parsing closes it again.
    for (std::size_t a = 0; a < f.size(); ++a)
      for (int b : f.strictly_above(a))
        order.push_back({f.elements()[a], f.elements()[static_cast<std::size_t>(b)]});
    fj["order"] = order;
    json weights = json::object();
    for (std::size_t e = 0; e < f.size(); ++e)
      weights[f.elements()[e]] = to_string(f.weight(e));
    fj["weights"] = weights;
    factors.push_back(fj);
  }
  return json{{"factors", factors}}.dump();
}

std::string events_to_json(std::span<const Event> events) {
  json list = json::array();
  for (const Event& event : events) {
    json outcomes = json::array();
    const ProductSpace& space = event.space();
    for (std::uint64_t w = 0; w < space.outcome_count(); ++w) {
      if (!event.contains(w)) continue;
      json labels = json::array();
      for (std::size_t i = 0; i < space.arity(); ++i)
        labels.push_back(space.factor(i).elements()[static_cast<std::size_t>(space.coord_of(w, i))]);
      outcomes.push_back(labels);
    }
    list.push_back({{"type", "explicit"}, {"outcomes", outcomes}});
  }
  return json{{"events", list}}.dump();
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return std::string(buf);
}

std::string distribution_to_csv(const CountDistribution& dist) {
  std::ostringstream out;
  out << "value,pmf,survival,pmf_decimal,survival_decimal\n";
  for (std::size_t j = 0; j <= dist.max_count(); ++j) {
    const Rat surv = dist.survival(static_cast<long long>(j));
    out << j << ',' << to_string(dist.pmf(j)) << ',' << to_string(surv) << ','
        << format_double(to_double(dist.pmf(j))) << ',' << format_double(to_double(surv)) << '\n';
  }
  return out.str();
}

}  // namespace boxkit
