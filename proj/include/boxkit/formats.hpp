#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "boxkit/distribution.hpp"
#include "boxkit/event.hpp"
#include "boxkit/space.hpp"

namespace boxkit {

// Malformed input files; the message carries a line number where one is
// known.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"factors":[{"elements":[...],"order":[[a,b],...],"weights":{label:"p/q"}}]}
// Order lists covering pairs; reflexivity and transitivity are implied.
// Throws ParseError on malformed input; structural axioms are checked
// separately via validate().
ProductSpace parse_space_json(const std::string& text);

// {"events":[entry,...]} or a bare array. Entries:
//   {"type":"cylinder","coord":1,"values":["1"]}      (coords are 1-based)
//   {"type":"upset","generators":[["1","0"],...]}
//   {"type":"downset","generators":[...]}
//   {"type":"explicit","outcomes":[...]}
//   {"type":"not"|"and"|"or","args":[entry,...]}
std::vector<Event> parse_events_json(const std::string& text, const ProductSpace& space);

std::string space_to_json(const ProductSpace& space);
// Events flatten to explicit outcome lists.
std::string events_to_json(std::span<const Event> events);

// value,pmf,survival,pmf_decimal,survival_decimal with exact rational
// strings and 15-significant-digit decimals.
std::string distribution_to_csv(const CountDistribution& dist);

std::string format_double(double value);  // %.15g

}  // namespace boxkit
