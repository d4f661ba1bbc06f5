#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhd/element.hpp"
#include "qhd/field.hpp"
#include "qhd/order.hpp"
#include "qhd/quiver.hpp"

namespace qhd {

// A parsed input file: quiver, relations over Q, and the optional declared
// admissible order. Field reinterpretation happens later, at run time.
struct Presentation {
  Quiver quiver;
  std::vector<Element<Rational>> relations;
  std::optional<AdmissibleOrder> order;
};

Presentation parse_presentation(const std::string& text);

// Order spec like "lenlex a > b > c" or "lenlex-right c>b>a"; `line` only
// seeds error positions (0 for command-line specs).
AdmissibleOrder parse_order_spec(const Quiver& q, const std::string& spec,
                                 int line = 0);

// Renders a presentation back into parseable input text.
std::string print_presentation(const Presentation& p);

// One relation in input syntax, terms descending under ord.
std::string relation_to_input_string(const Quiver& q,
                                     const Element<Rational>& x,
                                     const AdmissibleOrder& ord);

}  // namespace qhd
