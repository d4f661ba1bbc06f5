#include "qhd/report.hpp"

#include <sstream>

#include <json.hpp>

namespace qhd {

std::string emit_json(const RunReport& r) {
  using json = nlohmann::ordered_json;
  json j;
  j["verdict"] = r.verdict ? json(*r.verdict) : json(nullptr);
  j["ordering"] = r.ordering ? json(*r.ordering) : json(nullptr);
  if (r.steps) {
    json steps = json::array();
    for (const auto& s : *r.steps) {
      json step;
      step["vertex"] = s.vertex;
      step["ideal_dim"] = s.ideal_dim;
      step["tensor_dim"] = s.tensor_dim < 0 ? json(nullptr) : json(s.tensor_dim);
      step["checks"] = {{"L2", s.l2}, {"LJL", s.ljl}, {"proj", s.proj}};
      steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
  } else {
    j["steps"] = nullptr;
  }
  if (r.gb) {
    json gb;
    gb["tips"] = r.gb->tips;
    gb["dim"] = r.gb->dim;
    gb["length_bound"] = r.gb->length_bound;
    j["gb"] = std::move(gb);
  } else {
    j["gb"] = nullptr;
  }
  j["order_used"] = r.order_used ? json(*r.order_used) : json(nullptr);
  return j.dump(2) + "\n";
}

std::string emit_text(const RunReport& r) {
  std::ostringstream out;
  if (r.verdict) out << "verdict: " << *r.verdict << "\n";
  if (r.ordering) {
    out << "ordering:";
    for (const auto& v : *r.ordering) out << " " << v;
    out << "\n";
  }
  if (r.steps && !r.steps->empty()) {
    out << "steps:\n";
    int i = 0;
    for (const auto& s : *r.steps) {
      out << "  " << ++i << ". " << s.vertex << "  ideal_dim " << s.ideal_dim;
      if (s.tensor_dim >= 0) out << "  tensor_dim " << s.tensor_dim;
      out << "  L2 " << (s.l2 ? "ok" : "FAIL") << "  LJL "
          << (s.ljl ? "ok" : "FAIL") << "  proj " << (s.proj ? "ok" : "FAIL");
      if (s.quotient_dim >= 0) out << "  quotient_dim " << s.quotient_dim;
      out << "\n";
    }
  }
  if (r.gb) {
    if (!r.gb->basis.empty()) {
      out << "basis:\n";
      for (const auto& g : r.gb->basis) out << "  " << g << "\n";
    }
    out << "tips:";
    for (const auto& t : r.gb->tips) out << " " << t;
    if (r.gb->tips.empty()) out << " (none)";
    out << "\n";
    out << "dim: " << r.gb->dim << "\n";
    out << "length_bound: " << r.gb->length_bound << "\n";
  }
  if (r.order_used) out << "order: " << *r.order_used << "\n";
  for (const auto& l : r.lines) out << l << "\n";
  return out.str();
}

}  // namespace qhd
