#include "qhd/driver.hpp"

#include <cstdlib>
#include <string>
#include <vector>

#include "qhd/decide.hpp"
#include "qhd/errors.hpp"

namespace qhd {

namespace {

template <class K>
Rational coeff_to_rational(const K& c);
template <>
Rational coeff_to_rational(const Rational& c) {
  return c;
}
template <>
Rational coeff_to_rational(const PrimeField& c) {
  return Rational(static_cast<long>(c.raw()));
}

template <Field K>
std::vector<Element<K>> convert_relations(const Presentation& p) {
  std::vector<Element<K>> out;
  for (const auto& r : p.relations) {
    Element<K> x;
    for (const auto& [path, c] : r.terms())
      x.add_term(path, from_rational(c, K{}));
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<AdmissibleOrder> order_list(const Options& o,
                                        const Presentation& p) {
  const Quiver& q = p.quiver;
  std::vector<AdmissibleOrder> out;
  if (o.orders_spec) {
    std::string cur;
    auto flush = [&] {
      size_t a = cur.find_first_not_of(" \t");
      if (a != std::string::npos)
        out.push_back(parse_order_spec(q, cur));
      cur.clear();
    };
    for (char c : *o.orders_spec)
      if (c == ';')
        flush();
      else
        cur += c;
    flush();
    if (out.empty()) throw PreconditionFailed("--orders names no order");
    return out;
  }
  if (o.order_spec) {
    out.push_back(parse_order_spec(q, *o.order_spec));
    return out;
  }
  AdmissibleOrder base =
      p.order ? *p.order : AdmissibleOrder::declaration(q);
  out.push_back(base);
  out.push_back(base.reversed());
  return out;
}

template <Field K>
GbReport summarize(const Quiver& q, const GroebnerData<K>& data) {
  GbReport gb;
  for (const auto& g : data.basis)
    gb.basis.push_back(element_to_string(q, g.element, data.order));
  for (const auto& t : data.tips.members)
    gb.tips.push_back(path_to_string(q, t));
  gb.dim = static_cast<int>(data.normal.size());
  gb.length_bound = data.length_bound;
  return gb;
}

std::vector<StepReport> step_reports(const Quiver& q,
                                     const std::vector<StepRecord>& steps) {
  std::vector<StepReport> out;
  for (const auto& s : steps) {
    StepReport r;
    r.vertex = s.vertex >= 0 ? q.vertex_name(s.vertex) : std::string("?");
    r.ideal_dim = s.ideal_dim;
    r.tensor_dim = s.tensor_dim;
    r.quotient_dim = s.quotient_dim;
    r.l2 = s.l2_ok;
    r.ljl = s.ljl_ok;
    r.proj = s.proj_ok && s.tips_consistent;
    out.push_back(std::move(r));
  }
  return out;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::quasi_hereditary:
      return "quasi_hereditary";
    case Verdict::not_quasi_hereditary:
      return "not_quasi_hereditary";
    default:
      return "unknown";
  }
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::quasi_hereditary:
      return 0;
    case Verdict::not_quasi_hereditary:
      return 1;
    default:
      return 2;
  }
}

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ' && c != '\t') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> ordering_names(const Quiver& q,
                                        const std::vector<vertex_id>& ids) {
  std::vector<std::string> out;
  for (vertex_id v : ids) out.push_back(q.vertex_name(v));
  return out;
}

template <Field K>
RunReport run_typed(const Options& o, const Presentation& p) {
  const Quiver& q = p.quiver;
  auto gens = convert_relations<K>(p);
  auto orders = order_list(o, p);
  int cap = resolve_cap(o, p);
  RunReport rep;

  if (o.command == "gb" || o.command == "dim") {
    auto data = complete(q, gens, orders.front(), cap);
    rep.gb = summarize(q, data);
    rep.order_used = orders.front().to_string(q);
    if (o.command == "dim")
      rep.lines.push_back("dimension: " +
                          std::to_string(data.normal.size()));
    return rep;
  }

  if (o.command == "qh" && o.monomial) {
    std::vector<Path> paths;
    for (const auto& x : gens) {
      if (x.term_count() != 1)
        throw PreconditionFailed(
            "--monomial requires every relation to be a single path");
      paths.push_back(x.terms().front().first);
    }
    TipSet t = minimal_tipset(q, paths);
    const AdmissibleOrder& ord = orders.front();
    auto r = decide_monomial_qh<K>(q, t, ord);
    rep.verdict = verdict_name(r.verdict);
    rep.ordering = ordering_names(q, r.ordering.ordering);
    rep.steps = step_reports(q, r.steps);
    rep.gb = summarize(q, monomial_data<K>(q, t, ord));
    rep.order_used = ord.to_string(q);
    if (!r.detail.empty()) rep.lines.push_back(r.detail);
    rep.exit_code = verdict_exit(r.verdict);
    return rep;
  }

  if (o.command == "qh") {
    auto dec = decide_qh(q, gens, orders, cap);
    rep.verdict = verdict_name(dec.report.verdict);
    rep.ordering = ordering_names(q, dec.report.ordering.ordering);
    rep.steps = step_reports(q, dec.report.steps);
    rep.gb = summarize(q, dec.data);
    rep.order_used = orders[dec.order_index].to_string(q);
    if (!dec.report.detail.empty()) rep.lines.push_back(dec.report.detail);
    rep.exit_code = verdict_exit(dec.report.verdict);
    return rep;
  }

  if (o.command == "verify") {
    if (!o.ordering_csv)
      throw PreconditionFailed("verify needs --ordering v1,v2,...");
    std::vector<vertex_id> ids;
    for (const auto& name : split_names(*o.ordering_csv)) {
      auto v = q.find_vertex(name);
      if (!v) throw PreconditionFailed("unknown vertex '" + name + "'");
      ids.push_back(*v);
    }
    auto data = complete(q, gens, orders.front(), cap);
    auto a = build_fd_algebra(q, data);
    auto r = verify_chain(a, ids);
    rep.verdict = verdict_name(r.verdict);
    rep.ordering = ordering_names(q, ids);
    rep.steps = step_reports(q, r.steps);
    rep.gb = summarize(q, a.data);
    rep.order_used = orders.front().to_string(q);
    if (!r.detail.empty()) rep.lines.push_back(r.detail);
    rep.exit_code = r.certified ? 0 : 1;
    return rep;
  }

  if (o.command == "quotient") {
    if (!o.remove_csv)
      throw PreconditionFailed("quotient needs --remove v1[,v2,...]");
    VertexSet s;
    for (const auto& name : split_names(*o.remove_csv)) {
      auto v = q.find_vertex(name);
      if (!v) throw PreconditionFailed("unknown vertex '" + name + "'");
      s.insert(*v);
    }
    auto data = complete(q, gens, orders.front(), cap);
    auto a = build_fd_algebra(q, data);
    auto quo = quotient_algebra(a, s);
    Presentation out;
    out.quiver = quo.quiver;
    for (const auto& g : quo.data.basis) {
      Element<Rational> r;
      for (const auto& [path, c] : g.element.terms())
        r.add_term(path, coeff_to_rational(c));
      out.relations.push_back(std::move(r));
    }
    out.order = quo.data.order;
    rep.gb = summarize(quo.quiver, quo.data);
    rep.order_used = quo.data.order.to_string(quo.quiver);
    std::string text = print_presentation(out);
    if (!text.empty() && text.back() == '\n') text.pop_back();
    rep.lines.push_back(text);
    return rep;
  }

  throw PreconditionFailed("unknown command '" + o.command + "'");
}

}  // namespace

int resolve_cap(const Options& opts, const Presentation& pres) {
  if (opts.cap) {
    if (*opts.cap < 1) throw PreconditionFailed("cap must be positive");
    return *opts.cap;
  }
  if (const char* env = std::getenv("QHD_CAP")) {
    std::string s(env);
    if (!s.empty()) {
      char* end = nullptr;
      long v = std::strtol(s.c_str(), &end, 10);
      if (end == nullptr || *end != '\0' || v < 1)
        throw PreconditionFailed("QHD_CAP must be a positive integer");
      return static_cast<int>(v);
    }
  }
  int longest = 0;
  for (const auto& r : pres.relations)
    for (const auto& [path, c] : r.terms())
      longest = std::max(longest, path.length());
  return std::max(2, 2 * longest + pres.quiver.live_vertex_count());
}

RunReport run_command(const Options& opts, const Presentation& pres) {
  if (opts.field == "q") return run_typed<Rational>(opts, pres);
  if (opts.field.rfind("fp:", 0) == 0) {
    std::string ps = opts.field.substr(3);
    char* end = nullptr;
    unsigned long v = std::strtoul(ps.c_str(), &end, 10);
    if (ps.empty() || end == nullptr || *end != '\0')
      throw PreconditionFailed("bad prime in --field fp:<prime>");
    try {
      PrimeField::set_modulus(v);
    } catch (const std::domain_error& e) {
      throw PreconditionFailed(std::string("bad field modulus: ") + e.what());
    }
    return run_typed<PrimeField>(opts, pres);
  }
  throw PreconditionFailed("unknown field '" + opts.field +
                           "' (use q or fp:<prime>)");
}

}  // namespace qhd
