#include "qhd/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "qhd/errors.hpp"

namespace qhd {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

bool is_unsigned_rational(const std::string& s) {
  if (s.empty()) return false;
  bool slash = false;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '/' && !slash && i > 0 && i + 1 < s.size())
      slash = true;
    else if (!std::isdigit(static_cast<unsigned char>(s[i])))
      return false;
  }
  return true;
}

Rational parse_rational(const std::string& s, int line) {
  auto parts = split(s, '/');
  try {
    boost::multiprecision::cpp_rational v{
        boost::multiprecision::cpp_int(parts[0])};
    if (parts.size() == 2) {
      boost::multiprecision::cpp_int den(parts[1]);
      if (den == 0) throw ParseError(line, "zero denominator in '" + s + "'");
      v /= den;
    }
    return Rational(std::move(v));
  } catch (const ParseError&) {
    throw;
  } catch (const std::runtime_error&) {
    throw ParseError(line, "bad rational '" + s + "'");
  }
}

std::vector<arrow_id> parse_word(const Quiver& q, const std::string& w,
                                 int line) {
  std::vector<arrow_id> ids;
  for (const std::string& f : split(w, '*')) {
    std::string factor = trim(f);
    if (factor.empty())
      throw ParseError(line, "empty factor in word '" + w + "'");
    if (auto a = q.find_arrow(factor)) {
      ids.push_back(*a);
      continue;
    }
    if (q.compact_words() && factor.size() > 1) {
      bool ok = true;
      std::vector<arrow_id> sub;
      for (char c : factor) {
        auto a = q.find_arrow(std::string(1, c));
        if (!a) {
          ok = false;
          break;
        }
        sub.push_back(*a);
      }
      if (ok) {
        ids.insert(ids.end(), sub.begin(), sub.end());
        continue;
      }
    }
    throw ParseError(line, "unknown arrow '" + factor + "'");
  }
  return ids;
}

Element<Rational> parse_relation(const Quiver& q, const std::string& body,
                                 int line) {
  // Top-level signed terms; the grammar has no parentheses.
  struct Chunk {
    bool neg;
    std::string text;
  };
  std::vector<Chunk> chunks;
  size_t i = 0;
  while (i < body.size()) {
    bool neg = false;
    if (body[i] == '+' || body[i] == '-') {
      neg = body[i] == '-';
      ++i;
    }
    size_t start = i;
    while (i < body.size() && body[i] != '+' && body[i] != '-') ++i;
    std::string t = trim(body.substr(start, i - start));
    if (t.empty()) throw ParseError(line, "dangling sign in relation");
    chunks.push_back({neg, t});
  }
  if (chunks.empty()) throw ParseError(line, "empty relation");

  Element<Rational> x;
  for (const auto& ch : chunks) {
    auto factors = split(ch.text, '*');
    for (auto& f : factors) f = trim(f);
    Rational coef = Rational::one();
    size_t start = 0;
    if (is_unsigned_rational(factors[0])) {
      coef = parse_rational(factors[0], line);
      start = 1;
      if (start == factors.size())
        throw ParseError(line, "term '" + ch.text + "' has no arrow word");
    }
    std::string word;
    for (size_t i = start; i < factors.size(); ++i) {
      if (i > start) word += '*';
      word += factors[i];
    }
    Path p;
    try {
      p = Path::of(q, parse_word(q, word, line));
    } catch (const std::invalid_argument&) {
      throw ParseError(line, "word '" + word + "' is not composable");
    }
    if (ch.neg) coef = -coef;
    x.add_term(p, coef);
  }
  return x;
}

}  // namespace

AdmissibleOrder parse_order_spec(const Quiver& q, const std::string& spec,
                                 int line) {
  std::string body = trim(spec);
  OrderKind kind;
  if (body.rfind("lenlex-right", 0) == 0) {
    kind = OrderKind::lenlex_right;
    body = body.substr(12);
  } else if (body.rfind("lenlex", 0) == 0) {
    kind = OrderKind::lenlex_left;
    body = body.substr(6);
  } else {
    throw ParseError(line, "order kind must be lenlex or lenlex-right");
  }
  std::vector<arrow_id> prec;
  for (const std::string& part : split(body, '>')) {
    std::string name = trim(part);
    if (name.empty())
      throw ParseError(line, "empty entry in precedence list");
    auto a = q.find_arrow(name);
    if (!a) throw ParseError(line, "unknown arrow '" + name + "'");
    prec.push_back(*a);
  }
  try {
    return AdmissibleOrder::make(q, kind, std::move(prec));
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

Presentation parse_presentation(const std::string& text) {
  std::vector<std::string> vertex_names;
  std::vector<Arrow> arrows;
  std::vector<std::pair<int, std::string>> rel_lines, order_lines;
  bool have_vertices = false;

  auto find_vertex = [&](const std::string& name) -> std::optional<vertex_id> {
    for (size_t i = 0; i < vertex_names.size(); ++i)
      if (vertex_names[i] == name) return static_cast<vertex_id>(i);
    return std::nullopt;
  };

  std::vector<std::string> lines = split(text, '\n');
  for (int ln = 1; ln <= static_cast<int>(lines.size()); ++ln) {
    std::string line = lines[ln - 1];
    if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    line = trim(line);
    if (line.empty()) continue;
    auto ws = words(line);
    const std::string& key = ws[0];

    if (key == "vertices") {
      if (have_vertices) throw ParseError(ln, "duplicate vertices line");
      if (ws.size() < 2) throw ParseError(ln, "vertices line names none");
      for (size_t i = 1; i < ws.size(); ++i) {
        if (find_vertex(ws[i]))
          throw ParseError(ln, "duplicate vertex '" + ws[i] + "'");
        vertex_names.push_back(ws[i]);
      }
      have_vertices = true;
    } else if (key == "arrow") {
      // arrow a: v -> w  (colon may stick to the name)
      std::string rest = trim(line.substr(5));
      auto colon = rest.find(':');
      if (colon == std::string::npos)
        throw ParseError(ln, "arrow line needs 'name: v -> w'");
      std::string name = trim(rest.substr(0, colon));
      std::string ends = trim(rest.substr(colon + 1));
      auto sep = ends.find("->");
      if (name.empty() || sep == std::string::npos)
        throw ParseError(ln, "arrow line needs 'name: v -> w'");
      std::string src = trim(ends.substr(0, sep));
      std::string dst = trim(ends.substr(sep + 2));
      for (const auto& a : arrows)
        if (a.name == name)
          throw ParseError(ln, "duplicate arrow '" + name + "'");
      auto s = find_vertex(src), t = find_vertex(dst);
      if (!s) throw ParseError(ln, "unknown vertex '" + src + "'");
      if (!t) throw ParseError(ln, "unknown vertex '" + dst + "'");
      arrows.push_back({-1, *s, *t, name});
    } else if (key == "rel") {
      rel_lines.push_back({ln, trim(line.substr(3))});
    } else if (key == "order") {
      if (!order_lines.empty()) throw ParseError(ln, "duplicate order line");
      order_lines.push_back({ln, trim(line.substr(5))});
    } else {
      throw ParseError(ln, "unknown keyword '" + key + "'");
    }
  }
  if (!have_vertices) throw ParseError(0, "missing vertices line");

  Presentation p;
  p.quiver = Quiver(std::move(vertex_names), std::move(arrows));
  for (const auto& [ln, body] : rel_lines) {
    if (body.empty()) throw ParseError(ln, "empty relation");
    p.relations.push_back(parse_relation(p.quiver, body, ln));
  }
  for (const auto& [ln, body] : order_lines)
    p.order = parse_order_spec(p.quiver, body, ln);
  return p;
}

std::string relation_to_input_string(const Quiver& q,
                                     const Element<Rational>& x,
                                     const AdmissibleOrder& ord) {
  auto ts = x.terms();
  std::sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
    return ord.greater(a.first, b.first);
  });
  std::string out;
  for (size_t i = 0; i < ts.size(); ++i) {
    const Rational& c = ts[i].second;
    bool neg = c.str().starts_with('-');
    if (i == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mag = c.str();
    if (neg) mag.erase(0, 1);
    if (mag != "1") out += mag + "*";
    out += path_to_string(q, ts[i].first);
  }
  return out;
}

std::string print_presentation(const Presentation& p) {
  const Quiver& q = p.quiver;
  std::string out = "vertices";
  for (vertex_id v : q.live_vertices()) out += " " + q.vertex_name(v);
  out += "\n";
  for (arrow_id a : q.live_arrows())
    out += "arrow " + q.arrow_name(a) + ": " +
           q.vertex_name(q.arrow(a).source) + " -> " +
           q.vertex_name(q.arrow(a).target) + "\n";
  AdmissibleOrder ord =
      p.order ? *p.order : AdmissibleOrder::declaration(q);
  for (const auto& r : p.relations) {
    if (r.is_zero()) continue;
    out += "rel " + relation_to_input_string(q, r, ord) + "\n";
  }
  if (p.order) out += "order " + p.order->to_string(q) + "\n";
  return out;
}

}  // namespace qhd
