#include "horolamp/jsonio.hpp"

#include <json.hpp>

#include "horolamp/errors.hpp"

namespace horolamp {

namespace {

using nlohmann::json;

void append_int_map(std::string& out, const std::map<long long, Int>& m) {
  out += '{';
  bool first = true;
  for (const auto& [j, c] : m) {
    if (!first) out += ',';
    first = false;
    out += '"';
    out += std::to_string(j);
    out += "\":";
    out += to_string(c);
  }
  out += '}';
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

long long get_ll(const json& v, const char* where) {
  if (!v.is_number_integer() && !v.is_number_unsigned())
    throw ParseError(std::string(where) + " must be an integer (64-bit input range)");
  return v.get<long long>();
}

long long key_ll(const std::string& key, const char* where) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string(where) + " has non-integer key '" + key + "'");
  }
}

Poly poly_from(const json& v) {
  if (!v.is_object()) throw ParseError("element 'f' must be an object");
  Poly f;
  if (v.contains("laurent")) {
    const json& lau = v.at("laurent");
    if (!lau.is_object()) throw ParseError("'laurent' must be an object");
    for (auto it = lau.begin(); it != lau.end(); ++it) {
      Int c = get_ll(it.value(), "laurent coefficient");
      if (c != 0) f.laurent[key_ll(it.key(), "'laurent'")] = c;
    }
  }
  if (v.contains("poles")) {
    const json& poles = v.at("poles");
    if (!poles.is_object()) throw ParseError("'poles' must be an object");
    for (auto it = poles.begin(); it != poles.end(); ++it) {
      long long i = key_ll(it.key(), "'poles'");
      if (i < 1) throw ParseError("pole index must be >= 1, got " + it.key());
      if (!it.value().is_object()) throw ParseError("pole entry must be an object");
      for (auto jt = it.value().begin(); jt != it.value().end(); ++jt) {
        long long j = key_ll(jt.key(), "pole order");
        if (j < 1) throw ParseError("pole order must be >= 1, got " + jt.key());
        Int c = get_ll(jt.value(), "pole coefficient");
        if (c != 0) f.poles[static_cast<int>(i)][j] = c;
      }
      if (f.poles.count(static_cast<int>(i)) && f.poles[static_cast<int>(i)].empty())
        f.poles.erase(static_cast<int>(i));
    }
  }
  return f;
}

}  // namespace

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

std::string poly_json(const Poly& f) {
  std::string out = "{\"laurent\":";
  append_int_map(out, f.laurent);
  out += ",\"poles\":{";
  bool first = true;
  for (const auto& [i, m] : f.poles) {
    if (!first) out += ',';
    first = false;
    out += '"';
    out += std::to_string(i);
    out += "\":";
    append_int_map(out, m);
  }
  out += "}}";
  return out;
}

std::string elem_body_json(const GroupElem& g) {
  std::string out = "{\"f\":";
  out += poly_json(g.f);
  out += ",\"h\":[";
  for (std::size_t i = 0; i < g.h.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(g.h[i]);
  }
  out += "]}";
  return out;
}

std::string elem_json(const Group& G, const GroupElem& g) {
  std::string out = "{\"ring\":\"";
  out += json_escape(G.ring().name());
  out += "\",\"n\":";
  out += std::to_string(G.rank());
  out += ",\"f\":";
  out += poly_json(g.f);
  out += ",\"h\":[";
  for (std::size_t i = 0; i < g.h.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(g.h[i]);
  }
  out += "]}";
  return out;
}

std::string vertex_json(const HoroVertex& v) {
  std::string out = "{\"coords\":[";
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (i) out += ',';
    out += "{\"labels\":[";
    const auto& a = v.coords[i];
    for (std::size_t t = 0; t < a.labels.size(); ++t) {
      if (t) out += ',';
      out += to_string(a.labels[t]);
    }
    out += "],\"height\":";
    out += std::to_string(a.height);
    out += '}';
  }
  out += "]}";
  return out;
}

Poly parse_poly_json(const std::string& text) { return poly_from(parse_text(text)); }

GroupElem parse_elem_json(const Group& G, const std::string& text) {
  json v = parse_text(text);
  if (!v.is_object()) throw ParseError("element JSON must be an object");
  if (v.contains("ring")) {
    if (!v.at("ring").is_string() || v.at("ring").get<std::string>() != G.ring().name())
      throw ParseError("element ring does not match --ring " + G.ring().name());
  }
  if (v.contains("n")) {
    if (get_ll(v.at("n"), "'n'") != G.rank())
      throw ParseError("element rank does not match --n " + std::to_string(G.rank()));
  }
  if (!v.contains("f") || !v.contains("h")) throw ParseError("element JSON needs 'f' and 'h'");
  GroupElem g;
  g.f = poly_from(v.at("f"));
  const json& h = v.at("h");
  if (!h.is_array() || static_cast<int>(h.size()) != G.rank())
    throw ParseError("'h' must be an array of length " + std::to_string(G.rank()));
  for (const json& x : h) g.h.push_back(get_ll(x, "'h' entry"));
  // Re-reduce coefficients so foreign input lands in canonical form.
  Poly clean;
  for (const auto& [j, c] : g.f.laurent) {
    Int r = G.ring().reduce(c);
    if (r != 0) clean.laurent[j] = r;
  }
  for (const auto& [i, m] : g.f.poles) {
    if (i >= G.rank()) throw ParseError("pole at " + std::to_string(i) + " exceeds rank");
    for (const auto& [j, c] : m) {
      Int r = G.ring().reduce(c);
      if (r != 0) clean.poles[i][j] = r;
    }
    if (clean.poles.count(i) && clean.poles[i].empty()) clean.poles.erase(i);
  }
  g.f = clean;
  return g;
}

HoroVertex parse_vertex_json(const std::string& text) {
  json v = parse_text(text);
  if (!v.is_object() || !v.contains("coords") || !v.at("coords").is_array())
    throw ParseError("vertex JSON must be {\"coords\":[...]}");
  HoroVertex out;
  for (const json& c : v.at("coords")) {
    if (!c.is_object() || !c.contains("labels") || !c.contains("height") ||
        !c.at("labels").is_array())
      throw ParseError("each coordinate needs 'labels' and 'height'");
    TreeAddress a;
    for (const json& x : c.at("labels")) a.labels.push_back(get_ll(x, "label"));
    while (!a.labels.empty() && a.labels.back() == 0) a.labels.pop_back();
    a.height = get_ll(c.at("height"), "'height'");
    out.coords.push_back(std::move(a));
  }
  return out;
}

}  // namespace horolamp
