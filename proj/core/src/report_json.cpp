// JSON lines for property and theorem reports. Key order is fixed by
// ordered_json, so serialize(parse(line)) == line for every line we emit.

#include "json.hpp"

#include "skewlab/error.hpp"
#include "skewlab/theorems.hpp"

namespace skewlab {

  namespace {

    using json = nlohmann::ordered_json;

    json encode(PropertyReport const& r) {
      json w = json::object();
      for (auto const& [k, v] : r.witness) {
        w[k] = v;
      }
      json j;
      j["property"]     = r.property;
      j["verdict"]      = to_string(r.verdict);
      j["degree_bound"] = r.degree_bound ? json(*r.degree_bound) : json(nullptr);
      j["witness"]      = std::move(w);
      j["note"]         = r.note;
      return j;
    }

    [[noreturn]] void bad(std::string what) {
      throw ParseError("<report>", 1, 1, std::move(what));
    }

    json const& member(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        bad(std::string("key \"") + key + "\"");
      }
      return j.at(key);
    }

    std::string text(json const& j, char const* key) {
      auto const& v = member(j, key);
      if (!v.is_string()) {
        bad(std::string("string for \"") + key + "\"");
      }
      return v.get<std::string>();
    }

    PropertyReport decode_property(json const& j) {
      PropertyReport r;
      r.property   = text(j, "property");
      auto verdict = verdict_from_string(text(j, "verdict"));
      if (!verdict) {
        bad("verdict name");
      }
      r.verdict     = *verdict;
      auto const& d = member(j, "degree_bound");
      if (d.is_number_integer()) {
        r.degree_bound = d.get<int>();
      } else if (!d.is_null()) {
        bad("integer or null for \"degree_bound\"");
      }
      auto const& w = member(j, "witness");
      if (!w.is_object()) {
        bad("object for \"witness\"");
      }
      for (auto it = w.begin(); it != w.end(); ++it) {
        if (!it.value().is_string()) {
          bad("string witness values");
        }
        r.witness.emplace_back(it.key(), it.value().get<std::string>());
      }
      r.note = text(j, "note");
      return r;
    }

    json parse(std::string_view line) {
      try {
        return json::parse(line);
      } catch (json::parse_error const& e) {
        throw ParseError("<report>", 1, e.byte, "valid JSON");
      }
    }

  }  // namespace

  std::string to_json(PropertyReport const& report) {
    return encode(report).dump();
  }

  std::string to_json(TheoremReport const& r) {
    json ev = json::array();
    for (auto const& p : r.evidence) {
      ev.push_back(encode(p));
    }
    json j;
    j["theorem"]      = r.theorem;
    j["instance"]     = r.instance;
    j["degree_bound"] = r.degree_bound;
    j["hypotheses"]   = to_string(r.hypotheses);
    j["conclusion"]   = to_string(r.conclusion);
    j["status"]       = to_string(r.status);
    j["statement"]    = r.statement;
    j["evidence"]     = std::move(ev);
    j["note"]         = r.note;
    return j.dump();
  }

  PropertyReport property_report_from_json(std::string_view line) {
    return decode_property(parse(line));
  }

  TheoremReport theorem_report_from_json(std::string_view line) {
    json const    j = parse(line);
    TheoremReport r;
    r.theorem     = text(j, "theorem");
    r.instance    = text(j, "instance");
    auto const& d = member(j, "degree_bound");
    if (!d.is_number_integer()) {
      bad("integer for \"degree_bound\"");
    }
    r.degree_bound = d.get<int>();
    auto h         = truth_from_string(text(j, "hypotheses"));
    auto c         = truth_from_string(text(j, "conclusion"));
    auto s         = status_from_string(text(j, "status"));
    if (!h || !c || !s) {
      bad("truth values and status names");
    }
    r.hypotheses  = *h;
    r.conclusion  = *c;
    r.status      = *s;
    r.statement   = text(j, "statement");
    auto const& e = member(j, "evidence");
    if (!e.is_array()) {
      bad("array for \"evidence\"");
    }
    for (auto const& p : e) {
      r.evidence.push_back(decode_property(p));
    }
    r.note = text(j, "note");
    return r;
  }

}  // namespace skewlab
