#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "symdyn/characterize.hpp"
#include "symdyn/conjugacy.hpp"
#include "symdyn/graphs.hpp"
#include "symdyn/sliding_code.hpp"
#include "symdyn/substitution.hpp"

// JSON schemas shared by the CLI and by anything scripting against it.

namespace symdyn::io {

using json = nlohmann::json;

namespace detail {

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) fail(ErrorKind::domain, std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    fail(ErrorKind::domain, std::string("field \"") + key + "\" has the wrong type");
  }
}

inline json parse_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::domain, what + " is not valid JSON: " + e.what());
  }
}

}  // namespace detail

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::domain, "cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// {"memory": m, "anticipation": a, "input": "01", "output": "01",
//  "table": {"00": "1", ...}, "partial": false}
inline LocalRule rule_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::domain, "rule must be a JSON object");
  const Alphabet input(detail::field<std::string>(j, "input"));
  const Alphabet output(detail::field<std::string>(j, "output"));
  const auto table_json = detail::field<json>(j, "table");
  if (!table_json.is_object()) fail(ErrorKind::domain, "rule table must be an object");
  std::map<Word, Word> table;
  for (const auto& [key, value] : table_json.items()) {
    if (!value.is_string()) fail(ErrorKind::domain, "rule table values must be strings");
    table[input.parse(key)] = output.parse(value.get<std::string>());
  }
  return LocalRule(input, output, detail::field<std::size_t>(j, "memory"),
                   detail::field<std::size_t>(j, "anticipation"), std::move(table), j.value("partial", false));
}

inline json to_json(const LocalRule& rule) {
  json table = json::object();
  for (const auto& [in, out] : rule.table()) table[rule.input().render(in)] = rule.output().render(out);
  json j{{"memory", rule.memory()},
         {"anticipation", rule.anticipation()},
         {"input", rule.input().names()},
         {"output", rule.output().names()},
         {"table", table}};
  if (rule.partial()) j["partial"] = true;
  return j;
}

// A rule file path, or the builtin name "oxtoby".
inline LocalRule load_rule(const std::string& path_or_builtin) {
  if (path_or_builtin == "oxtoby") return oxtoby_rule();
  return rule_from_json(detail::parse_text(read_file(path_or_builtin), "rule file"));
}

using Certificate = std::variant<ToeplitzCertificate, MorseCertificate>;

inline Certificate certificate_from_json(const json& j, const Alphabet& alphabet) {
  if (!j.is_object()) fail(ErrorKind::domain, "certificate must be a JSON object");
  const auto kind = detail::field<std::string>(j, "kind");
  const auto k = detail::field<std::size_t>(j, "k");
  auto block = [&](const char* key) { return alphabet.parse(detail::field<std::string>(j, key)); };
  if (kind == "toeplitz") return ToeplitzCertificate{k, block("C0"), block("C1")};
  if (kind == "morse") return MorseCertificate{k, block("C0"), block("C1"), block("C0p"), block("C1p")};
  fail(ErrorKind::domain, "certificate kind must be \"toeplitz\" or \"morse\"");
}

inline json to_json(const ToeplitzCertificate& c, const Alphabet& a) {
  return {{"kind", "toeplitz"}, {"k", c.k}, {"C0", a.render(c.c0)}, {"C1", a.render(c.c1)}};
}

inline json to_json(const MorseCertificate& c, const Alphabet& a) {
  return {{"kind", "morse"},          {"k", c.k},
          {"C0", a.render(c.c0)},     {"C1", a.render(c.c1)},
          {"C0p", a.render(c.c0p)},   {"C1p", a.render(c.c1p)}};
}

// Token words print as digits: 0 = C0, 1 = C1, 2 = C0', 3 = C1'.
inline std::string render_tokens(const Word& tokens) {
  std::string out;
  for (Letter t : tokens) out.push_back(static_cast<char>('0' + t));
  return out;
}

inline json to_json(const ParseVerdict& v) {
  json phases = json::array();
  for (const WindowParse& p : v.phases) {
    json e{{"window", p.window}, {"phase", p.phase}, {"start", p.start}, {"tokens", render_tokens(p.tokens)}};
    if (p.parity >= 0) e["parity"] = p.parity;
    phases.push_back(std::move(e));
  }
  json j{{"accepted", v.accepted},
         {"failure_reason", v.failure == FailureReason::none ? json(nullptr) : json(std::string(to_string(v.failure)))},
         {"radius", v.radius},
         {"windows_tested", v.windows_tested},
         {"phases", phases}};
  j["failed_window"] = v.failed_window ? json(*v.failed_window) : json(nullptr);
  return j;
}

inline json to_json(const std::optional<PatternWitness>& w, PatternKind kind) {
  json j{{"pattern", std::string(to_string(kind))}, {"found", w.has_value()}};
  j["start"] = w ? json(w->start) : json(nullptr);
  j["period"] = w ? json(w->half_length) : json(nullptr);
  return j;
}

inline json to_json(const NecessaryConditions& n) {
  return {{"kind", std::string(to_string(n.kind))},
          {"injective", n.injective},
          {"primitive", n.primitive},
          {"length", n.length},
          {"length_power_of_two", n.length_power_of_two},
          {"alphabet_size", n.alphabet_size},
          {"alphabet_bound", n.alphabet_bound},
          {"alphabet_bound_ok", n.alphabet_bound_ok},
          {"all_pass", n.all_pass}};
}

inline json to_json(const SelfSimilarityReport& r) {
  return {{"n", r.n},
          {"image_count", r.image_count},
          {"target_count", r.target_count},
          {"contained", r.contained},
          {"proper", r.proper},
          {"windows_checked", r.windows_checked},
          {"unique_phase", r.unique_phase},
          {"holds", r.holds()}};
}

}  // namespace symdyn::io
