#include "mtp/io.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

#include "mtp/error.hpp"
#include "mtp/lemmas.hpp"
#include "mtp/version.hpp"

namespace mtp {

namespace {

using Json = nlohmann::ordered_json;

Json number(const ExactInt& v) {
  if (auto small = v.to_int64()) return *small;
  return v.str();
}

ExactInt read_int(const Json& j) {
  if (j.is_number_integer()) return ExactInt(j.get<std::int64_t>());
  if (j.is_string()) return ExactInt::parse(j.get<std::string>());
  throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

Json classes_json(const Signature& sig) {
  Json out = Json::array();
  for (const auto& c : sig.classes()) out.push_back(Json::array({number(c.m), number(c.n)}));
  return out;
}

Json budget_json(const SearchBudget& b) {
  return Json{{"max_nodes", b.max_nodes}, {"max_time_ms", b.max_time.count()}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string signature_record(const Signature& sig) {
  const auto k = k_of(sig);
  Json j;
  j["a"] = number(sig.a());
  j["classes"] = classes_json(sig);
  j["N"] = number(tile_count(sig));
  j["k"] = k ? number(*k) : Json(nullptr);
  j["sigma"] = sigma(sig).str();
  j["gamma"] = gamma(sig).str();
  j["delta"] = delta(sig).str();
  j["exceeds"] = k ? exceeds_conjecture(sig, *k) : false;
  j["attains"] = k ? attains_conjecture(sig, *k) : false;
  return j.dump();
}

Signature parse_signature_record(std::string_view line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!j.is_object() || !j.contains("a") || !j.contains("classes") || !j["classes"].is_array()) {
    throw Error(ErrorCode::ParseError, "record needs \"a\" and a \"classes\" array");
  }
  std::vector<SizeClass> classes;
  for (const auto& pair : j["classes"]) {
    if (!pair.is_array() || pair.size() != 2) throw Error(ErrorCode::ParseError, "class must be [m,n], got " + pair.dump());
    classes.push_back({read_int(pair[0]), read_int(pair[1])});
  }
  return make_signature(read_int(j["a"]), std::move(classes));
}

std::vector<SizeClass> parse_class_list(std::string_view text) {
  std::vector<SizeClass> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::ParseError, "class \"" + std::string(item) + "\" is not m:n");
    }
    out.push_back({ExactInt::parse(item.substr(0, colon)), ExactInt::parse(item.substr(colon + 1))});
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw Error(ErrorCode::ParseError, "trailing comma in class list");
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty class list");
  return out;
}

std::string layout_svg(const Layout& layout) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " << layout.a << ' ' << layout.a
     << "\" width=\"" << layout.a * 40 << "\" height=\"" << layout.a * 40 << "\">\n";
  for (const auto& p : layout.placements) {
    // grid y grows upward; SVG y grows downward
    os << "  <rect x=\"" << p.x << "\" y=\"" << layout.a - p.y - p.m << "\" width=\"" << p.m << "\" height=\"" << p.m
       << "\" fill=\"none\" stroke=\"black\" stroke-width=\"0.05\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string hunt_report_json(const HuntReport& report) {
  const auto& o = report.options;
  const auto target = conjecture_target(ExactInt(o.k));
  Json j;
  j["tool"] = kToolName;
  j["version"] = kVersion;
  j["k"] = o.k;
  j["target"] = target.value.str();
  j["bounds"] = Json{{"a_min", o.a_min}, {"a_max", o.a_max}, {"max_classes", o.max_classes}};
  j["budget"] = budget_json(o.budget);
  j["symmetry_breaking"] = o.realize.symmetry_breaking;
  j["signatures"] = report.signatures;
  Json counts;
  for (std::size_t i = 0; i < std::size(kAllVerdictTags); ++i) {
    counts[std::string(to_string(kAllVerdictTags[i]))] = report.verdict_counts[i];
  }
  j["verdict_counts"] = counts;
  j["exceeding"] = report.exceeding;
  Json cands = Json::array();
  for (const auto& c : report.candidates) {
    cands.push_back(Json{{"a", number(c.sig.a())},
                         {"classes", classes_json(c.sig)},
                         {"delta", c.delta.str()},
                         {"sigma", c.sigma.str()},
                         {"status", to_string(c.status)},
                         {"nodes", c.nodes}});
  }
  j["candidates"] = cands;
  j["checksum"] = report.checksum;
  return dump(j);
}

std::string verify_report_json(const VerifyReport& report) {
  const auto& o = report.options;
  Json j;
  j["tool"] = kToolName;
  j["version"] = kVersion;
  j["bounds"] = Json{{"k_min", o.k_min},
                     {"k_max", o.k_max},
                     {"a_min", o.a_min},
                     {"a_max", o.a_max},
                     {"max_classes", o.max_classes}};
  j["budget"] = budget_json(o.budget);
  j["signatures"] = report.signatures;
  Json by_classes;
  for (const auto& [c, n] : report.by_class_count) by_classes[std::to_string(c)] = n;
  j["by_class_count"] = by_classes;
  Json exc = Json::array();
  for (const auto& s : report.exceeding) exc.push_back(s.str());
  j["exceeding"] = exc;
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json counters;
    for (const auto& [key, v] : c.counters) counters[key] = v;
    checks.push_back(Json{{"id", c.id},
                          {"title", c.title},
                          {"status", to_string(c.status)},
                          {"examined", c.examined},
                          {"violations", c.violations},
                          {"first_violation", c.first_violation},
                          {"counters", counters}});
  }
  j["checks"] = checks;
  j["passed"] = report.passed();
  return dump(j);
}

std::string verify_report_text(const VerifyReport& report) {
  std::ostringstream os;
  const auto& o = report.options;
  os << "verify k=" << o.k_min << ".." << o.k_max << " a=" << o.a_min << ".." << o.a_max
     << " max_classes=" << o.max_classes << "\n";
  os << "signatures: " << report.signatures;
  for (const auto& [c, n] : report.by_class_count) os << "  " << c << "-size: " << n;
  os << "\n";
  os << "exceeding k+1/k: " << report.exceeding.size() << "\n";
  for (const auto& c : report.checks) {
    os << to_string(c.status) << "  " << c.id << "  examined=" << c.examined << " violations=" << c.violations << "  ("
       << c.title << ")\n";
    if (!c.first_violation.empty()) os << "    first violation: " << c.first_violation << "\n";
    for (const auto& [key, v] : c.counters) {
      os << "    " << v << "  " << key << (v == 0 ? "  [vacuous]" : "") << "\n";
    }
  }
  os << (report.passed() ? "ALL PASS" : "FAILED") << "\n";
  return os.str();
}

}  // namespace mtp
