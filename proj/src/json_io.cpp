#include "gpdom/json_io.hpp"

#include <sstream>

#include "gpdom/error.hpp"

namespace gpdom {

namespace {

nlohmann::json shifted(const std::vector<int>& xs, int base) {
  auto out = nlohmann::json::array();
  for (int x : xs) out.push_back(x + base);
  return out;
}

Vertex parse_token(std::string_view tok, int n, int base) {
  auto v = parse_vertex(tok, base);
  if (!v) throw Error(ErrorCode::ParseError, "bad vertex token '" + std::string(tok) + "'");
  if (v->index < 0 || v->index >= n)
    throw Error(ErrorCode::ParseError, "vertex '" + std::string(tok) + "' out of range for n=" + std::to_string(n));
  return *v;
}

}  // namespace

nlohmann::json to_json(const BlockProfile& p, int base) {
  return {
      {"gammas", p.gammas},
      {"couple_number", p.couple_number},
      {"F", shifted(p.fault_window, base)},
      {"type", to_string(p.type)},
      {"pseudo_couples", shifted(p.pseudo_couples, base)},
      {"self_contained", shifted(p.self_contained, base)},
  };
}

nlohmann::json certificate_json(int n, int k, const FaultSpec& fault, const SolveResult& r, bool verified,
                                int base) {
  auto set = nlohmann::json::array();
  for (const Vertex& v : r.certificate.vertices()) set.push_back(format_vertex(v, base));
  nlohmann::json j;
  j["n"] = n;
  j["k"] = k;
  j["fault"] = fault.faulted ? nlohmann::json(format_vertex(*fault.faulted, base)) : nlohmann::json(nullptr);
  j["gamma"] = r.gamma;
  j["set"] = set;
  j["engine"] = to_string(r.engine);
  j["verified"] = verified;
  return j;
}

nlohmann::json to_json(const RobustnessReport& r, int base) {
  nlohmann::json j;
  j["n"] = r.n;
  j["gamma"] = r.gamma;
  if (r.mu) {
    nlohmann::json mu;
    mu["exact"] = r.mu->exact ? nlohmann::json(*r.mu->exact) : nlohmann::json(nullptr);
    mu["lower"] = r.mu->lower;
    auto ws = nlohmann::json::array();
    for (const auto& w : r.mu->witnesses) {
      if (w.size() == 1) {
        ws.push_back(format_vertex(w.front(), base));
      } else {
        auto group = nlohmann::json::array();
        for (const Vertex& v : w) group.push_back(format_vertex(v, base));
        ws.push_back(group);
      }
    }
    mu["witnesses"] = ws;
    mu["witness_gammas"] = r.mu->witness_gammas;
    auto flags = nlohmann::json::array();
    for (const Vertex& v : r.mu->inner_counterexamples) flags.push_back(format_vertex(v, base));
    mu["inner_counterexamples"] = flags;
    mu["budget_exhausted"] = r.mu->budget_exhausted;
    j["mu"] = mu;
  }
  if (r.bondage) {
    nlohmann::json b;
    b["low"] = r.bondage->low;
    b["high"] = r.bondage->high;
    b["exact"] = r.bondage->exact ? nlohmann::json(*r.bondage->exact) : nlohmann::json(nullptr);
    auto ws = nlohmann::json::array();
    for (const auto& w : r.bondage->witnesses) {
      auto group = nlohmann::json::array();
      for (const Edge& e : w) group.push_back(format_edge(e, base));
      ws.push_back(group);
    }
    b["witnesses"] = ws;
    b["witness_gammas"] = r.bondage->witness_gammas;
    b["budget_exhausted"] = r.bondage->budget_exhausted;
    j["bondage"] = b;
  }
  j["solves"] = r.solves;
  return j;
}

DomSet parse_set_file(std::string_view text, int n, int base) {
  DomSet s(n);
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string tok = line.substr(first, last - first + 1);
    try {
      s.insert(parse_token(tok, n, base));
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return s;
}

CertificateDoc parse_certificate_json(std::string_view text, int base) {
  CertificateDoc doc;
  try {
    const auto j = nlohmann::json::parse(text);
    doc.n = j.at("n").get<int>();
    doc.k = j.value("k", 2);
    if (doc.n < 3) throw Error(ErrorCode::ParseError, "n must be >= 3");
    if (!j.at("fault").is_null()) doc.fault.faulted = parse_token(j.at("fault").get<std::string>(), doc.n, base);
    doc.gamma = j.at("gamma").get<int>();
    doc.set = DomSet(doc.n);
    for (const auto& t : j.at("set")) doc.set.insert(parse_token(t.get<std::string>(), doc.n, base));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return doc;
}

}  // namespace gpdom
