#include "finring/report.hpp"

#include <cstdio>
#include <sstream>

#include "finring/module.hpp"
#include "finring/semiring.hpp"

namespace finring {
namespace {

const char* target_name(TargetKind t) {
  switch (t) {
    case TargetKind::ring: return "ring";
    case TargetKind::semiring: return "semiring";
    case TargetKind::module: return "module";
  }
  return "ring";
}

TargetKind parse_target(const std::string& s) {
  if (s == "ring") return TargetKind::ring;
  if (s == "semiring") return TargetKind::semiring;
  if (s == "module") return TargetKind::module;
  throw SpecError(SpecErrorKind::validation, "unknown evidence target '" + s + "'");
}

Json elements_to_json(const std::vector<Element>& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(element_to_json(e));
  return out;
}

std::vector<Element> elements_from_json(const Json& j) {
  std::vector<Element> out;
  for (const auto& e : j) out.push_back(element_from_json(e));
  return out;
}

std::string element_text(const Element& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.coeffs.size(); ++i) s += (i ? "," : "") + std::to_string(e.coeffs[i]);
  return s + ")";
}

/// The first refuting certificate summarises a check's witness.
const Certificate* summary_certificate(const CheckResult& c) {
  for (const auto& e : c.evidence)
    if (!e.cert.verdict && !e.cert.witness.empty()) return &e.cert;
  return nullptr;
}

}  // namespace

bool Report::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

Json element_to_json(const Element& e) { return Json(e.coeffs); }

Element element_from_json(const Json& j) {
  if (!j.is_array()) throw SpecError(SpecErrorKind::validation, "element must be a list of residues");
  Element e;
  for (const auto& c : j) e.coeffs.push_back(c.get<Residue>());
  return e;
}

Json certificate_to_json(const Certificate& c) {
  Json j;
  j["property"] = c.property;
  j["verdict"] = c.verdict;
  j["mode"] = to_string(c.mode);
  j["variant"] = c.variant;
  j["examined"] = c.examined;
  j["witness"] = elements_to_json(c.witness);
  j["multipliers"] = elements_to_json(c.multipliers);
  j["subject"] = elements_to_json(c.subject);
  Json fam = Json::array();
  for (const auto& f : c.families) fam.push_back(elements_to_json(f));
  j["families"] = fam;
  j["labels"] = c.labels;
  j["bound"] = c.bound ? Json(*c.bound) : Json(nullptr);
  j["detail"] = c.detail;
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.property = j.at("property").get<std::string>();
  c.verdict = j.at("verdict").get<bool>();
  const std::string mode = j.at("mode").get<std::string>();
  if (mode != "exhaustive" && mode != "refutation")
    throw SpecError(SpecErrorKind::validation, "unknown certificate mode '" + mode + "'");
  c.mode = mode == "exhaustive" ? CertMode::exhaustive : CertMode::refutation;
  c.variant = j.at("variant").get<std::string>();
  c.examined = j.at("examined").get<std::uint64_t>();
  c.witness = elements_from_json(j.at("witness"));
  c.multipliers = elements_from_json(j.at("multipliers"));
  c.subject = elements_from_json(j.at("subject"));
  for (const auto& f : j.at("families")) c.families.push_back(elements_from_json(f));
  c.labels = j.at("labels").get<std::vector<std::string>>();
  if (!j.at("bound").is_null()) c.bound = j.at("bound").get<std::uint64_t>();
  c.detail = j.at("detail").get<std::string>();
  return c;
}

Json report_to_json(const Report& r, bool with_durations) {
  Json out;
  out["command"] = r.command;
  out["passed"] = r.all_passed();
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json jc;
    jc["check"] = c.check;
    jc["verdict"] = c.verdict;
    jc["passed"] = c.passed;
    jc["note"] = c.note;
    const Certificate* w = summary_certificate(c);
    jc["witness"] = w ? elements_to_json(w->witness) : Json::array();
    jc["examined"] = c.examined;
    if (with_durations) jc["duration_ms"] = c.duration_ms;
    Json ev = Json::array();
    for (const auto& e : c.evidence)
      ev.push_back(Json{{"target", target_name(e.target)}, {"spec", e.spec}, {"certificate", certificate_to_json(e.cert)}});
    jc["evidence"] = ev;
    checks.push_back(jc);
  }
  out["checks"] = checks;
  return out;
}

Report report_from_json(const Json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  for (const auto& jc : j.at("checks")) {
    CheckResult c;
    c.check = jc.at("check").get<std::string>();
    c.verdict = jc.at("verdict").get<std::string>();
    c.passed = jc.at("passed").get<bool>();
    c.note = jc.at("note").get<std::string>();
    c.examined = jc.at("examined").get<std::uint64_t>();
    if (jc.contains("duration_ms")) c.duration_ms = jc["duration_ms"].get<double>();
    for (const auto& e : jc.at("evidence"))
      c.evidence.push_back({parse_target(e.at("target").get<std::string>()), e.at("spec"),
                            certificate_from_json(e.at("certificate"))});
    r.checks.push_back(std::move(c));
  }
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& c : r.checks) {
    passed += c.passed;
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f", c.duration_ms);
    out << (c.passed ? "PASS " : "FAIL ") << c.check << ": " << c.verdict << "  [examined " << c.examined << ", "
        << ms << " ms]";
    if (!c.note.empty()) out << "  " << c.note;
    out << "\n";
    if (const Certificate* w = summary_certificate(c)) {
      out << "     witness:";
      for (const auto& e : w->witness) out << " " << element_text(e);
      out << "\n";
    }
  }
  out << passed << "/" << r.checks.size() << " checks passed\n";
  return out.str();
}

std::string render_machine(const Report& r, bool with_durations) { return report_to_json(r, with_durations).dump(2); }

CheckOutcome recheck_evidence(const Evidence& e) {
  try {
    switch (e.target) {
      case TargetKind::ring: return recheck(build_ring(e.spec), e.cert);
      case TargetKind::semiring: return recheck(build_semiring(e.spec), e.cert);
      case TargetKind::module: {
        const Ring r = build_ring(e.spec);
        const FiniteModule m = scalar_restriction(r);
        std::vector<std::vector<Residue>> rows;
        for (const auto& s : e.cert.subject) rows.push_back(s.coeffs);
        for (const auto& row : rows)
          if (row.size() != m.dim) return {false, "submodule generator has the wrong width"};
        return recheck_module(m, HowellForm(m.modulus, m.dim, rows), e.cert);
      }
    }
  } catch (const std::exception& ex) {
    return {false, ex.what()};
  }
  return {false, "unknown target"};
}

RecheckSummary recheck_report(const Report& r) {
  RecheckSummary s;
  for (const auto& c : r.checks)
    for (const auto& e : c.evidence) {
      ++s.total;
      const CheckOutcome o = recheck_evidence(e);
      if (o.ok)
        ++s.ok;
      else
        s.failures.push_back(c.check + ": " + e.cert.property + ": " + o.reason);
    }
  return s;
}

}  // namespace finring
