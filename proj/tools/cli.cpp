#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "finring/predicates.hpp"
#include "finring/report.hpp"
#include "finring/search.hpp"
#include "finring/semiring.hpp"
#include "finring/spec_doc.hpp"
#include "finring/suite.hpp"

namespace finring::cli {
namespace {

const std::vector<std::string> kRingProperties = {
    "center",          "ce",          "essential",           "semiprime",         "reduced",     "centrally-rational",
    "strongly-bounded", "idempotents", "minimal-right-ideals", "semisubtractive", "commutative"};
const std::vector<std::string> kQueryProperties = {"center", "idempotents", "minimal-right-ideals"};

struct CheckFlags {
  std::string property;
  std::string spec_file;
  std::string mode = "exhaustive";
  std::uint64_t cap = 0;
  unsigned workers = 1;
  std::string format = "text";
  std::string variant = "nonunital";
  std::string side = "both";
  std::string ideal;
};

std::string read_input(const std::string& path) {
  std::ostringstream s;
  if (path == "-") {
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  s << in.rdbuf();
  return s.str();
}

/// A spec file, "-" for stdin, or "preset:<name>".
Json load_spec(const std::string& path) {
  const std::string prefix = "preset:";
  Json doc = path.rfind(prefix, 0) == 0 ? preset_spec(path.substr(prefix.size())) : parse_spec_text(read_input(path));
  validate_spec(doc);
  return doc;
}

std::string join(const std::vector<Element>& v) {
  std::string s;
  for (const auto& e : v) {
    s += s.empty() ? "(" : " (";
    for (std::size_t i = 0; i < e.coeffs.size(); ++i) s += (i ? "," : "") + std::to_string(e.coeffs[i]);
    s += ")";
  }
  return s;
}

Certificate run_ring_property(const Ring& r, const CheckFlags& f) {
  const std::uint64_t cap = f.cap ? f.cap : default_element_cap();
  const std::string& p = f.property;
  if (p == "center") return center_certificate(r);
  if (p == "commutative") return is_commutative(r);
  if (p == "ce") {
    CeOptions o;
    o.variant = *parse_ce_variant(f.variant);
    o.mode = f.mode == "refute" ? ScanMode::refute : ScanMode::exhaustive;
    o.cap = cap;
    o.workers = f.workers;
    return is_centrally_essential(r, o);
  }
  if (p == "essential") {
    if (f.ideal.empty()) throw std::invalid_argument("property 'essential' needs --ideal with generators");
    std::vector<Element> gens;
    for (const auto& e : parse_spec_text(f.ideal)) gens.push_back(element_from_json(e));
    for (const auto& g : gens)
      if (!r.contains(g)) throw std::invalid_argument("ideal generator outside the ring");
    return is_essential_right_ideal(r, right_ideal_generated(r, gens), cap);
  }
  if (p == "semiprime") return is_semiprime(r, cap);
  if (p == "reduced") return is_reduced(r, cap);
  if (p == "centrally-rational") return is_centrally_rational(r, cap);
  if (p == "strongly-bounded") {
    const Side s = f.side == "right" ? Side::right : f.side == "left" ? Side::left : Side::both;
    return is_strongly_bounded(r, s, cap);
  }
  if (p == "idempotents") return idempotents_certificate(r, cap);
  if (p == "minimal-right-ideals")
    return minimal_right_ideals_certificate(r, f.cap ? std::optional<std::uint64_t>(f.cap) : std::nullopt);
  throw std::invalid_argument("property '" + p + "' is not defined for rings");
}

Certificate run_semiring_property(const Semiring& s, const std::string& p) {
  if (p == "center") return semiring_center_certificate(s);
  if (p == "ce") return is_ce_semiring(s);
  if (p == "semisubtractive") return is_semisubtractive(s);
  if (p == "commutative") return is_commutative_semiring(s);
  throw std::invalid_argument("property '" + p + "' is not defined for semirings");
}

int cmd_check(const CheckFlags& f, std::ostream& out) {
  const Json spec = load_spec(f.spec_file);
  const auto start = std::chrono::steady_clock::now();
  const Structure s = build_spec(spec);
  Evidence ev;
  ev.spec = spec;
  std::string name;
  std::uint64_t order = 0;
  if (const Ring* r = std::get_if<Ring>(&s)) {
    ev.cert = run_ring_property(*r, f);
    name = r->name();
    order = r->order();
  } else {
    const Semiring& sr = std::get<Semiring>(s);
    ev.target = TargetKind::semiring;
    ev.cert = run_semiring_property(sr, f.property);
    name = sr.name();
    order = sr.order();
  }
  const bool query = std::find(kQueryProperties.begin(), kQueryProperties.end(), f.property) != kQueryProperties.end();
  CheckResult res;
  res.check = f.property;
  res.passed = query || ev.cert.verdict;
  res.verdict = query ? ev.cert.detail : (ev.cert.verdict ? "true" : "false");
  res.examined = ev.cert.examined;
  res.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  res.evidence.push_back(ev);
  Report report;
  report.command = "check";
  report.checks.push_back(res);
  if (f.format == "machine") {
    out << render_machine(report) << "\n";
  } else {
    out << "property: " << f.property << "\n"
        << "ring: " << name << " (order " << order << ")\n"
        << "verdict: " << res.verdict << "\n";
    if (f.property == "ce") out << "variant: " << ev.cert.variant << "\n";
    out << "mode: " << to_string(ev.cert.mode) << "\n";
    if (!ev.cert.witness.empty()) out << "witness: " << join(ev.cert.witness) << "\n";
    if (!ev.cert.detail.empty() && !query) out << "detail: " << ev.cert.detail << "\n";
    out << "examined: " << res.examined << "\n";
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f", res.duration_ms);
    out << "duration_ms: " << ms << "\n";
  }
  return res.passed ? kExitHolds : kExitFails;
}

int emit(const Report& r, const std::string& format, bool durations, std::ostream& out) {
  if (format == "machine")
    out << render_machine(r, durations) << "\n";
  else
    out << render_text(r);
  return r.all_passed() ? kExitHolds : kExitFails;
}

int cmd_describe(const std::string& file, const std::string& format, std::ostream& out) {
  const Json spec = load_spec(file);
  const Structure s = build_spec(spec);
  Json d;
  if (const Ring* r = std::get_if<Ring>(&s)) {
    d["name"] = r->name();
    d["kind"] = "ring";
    d["representation"] = r->is_structure() ? "structure" : "table";
    d["order"] = r->order();
    d["characteristic"] = r->characteristic();
    d["unital"] = r->unital();
    d["commutative"] = is_commutative(*r).verdict;
    d["center_size"] = center(*r).size();
    if (r->is_structure()) {
      d["modulus"] = r->modulus();
      d["rank"] = r->rank();
    }
  } else {
    const Semiring& sr = std::get<Semiring>(s);
    d["name"] = sr.name();
    d["kind"] = "semiring";
    d["order"] = sr.order();
    d["unital"] = sr.one().has_value();
    d["commutative"] = is_commutative_semiring(sr).verdict;
    d["center_size"] = semiring_center(sr).size();
  }
  if (format == "machine") {
    out << d.dump(2) << "\n";
  } else {
    for (const auto& [k, v] : d.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
  return kExitHolds;
}

int cmd_recheck(const std::string& file, const std::string& format, std::ostream& out) {
  const Report r = report_from_json(parse_spec_text(read_input(file)));
  const RecheckSummary s = recheck_report(r);
  if (format == "machine") {
    out << Json{{"total", s.total}, {"ok", s.ok}, {"failures", s.failures}}.dump(2) << "\n";
  } else {
    for (const auto& f : s.failures) out << "FAIL " << f << "\n";
    out << s.ok << "/" << s.total << " certificates re-verified\n";
  }
  return s.ok == s.total ? kExitHolds : kExitFails;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide structural properties of finite rings and semirings"};
  app.name("finring");
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"text", "machine"});

  CheckFlags cf;
  auto* check = app.add_subcommand("check", "Run one predicate on a ring-spec document");
  std::vector<std::string> all_props = kRingProperties;
  check->add_option("property", cf.property, "Property to decide")->required()->check(CLI::IsMember(all_props));
  check->add_option("spec", cf.spec_file, "Ring-spec JSON file, - for stdin, or preset:<name>")->required();
  check->add_option("--mode", cf.mode, "exhaustive or refute")->check(CLI::IsMember({"exhaustive", "refute"}));
  check->add_option("--cap", cf.cap, "Element cap (default: FINRING_CAP or 65536)");
  check->add_option("--parallel", cf.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  check->add_option("--format", cf.format, "text or machine")->check(formats);
  check->add_option("--variant", cf.variant, "CE variant")->check(CLI::IsMember({"nonunital", "all_elements", "unital"}));
  check->add_option("--side", cf.side, "strongly-bounded side")->check(CLI::IsMember({"right", "left", "both"}));
  check->add_option("--ideal", cf.ideal, "JSON list of right-ideal generators (for essential)");

  SuiteOptions so;
  std::string vp_format = "text";
  bool no_durations = false;
  auto* vp = app.add_subcommand("verify-paper", "Run the reference suite");
  vp->add_option("--filter", so.filter, "Only checks whose name contains this substring");
  vp->add_option("--inject-fault", so.inject_fault, "Corrupt an input table")->check(CLI::IsMember(fault_names()));
  vp->add_option("--parallel", so.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  vp->add_option("--format", vp_format, "text or machine")->check(formats);
  vp->add_flag("--no-durations", no_durations, "Omit wall-clock fields from machine output");
  bool list = false;
  vp->add_flag("--list", list, "List check names and exit");

  SearchOptions sopt;
  std::string s_format = "text";
  auto* search = app.add_subcommand("search", "Search for non-central nilpotent minimal ideals of CE rings");
  search->add_option("--family", sopt.family, "Ring family")->check(CLI::IsMember(search_families()));
  search->add_option("--max-n", sopt.max_param, "Largest n in the family")->check(CLI::Range(2u, 64u));
  search->add_option("--cap", sopt.cap, "Element cap per instance");
  search->add_option("--parallel", sopt.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  search->add_option("--format", s_format, "text or machine")->check(formats);

  std::string d_file, d_format = "text";
  auto* describe = app.add_subcommand("describe", "Print order, characteristic, unit and center size");
  describe->add_option("spec", d_file, "Ring-spec JSON file, - for stdin, or preset:<name>")->required();
  describe->add_option("--format", d_format, "text or machine")->check(formats);

  std::string r_file, r_format = "text";
  auto* rc = app.add_subcommand("recheck", "Re-verify every certificate of a machine report");
  rc->add_option("report", r_file, "Machine report file, or - for stdin")->required();
  rc->add_option("--format", r_format, "text or machine")->check(formats);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitHolds : kExitError;
  }

  try {
    if (*check) return cmd_check(cf, out);
    if (*vp) {
      if (list) {
        for (const auto& c : reference_checks())
          if (c.name.find(so.filter) != std::string::npos) out << c.name << "\n";
        return kExitHolds;
      }
      return emit(run_reference_suite(so), vp_format, !no_durations, out);
    }
    if (*search) {
      const Report r = run_search(sopt);
      emit(r, s_format, true, out);
      if (!r.all_passed()) return kExitError;
      return counterexamples(r) ? kExitFails : kExitHolds;
    }
    if (*describe) return cmd_describe(d_file, d_format, out);
    if (*rc) return cmd_recheck(r_file, r_format, out);
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitError;
  } catch (const SpecError& e) {
    err << "spec error: " << e.what();
    if (e.position()) err << " (byte " << *e.position() << ")";
    err << "\n";
    return kExitError;
  } catch (const AxiomViolation& e) {
    err << "invalid structure: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace finring::cli
