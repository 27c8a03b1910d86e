#include "finring/spec_doc.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "finring/constructions.hpp"
#include "finring/subgroup.hpp"

namespace finring {
namespace {

[[noreturn]] void invalid(const std::string& path, const std::string& what) {
  throw SpecError(SpecErrorKind::validation, path + ": " + what);
}

const std::map<std::string, std::set<std::string>>& ring_fields() {
  static const std::map<std::string, std::set<std::string>> f = {
      {"zn", {"n"}},
      {"table", {"add", "mul", "zero", "one"}},
      {"group_ring", {"coeff", "group"}},
      {"quaternion", {"base", "a", "b"}},
      {"matrix_delta", {"base"}},
      {"delta_ideal", {"ring", "subgroup"}},
      {"direct_sum", {"summands"}},
      {"semiring", {"add", "mul", "zero", "one", "labels"}},
      {"preset", {"preset"}},
  };
  return f;
}

const std::map<std::string, std::set<std::string>>& group_fields() {
  static const std::map<std::string, std::set<std::string>> f = {
      {"q8", {}},
      {"cyclic", {"n"}},
      {"elementary_abelian_2", {"rank"}},
      {"product", {"factors"}},
      {"table", {"table", "labels"}},
  };
  return f;
}

const std::set<std::string>& required_fields(const std::string& kind, bool group) {
  static const std::map<std::string, std::set<std::string>> ring_req = {
      {"zn", {"n"}},
      {"table", {"add", "mul", "zero"}},
      {"group_ring", {"coeff", "group"}},
      {"quaternion", {"base", "a", "b"}},
      {"matrix_delta", {"base"}},
      {"delta_ideal", {"ring", "subgroup"}},
      {"direct_sum", {"summands"}},
      {"semiring", {"add", "mul", "zero"}},
      {"preset", {"preset"}},
  };
  static const std::map<std::string, std::set<std::string>> group_req = {
      {"q8", {}}, {"cyclic", {"n"}}, {"elementary_abelian_2", {"rank"}}, {"product", {"factors"}}, {"table", {"table"}},
  };
  return group ? group_req.at(kind) : ring_req.at(kind);
}

const std::set<std::string>& semiring_presets() {
  static const std::set<std::string> s = {"semiring_order5", "semiring_boolean", "semiring_diamond"};
  return s;
}

void check_uint(const Json& v, const std::string& path) {
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0))
    invalid(path, "expected a non-negative integer");
}

void check_int(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) invalid(path, "expected an integer");
}

void check_square_table(const Json& t, const std::string& path) {
  if (!t.is_array() || t.empty()) invalid(path, "expected a non-empty list of rows");
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::string rp = path + "[" + std::to_string(i) + "]";
    if (!t[i].is_array() || t[i].size() != t.size()) invalid(rp, "rows must have length " + std::to_string(t.size()));
    for (std::size_t j = 0; j < t[i].size(); ++j) check_uint(t[i][j], rp + "[" + std::to_string(j) + "]");
  }
}

void check_labels(const Json& l, const std::string& path) {
  if (!l.is_array()) invalid(path, "expected a list of strings");
  for (const auto& s : l)
    if (!s.is_string()) invalid(path, "expected a list of strings");
}

void check_object(const Json& doc, const std::string& path, bool group) {
  if (!doc.is_object()) invalid(path, "expected an object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) invalid(path, "missing string field 'kind'");
  const std::string kind = doc["kind"];
  const auto& table = group ? group_fields() : ring_fields();
  const auto it = table.find(kind);
  if (it == table.end()) invalid(path + ".kind", "unknown " + std::string(group ? "group" : "ring") + " kind '" + kind + "'");
  for (const auto& [key, value] : doc.items()) {
    if (key == "kind") continue;
    if (key == "name") {
      if (!value.is_string()) invalid(path + ".name", "expected a string");
      continue;
    }
    if (!it->second.count(key)) invalid(path + "." + key, "unknown field for kind '" + kind + "'");
  }
  for (const auto& key : required_fields(kind, group))
    if (!doc.contains(key)) invalid(path, "kind '" + kind + "' requires field '" + key + "'");
}

void validate_group(const Json& doc, const std::string& path) {
  check_object(doc, path, true);
  const std::string kind = doc["kind"];
  if (kind == "cyclic") check_uint(doc["n"], path + ".n");
  if (kind == "elementary_abelian_2") check_uint(doc["rank"], path + ".rank");
  if (kind == "product") {
    if (!doc["factors"].is_array() || doc["factors"].empty()) invalid(path + ".factors", "expected a non-empty list");
    for (std::size_t i = 0; i < doc["factors"].size(); ++i)
      validate_group(doc["factors"][i], path + ".factors[" + std::to_string(i) + "]");
  }
  if (kind == "table") {
    check_square_table(doc["table"], path + ".table");
    if (doc.contains("labels")) check_labels(doc["labels"], path + ".labels");
  }
}

void validate_at(const Json& doc, const std::string& path);

void validate_zn_base(const Json& doc, const std::string& path) {
  validate_at(doc, path);
  if (doc["kind"] != "zn") invalid(path, "base ring must have kind 'zn'");
}

void validate_at(const Json& doc, const std::string& path) {
  check_object(doc, path, false);
  const std::string kind = doc["kind"];
  if (kind == "zn") check_uint(doc["n"], path + ".n");
  if (kind == "table" || kind == "semiring") {
    check_square_table(doc["add"], path + ".add");
    check_square_table(doc["mul"], path + ".mul");
    check_uint(doc["zero"], path + ".zero");
    if (doc.contains("one") && !doc["one"].is_null()) check_uint(doc["one"], path + ".one");
    if (doc.contains("labels")) check_labels(doc["labels"], path + ".labels");
  }
  if (kind == "group_ring") {
    validate_at(doc["coeff"], path + ".coeff");
    validate_group(doc["group"], path + ".group");
  }
  if (kind == "quaternion") {
    validate_zn_base(doc["base"], path + ".base");
    check_int(doc["a"], path + ".a");
    check_int(doc["b"], path + ".b");
  }
  if (kind == "matrix_delta") validate_zn_base(doc["base"], path + ".base");
  if (kind == "delta_ideal") {
    validate_at(doc["ring"], path + ".ring");
    if (doc["ring"]["kind"] != "group_ring") invalid(path + ".ring", "expected a group_ring");
    if (!doc["subgroup"].is_array()) invalid(path + ".subgroup", "expected a list of group element indices");
    for (const auto& g : doc["subgroup"]) check_uint(g, path + ".subgroup");
  }
  if (kind == "direct_sum") {
    if (!doc["summands"].is_array() || doc["summands"].empty()) invalid(path + ".summands", "expected a non-empty list");
    for (std::size_t i = 0; i < doc["summands"].size(); ++i) {
      const std::string sp = path + ".summands[" + std::to_string(i) + "]";
      validate_at(doc["summands"][i], sp);
      if (is_semiring_spec(doc["summands"][i])) invalid(sp, "semirings cannot be summands");
    }
  }
  if (kind == "preset") {
    if (!doc["preset"].is_string()) invalid(path + ".preset", "expected a string");
    const std::string p = doc["preset"];
    const auto names = preset_names();
    if (!semiring_presets().count(p) && std::find(names.begin(), names.end(), p) == names.end())
      invalid(path + ".preset", "unknown preset '" + p + "'");
  }
}

std::vector<std::uint32_t> flatten(const Json& t) {
  std::vector<std::uint32_t> out;
  for (const auto& row : t)
    for (const auto& v : row) {
      const auto x = v.get<std::uint64_t>();
      if (x > UINT32_MAX) throw SpecError(SpecErrorKind::size, "table entry out of range");
      out.push_back(static_cast<std::uint32_t>(x));
    }
  return out;
}

std::optional<std::uint32_t> optional_one(const Json& doc) {
  if (!doc.contains("one") || doc["one"].is_null()) return std::nullopt;
  return doc["one"].get<std::uint32_t>();
}

Residue modulus_of(const Json& v) {
  const auto n = v.get<std::uint64_t>();
  if (n > kMaxModulus) throw SpecError(SpecErrorKind::size, "modulus " + std::to_string(n) + " exceeds the word limit");
  return static_cast<Residue>(n);
}

std::vector<std::string> labels_of(const Json& doc) {
  std::vector<std::string> out;
  if (doc.contains("labels"))
    for (const auto& s : doc["labels"]) out.push_back(s.get<std::string>());
  return out;
}

Ring build_ring_unchecked(const Json& doc);

Ring named(Ring r, const Json& doc) {
  if (doc.contains("name")) return r.renamed(doc["name"].get<std::string>());
  return r;
}

GroupPtr build_group_unchecked(const Json& doc) {
  const std::string kind = doc["kind"];
  GroupPtr g;
  if (kind == "q8") g = group_q8();
  if (kind == "cyclic") {
    const auto n = doc["n"].get<std::uint64_t>();
    if (n == 0 || n > kMaxTableOrder) throw SpecError(SpecErrorKind::size, "cyclic group order out of range");
    g = group_cyclic(static_cast<std::uint32_t>(n));
  }
  if (kind == "elementary_abelian_2") {
    const auto k = doc["rank"].get<std::uint64_t>();
    if (k > 11) throw SpecError(SpecErrorKind::size, "elementary abelian rank out of range");
    g = group_elementary_abelian_2(static_cast<std::uint32_t>(k));
  }
  if (kind == "product") {
    g = build_group_unchecked(doc["factors"][0]);
    for (std::size_t i = 1; i < doc["factors"].size(); ++i) {
      GroupPtr h = build_group_unchecked(doc["factors"][i]);
      if (std::uint64_t{g->order()} * h->order() > kMaxTableOrder)
        throw SpecError(SpecErrorKind::size, "group product too large");
      g = group_product(g, h);
    }
  }
  if (kind == "table") {
    if (doc["table"].size() > kMaxTableOrder) throw SpecError(SpecErrorKind::size, "group table too large");
    g = group_from_table(flatten(doc["table"]), labels_of(doc), doc.value("name", std::string{}));
  }
  return g;
}

Ring build_ring_unchecked(const Json& doc) {
  const std::string kind = doc["kind"];
  try {
    if (kind == "zn") return named(make_zn(modulus_of(doc["n"])), doc);
    if (kind == "table") {
      if (doc["add"].size() != doc["mul"].size()) invalid("table", "add and mul tables differ in order");
      if (doc["add"].size() > kMaxTableOrder) throw SpecError(SpecErrorKind::size, "table ring too large");
      return make_table_ring(flatten(doc["add"]), flatten(doc["mul"]), doc["zero"].get<std::uint32_t>(),
                             optional_one(doc), doc.value("name", std::string{}));
    }
    if (kind == "group_ring")
      return named(group_ring(build_ring_unchecked(doc["coeff"]), build_group_unchecked(doc["group"])), doc);
    if (kind == "quaternion") {
      const Residue n = modulus_of(doc["base"]["n"]);
      const QuaternionParams p{n, mod_reduce(doc["a"].get<std::int64_t>(), n), mod_reduce(doc["b"].get<std::int64_t>(), n)};
      return named(quaternion_algebra(p), doc);
    }
    if (kind == "matrix_delta") return named(matrix_delta(modulus_of(doc["base"]["n"])), doc);
    if (kind == "delta_ideal") {
      const Ring rg = build_ring_unchecked(doc["ring"]);
      std::vector<GroupTable::Elem> h;
      for (const auto& g : doc["subgroup"]) h.push_back(g.get<GroupTable::Elem>());
      return named(reify(delta_ideal(rg, h), rg.name() + "|Delta"), doc);
    }
    if (kind == "direct_sum") {
      Ring r = build_ring_unchecked(doc["summands"][0]);
      for (std::size_t i = 1; i < doc["summands"].size(); ++i) r = direct_sum(r, build_ring_unchecked(doc["summands"][i]));
      return named(r, doc);
    }
    if (kind == "preset") {
      const std::string p = doc["preset"];
      if (semiring_presets().count(p)) invalid("preset", "'" + p + "' is a semiring");
      return named(preset_ring(p), doc);
    }
  } catch (const CapExceeded& e) {
    throw SpecError(SpecErrorKind::size, e.what());
  }
  invalid("kind", "'" + kind + "' does not describe a ring");
}

}  // namespace

Json parse_spec_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SpecError(SpecErrorKind::parse, e.what(), e.byte);
  }
}

void validate_spec(const Json& doc) { validate_at(doc, "$"); }

std::string serialize_spec(const Json& doc) { return doc.dump(2); }

bool is_semiring_spec(const Json& doc) {
  if (!doc.is_object() || !doc.contains("kind")) return false;
  if (doc["kind"] == "semiring") return true;
  return doc["kind"] == "preset" && doc.contains("preset") && doc["preset"].is_string() &&
         semiring_presets().count(doc["preset"].get<std::string>());
}

GroupPtr build_group(const Json& doc) {
  validate_group(doc, "$");
  return build_group_unchecked(doc);
}

Ring build_ring(const Json& doc) {
  validate_spec(doc);
  return build_ring_unchecked(doc);
}

Semiring build_semiring(const Json& doc) {
  validate_spec(doc);
  if (!is_semiring_spec(doc)) invalid("$.kind", "expected a semiring");
  if (doc["kind"] == "preset") {
    const std::string p = doc["preset"];
    if (p == "semiring_order5") return example_order5();
    if (p == "semiring_boolean") return boolean_semiring();
    return diamond_semiring();
  }
  if (doc["add"].size() != doc["mul"].size()) invalid("$", "add and mul tables differ in order");
  if (doc["add"].size() > kMaxTableOrder) throw SpecError(SpecErrorKind::size, "semiring too large");
  return make_semiring(flatten(doc["add"]), flatten(doc["mul"]), doc["zero"].get<std::uint32_t>(), optional_one(doc),
                       labels_of(doc), doc.value("name", std::string{}));
}

Structure build_spec(const Json& doc) {
  if (is_semiring_spec(doc)) return build_semiring(doc);
  return build_ring(doc);
}

Structure parse_ring_spec(const std::string& text) { return build_spec(parse_spec_text(text)); }

Json preset_spec(const std::string& name) { return Json{{"kind", "preset"}, {"preset", name}}; }

}  // namespace finring
