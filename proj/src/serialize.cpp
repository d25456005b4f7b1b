#include "cyclicaut/serialize.hpp"

#include <stdexcept>

namespace cyclicaut::serialize {

using classifier::ClassificationReport;
using classifier::StructureTag;

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw std::domain_error(std::string("JSON object is missing '") + key + "'");
  return j.at(key);
}

curve::Signature signature_from_json(const Json& j) {
  return curve::Signature(j.get<std::vector<Int>>());
}

fuchsian::ChainStep step_from_json(const Json& j) {
  return {signature_from_json(field(j, "inner")), signature_from_json(field(j, "outer")),
          field(j, "row").get<std::string>(), field(j, "index").get<Int>()};
}

}  // namespace

Json to_json(const curve::CyclicCover& cover) {
  Json branches = Json::array();
  for (const auto& b : cover.branches)
    branches.push_back({{"point", b.point.to_string()}, {"exponent", b.exponent}});
  Json j;
  j["n"] = cover.n;
  j["equation"] = cover.equation();
  j["branches"] = std::move(branches);
  j["infinity_exponent"] = cover.infinity_exponent;
  if (!(cover.coefficient == curve::Rational(1)))
    j["coefficient"] = {{"num", cover.coefficient.num}, {"den", cover.coefficient.den}};
  return j;
}

curve::CyclicCover cover_from_json(const Json& j) {
  std::vector<curve::Branch> raw;
  for (const auto& b : field(j, "branches"))
    raw.push_back({curve::BranchPoint::from_string(field(b, "point").get<std::string>()),
                   field(b, "exponent").get<Int>()});
  curve::Rational coefficient(1);
  if (j.contains("coefficient")) {
    const auto& c = j.at("coefficient");
    coefficient = curve::Rational(field(c, "num").get<Int>(), field(c, "den").get<Int>());
  }
  auto cover = curve::CyclicCover::make(field(j, "n").get<Int>(), std::move(raw), coefficient);
  if (j.contains("infinity_exponent") && j.at("infinity_exponent").get<Int>() != cover.infinity_exponent)
    throw std::domain_error("infinity exponent inconsistent with finite exponents");
  return cover;
}

Json to_json(const curve::Signature& sig) { return sig.periods; }

Json to_json(const grouptheory::Presentation& pres) {
  Json j;
  j["text"] = pres.to_string();
  j["generators"] = pres.generators;
  j["relators"] = pres.relators;
  return j;
}

grouptheory::Presentation presentation_from_json(const Json& j) {
  std::vector<grouptheory::Word> relators;
  for (const auto& w : field(j, "relators")) relators.push_back(w.get<grouptheory::Word>());
  if (j.contains("generators")) {
    grouptheory::Presentation p;
    p.generators = j.at("generators").get<std::vector<std::string>>();
    p.relators = std::move(relators);
    p.validate();
    return p;
  }
  return grouptheory::Presentation::with_count(field(j, "generator_count").get<int>(),
                                               std::move(relators));
}

Json to_json(const grouptheory::AbelianInvariants& inv) {
  Json j;
  j["invariants"] = inv.torsion;
  j["free_rank"] = inv.free_rank;
  j["text"] = inv.to_string();
  return j;
}

Json to_json(const grouptheory::Fingerprint& fp) {
  Json j;
  j["order"] = fp.order;
  j["abelianization"] = to_json(fp.abelian);
  j["is_abelian"] = fp.is_abelian;
  return j;
}

Json to_json(const StructureTag& tag) {
  Json j;
  j["kind"] = classifier::to_string(tag.kind);
  j["params"] = tag.params;
  j["quotient"] = tag.quotient;
  return j;
}

StructureTag structure_tag_from_json(const Json& j) {
  return {classifier::structure_kind_from_string(field(j, "kind").get<std::string>()),
          field(j, "params").get<std::vector<Int>>(), field(j, "quotient").get<std::string>()};
}

Json to_json(const fuchsian::ChainStep& step) {
  Json j;
  j["inner"] = to_json(step.inner);
  j["outer"] = to_json(step.outer);
  j["row"] = step.row;
  j["index"] = step.index;
  return j;
}

Json to_json(const fuchsian::Chain& chain) {
  Json steps = Json::array();
  for (const auto& s : chain.steps) steps.push_back(to_json(s));
  Json j;
  j["steps"] = std::move(steps);
  j["index"] = chain.index();
  j["equivalent_row"] = chain.equivalent_row ? Json(*chain.equivalent_row) : Json(nullptr);
  j["listed_item"] = chain.listed_item ? Json(*chain.listed_item) : Json(nullptr);
  j["dead"] = chain.dead;
  return j;
}

Json to_json(const ClassificationReport& r) {
  Json chain = Json::array();
  for (const auto& s : r.chain) chain.push_back(to_json(s));
  Json j;
  j["input"] = to_json(r.cover);
  j["canonical_triple"] = r.canonical_triple ? Json(*r.canonical_triple) : Json(nullptr);
  j["genus"] = r.genus;
  j["signature"] = to_json(r.signature);
  j["row"] = r.row;
  j["order"] = r.group.order;
  j["structure"] = r.group.structure.display();
  j["structure_tag"] = to_json(r.group.structure);
  j["base_order"] = r.base_order;
  if (r.group.presentation) j["presentation"] = to_json(*r.group.presentation);
  j["chain"] = std::move(chain);
  j["notes"] = r.notes;
  return j;
}

ClassificationReport report_from_json(const Json& j) {
  ClassificationReport r;
  r.cover = cover_from_json(field(j, "input"));
  const auto& t = field(j, "canonical_triple");
  if (!t.is_null()) r.canonical_triple = t.get<curve::Triple>();
  r.genus = field(j, "genus").get<Int>();
  r.signature = signature_from_json(field(j, "signature"));
  r.row = field(j, "row").get<std::string>();
  r.group.order = field(j, "order").get<Int>();
  r.group.structure = structure_tag_from_json(field(j, "structure_tag"));
  if (r.group.structure.display() != field(j, "structure").get<std::string>())
    throw std::domain_error("structure text disagrees with structure_tag");
  r.base_order = field(j, "base_order").get<Int>();
  if (j.contains("presentation")) r.group.presentation = presentation_from_json(j.at("presentation"));
  for (const auto& s : field(j, "chain")) r.chain.push_back(step_from_json(s));
  r.notes = field(j, "notes").get<std::vector<std::string>>();
  return r;
}

Json gs_table_json() {
  Json rows = Json::array();
  for (const auto& row : fuchsian::gs_table()) {
    Json guards = Json::object();
    if (row.min_n) guards["min_n"] = row.min_n;
    if (row.min_n_plus_m) guards["min_n_plus_m"] = row.min_n_plus_m;
    Json j;
    j["row"] = row.id;
    j["inner"] = row.inner;
    j["outer"] = row.outer;
    j["index"] = row.index;
    j["normal"] = row.normal;
    j["guards"] = std::move(guards);
    rows.push_back(std::move(j));
  }
  return rows;
}

Json to_json(const verify::Enumeration& e) {
  Json classes = Json::array();
  for (const auto& c : e.classes) {
    Json j;
    j["canonical_triple"] = c.canonical;
    j["orbit_size"] = c.orbit_size;
    j["report"] = to_json(c.report);
    classes.push_back(std::move(j));
  }
  Json j;
  j["n"] = e.n;
  j["ordered_triples"] = e.ordered_triples;
  j["admissible_triples"] = e.admissible_triples;
  j["classes"] = std::move(classes);
  return j;
}

std::vector<verify::ClassRecord> records_from_json(const Json& j) {
  std::vector<verify::ClassRecord> out;
  if (j.is_array()) {
    for (const auto& e : j) {
      auto part = records_from_json(e);
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
  }
  const Int n = field(j, "n").get<Int>();
  for (const auto& c : field(j, "classes"))
    out.push_back({n, field(c, "canonical_triple").get<curve::Triple>(),
                   field(c, "orbit_size").get<std::size_t>(), report_from_json(field(c, "report"))});
  return out;
}

Json to_json(const verify::CrossCheckReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json j;
    j["name"] = c.name;
    j["n_range"] = {c.n_min, c.n_max};
    j["pass"] = c.pass;
    if (c.witness) j["witness"] = *c.witness;
    checks.push_back(std::move(j));
  }
  Json j;
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace cyclicaut::serialize
