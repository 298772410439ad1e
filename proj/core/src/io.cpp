#include "hololab/io.hpp"

#include <algorithm>

#include "hololab/error.hpp"

namespace hololab::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidParameter, what); }

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    bad(std::string(what) + ": " + e.what());
  }
}

std::vector<Elem> index_array(const json& j, std::size_t bound, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<Elem> out;
  for (const auto& v : j) {
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= bound) {
      bad(std::string(what) + " entries must be indices below " + std::to_string(bound));
    }
    out.push_back(v.get<Elem>());
  }
  return out;
}

}  // namespace

json to_json(const GroupTable& g) {
  return json{{"name", g.name()}, {"order", g.order()}, {"table", g.rows()}};
}

GroupTable group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("table")) bad("group must be an object with a table");
  const auto& t = j.at("table");
  if (!t.is_array() || t.empty()) bad("table must be a nonempty array");
  std::vector<std::vector<Elem>> rows;
  for (const auto& row : t) rows.push_back(index_array(row, t.size(), "table row"));
  if (j.contains("order") && (!j["order"].is_number_unsigned() || j["order"].get<std::size_t>() != t.size())) {
    bad("order does not match the table size");
  }
  std::string name = guarded("name", [&] { return j.value("name", std::string{}); });
  return GroupTable::make(rows, std::move(name));
}

json to_json(const Subgroup& s) { return s.elements; }

Subgroup subgroup_from_json(const json& j, const GroupTable& g) {
  Subgroup s{index_array(j, g.order(), "subgroup")};
  if (!std::is_sorted(s.elements.begin(), s.elements.end()) ||
      std::adjacent_find(s.elements.begin(), s.elements.end()) != s.elements.end()) {
    bad("subgroup indices must be sorted and distinct");
  }
  if (!is_subgroup(g, s.elements)) bad("indices do not form a subgroup");
  return s;
}

json to_json(const Homomorphism& h) {
  return json{{"domain", h.domain.name()}, {"codomain", h.codomain.name()}, {"images", h.images}};
}

Homomorphism homomorphism_from_json(const json& j, const GroupTable& domain, const GroupTable& codomain) {
  const json& images = j.is_object() ? j.at("images") : j;
  auto v = index_array(images, codomain.order(), "images");
  if (v.size() != domain.order()) bad("one image per domain element is required");
  return make_homomorphism(domain, codomain, std::move(v));
}

json to_json(const Permutation& p) { return std::vector<Point>(p.images().begin(), p.images().end()); }

Permutation permutation_from_json(const json& j) {
  const auto v = index_array(j, j.is_array() ? j.size() : 0, "permutation");
  return Permutation(std::vector<Point>(v.begin(), v.end()));
}

json to_json(const PermSubgroup& s, bool with_elements) {
  json j{{"degree", s.degree()}, {"order", s.order()}};
  json gens = json::array();
  for (const auto& g : s.generators()) gens.push_back(to_json(g));
  j["generators"] = std::move(gens);
  if (with_elements) {
    json el = json::array();
    for (const auto& e : s.elements()) el.push_back(to_json(e));
    j["elements"] = std::move(el);
  }
  return j;
}

PermSubgroup perm_subgroup_from_json(const json& j, const Limits& limits) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators")) {
    bad("permutation group needs degree and generators");
  }
  const auto degree = guarded("degree", [&] { return j.at("degree").get<std::size_t>(); });
  std::vector<Permutation> gens;
  for (const auto& g : j.at("generators")) {
    gens.push_back(permutation_from_json(g));
    if (gens.back().degree() != degree) bad("generator degree mismatch");
  }
  return PermSubgroup::generate(degree, std::move(gens), limits);
}

json to_json(const LieVector& v) {
  const auto& basis = v.algebra().basis();
  json coeffs = json::array();
  for (const auto& [i, c] : v.nonzeros()) coeffs.push_back({i, c});
  return json{{"n", basis.rank()}, {"c", basis.max_class()}, {"p", v.modulus()}, {"coeffs", coeffs}};
}

LieVector lie_vector_from_json(const json& j, const std::shared_ptr<const LieAlgebra>& alg) {
  const json& coeffs = j.is_object() ? j.at("coeffs") : j;
  if (j.is_object()) {
    const bool same = guarded("lie vector", [&] {
      return j.value("n", alg->basis().rank()) == alg->basis().rank() &&
             j.value("c", alg->basis().max_class()) == alg->basis().max_class() &&
             j.value("p", alg->modulus()) == alg->modulus();
    });
    if (!same) throw Error(ErrorCode::BasisMismatch, "vector belongs to a different Lie algebra");
  }
  std::vector<std::pair<std::size_t, std::int64_t>> pairs;
  guarded("coeffs", [&] {
    for (const auto& e : coeffs) pairs.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::int64_t>());
    return 0;
  });
  return LieVector::from_sparse(alg, pairs);
}

json to_json(const CsElement& x) {
  json lie = json::array();
  for (const auto& [i, c] : x.lie.nonzeros()) lie.push_back({i, c});
  return json{{"lie", lie}, {"q", x.q}};
}

CsElement cs_element_from_json(const json& j, const CsGroup& g) {
  if (!j.is_object() || !j.contains("lie") || !j.contains("q")) bad("CS element needs lie and q");
  auto lie = lie_vector_from_json(j.at("lie"), g.algebra());
  auto q = guarded("q", [&] { return j.at("q").get<QTuple>(); });
  return g.make_element(lie, q);
}

namespace {

json factored(const FactoredOrder& o) {
  return json{{"p", o.p}, {"p_exponent", o.p_exponent}, {"q_base", o.p - 1},
              {"q_exponent", o.q_exponent}, {"text", o.to_string()}};
}

}  // namespace

json build_certificate(const CsGroup& g) {
  json rel = json::array();
  for (const auto& r : g.relation_space()) rel.push_back(to_json(r)["coeffs"]);
  return json{{"n", g.n()},
              {"p", g.p()},
              {"T", to_json(g.params().t)},
              {"dims", g.dims()},
              {"D", g.dimension()},
              {"r", g.rank()},
              {"order_factored", factored(g.order())},
              {"relation_space", rel},
              {"pivots", g.pivots()}};
}

json to_json(const CenterCertificate& c, const CsGroup& g) {
  json levels = json::array();
  for (const auto& l : c.q_fixed_levels) levels.push_back({{"degree", l.degree}, {"dimension", l.dimension}});
  return json{{"n", g.n()},
              {"p", g.p()},
              {"dims", g.dims()},
              {"r", g.rank()},
              {"order_factored", factored(g.order())},
              {"q_fixed_levels", levels},
              {"faithful_degree1", c.faithful_degree1},
              {"degree1_kernel", c.degree1_kernel},
              {"q_abelian", c.q_abelian},
              {"semidirect_center_trivial", c.semidirect_center_trivial},
              {"random_center_check", {{"seed", c.seed}, {"samples", c.samples}, {"witnesses", c.witnesses}}},
              {"passed", c.passed()}};
}

json to_json(const std::vector<NamedCheck>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"passed", c.passed}});
  return out;
}

json to_json(const FpfPair& p) { return json{{"f", p.f.images}, {"g", p.g.images}}; }

json to_json(const MinimalityVerdict& v) {
  json j{{"verdict", to_string(v.kind)},
         {"endomorphisms", v.endomorphisms},
         {"fpf_pairs", v.fpf_pairs},
         {"witness_count", v.witness_count}};
  if (v.witness) {
    j["witness"] = {{"pair", to_json(v.witness->first)}, {"centralizer_pair", to_json(v.witness->second)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json to_json(const Thm13Report& r) {
  json j{{"verdict", to_json(r.verdict)}, {"agrees", r.agrees}};
  if (r.decomposition) {
    j["decomposition"] = {to_json(r.decomposition->first), to_json(r.decomposition->second)};
  } else {
    j["decomposition"] = nullptr;
  }
  j["kernel_f"] = r.kernel_f ? to_json(*r.kernel_f) : json(nullptr);
  j["kernel_g"] = r.kernel_g ? to_json(*r.kernel_g) : json(nullptr);
  j["witness_is_projection_pair"] = r.witness_is_projection_pair;
  j["cross_checks"] = to_json(r.checks);
  return j;
}

json to_json(const LiftReport& r) {
  return json{{"input", {{"n", r.n}, {"m", r.m}, {"H_order", r.h_order}}},
              {"H1_order", r.h1_order},
              {"H2_order", r.h2_order},
              {"sym_normalizer_order", r.sym_normalizer_order},
              {"alt_normalizer_order", r.alt_normalizer_order},
              {"quotient_table", r.sym_quotient.rows()},
              {"alt_quotient_table", r.alt_quotient.rows()},
              {"iso_to_expected", r.sym_iso_to_expected && r.alt_iso_to_expected},
              {"sym_iso_to_expected", r.sym_iso_to_expected},
              {"alt_iso_to_expected", r.alt_iso_to_expected},
              {"cross_checks", to_json(r.checks)}};
}

json to_json(const AssemblyReport& r) {
  json j{{"input", {{"name", r.group_name}, {"order", r.group_order}}},
         {"label", r.label},
         {"inn_order", r.inn_order},
         {"H_order", r.h_order},
         {"normalizer_order", r.normalizer_order},
         {"self_normalizing", r.self_normalizing},
         {"normalizer_equals_hol_inv", r.normalizer_equals_hol_inv},
         {"quotient_table", r.quotient.rows()},
         {"out_order", r.out.order()},
         {"quotient_iso_out", r.quotient_iso_out}};
  j["inhol_characteristic"] = r.inhol_characteristic ? json(*r.inhol_characteristic) : json(nullptr);
  j["cross_checks"] = to_json(r.checks);
  return j;
}

}  // namespace hololab::io
