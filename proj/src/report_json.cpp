#include "posetope/report_json.hpp"

#include "posetope/error.hpp"

namespace posetope {

namespace {

Json names_of(const Poset& p, const std::vector<Index>& indices) {
  Json out = Json::array();
  for (Index i : indices) out.push_back(p.name(i));
  return out;
}

}  // namespace

Json to_json(const PosetStats& s) {
  return Json{{"d", s.d},
              {"m_min", s.m_min},
              {"m_max", s.m_max},
              {"hasse_edges", s.hasse_edges},
              {"max_chain_count", s.max_chain_count}};
}

Json to_json(const Poset& p, const XWitness& w) {
  return Json{{"center", p.name(w.center)},
              {"below", {p.name(w.below.first), p.name(w.below.second)}},
              {"above", {p.name(w.above.first), p.name(w.above.second)}}};
}

Json to_json(const Poset& p, const ElementClass& c) {
  Json out{{"class", std::string(class_name(c))}};
  if (const auto* down = std::get_if<DownUnique>(&c)) out["chain"] = names_of(p, down->chain);
  if (const auto* up = std::get_if<UpUnique>(&c)) out["chain"] = names_of(p, up->chain);
  return out;
}

Json to_json(const FVector& f) { return Json(f.f); }

Json to_json(const AffineMap& m) { return Json{{"matrix", m.matrix}, {"offset", m.offset}}; }

Json to_json(const Poset& p, const EquivalenceReport& r) {
  Json out{{"verdict", std::string(to_string(r.verdict))},
           {"order_facets", r.order_facets},
           {"chain_facets", r.chain_facets},
           {"forbidden_witness", r.forbidden_witness ? to_json(p, *r.forbidden_witness) : Json(nullptr)},
           {"facet_bijection_ok", r.facet_bijection_ok},
           {"vertex_bijection_ok", r.vertex_bijection_ok},
           {"inverse_round_trip_ok", r.inverse_round_trip_ok},
           {"f_vectors_checked", r.f_vectors_checked},
           {"f_vectors_equal", r.f_vectors_equal},
           {"det_abs", r.det_abs ? Json(r.det_abs->str()) : Json(nullptr)},
           {"psi", r.psi ? to_json(*r.psi) : Json(nullptr)},
           {"order_f_vector", r.order_f_vector ? to_json(*r.order_f_vector) : Json(nullptr)},
           {"chain_f_vector", r.chain_f_vector ? to_json(*r.chain_f_vector) : Json(nullptr)},
           {"psi_direction",
            "point map z -> A z + b carries C(P) onto O(P); pulling O(P) facets back through it "
            "gives the C(P) facets"}};
  if (r.psi) {
    Json table = Json::object();
    for (const auto& entry : psi_table(p)) table[p.name(entry.element)] = psi_expression(p, entry);
    out["psi_table"] = std::move(table);
  } else {
    out["psi_table"] = nullptr;
  }
  return out;
}

Json to_json(const Poset& p, const DeletionStats& s) {
  return Json{{"removed", p.name(s.removed)},
              {"s", s.s},
              {"t", s.t},
              {"branching_covers", names_of(p, s.branching_covers)},
              {"lone_covers", names_of(p, s.lone_covers)},
              {"chain_counts", s.chain_counts},
              {"before", to_json(s.before)},
              {"after", to_json(s.after)},
              {"identities_hold", s.identities_hold()}};
}

Json to_json(const TheoremRecord& r) {
  return Json{{"canonical_id", r.canonical_id},
              {"n", r.n},
              {"facet_counts", {{"order", r.facet_counts.order}, {"chain", r.facet_counts.chain}}},
              {"x_free", r.x_free},
              {"facet_formula_ok", r.facet_formula_ok},
              {"corollary12_ok", r.corollary12_ok},
              {"theorem13_ok", r.theorem13_ok},
              {"theorem21_ok", r.theorem21_ok},
              {"deletion_ok", r.deletion_ok},
              {"f_vectors_checked", r.f_vectors_checked},
              {"f_vectors_ok", r.f_vectors_ok},
              {"detail", r.detail}};
}

TheoremRecord theorem_record_from_json(const Json& j) {
  TheoremRecord r;
  r.canonical_id = j.at("canonical_id").get<std::string>();
  r.n = j.at("n").get<std::size_t>();
  r.facet_counts.order = j.at("facet_counts").at("order").get<std::uint64_t>();
  r.facet_counts.chain = j.at("facet_counts").at("chain").get<std::uint64_t>();
  r.x_free = j.at("x_free").get<bool>();
  r.facet_formula_ok = j.at("facet_formula_ok").get<bool>();
  r.corollary12_ok = j.at("corollary12_ok").get<bool>();
  r.theorem13_ok = j.at("theorem13_ok").get<bool>();
  r.theorem21_ok = j.at("theorem21_ok").get<bool>();
  r.deletion_ok = j.at("deletion_ok").get<bool>();
  r.f_vectors_checked = j.at("f_vectors_checked").get<bool>();
  r.f_vectors_ok = j.at("f_vectors_ok").get<bool>();
  r.detail = j.at("detail").get<std::string>();
  return r;
}

FVector fvector_from_json(const Json& j) { return FVector{j.get<std::vector<std::uint64_t>>()}; }

Json to_json(const TheoremReport& r) {
  Json classes = Json::array();
  std::size_t x_free = 0;
  for (const auto& c : r.per_class) {
    classes.push_back(to_json(c));
    if (c.x_free) ++x_free;
  }
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back(Json{{"canonical_id", f.canonical_id}, {"check", f.check}, {"detail", f.detail}});
  }
  return Json{{"n_max", r.n_max},
              {"checker_version", kCheckerVersion},
              {"per_class", std::move(classes)},
              {"failures", std::move(failures)},
              {"summary",
               {{"classes", r.per_class.size()},
                {"x_free", x_free},
                {"x_containing", r.per_class.size() - x_free},
                {"failures", r.failures.size()}}}};
}

Json to_json(const ConjectureReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.part_a_violations) {
    violations.push_back(
        Json{{"canonical_id", v.canonical_id}, {"index", v.index}, {"f_order", v.f_order}, {"f_chain", v.f_chain}});
  }
  Json observations = Json::array();
  for (const auto& o : r.part_b_observations) {
    observations.push_back(Json{{"canonical_id", o.canonical_id},
                                {"equal_indices", o.equal_indices},
                                {"x_free", o.x_free},
                                {"order_f_vector", to_json(o.order)},
                                {"chain_f_vector", to_json(o.chain)}});
  }
  return Json{{"n_max", r.n_max},
              {"checker_version", kCheckerVersion},
              {"part_a_violations", std::move(violations)},
              {"part_b_observations", std::move(observations)},
              {"summary",
               {{"classes_scanned", r.classes_scanned},
                {"f0_equal", r.f0_equal},
                {"part_a_violations", r.part_a_violations.size()},
                {"part_b_equality_cases", r.part_b_observations.size()},
                {"part_b_counterexamples", r.part_b_counterexamples}}}};
}

}  // namespace posetope
