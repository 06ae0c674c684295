#ifndef WPGL_JSON_IO_HPP
#define WPGL_JSON_IO_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "wpgl/butterfly.hpp"
#include "wpgl/equivariant.hpp"
#include "wpgl/structure.hpp"

namespace wpgl {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Field specifications: "Q" or {"Fp": p}
// ---------------------------------------------------------------------------

struct FieldSpec {
  bool rational = true;
  std::uint64_t p = 0;
};

inline FieldSpec field_spec_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "Q") return {true, 0};
  if (j.is_object() && j.contains("Fp") && j["Fp"].is_number_integer() &&
      j["Fp"].get<long long>() > 0)
    return {false, j["Fp"].get<std::uint64_t>()};
  throw Error("bad field spec: expected \"Q\" or {\"Fp\": p}");
}

inline Json field_spec_to_json(const RationalField&) { return Json("Q"); }
inline Json field_spec_to_json(const PrimeField& f) { return Json{{"Fp", f.modulus()}}; }

// Parses "q" or "fp:p" command-line field flags.
inline FieldSpec field_spec_from_flag(const std::string& s) {
  if (s == "q" || s == "Q") return {true, 0};
  if (s.rfind("fp:", 0) == 0 || s.rfind("Fp:", 0) == 0) {
    try {
      return {false, static_cast<std::uint64_t>(std::stoull(s.substr(3)))};
    } catch (const std::exception&) {
      throw Error("bad field flag: " + s);
    }
  }
  throw Error("bad field flag: " + s + " (expected q or fp:p)");
}

// ---------------------------------------------------------------------------
// Coefficients: exact strings, collapsing to JSON integers when safe
// ---------------------------------------------------------------------------

inline Json coeff_to_json(const Rational& c) {
  if (c.den() == 1 && c.num().fits_slong_p())
    return Json(static_cast<long long>(c.num().get_si()));
  return Json(c.str());
}

inline Json coeff_to_json(const FpElem& c) { return Json(c.value()); }

template <class F>
typename F::Elem coeff_from_json(const F& field, const Json& j) {
  if (j.is_number_integer()) return field.from_int(j.get<long long>());
  if (j.is_string()) return field.parse(j.get<std::string>());
  throw Error("bad coefficient: expected integer or exact string");
}

// ---------------------------------------------------------------------------
// Signatures and polynomials
// ---------------------------------------------------------------------------

inline WeightSignature signature_from_json(const Json& j) {
  if (!j.is_array()) throw Error("signature must be an array of weights");
  std::vector<long> w;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error("signature entries must be integers");
    w.push_back(x.get<long>());
  }
  return WeightSignature(w);
}

inline Json signature_to_json(const WeightSignature& sig) {
  Json j = Json::array();
  for (long w : sig.raw()) j.push_back(w);
  return j;
}

template <class F>
Json terms_to_json(const GradedPolynomial<F>& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json exps = Json::object();
    for (int k = 0; k < p.signature().symbol_count(); ++k)
      if (m[k] != 0) exps[p.signature().symbol_name(k)] = m[k];
    terms.push_back(Json{{"exps", std::move(exps)}, {"coeff", coeff_to_json(c)}});
  }
  return terms;
}

template <class F>
GradedPolynomial<F> terms_from_json(const WeightSignature& sig, const F& field,
                                    const Json& j) {
  if (!j.is_array()) throw Error("terms must be an array");
  GradedPolynomial<F> p(sig, field);
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("exps") || !t.contains("coeff"))
      throw Error("each term needs exps and coeff");
    Monomial m = mono_one(sig);
    for (const auto& [name, e] : t["exps"].items()) {
      if (!e.is_number_integer() || e.template get<long long>() <= 0)
        throw Error("exponents must be positive integers");
      int flat = -1;
      for (int k = 0; k < sig.symbol_count(); ++k)
        if (sig.symbol_name(k) == name) {
          flat = k;
          break;
        }
      if (flat < 0) throw Error("unknown variable: " + name);
      m[flat] = e.template get<std::uint32_t>();
    }
    p.add_term(m, coeff_from_json(field, t["coeff"]));
  }
  return p;
}

template <class F>
Json polynomial_to_json(const GradedPolynomial<F>& p) {
  return Json{{"signature", signature_to_json(p.signature())},
              {"field", field_spec_to_json(p.field())},
              {"terms", terms_to_json(p)}};
}

template <class F>
Json endomorphism_to_json(const Endomorphism<F>& e) {
  Json comps = Json::array();
  for (int i = 1; i <= e.signature().group_count(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= e.signature().multiplicity(i); ++j)
      row.push_back(terms_to_json(e.component(i, j)));
    comps.push_back(std::move(row));
  }
  return Json{{"signature", signature_to_json(e.signature())},
              {"field", field_spec_to_json(e.field())},
              {"components", std::move(comps)}};
}

template <class F>
Endomorphism<F> endomorphism_from_json(const WeightSignature& sig, const F& field,
                                       const Json& j) {
  if (!j.is_object() || !j.contains("components") || !j["components"].is_array())
    throw Error("map file needs a components array");
  const Json& comps = j["components"];
  if (static_cast<int>(comps.size()) != sig.group_count())
    throw Error("components array must have one row per distinct weight");
  typename Endomorphism<F>::Table table;
  for (int i = 1; i <= sig.group_count(); ++i) {
    const Json& row = comps[i - 1];
    if (!row.is_array() || static_cast<int>(row.size()) != sig.multiplicity(i))
      throw Error("component row " + std::to_string(i) + " has wrong length");
    std::vector<GradedPolynomial<F>> polys;
    for (int j2 = 1; j2 <= sig.multiplicity(i); ++j2)
      polys.push_back(terms_from_json(sig, field, row[j2 - 1]));
    table.push_back(std::move(polys));
  }
  return Endomorphism<F>::validate(sig, field, table);
}

template <class F>
Json matrix_to_json(const Matrix<F>& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(coeff_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json int_matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.n; ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Finite groups and diagrams
// ---------------------------------------------------------------------------

inline Json group_to_json(const FiniteGroup& g) {
  Json table = Json::array();
  for (int a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    table.push_back(std::move(row));
  }
  Json j{{"order", g.order()}, {"table", std::move(table)}};
  if (!g.generators_hint().empty()) j["generators"] = g.generators_hint();
  return j;
}

inline FiniteGroup group_from_json(const Json& j, int max_order = 256) {
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    throw Error("group needs order and table");
  const int n = j["order"].get<int>();
  require(n >= 1, "group order must be positive");
  require(n <= max_order, "group order exceeds the configured cap of " +
                              std::to_string(max_order));
  if (!j["table"].is_array() || static_cast<int>(j["table"].size()) != n)
    throw Error("group table must have one row per element");
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : j["table"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw Error("group table rows must have length order");
    for (const auto& v : row) table.push_back(v.get<int>());
  }
  std::vector<int> gens;
  if (j.contains("generators"))
    for (const auto& v : j["generators"]) gens.push_back(v.get<int>());
  return FiniteGroup(n, std::move(table), std::move(gens));
}

inline Json group_summary_to_json(const FiniteGroup& g) {
  return Json{{"order", g.order()},
              {"abelian", g.is_abelian()},
              {"name", structure_name(g)}};
}

inline std::vector<int> int_table_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) throw Error(what + " must be an array");
  std::vector<int> v;
  for (const auto& x : j) v.push_back(x.get<int>());
  return v;
}

inline std::vector<int> table2d_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) throw Error(what + " must be a 2d array");
  std::vector<int> v;
  for (const auto& row : j) {
    if (!row.is_array()) throw Error(what + " must be a 2d array");
    for (const auto& x : row) v.push_back(x.get<int>());
  }
  return v;
}

inline Json crossed_module_to_json(const CrossedModule& xm) {
  Json action = Json::array();
  for (int b = 0; b < xm.g1->order(); ++b) {
    Json row = Json::array();
    for (int a = 0; a < xm.g0->order(); ++a) row.push_back(xm.act(b, a));
    action.push_back(std::move(row));
  }
  return Json{{"G1", group_to_json(*xm.g1)},
              {"G0", group_to_json(*xm.g0)},
              {"boundary", xm.boundary},
              {"action", std::move(action)}};
}

inline CrossedModule crossed_module_from_json(const Json& j, int max_order = 256) {
  if (!j.is_object() || !j.contains("G1") || !j.contains("G0") ||
      !j.contains("boundary") || !j.contains("action"))
    throw Error("crossed module needs G1, G0, boundary, action");
  CrossedModule xm;
  xm.g1 = group_ptr(group_from_json(j["G1"], max_order));
  xm.g0 = group_ptr(group_from_json(j["G0"], max_order));
  xm.boundary = int_table_from_json(j["boundary"], "boundary");
  xm.action = table2d_from_json(j["action"], "action");
  check_shapes(xm);
  for (int v : xm.boundary) require(0 <= v && v < xm.g0->order(), "boundary value out of range");
  for (int v : xm.action) require(0 <= v && v < xm.g1->order(), "action value out of range");
  return xm;
}

inline Json butterfly_to_json(const Butterfly& b) {
  return Json{{"H", crossed_module_to_json(b.src)},
              {"G", crossed_module_to_json(b.dst)},
              {"E", group_to_json(*b.e)},
              {"kappa", b.kappa},
              {"iota", b.iota},
              {"sigma", b.sigma},
              {"rho", b.rho}};
}

inline Butterfly butterfly_from_json(const Json& j, int max_order = 256) {
  if (!j.is_object() || !j.contains("H") || !j.contains("G") || !j.contains("E") ||
      !j.contains("kappa") || !j.contains("iota") || !j.contains("sigma") ||
      !j.contains("rho"))
    throw Error("butterfly needs H, G, E, kappa, iota, sigma, rho");
  Butterfly b;
  b.src = crossed_module_from_json(j["H"], max_order);
  b.dst = crossed_module_from_json(j["G"], max_order);
  b.e = group_ptr(group_from_json(j["E"], max_order));
  b.kappa = int_table_from_json(j["kappa"], "kappa");
  b.iota = int_table_from_json(j["iota"], "iota");
  b.sigma = int_table_from_json(j["sigma"], "sigma");
  b.rho = int_table_from_json(j["rho"], "rho");
  check_shapes(b);
  return b;
}

// Central extensions are serialized as {"E", "embed", "proj"}; the
// subgroup and quotient structures are reconstructed from the tables.
inline Json extension_to_json(const CentralExtension& ext) {
  return Json{{"E", group_to_json(*ext.total)},
              {"embed", ext.embed},
              {"proj", ext.proj}};
}

inline CentralExtension extension_from_json(const Json& j, int max_order = 256) {
  if (!j.is_object() || !j.contains("E") || !j.contains("embed") || !j.contains("proj"))
    throw Error("extension needs E, embed, proj");
  CentralExtension ext;
  ext.total = group_ptr(group_from_json(j["E"], max_order));
  ext.embed = int_table_from_json(j["embed"], "embed");
  ext.proj = int_table_from_json(j["proj"], "proj");
  const FiniteGroup& e = *ext.total;
  for (int v : ext.embed) require(0 <= v && v < e.order(), "embed value out of range");
  require(!ext.embed.empty() && ext.embed[0] == 0, "embed must send 0 to 0");

  // the subgroup C carries the structure induced from E through the table
  const int c = static_cast<int>(ext.embed.size());
  std::vector<int> pos(e.order(), -1);
  for (int x = 0; x < c; ++x) {
    require(pos[ext.embed[x]] < 0, "embed is not injective");
    pos[ext.embed[x]] = x;
  }
  std::vector<int> ctab(static_cast<std::size_t>(c) * c);
  for (int x = 0; x < c; ++x)
    for (int y = 0; y < c; ++y) {
      const int prod = e.mul(ext.embed[x], ext.embed[y]);
      require(pos[prod] >= 0, "image of embed is not closed under multiplication");
      ctab[static_cast<std::size_t>(x) * c + y] = pos[prod];
    }
  ext.sub = group_ptr(FiniteGroup(c, std::move(ctab)));

  require(ext.proj.size() == static_cast<std::size_t>(e.order()),
          "proj table has wrong size");
  int h = 0;
  for (int v : ext.proj) {
    require(v >= 0, "proj value out of range");
    h = std::max(h, v + 1);
  }
  require(ext.proj[0] == 0, "proj must send 0 to 0");
  std::vector<int> lift(h, -1);
  for (int x = 0; x < e.order(); ++x)
    if (lift[ext.proj[x]] < 0) lift[ext.proj[x]] = x;
  for (int v = 0; v < h; ++v) require(lift[v] >= 0, "proj values must cover 0..h-1");
  std::vector<int> htab(static_cast<std::size_t>(h) * h);
  for (int x = 0; x < h; ++x)
    for (int y = 0; y < h; ++y)
      htab[static_cast<std::size_t>(x) * h + y] = ext.proj[e.mul(lift[x], lift[y])];
  // well-definedness of the quotient table is implied when the extension
  // checks pass; the group axioms are validated here either way
  ext.quot = group_ptr(FiniteGroup(h, std::move(htab)));
  return ext;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline Json report_to_json(const ValidationReport& rep) {
  Json v = Json::array();
  for (const auto& viol : rep.violations) {
    Json w = Json::object();
    for (const auto& [name, value] : viol.witness) w[name] = value;
    v.push_back(Json{{"axiom", viol.axiom},
                     {"where", viol.where},
                     {"witness", std::move(w)},
                     {"detail", viol.detail}});
  }
  return Json{{"valid", rep.valid()}, {"violations", std::move(v)}};
}

inline Json quotient_invariants_to_json(const QuotientInvariants& q) {
  return Json{{"ker_kappa", group_summary_to_json(q.ker_kappa.group)},
              {"coker_kappa", group_summary_to_json(q.coker_kappa.group)},
              {"im_rho", group_summary_to_json(q.im_rho.group)},
              {"middle", group_summary_to_json(q.middle.group)},
              {"one_stack", q.one_stack},
              {"orbifold_type", q.orbifold_type}};
}

}  // namespace wpgl

#endif
