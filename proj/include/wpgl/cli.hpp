#ifndef WPGL_CLI_HPP
#define WPGL_CLI_HPP

#include <sstream>
#include <string>
#include <utility>

#include "wpgl/json_io.hpp"

namespace wpgl::cli {

// exit codes: 0 success, 1 validation failure, 2 input error
struct CommandResult {
  Json payload;
  int exit_code = 0;
};

struct Limits {
  int max_group_order = 256;
};

inline std::vector<long> parse_weights(const std::string& s) {
  std::vector<long> w;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      const long v = std::stol(item, &pos);
      if (pos != item.size()) throw Error("bad weight: " + item);
      w.push_back(v);
    } catch (const std::exception&) {
      throw Error("bad weight list: " + s);
    }
  }
  require(w.size() >= 2, "need at least two weights");
  return w;
}

// ---------------------------------------------------------------------------
// counts
// ---------------------------------------------------------------------------

inline Json pi0_to_json(const Pi0Report& r) {
  Json j = Json::object();
  switch (r.cls) {
    case Pi0Class::kSplitTorus:
      j["class"] = "split-torus";
      j["splitting_matrix"] = int_matrix_to_json(*r.splitting);
      break;
    case Pi0Class::kProjectiveBlock:
      j["class"] = "projective-block";
      j["block_rank"] = *r.block_rank;
      break;
    case Pi0Class::kMixedCokernel:
      j["class"] = "mixed-cokernel";
      break;
  }
  return j;
}

inline CommandResult run_counts(const std::vector<long>& weights) {
  const WeightSignature sig(weights);
  const Pi0Report rep = pi0_report(sig);
  Json d_tables = Json::array();
  for (int a = 1; a <= sig.group_count(); ++a)
    for (int b = a + 1; b <= sig.group_count(); ++b) {
      Json ds = Json::array();
      for (long l = 0; l <= sig.weight(b) / sig.weight(a); ++l)
        ds.push_back(count_d(sig, a, b, l));
      d_tables.push_back(Json{{"a", a}, {"b", b}, {"d", std::move(ds)}});
    }
  Json boundary = Json::array();
  for (int i = 1; i <= sig.group_count(); ++i)
    boundary.push_back(Json{{"weight", sig.weight(i)}, {"rank", sig.multiplicity(i)}});
  Json payload{{"command", "counts"},
               {"weights", signature_to_json(sig)},
               {"k", rep.k},
               {"unipotent_dims", rep.unipotent_dims},
               {"reductive_ranks", rep.reductive_ranks},
               {"pi1_order", rep.pi1},
               {"d_tables", std::move(d_tables)},
               {"boundary_exponents", std::move(boundary)},
               {"pi0", pi0_to_json(rep)}};
  return {std::move(payload), 0};
}

// ---------------------------------------------------------------------------
// sections
// ---------------------------------------------------------------------------

inline CommandResult run_sections(const std::vector<long>& weights, long long degree,
                                  bool upto) {
  const WeightSignature sig(weights);
  Json payload{{"command", "sections"},
               {"weights", signature_to_json(sig)},
               {"degree", degree}};
  if (!upto) {
    payload["count"] = global_section_count(sig, degree);
    return {std::move(payload), 0};
  }
  require(degree >= 0, "truncation degree must be non-negative");
  Json counts = Json::array();
  bool match = true;
  const auto series = section_series(sig, degree);
  for (long long d = 0; d <= degree; ++d) {
    const long long c = global_section_count(sig, d);
    counts.push_back(c);
    if (c != series[d]) match = false;
  }
  payload["counts"] = std::move(counts);
  payload["series_match"] = match;
  return {std::move(payload), match ? 0 : 1};
}

// ---------------------------------------------------------------------------
// decompose
// ---------------------------------------------------------------------------

template <class F>
CommandResult run_decompose_typed(const WeightSignature& sig, const F& field,
                                  const Json& map) {
  const Endomorphism<F> endo = endomorphism_from_json(sig, field, map);
  Json payload{{"command", "decompose"},
               {"weights", signature_to_json(sig)},
               {"field", field_spec_to_json(field)}};
  if (!endo.is_automorphism()) {
    payload["error"] = "not an automorphism";
    return {std::move(payload), 1};
  }
  const Automorphism<F> aut(endo);
  const auto [u, l] = aut.decompose();

  Json blocks = Json::array();
  for (int i = 1; i <= sig.group_count(); ++i) blocks.push_back(matrix_to_json(l.block(i)));
  payload["linear"] = std::move(blocks);

  Json factors = Json::array();
  Endomorphism<F> recomposed = l.to_endomorphism();
  for (const Unipotent<F>& f : u.factorize()) {
    const int level = f.active_levels().front();
    Json shift = Json::array();
    for (int j = 1; j <= sig.multiplicity(level); ++j)
      shift.push_back(terms_to_json(f.shift(level, j)));
    factors.push_back(Json{{"level", level}, {"shift", std::move(shift)}});
    recomposed = f.to_endomorphism().compose(recomposed);
  }
  payload["unipotent_factors"] = std::move(factors);
  payload["recomposition_ok"] = recomposed == endo;
  return {std::move(payload), recomposed == endo ? 0 : 1};
}

inline CommandResult run_decompose(const std::vector<long>& weights,
                                   const std::string& field_flag, const Json& map) {
  const WeightSignature sig(weights);
  const FieldSpec fs = field_spec_from_flag(field_flag);
  if (fs.rational) return run_decompose_typed(sig, RationalField{}, map);
  return run_decompose_typed(sig, PrimeField(fs.p), map);
}

// ---------------------------------------------------------------------------
// verify / split / quotient
// ---------------------------------------------------------------------------

inline CommandResult run_verify_xmod(const Json& j, const Limits& lim = {}) {
  const CrossedModule xm = crossed_module_from_json(j, lim.max_group_order);
  const ValidationReport rep = check_crossed_module(xm);
  Json payload{{"command", "verify"},
               {"kind", "crossed-module"},
               {"report", report_to_json(rep)}};
  if (rep.valid()) {
    payload["pi0"] = group_summary_to_json(xm_pi0(xm).group);
    payload["pi1"] = group_summary_to_json(xm_pi1(xm).group);
  }
  return {std::move(payload), rep.valid() ? 0 : 1};
}

inline CommandResult run_verify_butterfly(const Json& j, const Limits& lim = {}) {
  const Butterfly b = butterfly_from_json(j, lim.max_group_order);
  const ValidationReport rep = check_butterfly(b);
  Json payload{{"command", "verify"},
               {"kind", "butterfly"},
               {"report", report_to_json(rep)}};
  return {std::move(payload), rep.valid() ? 0 : 1};
}

inline CommandResult run_split_butterfly(const Json& j, const Limits& lim = {}) {
  const Butterfly b = butterfly_from_json(j, lim.max_group_order);
  const ValidationReport rep = check_butterfly(b);
  Json payload{{"command", "split"}, {"kind", "butterfly"}};
  if (!rep.valid()) {
    payload["report"] = report_to_json(rep);
    return {std::move(payload), 1};
  }
  const auto w = is_strictifiable(b);
  if (w) {
    payload["section"] = w->section;
    payload["f1"] = w->f1;
    payload["f0"] = w->f0;
  } else {
    payload["section"] = nullptr;
  }
  return {std::move(payload), 0};
}

inline CommandResult run_split_extension(const Json& j, const Limits& lim = {}) {
  const CentralExtension ext = extension_from_json(j, lim.max_group_order);
  const ValidationReport rep = check_central_extension(ext);
  Json payload{{"command", "split"}, {"kind", "extension"}};
  if (!rep.valid()) {
    payload["report"] = report_to_json(rep);
    return {std::move(payload), 1};
  }
  const auto s = split_section(ext);
  if (s)
    payload["section"] = *s;
  else
    payload["section"] = nullptr;
  return {std::move(payload), 0};
}

inline CommandResult run_quotient(const Json& j, const Limits& lim = {}) {
  const Butterfly b = butterfly_from_json(j, lim.max_group_order);
  const ValidationReport rep = check_butterfly(b);
  Json payload{{"command", "quotient"}};
  if (!rep.valid()) {
    payload["report"] = report_to_json(rep);
    return {std::move(payload), 1};
  }
  payload["invariants"] = quotient_invariants_to_json(quotient_invariants(b));
  return {std::move(payload), 0};
}

// ---------------------------------------------------------------------------
// examples: reproduce the small worked cases from the library and diff
// against the frozen fixtures below
// ---------------------------------------------------------------------------

namespace detail {

using QPoly = GradedPolynomial<RationalField>;
using QUni = Unipotent<RationalField>;
using QAut = Automorphism<RationalField>;

// Symbolic conjugation matrix of the level-a one-parameter subgroup acting
// on level b, computed over an added weight-0 parameter. Rows and columns
// are indexed by the enumeration order of the level-b basis monomials.
inline Json conjugation_matrix(const std::vector<long>& weights, int a, int b) {
  const RationalField q;
  const WeightSignature sig = WeightSignature(weights).with_parameters(1);
  const auto basis_a = enumerate_monomials(sig, sig.weight(a), a);
  require(basis_a.size() == 1, "one-parameter story needs a single basis monomial");
  const auto basis_b = enumerate_monomials(sig, sig.weight(b), b);

  auto level_unipotent = [&](int level, const QPoly& shift) {
    typename QUni::Table t;
    for (int i = 1; i <= sig.group_count(); ++i)
      t.emplace_back(sig.multiplicity(i), QPoly::zero(sig, q));
    t[level - 1][0] = shift;
    return QUni::from_table(sig, q, t);
  };

  // g shifts level a by (parameter) * (basis monomial)
  Monomial pm = basis_a.front();
  pm[0] += 1;
  QPoly gshift(sig, q);
  gshift.add_term(pm, q.one());
  const QAut g(level_unipotent(a, gshift));

  std::vector<std::vector<QPoly>> entries(
      basis_b.size(), std::vector<QPoly>(basis_b.size(), QPoly::zero(sig, q)));
  for (std::size_t col = 0; col < basis_b.size(); ++col) {
    QPoly shift(sig, q);
    shift.add_term(basis_b[col], q.one());
    const QUni conj = conjugate(g, level_unipotent(b, shift));
    for (const auto& [mono, c] : conj.shift(b, 1).terms()) {
      Monomial vars_only = mono, params_only = mono_one(sig);
      params_only[0] = mono[0];
      vars_only[0] = 0;
      std::size_t row = basis_b.size();
      for (std::size_t k = 0; k < basis_b.size(); ++k)
        if (basis_b[k] == vars_only) row = k;
      require(row < basis_b.size(), "conjugate left the level basis");
      entries[row][col].add_term(params_only, c);
    }
  }
  Json rows = Json::array();
  for (const auto& r : entries) {
    Json row = Json::array();
    for (const auto& e : r) row.push_back(e.str());
    rows.push_back(std::move(row));
  }
  return rows;
}

// Instantiates the diagonal torus at concrete values and checks that
// conjugation scales each level-b basis coefficient by the predicted
// exponents.
inline bool torus_exponent_check(const std::vector<long>& weights, int level) {
  const RationalField q;
  const WeightSignature sig(weights);
  const std::vector<Rational> lambda = {Rational(2), Rational(3), Rational(5),
                                        Rational(7), Rational(11)};
  std::vector<Matrix<RationalField>> blocks;
  for (int i = 1; i <= sig.group_count(); ++i) {
    Matrix<RationalField> m(sig.multiplicity(i), sig.multiplicity(i), q);
    for (int j = 0; j < sig.multiplicity(i); ++j) m.at(j, j) = lambda[i - 1];
    blocks.push_back(std::move(m));
  }
  const Automorphism<RationalField> g(BlockLinear<RationalField>(sig, q, blocks));

  const auto basis = enumerate_monomials(sig, sig.weight(level), level);
  typename Unipotent<RationalField>::Table t;
  for (int i = 1; i <= sig.group_count(); ++i)
    t.emplace_back(sig.multiplicity(i), GradedPolynomial<RationalField>::zero(sig, q));
  for (const auto& m : basis) t[level - 1][0].add_term(m, q.one());
  const auto u = Unipotent<RationalField>::from_table(sig, q, t);
  const auto conj = conjugate(g, u);

  const auto rows = unipotent_torus_exponents(sig, level);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Rational expected(1);
    for (int i = 0; i < sig.group_count(); ++i) {
      const long e = rows[k][i];
      const Rational base = e >= 0 ? lambda[i] : lambda[i].inverse();
      expected = expected * elem_pow(base, static_cast<unsigned long>(e >= 0 ? e : -e),
                                     Rational(1));
    }
    if (conj.shift(level, 1).coefficient(basis[k]) != expected) return false;
  }
  return true;
}

inline Json example_case(const std::string& name, const std::vector<long>& weights,
                         const std::vector<std::pair<int, int>>& conj_pairs) {
  const WeightSignature sig(weights);
  const Pi0Report rep = pi0_report(sig);
  Json c{{"case", name},
         {"weights", signature_to_json(sig)},
         {"k", rep.k},
         {"unipotent_dims", rep.unipotent_dims},
         {"reductive_ranks", rep.reductive_ranks},
         {"pi1_order", rep.pi1},
         {"pi0", pi0_to_json(rep)}};
  Json torus = Json::array();
  bool checks = true;
  for (int a = 2; a <= sig.group_count(); ++a) {
    if (rep.k[a - 1] == 0) continue;
    torus.push_back(Json{{"level", a}, {"rows", unipotent_torus_exponents(sig, a)}});
    checks = checks && torus_exponent_check(weights, a);
  }
  c["torus_exponents"] = std::move(torus);
  Json conj = Json::array();
  for (const auto& [a, b] : conj_pairs)
    conj.push_back(Json{{"acting_level", a},
                        {"target_level", b},
                        {"matrix", conjugation_matrix(weights, a, b)}});
  c["conjugation"] = std::move(conj);
  c["torus_check"] = checks;
  return c;
}

}  // namespace detail

inline Json compute_examples() {
  Json cases = Json::array();
  cases.push_back(detail::example_case("coprime-pair", {2, 3}, {}));
  cases.push_back(detail::example_case("divisible-pair", {2, 4}, {}));
  cases.push_back(detail::example_case("equal-pair", {5, 5}, {}));
  cases.push_back(detail::example_case("chain-1-2-3", {1, 2, 3}, {{2, 3}}));
  cases.push_back(detail::example_case("chain-1-2-4", {1, 2, 4}, {{2, 3}}));
  return Json{{"cases", std::move(cases)}};
}

}  // namespace wpgl::cli

// Frozen fixture; regenerated output must match byte for byte.
#include "wpgl/examples_golden.hpp"

namespace wpgl::cli {

inline CommandResult run_examples() {
  const Json computed = compute_examples();
  const Json golden = Json::parse(kExamplesGolden);
  Json diffs = Json::array();
  const auto patch = Json::diff(golden, computed);
  for (const auto& op : patch) diffs.push_back(op);
  const bool match = computed.dump() == golden.dump();
  Json payload{{"command", "examples"},
               {"cases", computed["cases"]},
               {"golden_match", match}};
  if (!match) payload["diffs"] = std::move(diffs);
  return {std::move(payload), match ? 0 : 1};
}

// ---------------------------------------------------------------------------
// text rendering
// ---------------------------------------------------------------------------

namespace detail {
inline void render(const Json& j, const std::string& indent, std::string& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array()))) {
        out += indent + k + ":\n";
        render(v, indent + "  ", out);
      } else {
        out += indent + k + ": " + v.dump() + "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object() || v.is_array()) {
        out += indent + "-\n";
        render(v, indent + "  ", out);
      } else {
        out += indent + "- " + v.dump() + "\n";
      }
    }
  } else {
    out += indent + j.dump() + "\n";
  }
}
}  // namespace detail

inline std::string render_text(const Json& payload) {
  std::string out;
  detail::render(payload, "", out);
  return out;
}

}  // namespace wpgl::cli

#endif
