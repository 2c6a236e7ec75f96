#include "reflwb/report.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "reflwb/io.hpp"
#include "reflwb/kappa.hpp"
#include "reflwb/monodromy.hpp"
#include "reflwb/quadmap.hpp"
#include "reflwb/repfamily.hpp"

namespace reflwb {

using nlohmann::json;

namespace {

std::string word_text(const GroupModel &g, std::size_t w) {
  const auto word = g.word(w);
  if (word.empty())
    return "1";
  std::string out;
  for (auto k : word) {
    if (!out.empty())
      out += ' ';
    out += "s" + std::to_string(k + 1);
  }
  return out;
}

json vector_json(const Vector &v) {
  json out = json::array();
  for (const auto &x : v)
    out.push_back(cycnum_to_json(x));
  return out;
}

json matrix_json(const Matrix &m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k)
      row.push_back(cycnum_to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

json complex_json(const Complex &z) { return json::array({z.real(), z.imag()}); }

std::string poly_text(const IntPoly &p) {
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0)
      continue;
    const long c = p[k];
    if (!out.empty())
      out += c < 0 ? " - " : " + ";
    else if (c < 0)
      out += "-";
    const long a = std::abs(c);
    if (k == 0 || a != 1)
      out += std::to_string(a);
    if (k >= 1)
      out += "t";
    if (k >= 2)
      out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

bool is_type_a(const CoxeterSpec &c) {
  return c.type == CoxeterType::A || (c.type == CoxeterType::I2 && c.n == 3) ||
         (c.type == CoxeterType::D && c.n == 3);
}

std::optional<bool> irreducible_flag(const CatalogGroup &cg) {
  if (!is_essential(cg.arrangement) || cg.arrangement.size() == 0)
    return std::nullopt;
  return irreducibility(cg.arrangement).irreducible;
}

/// (d, e, r) behind the catalog model, when it belongs to the imprimitive family.
std::optional<ImprimitiveSpec> imprimitive_parameters(const GroupSpec &spec) {
  if (const auto *s = std::get_if<ImprimitiveSpec>(&spec.kind))
    return *s;
  if (const auto *c = std::get_if<CoxeterSpec>(&spec.kind)) {
    switch (c->type) {
    case CoxeterType::A:
      return std::nullopt;
    case CoxeterType::B:
      return ImprimitiveSpec{2, 1, c->n, std::nullopt};
    case CoxeterType::D:
      return ImprimitiveSpec{1, 2, c->n, std::nullopt};
    case CoxeterType::I2:
      return ImprimitiveSpec{1, c->n, 2, std::nullopt};
    }
  }
  return std::nullopt;
}

Check make_check(std::string name, bool pass, std::string detail = {}) {
  return {std::move(name), pass, std::move(detail)};
}

/// Table-derived values <chi_0, chi_0>, <chi_1, chi_1> and <chi_0, 1> where the decomposition tables apply.
struct TableValues {
  std::optional<long> chi0_norm, chi1_norm, chi0_trivial;
  std::string source;
};

TableValues table_values(const CatalogGroup &cg) {
  TableValues t;
  if (cg.shephard_todd == 4) {
    t.chi1_norm = 2;
    t.source = "G4: R1 = A1 + A_j2";
    return t;
  }
  if (!cg.coxeter)
    return t;
  const int n = cg.coxeter->n;
  switch (cg.coxeter->type) {
  case CoxeterType::A:
    if (n >= 3) {
      t = {3, 2, 1, "A_n: R0 = [n-1,2]+[n,1]+[n+1], R1 = [n-1,1,1]+[n,1]"};
    }
    break;
  case CoxeterType::B:
    if (n == 3)
      t = {9, 5, std::nullopt, "B3: R0 = ([1],[2]) + 2([2,1],0) + 2([3],0), R1 = ([1,1],[1]) + 2([2],[1])"};
    else if (n >= 4)
      t = {10, 5, std::nullopt, "B_n: R0 = ([n-2,2],0) + ([n-2],[2]) + 2([n-1,1],0) + 2([n],0), R1 = ([n-2,1],[1]) + 2([n-1],[1])"};
    break;
  case CoxeterType::D:
    if (n >= 4)
      t = {std::nullopt, 2, std::nullopt, "D_n: R1 = {[n-2,1],[1]} + {[n-1],[1]}"};
    break;
  case CoxeterType::I2:
    break;
  }
  return t;
}

} // namespace

std::optional<Suite> parse_suite(const std::string &name) {
  if (name == "phi")
    return Suite::Phi;
  if (name == "kappa")
    return Suite::Kappa;
  if (name == "chi")
    return Suite::Chi;
  if (name == "monodromy")
    return Suite::Monodromy;
  if (name == "all")
    return Suite::All;
  return std::nullopt;
}

json check_to_json(const Check &c) { return {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}}; }

json group_summary(const CatalogGroup &cg) {
  const GroupModel &g = cg.group;
  const Arrangement &a = cg.arrangement;
  json j;
  j["name"] = cg.name;
  j["spec"] = group_spec_to_json(cg.spec);
  j["dim"] = g.dim();
  j["order"] = g.order();
  j["field_order"] = g.field_order();
  j["hyperplanes"] = a.size();
  j["center"] = g.center().size();
  j["classes"] = g.classes().size();
  j["reflections"] = reflections(g).size();
  j["essential"] = is_essential(a);
  const auto irr = irreducible_flag(cg);
  j["irreducible"] = irr ? json(*irr) : json(nullptr);
  j["coxeter"] = cg.coxeter ? json(coxeter_name(*cg.coxeter)) : json(nullptr);
  json d = json::array();
  for (const auto &h : a.hyperplanes())
    d.push_back(h.d);
  j["d"] = d;
  j["orbits"] = a.orbits();
  return j;
}

json phi_section(const CatalogGroup &cg) {
  const Arrangement &a = cg.arrangement;
  const PhiMap phi = build_phi(a);
  const Surjectivity s = is_surjective(phi);
  json j;
  j["rank"] = s.rank;
  j["target_dim"] = s.target_dim;
  j["surjective"] = s.surjective;
  j["bound"] = QuadForm::ambient_dim(a.dim());
  const EquivarianceReport natural = equivariance_defect(phi, cg.group);
  j["natural_forms"] = {{"defects", natural.violations.size()},
                        {"sum_of_squares_zero", natural.sum_of_squares_zero}};
  json eq = nullptr;
  if (cg.coxeter) {
    try {
      const EquivarianceReport r = equivariance_defect(build_phi(a.dim(), coxeter_equivariant_forms(cg)), cg.group);
      eq = {{"model", "coxeter"},
            {"defects", r.violations.size()},
            {"sum_of_squares_zero", r.sum_of_squares_zero},
            {"sum_of_squares_invariant", r.sum_of_squares_invariant}};
    } catch (const std::invalid_argument &e) {
      eq = {{"model", "coxeter"}, {"unsupported", e.what()}};
    }
  } else if (cg.shephard_todd == 12) {
    const G12ModelCheck r = g12_model_check();
    eq = {{"model", "g12_reference"},
          {"defects", r.equivariant ? 0 : 1},
          {"sum_of_squares_zero", r.sum_of_squares_zero}};
  }
  j["equivariance"] = eq;
  return j;
}

json kappa_section(const CatalogGroup &cg) {
  const AIndexReport r = a_indices(cg.group, cg.arrangement);
  json j;
  j["kappa"] = r.kappa;
  j["indices"] = r.indices;
  json w = json::object();
  for (const auto &[index, witness] : r.witnesses)
    w[std::to_string(index)] = {{"element", word_text(cg.group, witness.first)}, {"hyperplane", witness.second}};
  j["witnesses"] = w;
  json formula = nullptr;
  if (auto p = imprimitive_parameters(cg.spec); p && p->d * p->e >= 2)
    formula = kappa_formula(p->d, p->e, p->r);
  j["formula"] = formula;
  json reference = nullptr;
  if (cg.shephard_todd)
    reference = reference_kappa_table().at(*cg.shephard_todd);
  j["reference"] = reference;
  return j;
}

json chi_section(const CatalogGroup &cg, long from, long to) {
  if (from > to)
    throw std::invalid_argument("empty n range");
  const GroupModel &g = cg.group;
  const CharacterFamily family(g, cg.arrangement);
  json j;
  j["kappa"] = family.kappa();
  j["period"] = check_periodicity(g, cg.arrangement);
  json columns = json::array({"class", "size", "order", "word"});
  std::vector<ClassFunction> chis;
  json ns = json::array();
  for (long n = from; n <= to; ++n) {
    chis.push_back(family.chi(n));
    columns.push_back("n=" + std::to_string(n));
    ns.push_back(n);
  }
  j["n"] = ns;
  j["columns"] = columns;
  json rows = json::array();
  for (std::size_t c = 0; c < g.classes().size(); ++c) {
    const std::size_t rep = g.class_representative(c);
    json row = json::array({c, g.class_size(c), g.element_order(rep), word_text(g, rep)});
    for (const auto &x : chis)
      row.push_back(cycnum_to_json(x.at_class(c)));
    rows.push_back(row);
  }
  j["rows"] = rows;
  const ClassFunction trivial = trivial_character(g);
  json inner = json::array();
  json kernels = json::array();
  for (long n = from; n <= to; ++n) {
    const ClassFunction &x = chis[static_cast<std::size_t>(n - from)];
    inner.push_back({{"n", n}, {"self", cycnum_to_json(inner_product(x, x))},
                     {"trivial", cycnum_to_json(inner_product(x, trivial))}});
    const auto kernel = kernel_of_Rn(g, cg.arrangement, n);
    kernels.push_back({{"n", n}, {"size", kernel.size()}, {"matches_center", kernel == central_kernel(g, n)}});
  }
  j["inner_products"] = inner;
  j["kernels"] = kernels;
  return j;
}

namespace {

json monodromy_json(const CatalogGroup &cg, const MonodromyReport &r) {
  json j;
  j["seed"] = r.seed;
  json base = json::array();
  for (const auto &z : r.basepoint)
    base.push_back(complex_json(z));
  j["basepoint"] = base;
  json paths = json::array();
  for (const auto &p : r.paths) {
    json integrals = json::array(), traces = json::array();
    for (const auto &v : p.integrals)
      integrals.push_back(complex_json(v));
    for (const auto &v : p.traces)
      traces.push_back(complex_json(v));
    paths.push_back({{"kind", p.kind},
                     {"element", p.element ? json(word_text(cg.group, *p.element)) : json(nullptr)},
                     {"integrals", integrals},
                     {"traces_h012", traces}});
  }
  j["paths"] = paths;
  json checks = json::array();
  for (const auto &c : r.checks)
    checks.push_back({{"name", c.name}, {"delta", c.delta}, {"tolerance", c.tolerance}, {"pass", c.pass}});
  j["comparisons"] = checks;
  return j;
}

std::vector<Check> monodromy_check_list(const MonodromyReport &r) {
  std::vector<Check> out;
  for (const auto &c : r.checks) {
    std::ostringstream detail;
    detail.precision(3);
    detail << "delta " << std::scientific << c.delta << ", tolerance " << c.tolerance;
    out.push_back(make_check("monodromy." + c.name, c.pass, detail.str()));
  }
  return out;
}

} // namespace

json monodromy_section(const CatalogGroup &cg, std::uint64_t seed) {
  return monodromy_json(cg, run_monodromy_suite(cg, seed));
}

std::vector<Check> phi_checks(const CatalogGroup &cg) {
  std::vector<Check> out;
  const Arrangement &a = cg.arrangement;
  const Surjectivity s = is_surjective(build_phi(a));
  const auto irr = irreducible_flag(cg);
  const std::size_t bound = QuadForm::ambient_dim(a.dim());
  if (irr) {
    out.push_back(make_check("phi.surjective_iff_irreducible", s.surjective == *irr,
                             "rank " + std::to_string(s.rank) + " of " + std::to_string(s.target_dim) +
                                 ", irreducible " + (*irr ? "true" : "false")));
    if (*irr) {
      // any rank-1 arrangement is a single point, i.e. A1
      const bool type_a = a.dim() == 1 || (cg.coxeter && is_type_a(*cg.coxeter));
      const bool ok = a.size() >= bound && ((a.size() == bound) == type_a);
      out.push_back(make_check("phi.bound", ok,
                               "|A| = " + std::to_string(a.size()) + ", n(n+1)/2 = " + std::to_string(bound) +
                                   (type_a ? ", type A (equality expected)" : ", strict inequality expected")));
    }
  }
  if (cg.coxeter) {
    try {
      const EquivarianceReport r = equivariance_defect(build_phi(a.dim(), coxeter_equivariant_forms(cg)), cg.group);
      out.push_back(make_check("phi.coxeter_equivariance", r.violations.empty() && r.sum_of_squares_invariant,
                               std::to_string(r.violations.size()) + " defects, sum of squares " +
                                   (r.sum_of_squares_zero ? "zero" : "nonzero") +
                                   (r.sum_of_squares_invariant ? " and invariant" : "")));
    } catch (const std::invalid_argument &) {
      // I2(m) outside the supported models: nothing to check
    }
  }
  if (cg.shephard_todd == 12) {
    const G12ModelCheck r = g12_model_check();
    out.push_back(make_check("phi.g12_model", r.all(),
                             std::string("roots ") + (r.roots_match ? "match" : "differ") + ", signed action " +
                                 (r.signed_action ? "yes" : "no") + ", monomial " + (r.monomial ? "yes" : "no") +
                                 ", equivariant " + (r.equivariant ? "yes" : "no") + ", sum of squares " +
                                 (r.sum_of_squares_zero ? "zero" : "nonzero") + ", form proportional " +
                                 (r.form_proportional ? "yes" : "no")));
  }
  return out;
}

std::vector<Check> kappa_checks(const CatalogGroup &cg) {
  std::vector<Check> out;
  const GroupModel &g = cg.group;
  const AIndexReport r = a_indices(g, cg.arrangement);
  const auto divs = divisors(r.kappa);
  out.push_back(make_check("kappa.indices_are_divisors", r.indices == divs,
                           "kappa " + std::to_string(r.kappa) + ", " + std::to_string(r.indices.size()) +
                               " indices, " + std::to_string(divs.size()) + " divisors"));
  if (auto p = imprimitive_parameters(cg.spec); p && p->d * p->e >= 2) {
    const int expected = kappa_formula(p->d, p->e, p->r);
    out.push_back(make_check("kappa.formula", r.kappa == expected,
                             "computed " + std::to_string(r.kappa) + ", formula " + std::to_string(expected)));
  }
  if (cg.shephard_todd) {
    const int expected = reference_kappa_table().at(*cg.shephard_todd);
    out.push_back(make_check("kappa.reference", r.kappa == expected,
                             "computed " + std::to_string(r.kappa) + ", table " + std::to_string(expected)));
  }
  if (cg.coxeter)
    out.push_back(make_check("kappa.coxeter_is_2", r.kappa == 2, "computed " + std::to_string(r.kappa)));
  std::size_t center_exponent = 1;
  for (auto z : g.center())
    center_exponent = std::lcm(center_exponent, g.element_order(z));
  out.push_back(make_check("kappa.center_exponent_divides", r.kappa % static_cast<int>(center_exponent) == 0,
                           "exponent of Z(W) " + std::to_string(center_exponent)));
  return out;
}

std::vector<Check> chi_checks(const CatalogGroup &cg) {
  std::vector<Check> out;
  const GroupModel &g = cg.group;
  const Arrangement &a = cg.arrangement;
  const CharacterFamily family(g, a);
  const int kappa = family.kappa();

  const int period = check_periodicity(g, a);
  out.push_back(make_check("chi.period", period == kappa,
                           "period " + std::to_string(period) + ", kappa " + std::to_string(kappa)));

  bool kernels = true;
  std::string kernel_detail;
  for (long n = 0; n <= kappa; ++n)
    if (kernel_of_Rn(g, a, n) != central_kernel(g, n)) {
      kernels = false;
      kernel_detail = "mismatch at n = " + std::to_string(n);
      break;
    }
  out.push_back(make_check("chi.kernels", kernels, kernels ? "n = 0.." + std::to_string(kappa) : kernel_detail));
  out.push_back(make_check("chi.r1_faithful", kernel_of_Rn(g, a, 1).size() == 1));
  out.push_back(make_check("chi.r0_kernel_is_center", kernel_of_Rn(g, a, 0) == g.center()));

  bool galois = true;
  std::string coprime;
  for (long n = 1; n < std::max(kappa, 2); ++n)
    if (std::gcd(n, static_cast<long>(kappa)) == 1) {
      coprime += (coprime.empty() ? "" : ",") + std::to_string(n);
      galois = galois && galois_check(g, a, n);
    }
  out.push_back(make_check("chi.galois", galois, "n in {" + coprime + "}"));

  bool central = true;
  std::size_t scalars = 0;
  for (auto z : g.center()) {
    const Matrix &m = g.element(z);
    if (m != Matrix::identity(m.rows()).scaled(m(0, 0)))
      continue;
    ++scalars;
    const CycNum lambda = m(0, 0);
    for (long n = 0; n <= kappa; ++n)
      central = central && family.chi(n).at_element(z) == lambda.pow(n) * CycNum(static_cast<long>(a.size()));
  }
  out.push_back(make_check("chi.central_values", central, std::to_string(scalars) + " scalar central elements"));

  bool blocks = true;
  for (long n = 0; n <= kappa; ++n) {
    std::vector<CycNum> zero(g.classes().size());
    ClassFunction sum(g, zero);
    for (std::size_t o = 0; o < a.orbits().size(); ++o)
      sum = sum + family.chi_orbit(n, o);
    blocks = blocks && sum == family.chi(n);
  }
  out.push_back(make_check("chi.orbit_blocks", blocks, std::to_string(a.orbits().size()) + " orbits"));

  bool restriction = true;
  std::string restriction_detail;
  if (a.dim() == 1)
    restriction_detail = "rank 1: the hyperplane is the origin, nothing to restrict";
  for (const auto &orbit : a.orbits()) {
    if (a.dim() == 1)
      break;
    const RestrictionResult r = restriction_check(g, a, generic_vector_in(a, orbit.front()));
    restriction = restriction && r.holds;
    restriction_detail += (restriction_detail.empty() ? "" : "; ") + ("H" + std::to_string(orbit.front())) +
                          ": fixer order " + std::to_string(r.fixer_order) + (r.holds ? "" : " " + r.notice);
  }
  out.push_back(make_check("chi.restriction", restriction, restriction_detail));

  if (const auto *p = std::get_if<ProductSpec>(&cg.spec.kind)) {
    std::vector<CatalogGroup> factors;
    for (const auto &f : p->factors)
      factors.push_back(build(f));
    bool ok = true;
    for (long n = 0; n <= kappa && ok; ++n) {
      const ClassFunction x = family.chi(n);
      std::vector<ClassFunction> fx;
      for (const auto &f : factors)
        fx.push_back(chi(f.group, f.arrangement, n));
      for (std::size_t c = 0; c < g.classes().size() && ok; ++c) {
        const Matrix &w = g.element(g.class_representative(c));
        CycNum sum;
        std::size_t offset = 0;
        for (std::size_t k = 0; k < factors.size(); ++k) {
          const std::size_t dk = factors[k].group.dim();
          Matrix block(dk, dk);
          for (std::size_t i = 0; i < dk; ++i)
            for (std::size_t l = 0; l < dk; ++l)
              block(i, l) = w(offset + i, offset + l);
          auto idx = factors[k].group.index_of(block);
          if (!idx) {
            ok = false;
            break;
          }
          sum += fx[k].at_element(*idx);
          offset += dk;
        }
        ok = ok && sum == x.at_class(c);
      }
    }
    out.push_back(make_check("chi.product_additivity", ok, std::to_string(factors.size()) + " factors"));
  }

  if (cg.shephard_todd == 4) {
    const G4TableCheck t = g4_table_check();
    std::string detail = std::string("<U,U> = 1: ") + (t.u_norm_one ? "yes" : "no");
    for (std::size_t n = 0; n < t.rows.size(); ++n)
      detail += "; " + t.labels[n] + ": " + (t.rows[n] ? "yes" : "no");
    detail += std::string("; chi_5 = A1 + A_j: ") + (t.r5_is_a1_plus_aj ? "yes" : "no");
    out.push_back(make_check("g4_table", t.all(), detail));
  }

  if (cg.coxeter && !cg.positive_roots.empty()) {
    const SignModelRep rep = coxeter_sign_model(cg);
    const SignModelCheck sc = check_sign_model(cg, rep);
    const ClassFunction model = sign_model_character(cg, sc);
    const ClassFunction chi1 = family.chi(1);
    const ClassFunction chi0 = family.chi(0);
    out.push_back(make_check("sign_model", sc.monomial && sc.homomorphism && sc.sign_rule && model == chi1,
                             std::string("monomial ") + (sc.monomial ? "yes" : "no") + ", homomorphism " +
                                 (sc.homomorphism ? "yes" : "no") + ", sign rule " + (sc.sign_rule ? "yes" : "no") +
                                 ", character = chi_1 " + (model == chi1 ? "yes" : "no")));
    const std::size_t s1 = *g.index_of(g.generators()[0]);
    const CycNum tr1 = chi1.at_element(s1), tr0 = chi0.at_element(s1);
    out.push_back(make_check("sign_model.trace_relation", tr1 == tr0 - CycNum(1),
                             "tr R1(s1) = " + tr1.to_string() + ", tr R0(s1) = " + tr0.to_string() +
                                 ", expected difference 1, observed " + (tr0 - tr1).to_string()));
    out.push_back(make_check("chi.r1_ne_r0", chi1 != chi0));
  }

  const TableValues t = table_values(cg);
  if (t.chi0_norm || t.chi1_norm || t.chi0_trivial) {
    const ClassFunction chi0 = family.chi(0), chi1 = family.chi(1);
    const CycNum n00 = inner_product(chi0, chi0), n11 = inner_product(chi1, chi1);
    const CycNum n0t = inner_product(chi0, trivial_character(g));
    bool ok = true;
    if (t.chi0_norm)
      ok = ok && n00 == CycNum(*t.chi0_norm);
    if (t.chi1_norm)
      ok = ok && n11 == CycNum(*t.chi1_norm);
    if (t.chi0_trivial)
      ok = ok && n0t == CycNum(*t.chi0_trivial);
    out.push_back(make_check("table.inner_products", ok,
                             t.source + "; <chi0,chi0> = " + n00.to_string() + ", <chi1,chi1> = " + n11.to_string() +
                                 ", <chi0,1> = " + n0t.to_string()));
  }
  return out;
}

std::vector<Check> monodromy_checks(const CatalogGroup &cg, std::uint64_t seed) {
  return monodromy_check_list(run_monodromy_suite(cg, seed));
}

json analyze_report(const CatalogGroup &cg, bool monodromy, std::uint64_t seed) {
  json j;
  j["schema"] = kReportSchema;
  j["command"] = "analyze";
  j["group"] = group_summary(cg);
  j["phi"] = phi_section(cg);
  j["kappa"] = kappa_section(cg);
  const int kappa = j["kappa"]["kappa"].get<int>();
  j["chi"] = chi_section(cg, 0, kappa - 1);
  if (monodromy)
    j["monodromy"] = monodromy_section(cg, seed);
  return j;
}

json verify_report(const CatalogGroup &cg, Suite suite, std::uint64_t seed) {
  json j;
  j["schema"] = kReportSchema;
  j["command"] = "verify";
  j["group"] = group_summary(cg);
  std::vector<Check> checks;
  auto append = [&](std::vector<Check> more) { checks.insert(checks.end(), more.begin(), more.end()); };
  json suites = json::array();
  if (suite == Suite::Phi || suite == Suite::All) {
    suites.push_back("phi");
    j["phi"] = phi_section(cg);
    append(phi_checks(cg));
  }
  if (suite == Suite::Kappa || suite == Suite::All) {
    suites.push_back("kappa");
    j["kappa"] = kappa_section(cg);
    append(kappa_checks(cg));
  }
  if (suite == Suite::Chi || suite == Suite::All) {
    suites.push_back("chi");
    const int kappa = CharacterFamily(cg.group, cg.arrangement).kappa();
    j["chi"] = chi_section(cg, 0, kappa - 1);
    append(chi_checks(cg));
  }
  if (suite == Suite::Monodromy || (suite == Suite::All && cg.group.dim() <= 2)) {
    suites.push_back("monodromy");
    try {
      const MonodromyReport r = run_monodromy_suite(cg, seed);
      j["monodromy"] = monodromy_json(cg, r);
      append(monodromy_check_list(r));
    } catch (const PathError &e) {
      j["monodromy"] = {{"error", e.what()}};
      checks.push_back(make_check("monodromy.paths", false, e.what()));
    }
  } else if (suite == Suite::All) {
    j["monodromy"] = {{"skipped", "numeric monodromy covers rank <= 2 only"}};
  }
  j["suites"] = suites;
  json cj = json::array();
  bool pass = true;
  for (const auto &c : checks) {
    cj.push_back(check_to_json(c));
    pass = pass && c.pass;
  }
  j["checks"] = cj;
  j["pass"] = pass;
  return j;
}

json chi_report(const CatalogGroup &cg, long from, long to) {
  json j;
  j["schema"] = kReportSchema;
  j["command"] = "chi";
  j["group"] = group_summary(cg);
  j["chi"] = chi_section(cg, from, to);
  return j;
}

json build_report(const CatalogGroup &cg) {
  json j;
  j["schema"] = kReportSchema;
  j["command"] = "build";
  j["group"] = group_summary(cg);
  json gens = json::array();
  for (const auto &m : cg.group.generators())
    gens.push_back(matrix_json(m));
  j["generators"] = gens;
  j["form"] = matrix_json(cg.arrangement.form());
  json hs = json::array();
  for (std::size_t h = 0; h < cg.arrangement.size(); ++h) {
    const Hyperplane &hp = cg.arrangement[h];
    hs.push_back({{"index", h},
                  {"alpha", vector_json(hp.alpha)},
                  {"root", vector_json(hp.root)},
                  {"d", hp.d},
                  {"orbit", hp.orbit},
                  {"distinguished_reflection", word_text(cg.group, hp.distinguished_reflection)}});
  }
  j["arrangement"] = hs;
  return j;
}

json poincare_report(const LinearArrangement &a) {
  json j;
  j["schema"] = kReportSchema;
  j["command"] = "poincare";
  j["dim"] = a.dim;
  j["hyperplanes"] = a.forms.size();
  j["essential"] = is_essential(a);
  const IntPoly p = poincare_polynomial(a);
  j["poincare"] = p;
  j["poincare_text"] = poly_text(p);
  const auto quotient = poly_divide(p, IntPoly{1, 1});
  j["quotient_by_1_plus_t"] = quotient ? json(poly_text(*quotient)) : json(nullptr);
  const Surjectivity s = is_surjective(build_phi(a));
  j["phi"] = {{"rank", s.rank}, {"target_dim", s.target_dim}, {"surjective", s.surjective}};
  j["checks"] = json::array({check_to_json(make_check("poincare.divisible_by_1_plus_t", quotient.has_value()))});
  j["pass"] = quotient.has_value();
  return j;
}

namespace {

IntRange parse_int_range(const std::string &text) {
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw std::invalid_argument("bad integer \"" + std::string(s) + "\" in range \"" + text + "\"");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(text);
    return {v, v};
  }
  IntRange r{parse_int(std::string_view(text).substr(0, dots)), parse_int(std::string_view(text).substr(dots + 2))};
  if (r.lo > r.hi)
    throw std::invalid_argument("empty range \"" + text + "\"");
  return r;
}

} // namespace

FamilyRange parse_family_range(const std::string &text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    parts.push_back(item);
  if (parts.size() != 3)
    throw std::invalid_argument("family range needs three comma-separated ranges d,e,r");
  FamilyRange f{parse_int_range(parts[0]), parse_int_range(parts[1]), parse_int_range(parts[2]), 0};
  if (f.d.lo < 1 || f.e.lo < 1 || f.r.lo < 1)
    throw std::invalid_argument("d, e and r must be positive");
  return f;
}

json kappa_table_report(const FamilyRange &family, std::size_t order_bound) {
  json rows = json::array();
  bool pass = true;
  json checks = json::array();
  for (int d = family.d.lo; d <= family.d.hi; ++d)
    for (int e = family.e.lo; e <= family.e.hi; ++e)
      for (int r = family.r.lo; r <= family.r.hi; ++r) {
        const int de = d * e;
        if (family.max_de > 0 && de > family.max_de)
          continue;
        json row{{"d", d}, {"e", e}, {"r", r}};
        // |G(de,e,r)| = (de)^r r! / e
        double order = 1.0;
        for (int k = 1; k <= r; ++k)
          order *= double(de) * k;
        order /= e;
        if (de < 2) {
          row["status"] = "skipped: de = 1 (symmetric group, no formula)";
          rows.push_back(row);
          continue;
        }
        if (order > double(order_bound)) {
          row["status"] = "skipped: order above bound";
          rows.push_back(row);
          continue;
        }
        const CatalogGroup cg = build(imprimitive(d, e, r), order_bound);
        const AIndexReport a = a_indices(cg.group, cg.arrangement);
        const int formula = kappa_formula(d, e, r);
        row["order"] = cg.group.order();
        row["kappa"] = a.kappa;
        row["formula"] = formula;
        row["indices"] = a.indices;
        row["match"] = a.kappa == formula;
        row["divisors"] = a.indices == divisors(a.kappa);
        row["status"] = "computed";
        rows.push_back(row);
        const std::string name = "G(" + std::to_string(de) + "," + std::to_string(e) + "," + std::to_string(r) + ")";
        checks.push_back(check_to_json(make_check("kappa_formula " + name, a.kappa == formula,
                                                  "computed " + std::to_string(a.kappa) + ", formula " +
                                                      std::to_string(formula))));
        pass = pass && a.kappa == formula;
      }
  json reference = json::array();
  for (const auto &[st, kappa] : reference_kappa_table())
    reference.push_back({{"st", st}, {"kappa", kappa}});
  json j;
  j["schema"] = kReportSchema;
  j["command"] = "kappa-table";
  j["family"] = rows;
  j["exceptional_reference"] = reference;
  j["checks"] = checks;
  j["pass"] = pass;
  return j;
}

bool report_passed(const json &report) {
  if (!report.contains("checks"))
    return true;
  for (const auto &c : report.at("checks"))
    if (!c.at("pass").get<bool>())
      return false;
  return true;
}

namespace {

std::string scalar_text(const json &v) {
  if (v.is_string())
    return v.get<std::string>();
  if (v.is_null())
    return "-";
  if (v.is_object() && v.contains("order") && v.contains("coeffs"))
    return parse_cycnum(v, 1).to_string();
  if (v.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
      out += (i ? ", " : "") + scalar_text(v[i]);
    return out + "]";
  }
  if (v.is_object())
    return v.dump();
  return v.dump();
}

bool is_table(const json &v) { return v.is_object() && v.contains("columns") && v.contains("rows"); }

bool is_record_list(const json &v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const json &x) {
           return x.is_object() && !(x.contains("order") && x.contains("coeffs"));
         });
}

void render_table(std::ostream &os, const std::vector<std::string> &header, const std::vector<std::vector<std::string>> &cells,
                  const std::string &indent) {
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t c = 0; c < header.size(); ++c)
    width[c] = header[c].size();
  for (const auto &row : cells)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  auto line = [&](const std::vector<std::string> &row) {
    os << indent;
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << row[c];
      if (c + 1 < row.size())
        os << std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << '\n';
  };
  line(header);
  for (const auto &row : cells)
    line(row);
}

void render_value(std::ostream &os, const std::string &path, const json &v) {
  if (is_table(v)) {
    for (auto it = v.begin(); it != v.end(); ++it)
      if (it.key() != "columns" && it.key() != "rows")
        render_value(os, path + "." + it.key(), it.value());
    std::vector<std::string> header;
    for (const auto &c : v.at("columns"))
      header.push_back(scalar_text(c));
    std::vector<std::vector<std::string>> cells;
    for (const auto &row : v.at("rows")) {
      std::vector<std::string> r;
      for (const auto &c : row)
        r.push_back(scalar_text(c));
      cells.push_back(r);
    }
    os << path << ".table:\n";
    render_table(os, header, cells, "  ");
    return;
  }
  if (v.is_object() && !(v.contains("order") && v.contains("coeffs"))) {
    for (auto it = v.begin(); it != v.end(); ++it)
      render_value(os, path.empty() ? it.key() : path + "." + it.key(), it.value());
    return;
  }
  if (is_record_list(v)) {
    std::vector<std::string> header;
    for (const auto &x : v)
      for (auto it = x.begin(); it != x.end(); ++it)
        if (std::find(header.begin(), header.end(), it.key()) == header.end())
          header.push_back(it.key());
    std::vector<std::vector<std::string>> cells;
    for (const auto &x : v) {
      std::vector<std::string> r;
      for (const auto &k : header)
        r.push_back(x.contains(k) ? scalar_text(x.at(k)) : "-");
      cells.push_back(r);
    }
    os << path << ":\n";
    render_table(os, header, cells, "  ");
    return;
  }
  os << path << ": " << scalar_text(v) << '\n';
}

} // namespace

std::string render_text(const json &report) {
  std::ostringstream os;
  for (auto it = report.begin(); it != report.end(); ++it) {
    if (it.key() == "checks")
      continue;
    render_value(os, it.key(), it.value());
  }
  if (report.contains("checks")) {
    os << "checks:\n";
    for (const auto &c : report.at("checks")) {
      const std::string name = c.at("name").get<std::string>();
      os << "  " << name << ": " << (c.at("pass").get<bool>() ? "pass" : "FAIL");
      const std::string detail = c.contains("detail") ? c.at("detail").get<std::string>() : "";
      if (!detail.empty())
        os << "  (" << detail << ")";
      os << '\n';
    }
  }
  return os.str();
}

} // namespace reflwb
