// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "properties.hpp"
#include "reflwb/arrangement.hpp"
#include "reflwb/catalog.hpp"
#include "reflwb/io.hpp"
#include "reflwb/kappa.hpp"
#include "reflwb/monodromy.hpp"
#include "reflwb/quadmap.hpp"
#include "reflwb/repfamily.hpp"
#include "sweep.hpp"

using namespace reflwb;

namespace {

// time limits, seconds
constexpr double kKappaLimit = 5.0;
constexpr double kSweepLimit = 60.0;
constexpr double kG4TableLimit = 5.0;
constexpr double kMonodromyLimit = 30.0;
constexpr double kPropertyLimit = 60.0;
// numeric tolerances
constexpr double kIntegralTol = 1e-6;
constexpr double kTraceTol = 1e-5;
constexpr std::size_t kPhiMaxHyperplanes = 30;
constexpr std::uint64_t kSeed = 1;

struct Result {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string &what) {
    if (!ok) {
      if (!pass)
        detail << "; ";
      else
        detail.str("");
      pass = false;
      detail << what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::set<int> divisor_set(int n) {
  std::set<int> s;
  for (int k = 1; k <= n; ++k)
    if (n % k == 0)
      s.insert(k);
  return s;
}

std::string set_text(const std::set<int> &s) {
  std::string out = "{";
  for (int k : s)
    out += (out.size() > 1 ? "," : "") + std::to_string(k);
  return out + "}";
}

/// Imprimitive members of the kappa sweep: de <= 6, r in {2, 3}, de >= 2, order within bound.
std::vector<std::array<int, 3>> kappa_sweep() {
  std::vector<std::array<int, 3>> out;
  for (int de = 2; de <= 6; ++de)
    for (int e = 1; e <= de; ++e)
      if (de % e == 0)
        for (int r = 2; r <= 3; ++r)
          if (oracle::imprimitive_order(de / e, e, r) <= kDefaultOrderBound)
            out.push_back({de / e, e, r});
  return out;
}

std::string gname(int d, int e, int r) {
  return "G(" + std::to_string(d * e) + "," + std::to_string(e) + "," + std::to_string(r) + ")";
}

Result criterion1() {
  Result res;
  for (auto [st, expected] : {std::pair{4, 6}, std::pair{12, 2}}) {
    const auto t0 = std::chrono::steady_clock::now();
    const CatalogGroup cg = build(exceptional(st));
    const int kappa = a_indices(cg.group, cg.arrangement).kappa;
    const double dt = seconds_since(t0);
    res.require(kappa == expected, "G" + std::to_string(st) + " kappa " + std::to_string(kappa) + " != " +
                                       std::to_string(expected));
    res.require(dt < kKappaLimit, "G" + std::to_string(st) + " took " + std::to_string(dt) + " s");
    res.detail << (res.detail.tellp() > 0 ? ", " : "") << "G" << st << " kappa " << kappa;
  }
  return res;
}

Result criterion2() {
  Result res;
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t checked = 0;
  std::vector<std::string> mismatches;
  for (auto [d, e, r] : kappa_sweep()) {
    const CatalogGroup cg = build(imprimitive(d, e, r));
    const int kappa = a_indices(cg.group, cg.arrangement).kappa;
    const int formula = kappa_formula(d, e, r);
    ++checked;
    if (kappa != formula)
      mismatches.push_back(gname(d, e, r) + " computed " + std::to_string(kappa) + " formula " + std::to_string(formula));
  }
  const double dt = seconds_since(t0);
  for (const auto &m : mismatches)
    res.require(false, m);
  res.require(dt < kSweepLimit, "sweep took " + std::to_string(dt) + " s");
  if (res.pass)
    res.detail << checked << " groups, all match";
  else
    res.detail << " (" << mismatches.size() << " of " << checked << " groups disagree)";
  return res;
}

Result criterion3() {
  Result res;
  std::size_t checked = 0;
  auto check = [&](const std::string &label, const GroupSpec &spec) {
    const CatalogGroup cg = build(spec);
    const AIndexReport r = a_indices(cg.group, cg.arrangement);
    ++checked;
    res.require(r.indices == divisor_set(r.kappa),
                label + " indices " + set_text(r.indices) + " vs divisors " + set_text(divisor_set(r.kappa)));
  };
  for (auto [d, e, r] : kappa_sweep())
    check(gname(d, e, r), imprimitive(d, e, r));
  check("G4", exceptional(4));
  check("G12", exceptional(12));
  if (res.pass)
    res.detail << checked << " groups";
  return res;
}

Result criterion4() {
  Result res;
  std::size_t irreducible = 0, reducible = 0;
  for (const auto &entry : sweep::catalog_entries()) {
    const CatalogGroup cg = build(entry.spec);
    const std::size_t n = cg.arrangement.dim(), target = n * (n + 1) / 2;
    const std::size_t rank = is_surjective(build_phi(cg.arrangement)).rank;
    const std::size_t numeric_rank = oracle::numeric_phi_rank(cg.arrangement.forms(), n);
    res.require(rank == numeric_rank, entry.label + " exact rank " + std::to_string(rank) + " vs numeric " +
                                          std::to_string(numeric_rank));
    if (entry.irreducible && cg.arrangement.size() <= kPhiMaxHyperplanes) {
      ++irreducible;
      res.require(rank == target, entry.label + " rank " + std::to_string(rank) + " < " + std::to_string(target));
    }
    if (!entry.irreducible) {
      ++reducible;
      res.require(rank < target, entry.label + " (reducible) rank " + std::to_string(rank));
    }
  }
  for (const auto &entry : sweep::reducible_entries()) {
    const CatalogGroup cg = build(entry.spec);
    const std::size_t n = cg.arrangement.dim();
    const std::size_t rank = is_surjective(build_phi(cg.arrangement)).rank;
    ++reducible;
    res.require(rank < n * (n + 1) / 2, entry.label + " (reducible) rank " + std::to_string(rank));
  }
  const LinearArrangement xyz =
      parse_arrangement(nlohmann::json::parse("[[1,0,0],[0,1,0],[0,0,1],[1,-1,0],[0,1,-1]]"));
  const Surjectivity s = is_surjective(build_phi(xyz));
  res.require(s.rank == 5 && s.target_dim == 6,
              "xyz(x-y)(y-z): rank " + std::to_string(s.rank) + " of " + std::to_string(s.target_dim));
  const IntPoly p = poincare_polynomial(xyz);
  const IntPoly expected = poly_multiply({1, 1}, {1, 4, 4});
  res.require(p == expected, "xyz(x-y)(y-z): Poincare polynomial differs from (1+t)(1+4t+4t^2)");
  res.require(oracle::whitney_poincare(xyz.forms, 3) == expected, "xyz(x-y)(y-z): Whitney oracle disagrees");
  if (res.pass)
    res.detail << irreducible << " irreducible surjective, " << reducible << " reducible not, xyz rank 5 of 6, "
               << "P = 1+5t+8t^2+4t^3";
  return res;
}

Result criterion5() {
  Result res;
  std::size_t checked = 0, equal = 0;
  for (const auto &entry : sweep::catalog_entries()) {
    if (!entry.irreducible)
      continue;
    const CatalogGroup cg = build(entry.spec);
    const std::size_t n = cg.arrangement.dim(), bound = n * (n + 1) / 2, size = cg.arrangement.size();
    ++checked;
    res.require(size >= bound, entry.label + " |A| = " + std::to_string(size) + " < " + std::to_string(bound));
    res.require((size == bound) == entry.type_a, entry.label + " |A| = " + std::to_string(size) +
                                                     ", n(n+1)/2 = " + std::to_string(bound) +
                                                     (entry.type_a ? " (type A)" : " (not type A)"));
    if (size == bound) {
      ++equal;
      // the braid arrangement has Poincare polynomial prod (1 + k t)
      res.require(oracle::whitney_poincare(cg.arrangement.forms(), n) == oracle::braid_poincare(n),
                  entry.label + " reaches equality without the braid lattice");
    }
  }
  if (res.pass)
    res.detail << checked << " irreducible groups, equality in " << equal << " (all type A)";
  return res;
}

Result criterion6() {
  Result res;
  const auto t0 = std::chrono::steady_clock::now();
  const G4TableCheck t = g4_table_check();
  const CatalogGroup g4 = build(exceptional(4));
  const int period = check_periodicity(g4.group, g4.arrangement);
  const double dt = seconds_since(t0);
  for (int k = 0; k < 6; ++k)
    res.require(t.rows[k], t.labels[k] + " does not hold");
  res.require(t.u_norm_one, "<U,U> != 1");
  res.require(t.traces_match, "tr A_alpha(s) != -alpha");
  res.require(period == 6, "period " + std::to_string(period));
  res.require(dt < kG4TableLimit, "took " + std::to_string(dt) + " s");
  if (!t.rows[5] && t.r5_is_a1_plus_aj)
    res.detail << " (chi_5 = A_1 + A_j holds instead)";
  if (res.pass)
    res.detail << "6 rows, <U,U> = 1, period 6";
  return res;
}

std::vector<CatalogGroup> kernel_groups() {
  std::vector<CatalogGroup> out;
  for (const auto &s : {exceptional(4), exceptional(12), imprimitive(3, 1, 2), imprimitive(2, 1, 3)})
    out.push_back(build(s));
  return out;
}

Result criterion7() {
  Result res;
  for (const auto &cg : kernel_groups()) {
    const CharacterFamily family(cg.group, cg.arrangement);
    const std::size_t dim = cg.group.dim();
    for (long n = 0; n <= family.kappa(); ++n) {
      std::vector<std::size_t> kernel = kernel_of_Rn(cg.group, cg.arrangement, n);
      std::sort(kernel.begin(), kernel.end());
      // {w in Z(W) : w^n = 1} by direct matrix powers
      std::vector<std::size_t> expected;
      for (auto z : cg.group.center()) {
        Matrix p = Matrix::identity(dim);
        for (long k = 0; k < n; ++k)
          p = p * cg.group.element(z);
        if (p == Matrix::identity(dim))
          expected.push_back(z);
      }
      std::sort(expected.begin(), expected.end());
      res.require(kernel == expected, cg.name + " n = " + std::to_string(n) + ": kernel size " +
                                          std::to_string(kernel.size()) + " vs " + std::to_string(expected.size()));
      if (n == 0) {
        auto center = cg.group.center();
        std::sort(center.begin(), center.end());
        res.require(kernel == center, cg.name + ": Ker R_0 != Z(W)");
      }
      if (n == 1)
        res.require(kernel == std::vector<std::size_t>{cg.group.identity_index()}, cg.name + ": R_1 not faithful");
    }
  }
  if (res.pass)
    res.detail << "G4, G12, G(3,1,2), G(2,1,3), n = 0..kappa";
  return res;
}

Result criterion8() {
  Result res;
  auto run = [&](const CatalogGroup &cg, std::size_t h, std::size_t fixer_order) {
    const RestrictionResult r = restriction_check(cg.group, cg.arrangement, generic_vector_in(cg.arrangement, h));
    res.require(r.holds, cg.name + " H" + std::to_string(h) + ": restriction fails");
    res.require(!r.vacuous, cg.name + " H" + std::to_string(h) + ": vacuous");
    res.require(r.fixer_order == fixer_order, cg.name + " H" + std::to_string(h) + ": fixer order " +
                                                   std::to_string(r.fixer_order) + ", expected " +
                                                   std::to_string(fixer_order));
  };
  const CatalogGroup a3 = build(coxeter(CoxeterType::A, 3));
  run(a3, 0, 2);
  const CatalogGroup g4 = build(exceptional(4));
  run(g4, 0, 3);
  const CatalogGroup b3 = build(imprimitive(2, 1, 3));
  res.require(b3.arrangement.orbits().size() == 2, "G(2,1,3) should have two hyperplane orbits");
  for (const auto &orbit : b3.arrangement.orbits())
    run(b3, orbit.front(), 2);
  if (res.pass)
    res.detail << "A3 (|W0| = 2), G4 (|W0| = 3), G(2,1,3) both orbits, n = 0..kappa";
  return res;
}

Result criterion9() {
  Result res;
  std::size_t checked = 0;
  for (const auto &cg : kernel_groups()) {
    const int kappa = CharacterFamily(cg.group, cg.arrangement).kappa();
    const ClassFunction chi1 = chi(cg.group, cg.arrangement, 1);
    for (long n = 1; n < kappa; ++n) {
      if (std::gcd(n, static_cast<long>(kappa)) != 1)
        continue;
      ++checked;
      // apply zeta_kappa -> zeta_kappa^n value by value
      std::vector<CycNum> conj;
      for (const auto &v : chi1.values())
        conj.push_back(v.lifted(kappa).galois(n));
      res.require(chi(cg.group, cg.arrangement, n) == ClassFunction(cg.group, conj),
                  cg.name + " n = " + std::to_string(n));
      res.require(galois_check(cg.group, cg.arrangement, n), cg.name + " galois_check n = " + std::to_string(n));
    }
  }
  if (res.pass)
    res.detail << checked << " (group, n) pairs";
  return res;
}

Result criterion10() {
  Result res;
  for (const auto &spec : {coxeter(CoxeterType::A, 2), coxeter(CoxeterType::A, 3), coxeter(CoxeterType::B, 2),
                           coxeter(CoxeterType::B, 3), coxeter(CoxeterType::D, 4)}) {
    const CatalogGroup cg = build(spec);
    const SignModelCheck check = check_sign_model(cg, coxeter_sign_model(cg));
    const ClassFunction chi0 = chi(cg.group, cg.arrangement, 0), chi1 = chi(cg.group, cg.arrangement, 1);
    res.require(check.monomial && check.homomorphism && check.sign_rule, cg.name + ": sign model is not a signed action");
    res.require(sign_model_character(cg, check) == chi1, cg.name + ": sign-model character != chi_1");
    res.require(chi1 != chi0, cg.name + ": chi_1 = chi_0");
    // s1 = first Coxeter generator
    const auto s1 = *cg.group.index_of(cg.group.generators().front());
    const CycNum diff = chi0.at_element(s1) - chi1.at_element(s1);
    res.require(diff == CycNum(1), cg.name + ": tr R_0(s1) - tr R_1(s1) = " + diff.to_string() + ", expected 1");
  }
  struct Expect {
    GroupSpec spec;
    long chi0, chi1;
  };
  for (const auto &[spec, e0, e1] : {Expect{coxeter(CoxeterType::A, 3), 3, 2}, Expect{coxeter(CoxeterType::A, 4), 3, 2},
                                     Expect{coxeter(CoxeterType::B, 3), 10, 5}, Expect{coxeter(CoxeterType::B, 4), 10, 5}}) {
    const CatalogGroup cg = build(spec);
    const ClassFunction chi0 = chi(cg.group, cg.arrangement, 0), chi1 = chi(cg.group, cg.arrangement, 1);
    const CycNum n0 = inner_product(chi0, chi0), n1 = inner_product(chi1, chi1);
    res.require(n0 == CycNum(e0), cg.name + ": <chi_0,chi_0> = " + n0.to_string() + ", expected " + std::to_string(e0));
    res.require(n1 == CycNum(e1), cg.name + ": <chi_1,chi_1> = " + n1.to_string() + ", expected " + std::to_string(e1));
  }
  if (res.pass)
    res.detail << "A2, A3, B2, B3, D4 sign models; inner products A3, A4, B3, B4";
  return res;
}

Result criterion11() {
  Result res;
  const G12ModelCheck c = g12_model_check();
  res.require(c.roots_match, "listed vectors are not the roots of the model");
  res.require(c.equivariant, "equivariance defect is nonempty");
  res.require(c.sum_of_squares_zero, "sum of alpha_H^2 is nonzero");
  res.require(c.form_proportional, "invariant form not proportional to the listed form");
  res.require(c.signed_action && c.monomial, "12-dimensional action is not by {0,+-1} monomial matrices");
  if (res.pass)
    res.detail << "12 vectors, no defect, sum of squares 0, form proportional, monomial {0,+-1}";
  return res;
}

Result criterion12() {
  Result res;
  const auto t0 = std::chrono::steady_clock::now();
  const Complex two_pi_i(0.0, 2.0 * oracle::kPi);
  for (const auto &spec : {imprimitive(2, 1, 2), exceptional(4)}) {
    const CatalogGroup cg = build(spec);
    const Arrangement &a = cg.arrangement;
    const NumericArrangement na(a);
    const Point z = default_basepoint(na, kSeed);
    std::vector<oracle::CVec> roots;
    for (const auto &h : a.hyperplanes())
      roots.push_back(oracle::numeric(h.root));
    for (std::size_t h = 0; h < a.size(); ++h) {
      const std::string tag = cg.name + " H" + std::to_string(h);
      const PathTrace loop = loop_around(a, h, z);
      res.require(std::abs(loop.integrals[h] - two_pi_i) < kIntegralTol, tag + ": loop integral");
      const PathTrace braid = braided_reflection_path(cg.group, a, h, z);
      for (std::size_t k = 0; k < a.size(); ++k) {
        const bool orthogonal = k != h && hermitian(a.form(), a[h].root, a[k].root).is_zero();
        if (orthogonal) {
          res.require(std::abs(loop.integrals[k]) < kIntegralTol, tag + ": loop integral on orthogonal H" + std::to_string(k));
          res.require(std::abs(braid.integrals[k]) < kIntegralTol, tag + ": braid integral on orthogonal H" + std::to_string(k));
        }
      }
      const ComplexMatrix m1 = monodromy_matrix(cg.group, a, braid, 1.0);
      res.require(std::abs(m1(h, h) - std::exp(two_pi_i / double(a[h].d))) < kIntegralTol, tag + ": braid diagonal");
    }
    // 20 random paths through the suite; traces there are compared with the exact characters
    const MonodromyReport report = run_monodromy_suite(cg, kSeed, 20);
    for (const auto &c : report.checks)
      if (c.name.find("random paths") != std::string::npos)
        res.require(c.pass && (c.name.find("trace") == std::string::npos || c.tolerance <= kTraceTol),
                    cg.name + ": " + c.name);
    // independent numeric characters on the random paths that ended at a known element
    std::size_t random_seen = 0;
    for (const auto &p : report.paths) {
      if (!p.element || p.kind.rfind("random", 0) != 0)
        continue;
      ++random_seen;
      for (int n = 0; n <= 2; ++n)
        res.require(std::abs(p.traces[n] - oracle::numeric_chi(cg.group.element(*p.element), roots, n)) < kTraceTol,
                    cg.name + ": random path trace h = " + std::to_string(n));
    }
    res.require(random_seen == 20, cg.name + ": " + std::to_string(random_seen) + " of 20 random paths traced");
    if (cg.name == "G4") {
      const PathTrace central = central_path(cg.group, a, z, oracle::kPi);
      const ComplexMatrix m = monodromy_matrix(cg.group, a, central, 1.0);
      const double dev = (m + ComplexMatrix::Identity(a.size(), a.size())).cwiseAbs().maxCoeff();
      res.require(central.endpoint_element && cg.group.element(*central.endpoint_element) ==
                                                  Matrix::identity(2).scaled(CycNum(-1)),
                  "G4 central path does not end at -z");
      res.require(dev < kIntegralTol, "G4 central R_1 deviates from -Id by " + std::to_string(dev));
    }
  }
  const double dt = seconds_since(t0);
  res.require(dt < kMonodromyLimit, "took " + std::to_string(dt) + " s");
  if (res.pass)
    res.detail << "G(2,1,2) and G4: loops, braids, 20 random paths each, G4 central -Id";
  return res;
}

Result criterion13() {
  Result res;
  const auto t0 = std::chrono::steady_clock::now();
  const props::Outcome field = props::field_axioms(kSeed);
  const props::Outcome semi = props::semisimplicity(sweep::catalog_entries());
  const props::Outcome poin = props::poincare_properties(kSeed);
  const double dt = seconds_since(t0);
  res.require(field.failures == 0, "field axioms: " + field.first_failure);
  res.require(semi.failures == 0, "semisimplicity: " + semi.first_failure);
  res.require(poin.failures == 0, "Poincare: " + poin.first_failure);
  res.require(dt < kPropertyLimit, "took " + std::to_string(dt) + " s");
  if (res.pass)
    res.detail << field.cases << " field, " << semi.cases << " element, " << poin.cases << " Poincare cases";
  return res;
}

} // namespace

int main() {
  const std::vector<std::pair<const char *, std::function<Result()>>> criteria = {
      {"kappa reproduction (G4, G12)", criterion1},
      {"imprimitive kappa law", criterion2},
      {"A-indices are the divisors of kappa", criterion3},
      {"Phi surjective iff irreducible; xyz(x-y)(y-z)", criterion4},
      {"|A| >= n(n+1)/2, equality exactly in type A", criterion5},
      {"G4 character table", criterion6},
      {"kernels of R_n", criterion7},
      {"parabolic restriction", criterion8},
      {"Galois conjugation", criterion9},
      {"Coxeter sign model", criterion10},
      {"G12 equivariance", criterion11},
      {"numeric monodromy", criterion12},
      {"property suites", criterion13},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception &e) {
      r.pass = false;
      r.detail.str("");
      r.detail << "exception: " << e.what();
    }
    const double dt = seconds_since(t0);
    std::printf("%2zu %s  %s  [%.2f s]  %s\n", i + 1, r.pass ? "PASS" : "FAIL", criteria[i].first, dt,
                r.detail.str().c_str());
    std::fflush(stdout);
    failed += !r.pass;
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
