#pragma once

// Hand-rolled generators and property runners shared by the doctest suite
// and the acceptance binary. Each runner returns the number of failures.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "reflwb/arrangement.hpp"
#include "reflwb/catalog.hpp"
#include "reflwb/cyclo.hpp"
#include "reflwb/matgroup.hpp"
#include "sweep.hpp"

namespace props {

struct Outcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string &what) {
    ++cases;
    if (!ok && failures++ == 0)
      first_failure = what;
  }
};

/// Sparse random element of Q(zeta_m): a few terms with small rational coefficients.
inline reflwb::CycNum random_cyc(std::mt19937_64 &rng, int m) {
  std::uniform_int_distribution<int> terms(0, 4), expo(0, 2 * m), num(-6, 6), den(1, 5);
  reflwb::CycNum x(reflwb::Rational(num(rng), den(rng)));
  for (int t = terms(rng); t > 0; --t)
    x += reflwb::CycNum::zeta(m, expo(rng)) * reflwb::CycNum(reflwb::Rational(num(rng), den(rng)));
  return x;
}

inline Outcome field_axioms(std::uint64_t seed, int triples = 500, std::vector<int> orders = {3, 4, 6, 8, 12, 24}) {
  using reflwb::CycNum;
  Outcome o;
  std::mt19937_64 rng(seed);
  for (int m : orders)
    for (int k = 0; k < triples; ++k) {
      const CycNum a = random_cyc(rng, m), b = random_cyc(rng, m), c = random_cyc(rng, m);
      const std::string tag = "order " + std::to_string(m) + " triple " + std::to_string(k);
      o.expect(a + b == b + a, tag + ": additive commutativity");
      o.expect(a * b == b * a, tag + ": multiplicative commutativity");
      o.expect((a + b) + c == a + (b + c), tag + ": additive associativity");
      o.expect((a * b) * c == a * (b * c), tag + ": multiplicative associativity");
      o.expect(a * (b + c) == a * b + a * c, tag + ": distributivity");
      o.expect(a + CycNum(0) == a && a * CycNum(1) == a, tag + ": identities");
      o.expect((a - a).is_zero(), tag + ": additive inverse");
      if (!a.is_zero())
        o.expect((a * a.inverse()).is_one() && (b / a) * a == b, tag + ": multiplicative inverse");
      o.expect(a.conj().conj() == a && (a * b).conj() == a.conj() * b.conj(), tag + ": conjugation");
      o.expect(a.reduced() == a && a.reduced().reduced() == a.reduced(), tag + ": reduction idempotent");
      o.expect(std::abs((a * b + c).embed() - (oracle::value(a) * oracle::value(b) + oracle::value(c))) <
                   1e-9 * (1.0 + std::abs(oracle::value(a) * oracle::value(b) + oracle::value(c))),
               tag + ": embedding");
    }
  return o;
}

inline Outcome semisimplicity(const std::vector<sweep::Entry> &entries) {
  Outcome o;
  for (const auto &entry : entries) {
    const reflwb::CatalogGroup cg = reflwb::build(entry.spec);
    for (std::size_t w = 0; w < cg.group.order(); ++w)
      o.expect(reflwb::is_semisimple(cg.group.element(w)), entry.label + " element " + std::to_string(w));
  }
  return o;
}

/// Random central arrangement: distinct nonzero integer covectors, none proportional.
inline reflwb::LinearArrangement random_arrangement(std::mt19937_64 &rng, std::size_t dim, std::size_t max_forms) {
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<std::size_t> count(1, max_forms);
  reflwb::LinearArrangement a;
  a.dim = dim;
  const std::size_t want = count(rng);
  for (int guard = 0; a.forms.size() < want && guard < 200; ++guard) {
    reflwb::Vector v;
    for (std::size_t i = 0; i < dim; ++i)
      v.push_back(reflwb::CycNum(coef(rng)));
    if (reflwb::is_zero(v))
      continue;
    bool fresh = true;
    for (const auto &f : a.forms)
      fresh = fresh && !reflwb::proportional(f, v);
    if (fresh)
      a.forms.push_back(v);
  }
  return a;
}

inline Outcome poincare_properties(std::uint64_t seed, int trials = 60) {
  Outcome o;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dims(1, 3);
  for (int t = 0; t < trials; ++t) {
    const auto a = random_arrangement(rng, dims(rng), 5);
    const auto b = random_arrangement(rng, dims(rng), 5);
    const reflwb::IntPoly pa = reflwb::poincare_polynomial(a), pb = reflwb::poincare_polynomial(b);
    const std::string tag = "trial " + std::to_string(t);
    o.expect(reflwb::poincare_polynomial(reflwb::product(a, b)) == reflwb::poly_multiply(pa, pb),
             tag + ": multiplicativity");
    o.expect(reflwb::poly_divide(pa, {1, 1}).has_value(), tag + ": divisible by 1 + t");
    o.expect(pa == oracle::whitney_poincare(a.forms, a.dim), tag + ": Whitney formula");
    o.expect(pa.size() > 1 && pa[1] == static_cast<long>(a.forms.size()), tag + ": linear coefficient");
  }
  return o;
}

} // namespace props
