#include "reflwb/monodromy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "reflwb/repfamily.hpp"

namespace reflwb {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

ComplexMatrix embed_matrix(const Matrix &m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = m(i, j).embed();
  return out;
}

Point embed_vector(const Vector &v) {
  Point out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out(i) = v[i].embed();
  return out;
}

Complex alpha_at(const NumericArrangement &a, std::size_t h, const Point &z) { return (a.forms[h] * z)(0, 0); }

void check_regular(const NumericArrangement &a, const Point &z) {
  for (std::size_t h = 0; h < a.size(); ++h)
    if (a.relative_value(h, z) <= kRegularityThreshold)
      throw PathError("sample lies on hyperplane " + std::to_string(h));
}

} // namespace

NumericArrangement::NumericArrangement(const Arrangement &a) : dim(a.dim()), form(embed_matrix(a.form())) {
  for (const auto &hp : a.hyperplanes()) {
    Eigen::RowVectorXcd f(hp.alpha.size());
    for (std::size_t i = 0; i < hp.alpha.size(); ++i)
      f(i) = hp.alpha[i].embed();
    forms.push_back(f);
    roots.push_back(embed_vector(hp.root));
  }
}

double NumericArrangement::relative_value(std::size_t h, const Point &z) const {
  const double scale = forms[h].norm() * z.norm();
  if (scale == 0.0)
    return 0.0;
  return std::abs(alpha_at(*this, h, z)) / scale;
}

double NumericArrangement::norm(const Point &z) const {
  return std::sqrt(std::max(0.0, (z.adjoint() * form * z)(0, 0).real()));
}

double NumericArrangement::distance(std::size_t h, const Point &z) const {
  const Point &e = roots[h];
  return std::abs((e.adjoint() * form * z)(0, 0)) / norm(e);
}

PathTrace PathTrace::then(const PathTrace &next) const {
  if (samples.empty())
    return next;
  if (next.samples.empty())
    return *this;
  const Point &a = samples.back();
  const Point &b = next.samples.front();
  if ((a - b).norm() > 1e-8 * (1.0 + a.norm()))
    throw std::logic_error("concatenated paths do not meet");
  PathTrace out = *this;
  out.samples.insert(out.samples.end(), next.samples.begin() + 1, next.samples.end());
  for (std::size_t h = 0; h < out.integrals.size(); ++h)
    out.integrals[h] += next.integrals.at(h);
  out.endpoint_element.reset();
  return out;
}

PathTrace integrate_path(const NumericArrangement &a, const std::vector<Point> &samples) {
  if (samples.empty())
    throw PathError("empty path");
  PathTrace trace;
  trace.samples = samples;
  trace.integrals.assign(a.size(), Complex(0.0, 0.0));
  for (const auto &z : samples) {
    if (static_cast<std::size_t>(z.size()) != a.dim)
      throw PathError("sample has the wrong dimension");
    check_regular(a, z);
  }
  for (std::size_t k = 0; k + 1 < samples.size(); ++k)
    for (std::size_t h = 0; h < a.size(); ++h) {
      const Complex step = std::log(alpha_at(a, h, samples[k + 1]) / alpha_at(a, h, samples[k]));
      if (std::abs(step.imag()) >= kPi / 2)
        throw PathError("step " + std::to_string(k) + " is too coarse for hyperplane " + std::to_string(h) +
                        "; refine the sampling");
      trace.integrals[h] += step;
    }
  return trace;
}

PathTrace integrate_path(const Arrangement &a, const std::vector<Point> &samples) {
  return integrate_path(NumericArrangement(a), samples);
}

PathTrace trace_curve(const NumericArrangement &a, const std::function<Point(double)> &gamma, int initial_segments) {
  constexpr int kMaxDepth = 40;
  std::vector<Point> samples{gamma(0.0)};
  check_regular(a, samples.front());

  auto fine_enough = [&](const Point &p, const Point &q) {
    for (std::size_t h = 0; h < a.size(); ++h)
      if (std::abs(std::arg(alpha_at(a, h, q) / alpha_at(a, h, p))) >= kPi / 4)
        return false;
    return true;
  };
  std::function<void(double, const Point &, double, const Point &, int)> refine =
      [&](double t0, const Point &p0, double t1, const Point &p1, int depth) {
        check_regular(a, p1);
        if (fine_enough(p0, p1)) {
          samples.push_back(p1);
          return;
        }
        if (depth >= kMaxDepth)
          throw PathError("path refinement did not converge; the path passes too close to a hyperplane");
        const double tm = 0.5 * (t0 + t1);
        const Point pm = gamma(tm);
        refine(t0, p0, tm, pm, depth + 1);
        refine(tm, pm, t1, p1, depth + 1);
      };
  for (int k = 0; k < initial_segments; ++k) {
    const double t0 = static_cast<double>(k) / initial_segments;
    const double t1 = static_cast<double>(k + 1) / initial_segments;
    const Point p0 = samples.back();
    refine(t0, p0, t1, gamma(t1), 0);
  }
  return integrate_path(a, samples);
}

std::optional<std::size_t> identify_endpoint(const GroupModel &g, const Point &z, const Point &z_end, double tol) {
  for (std::size_t w = 0; w < g.order(); ++w)
    if ((embed_matrix(g.element(w)) * z - z_end).norm() <= tol * (1.0 + z.norm()))
      return w;
  return std::nullopt;
}

ComplexMatrix permutation_matrix(const Arrangement &a, const Matrix &w) {
  ComplexMatrix m = ComplexMatrix::Zero(a.size(), a.size());
  const auto perm = a.permutation(w);
  for (std::size_t h = 0; h < a.size(); ++h)
    m(perm[h], h) = 1.0;
  return m;
}

ComplexMatrix monodromy_matrix(const GroupModel &g, const Arrangement &a, const PathTrace &trace, Complex h) {
  if (!trace.endpoint_element)
    throw std::invalid_argument("path endpoint element is unknown");
  ComplexMatrix m = ComplexMatrix::Zero(a.size(), a.size());
  const auto perm = a.permutation(g.element(*trace.endpoint_element));
  for (std::size_t k = 0; k < a.size(); ++k)
    m(perm[k], k) = std::exp(h * trace.integrals.at(k));
  return m;
}

Point default_basepoint(const NumericArrangement &a, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  auto coordinate = [&] {
    const double re = static_cast<double>(num(rng)) / den(rng);
    const double im = static_cast<double>(num(rng)) / den(rng);
    return Complex(re, im);
  };
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Point z(a.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
      z(i) = coordinate();
    if (z.norm() == 0.0)
      continue;
    bool ok = true;
    for (std::size_t h = 0; h < a.size() && ok; ++h) {
      ok = a.relative_value(h, z) >= 0.05;
      // keep the projection to H away from 0 so braided paths have room
      const Point &e = a.roots[h];
      const Complex c = (e.adjoint() * a.form * z)(0, 0) / (e.adjoint() * a.form * e)(0, 0);
      ok = ok && (a.dim == 1 || a.norm(z - c * e) >= 0.05 * a.norm(z));
    }
    if (ok)
      return z;
  }
  throw PathError("no regular basepoint found");
}

namespace {

struct Waypoint {
  Point plus;    ///< projection of the basepoint onto H
  Point unit;    ///< F-unit vector along e_H on the basepoint's side
  double radius; ///< F-length of the basepoint's e_H component
  double eps;
};

Waypoint waypoint_near(const NumericArrangement &na, std::size_t h, const Point &z) {
  const Point &e = na.roots.at(h);
  const Complex c = (e.adjoint() * na.form * z)(0, 0) / (e.adjoint() * na.form * e)(0, 0);
  const Point minus = c * e;
  Waypoint w{z - minus, Point(), na.norm(minus), 0.0};
  if (w.radius <= kRegularityThreshold * na.norm(z))
    throw PathError("basepoint lies on hyperplane " + std::to_string(h));
  w.unit = minus / w.radius;
  double nearest = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < na.size(); ++k) {
    if (k == h)
      continue;
    const double dist = na.distance(k, w.plus);
    if (dist <= kRegularityThreshold * (1.0 + na.norm(z)))
      throw PathError("no regular waypoint near hyperplane " + std::to_string(h));
    nearest = std::min(nearest, dist);
  }
  w.eps = std::isfinite(nearest) ? 0.5 * nearest : 0.5 * w.radius;
  return w;
}

} // namespace

PathTrace braided_reflection_path(const GroupModel &g, const Arrangement &a, std::size_t h, const Point &basepoint) {
  const NumericArrangement na(a);
  const Waypoint wp = waypoint_near(na, h, basepoint);
  const int d = a[h].d;
  const std::size_t s = a[h].distinguished_reflection;
  const ComplexMatrix S = embed_matrix(g.element(s));

  auto gamma0 = [&](double t) -> Point { return wp.plus + ((1.0 - t) * wp.radius + t * wp.eps) * wp.unit; };
  auto gamma1 = [&](double t) -> Point { return wp.plus + wp.eps * std::exp(2.0 * kPi * kI * t / double(d)) * wp.unit; };
  auto back = [&](double t) -> Point { return S * gamma0(1.0 - t); };

  PathTrace trace = trace_curve(na, gamma0).then(trace_curve(na, gamma1)).then(trace_curve(na, back));
  trace.endpoint_element = identify_endpoint(g, basepoint, trace.samples.back());
  if (trace.endpoint_element != s)
    throw std::logic_error("braided reflection path does not end at s(basepoint)");
  return trace;
}

PathTrace loop_around(const Arrangement &a, std::size_t h, const Point &basepoint) {
  const NumericArrangement na(a);
  const Waypoint wp = waypoint_near(na, h, basepoint);
  auto gamma0 = [&](double t) -> Point { return wp.plus + ((1.0 - t) * wp.radius + t * wp.eps) * wp.unit; };
  auto circle = [&](double t) -> Point { return wp.plus + wp.eps * std::exp(2.0 * kPi * kI * t) * wp.unit; };
  auto back = [&](double t) -> Point { return gamma0(1.0 - t); };
  PathTrace trace = trace_curve(na, gamma0).then(trace_curve(na, circle)).then(trace_curve(na, back));
  trace.endpoint_element = 0;
  return trace;
}

PathTrace central_path(const GroupModel &g, const Arrangement &a, const Point &z, double theta) {
  const NumericArrangement na(a);
  PathTrace trace = trace_curve(na, [&](double t) -> Point { return std::exp(kI * theta * t) * z; });
  trace.endpoint_element = identify_endpoint(g, z, trace.samples.back());
  return trace;
}

double spectrum_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.rows() != b.rows())
    return std::numeric_limits<double>::infinity();
  const Eigen::VectorXcd ea = Eigen::ComplexEigenSolver<ComplexMatrix>(a, false).eigenvalues();
  const Eigen::VectorXcd eb = Eigen::ComplexEigenSolver<ComplexMatrix>(b, false).eigenvalues();
  std::vector<bool> used(eb.size(), false);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < ea.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    Eigen::Index pick = -1;
    for (Eigen::Index j = 0; j < eb.size(); ++j)
      if (!used[j] && std::abs(ea(i) - eb(j)) < best) {
        best = std::abs(ea(i) - eb(j));
        pick = j;
      }
    used[pick] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

bool MonodromyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const NumericCheck &c) { return c.pass; });
}

namespace {

class SuiteBuilder {
public:
  SuiteBuilder(const CatalogGroup &cg, MonodromyReport &report)
      : g_(cg.group), a_(cg.arrangement), family_(g_, a_), report_(report) {
    for (long n = 0; n <= 2; ++n)
      chi_.push_back(family_.chi(n));
  }

  void check(std::string name, double delta, double tol) {
    report_.checks.push_back({std::move(name), delta, tol, delta <= tol});
  }

  void record(std::string kind, const PathTrace &trace) {
    MonodromyPathReport r{std::move(kind), trace.endpoint_element, trace.integrals, {}};
    if (trace.endpoint_element)
      for (int h = 0; h <= 2; ++h)
        r.traces.push_back(monodromy_matrix(g_, a_, trace, double(h)).trace());
    report_.paths.push_back(std::move(r));
  }

  /// Largest deviation of trace(R_h) from chi_h over h = 0, 1, 2.
  std::array<double, 3> trace_deltas(const PathTrace &trace) const {
    std::array<double, 3> out{};
    for (int h = 0; h <= 2; ++h) {
      const Complex tr = monodromy_matrix(g_, a_, trace, double(h)).trace();
      out[h] = std::abs(tr - chi_[h].at_element(*trace.endpoint_element).embed());
    }
    return out;
  }

  /// Distance of integral_H - i theta to 2 pi i Z, over H fixed by w with w e_H = e^{i theta} e_H.
  double lemma_delta(const PathTrace &trace) const {
    const Matrix &w = g_.element(*trace.endpoint_element);
    double worst = 0.0;
    for (std::size_t h = 0; h < a_.size(); ++h) {
      auto zeta = proportionality_factor(w * a_[h].root, a_[h].root);
      if (!zeta)
        continue;
      const double theta = std::arg(zeta->embed());
      const Complex rest = (trace.integrals[h] - kI * theta) / (2.0 * kPi * kI);
      worst = std::max(worst, std::abs(rest - std::round(rest.real())) * 2.0 * kPi);
    }
    return worst;
  }

  const GroupModel &g_;
  const Arrangement &a_;
  CharacterFamily family_;
  std::vector<ClassFunction> chi_;
  MonodromyReport &report_;
};

std::string hname(std::size_t h) { return "H" + std::to_string(h); }

} // namespace

MonodromyReport run_monodromy_suite(const CatalogGroup &cg, std::uint64_t seed, int random_paths) {
  const GroupModel &g = cg.group;
  const Arrangement &a = cg.arrangement;
  if (a.dim() > 2)
    throw std::invalid_argument("numeric monodromy supports rank <= 2 only; " + cg.name + " has rank " +
                                std::to_string(a.dim()));
  const NumericArrangement na(a);
  MonodromyReport report;
  report.seed = seed;
  const Point z = default_basepoint(na, seed);
  for (Eigen::Index i = 0; i < z.size(); ++i)
    report.basepoint.push_back(z(i));
  SuiteBuilder suite(cg, report);
  const int kappa = suite.family_.kappa();

  for (std::size_t h = 0; h < a.size(); ++h) {
    const PathTrace loop = loop_around(a, h, z);
    suite.record("loop " + hname(h), loop);
    suite.check("loop around " + hname(h) + ": integral = 2 pi i", std::abs(loop.integrals[h] - 2.0 * kPi * kI), 1e-6);
    double others = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (k != h)
        others = std::max(others, std::abs(loop.integrals[k]));
    if (a.size() > 1)
      suite.check("loop around " + hname(h) + ": other integrals = 0", others, 1e-6);

    const PathTrace braid = braided_reflection_path(g, a, h, z);
    suite.record("braided reflection " + hname(h), braid);
    const int d = a[h].d;
    suite.check("braided " + hname(h) + ": integral = 2 pi i / d", std::abs(braid.integrals[h] - 2.0 * kPi * kI / double(d)),
                1e-6);
    double orthogonal = 0.0;
    bool any_orthogonal = false;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (k != h && hermitian(a.form(), a[h].root, a[k].root).is_zero()) {
        any_orthogonal = true;
        orthogonal = std::max(orthogonal, std::abs(braid.integrals[k]));
      }
    if (any_orthogonal)
      suite.check("braided " + hname(h) + ": orthogonal-root integrals = 0", orthogonal, 1e-6);
    const ComplexMatrix m1 = monodromy_matrix(g, a, braid, 1.0);
    suite.check("braided " + hname(h) + ": R_1 diagonal = exp(2 pi i / d)",
                std::abs(m1(h, h) - std::exp(2.0 * kPi * kI / double(d))), 1e-6);
    const ComplexMatrix mk = monodromy_matrix(g, a, braid, double(kappa));
    suite.check("braided " + hname(h) + ": spectrum R_kappa = spectrum R_0",
                spectrum_distance(mk, permutation_matrix(a, g.element(a[h].distinguished_reflection))), 1e-5);
  }

  for (auto c : g.center()) {
    const Matrix &m = g.element(c);
    if (c == g.identity_index() || m != Matrix::identity(m.rows()).scaled(m(0, 0)))
      continue;
    const Complex lambda = g.element(c)(0, 0).embed();
    const double theta = std::arg(lambda);
    const PathTrace path = central_path(g, a, z, theta);
    suite.record("central", path);
    suite.check("central path: endpoint element", path.endpoint_element == c ? 0.0 : 1.0, 0.0);
    if (path.endpoint_element != c)
      continue;
    double worst = 0.0;
    for (const auto &v : path.integrals)
      worst = std::max(worst, std::abs(v - kI * theta));
    suite.check("central path: integrals = i theta", worst, 1e-6);
    const ComplexMatrix m1 = monodromy_matrix(g, a, path, 1.0);
    const ComplexMatrix scalar = lambda * ComplexMatrix::Identity(a.size(), a.size());
    suite.check("central path: R_1 = lambda Id", (m1 - scalar).cwiseAbs().maxCoeff(), 1e-6);
  }

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::array<double, 3> trace_worst{};
  double lemma_worst = 0.0, additivity_worst = 0.0;
  bool endpoints_ok = true;
  for (int k = 0; k < random_paths; ++k) {
    const std::size_t w = (k % 2 == 0) ? g.identity_index() : pick(rng);
    const Point target = embed_matrix(g.element(w)) * z;
    PathTrace path;
    std::vector<PathTrace> pieces;
    for (int attempt = 0;; ++attempt) {
      std::vector<Point> corners{z};
      for (int c = 0; c < 2; ++c) {
        Point p(z.size());
        for (Eigen::Index i = 0; i < p.size(); ++i)
          p(i) = Complex(gauss(rng), gauss(rng)) * z.norm();
        corners.push_back(p);
      }
      corners.push_back(target);
      try {
        pieces.clear();
        for (std::size_t c = 0; c + 1 < corners.size(); ++c) {
          const Point p = corners[c], q = corners[c + 1];
          pieces.push_back(trace_curve(na, [&](double t) -> Point { return p + t * (q - p); }));
        }
        break;
      } catch (const PathError &) {
        if (attempt >= 20)
          throw;
      }
    }
    path = pieces[0].then(pieces[1]).then(pieces[2]);
    const PathTrace direct = integrate_path(na, path.samples);
    for (std::size_t h = 0; h < a.size(); ++h)
      additivity_worst = std::max(additivity_worst, std::abs(direct.integrals[h] - path.integrals[h]));
    path.endpoint_element = identify_endpoint(g, z, path.samples.back());
    if (path.endpoint_element != w) {
      endpoints_ok = false;
      continue;
    }
    suite.record(w == g.identity_index() ? "random loop" : "random path", path);
    const auto deltas = suite.trace_deltas(path);
    for (int h = 0; h <= 2; ++h)
      trace_worst[h] = std::max(trace_worst[h], deltas[h]);
    lemma_worst = std::max(lemma_worst, suite.lemma_delta(path));
  }
  const std::string count = std::to_string(random_paths);
  suite.check(count + " random paths: endpoint elements identified", endpoints_ok ? 0.0 : 1.0, 0.0);
  for (int h = 0; h <= 2; ++h)
    suite.check(count + " random paths: trace R_" + std::to_string(h) + " = chi_" + std::to_string(h), trace_worst[h],
                1e-5);
  suite.check(count + " random paths: integrals in i theta + 2 pi i Z", lemma_worst, 1e-6);
  suite.check(count + " random paths: concatenation additivity", additivity_worst, 1e-9);
  return report;
}

} // namespace reflwb
