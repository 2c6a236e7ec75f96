#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "reflwb/arrangement.hpp"
#include "reflwb/catalog.hpp"
#include "reflwb/matgroup.hpp"

namespace reflwb {

using Complex = std::complex<double>;
using Point = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Floating-point image of an arrangement: forms, roots and the invariant form.
struct NumericArrangement {
  std::size_t dim = 0;
  std::vector<Eigen::RowVectorXcd> forms;
  std::vector<Point> roots;
  ComplexMatrix form;

  explicit NumericArrangement(const Arrangement &a);
  std::size_t size() const { return forms.size(); }
  /// |alpha_H(z)| / (|alpha_H| |z|)
  double relative_value(std::size_t h, const Point &z) const;
  /// F-distance from z to H.
  double distance(std::size_t h, const Point &z) const;
  double norm(const Point &z) const;
};

class PathError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct PathTrace {
  std::vector<Point> samples;
  std::vector<Complex> integrals; ///< per hyperplane, integral of d alpha_H / alpha_H
  std::optional<std::size_t> endpoint_element;

  /// this followed by next; next must start where this ends.
  PathTrace then(const PathTrace &next) const;
};

constexpr double kRegularityThreshold = 1e-9;

/// Telescoping principal logs along a polyline. Refuses samples on a
/// hyperplane and steps whose argument change reaches pi/2.
PathTrace integrate_path(const NumericArrangement &a, const std::vector<Point> &samples);
PathTrace integrate_path(const Arrangement &a, const std::vector<Point> &samples);

/// Samples gamma on [0, 1], bisecting until every step turns each alpha_H by less than pi/4.
PathTrace trace_curve(const NumericArrangement &a, const std::function<Point(double)> &gamma,
                      int initial_segments = 32);

/// Element w with w z ~ z_end, for z regular.
std::optional<std::size_t> identify_endpoint(const GroupModel &g, const Point &z, const Point &z_end,
                                             double tol = 1e-7);

/// pi(w) diag(exp(h integral_H)) on the basis v_H, with pi(w) v_H = v_{w(H)}.
ComplexMatrix monodromy_matrix(const GroupModel &g, const Arrangement &a, const PathTrace &trace, Complex h);
/// The permutation matrix R_0(w).
ComplexMatrix permutation_matrix(const Arrangement &a, const Matrix &w);

/// Deterministic regular basepoint with small rational real and imaginary parts.
Point default_basepoint(const NumericArrangement &a, std::uint64_t seed);

/// (s.gamma0)^-1 * gamma1 * gamma0 from the basepoint to s(basepoint), s the distinguished reflection of H.
PathTrace braided_reflection_path(const GroupModel &g, const Arrangement &a, std::size_t h, const Point &basepoint);
/// Small circle around H in the complex line through the waypoint near H; closed.
PathTrace loop_around(const Arrangement &a, std::size_t h, const Point &basepoint);
/// t -> exp(i theta t) z, ending at lambda z for lambda = exp(i theta).
PathTrace central_path(const GroupModel &g, const Arrangement &a, const Point &z, double theta);

struct NumericCheck {
  std::string name;
  double delta = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct MonodromyPathReport {
  std::string kind;
  std::optional<std::size_t> element;
  std::vector<Complex> integrals;
  std::vector<Complex> traces; ///< at h = 0, 1, 2
};

struct MonodromyReport {
  std::uint64_t seed = 0;
  std::vector<Complex> basepoint;
  std::vector<NumericCheck> checks;
  std::vector<MonodromyPathReport> paths;
  bool all_pass() const;
};

/// Loops, braided reflections, central loops, random paths; rank <= 2 only.
MonodromyReport run_monodromy_suite(const CatalogGroup &cg, std::uint64_t seed, int random_paths = 20);

/// Greedy matching distance between two spectra.
double spectrum_distance(const ComplexMatrix &a, const ComplexMatrix &b);

} // namespace reflwb
