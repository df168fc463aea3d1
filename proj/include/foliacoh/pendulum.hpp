#ifndef FOLIACOH_PENDULUM_HPP
#define FOLIACOH_PENDULUM_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "foliacoh/rational.hpp"

namespace foliacoh::pendulum {

using Vec3 = std::array<double, 3>;

/// Point of T S² in R³ x R³: |x| = 1 and <x, v> = 0, both to 1e-12.
class PendulumState {
 public:
  PendulumState(const Vec3& x, const Vec3& v);
  const Vec3& x() const { return x_; }
  const Vec3& v() const { return v_; }

 private:
  Vec3 x_;
  Vec3 v_;
};

/// x = (sin φ cos θ, sin φ sin θ, cos φ); φ must lie strictly inside (0, π).
struct PolarState {
  double phi = 0;
  double theta = 0;
  double phi_dot = 0;
  double theta_dot = 0;

  PendulumState to_cartesian() const;
};

double energy(const PendulumState& s);  // ½<v,v> + x₃
double moment(const PendulumState& s);  // x₁v₂ - v₁x₂
double energy(const PolarState& s);
double moment(const PolarState& s);     // sin²φ θ̇

/// V_i(φ) = i²/(2 sin²φ) + cos φ. Throws InputError outside (0, π).
double effective_potential(double i, double phi);

class EffectivePotentialProfile {
 public:
  explicit EffectivePotentialProfile(double i) : i_(i) {}
  double i() const { return i_; }
  double operator()(double phi) const { return effective_potential(i_, phi); }
  double derivative(double phi) const;
  /// Evenly spaced (φ, V_i(φ)) pairs on [lo, hi].
  std::vector<std::pair<double, double>> samples(double lo, double hi, std::size_t n) const;
  /// Location and value of the minimum over (0, π); φ = π, value -1 for i = 0.
  std::pair<double, double> minimum() const;

 private:
  double i_;
};

/// (½α² - 3/(2α²), α - α⁻³) as (E, I). Throws InputError for |α| < 1.
std::pair<double, double> bifurcation_curve(double alpha);

/// The two isolated singular values, as (E, I).
inline constexpr std::pair<double, double> kStableEquilibriumValue{-1.0, 0.0};
inline constexpr std::pair<double, double> kFocusValue{1.0, 0.0};

enum class CircleKind { Maximal, Minimal, Saddle };
std::string to_string(CircleKind k);

struct CriticalCircle {
  double phi0 = 0;
  double theta_dot = 0;
  double i = 0;  // sin²φ₀ θ̇
  CircleKind kind = CircleKind::Minimal;
};

/// Relative equilibria on {E = e}: u - 3/u = 2e with u = θ̇², cos φ₀ = -1/u.
/// Empty for e <= -1. Maximal circle first.
std::vector<CriticalCircle> critical_circles(double e);

/// Positive root of u - 3/u = 2e on (0, 1e6], safeguarded Newton.
double solve_u(double e);

enum class FiberKind { Empty, Torus, Circle };
std::string to_string(FiberKind k);

struct FiberClassification {
  std::size_t count = 0;
  FiberKind kind = FiberKind::Empty;
  bool critical = false;
  std::string diagnostic;
};

FiberClassification fiber_components(double e, double i);

/// |i| at which min V_i = e, by bisection. Requires e > -1.
double i_max(double e);

enum class AtomType { A, Saddle, Torus, KleinBottle };
std::string label(AtomType t);

struct Atom {
  AtomType type = AtomType::A;
  CircleKind kind = CircleKind::Minimal;
  double i = 0;
};

/// r-mark of an edge: a rational in [0, 1) or infinity.
struct RMark {
  bool infinite = false;
  Rational value = 0;
  std::string to_string() const;
};

struct MoleculeEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  RMark r;
};

struct MoleculeGraph {
  std::vector<Atom> atoms;
  std::vector<MoleculeEdge> edges;
  /// Gluing matrix kept with the mark for the ℝP³ regime, row-major.
  std::optional<std::array<int, 4>> gluing;

  /// "segment", "point", "empty" or "graph".
  std::string factor_set() const;
};

/// Throws InputError unless e > -1, e != 1 and e is finite.
MoleculeGraph build_molecule(double e, std::size_t sweep_points = 401);

/// Dimension of piecewise-linear functions on the graph with `nodes_per_edge`
/// interior nodes per edge and shared vertex values.
std::size_t h0_partition(const MoleculeGraph& mol, std::size_t nodes_per_edge);

/// Per edge: vertical cohomology of (base_nodes_per_edge points) x torus.
std::vector<std::vector<std::size_t>> regular_part_vertical_cohomology(const MoleculeGraph& mol,
                                                                       std::size_t base_nodes_per_edge);

/// Rounds to 12 significant digits.
double round12(double x);
std::string format12(double x);

/// "start:end:count".
struct AlphaRange {
  double start = 1;
  double end = 3;
  std::size_t count = 100;
};
AlphaRange parse_alpha_range(const std::string& text);

std::string bifurcation_csv(const AlphaRange& range);
std::string critical_json(double e);
std::string molecule_dot(const MoleculeGraph& mol);
std::string h0_json(double e, std::size_t nodes_per_edge);

/// General-α closed forms φ₀ = arccos((α - √(α²+12))/3), θ̇ = ∓√(3/(√(α²+12) - α)),
/// evaluated at α = e, against the numeric oracle. nullopt where arccos is
/// undefined.
struct DiscrepancyRow {
  double e = 0;
  double oracle_phi0 = 0;
  double oracle_theta_dot = 0;
  std::optional<double> formula_phi0;
  double formula_theta_dot = 0;
  std::optional<double> phi0_error;
  double theta_dot_error = 0;
};

struct DiscrepancyTable {
  /// arccos((1-√13)/6) and √((√13+1)/2) against the oracle at e = ½.
  double half_closed_phi0 = 0;
  double half_closed_theta_dot = 0;
  double half_oracle_phi0 = 0;
  double half_oracle_theta_dot = 0;
  double half_phi0_error = 0;
  double half_theta_dot_error = 0;
  std::vector<DiscrepancyRow> rows;

  bool agrees_at_half(double tol = 1e-10) const {
    return half_phi0_error <= tol && half_theta_dot_error <= tol;
  }
  std::string to_csv() const;
  std::string to_json() const;
};

DiscrepancyTable discrepancy_table(const std::vector<double>& energies);

}  // namespace foliacoh::pendulum

#endif  // FOLIACOH_PENDULUM_HPP
