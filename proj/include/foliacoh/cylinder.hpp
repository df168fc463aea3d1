#ifndef FOLIACOH_CYLINDER_HPP
#define FOLIACOH_CYLINDER_HPP

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "foliacoh/foliation_models.hpp"

namespace foliacoh {

/// Polynomial in t over Q; coefficient i multiplies t^i. Trailing zeros are
/// trimmed so equality is structural.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t power);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational at_zero() const { return coeffs_.empty() ? Rational(0) : coeffs_.front(); }
  Rational evaluate(const Rational& t) const;

  Polynomial derivative() const;
  /// ∫_0^t p(s) ds.
  Polynomial antiderivative() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Leafwise q-form on M x R for a product model M. part_one holds the
/// dt-free coefficients (fiber q-cochains), part_two the coefficients of the
/// dt-carrying terms φ ∧ dt (fiber (q-1)-cochains). Both are base-major.
struct CylinderForm {
  ProductFoliationModel model;
  int degree = 0;
  std::vector<Polynomial> part_one;
  std::vector<Polynomial> part_two;

  static CylinderForm zero(const ProductFoliationModel& m, int q);

  friend bool operator==(const CylinderForm& a, const CylinderForm& b) {
    return a.degree == b.degree && a.part_one == b.part_one && a.part_two == b.part_two;
  }
};

CylinderForm operator+(const CylinderForm& a, const CylinderForm& b);
CylinderForm operator-(const CylinderForm& a, const CylinderForm& b);
CylinderForm operator*(const Rational& s, const CylinderForm& a);

/// d(a + b∧dt) = d_F a + (d_F b + (-1)^q ∂_t a) ∧ dt on a degree-q form.
CylinderForm cylinder_differential(const CylinderForm& w);

/// K(a) = 0, K(b ∧ dt) = ∫_0^t b: result has degree q-1 and no dt part.
CylinderForm cylinder_homotopy(const CylinderForm& w);

/// π* s*: coefficients evaluated at t = 0, dt parts dropped.
CylinderForm project_section(const CylinderForm& w);

struct HomotopyIdentityReport {
  std::size_t checked = 0;
  std::optional<std::size_t> first_failure;
  std::string lhs;
  std::string rhs;
  bool passed() const { return !first_failure.has_value(); }
};

/// Verifies 1 - π*s* = (-1)^{q-1} (dK - Kd) exactly on every sample.
HomotopyIdentityReport check_homotopy_identity(const ProductFoliationModel& m,
                                               const std::vector<CylinderForm>& samples);

/// Random form of degree q with polynomial coefficients up to `max_power`.
CylinderForm random_cylinder_form(const ProductFoliationModel& m, int q, std::size_t max_power,
                                  std::mt19937_64& rng);

std::string describe(const CylinderForm& w);

}  // namespace foliacoh

#endif  // FOLIACOH_CYLINDER_HPP
