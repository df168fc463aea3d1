#include "foliacoh/cylinder.hpp"

#include <sstream>

#include "foliacoh/errors.hpp"
#include "foliacoh/vertical_calculus.hpp"

namespace foliacoh {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<long>(i));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::antiderivative() const {
  if (coeffs_.empty()) return {};
  std::vector<Rational> out(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
  }
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Rational(-1) * b; }

Polynomial operator*(const Rational& s, const Polynomial& a) {
  std::vector<Rational> out = a.coeffs_;
  for (auto& c : out) c *= s;
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    os << (first ? "" : " + ") << coeffs_[i].get_str();
    if (i > 0) os << "*t^" << i;
    first = false;
  }
  return os.str();
}

CylinderForm CylinderForm::zero(const ProductFoliationModel& m, int q) {
  return CylinderForm{m, q, std::vector<Polynomial>(m.form_dim(q)),
                      std::vector<Polynomial>(m.form_dim(q - 1))};
}

namespace {

void check_same_shape(const CylinderForm& a, const CylinderForm& b) {
  if (a.degree != b.degree || a.part_one.size() != b.part_one.size() ||
      a.part_two.size() != b.part_two.size()) {
    throw InvariantError("cylinder forms of different shape");
  }
}

// Applies a rational matrix to a vector of polynomials coefficientwise.
std::vector<Polynomial> apply_matrix(const RationalMatrix& m, const std::vector<Polynomial>& v) {
  std::vector<Polynomial> out(m.rows());
  for (const auto& [key, value] : m.entries()) {
    if (!v[key.second].is_zero()) out[key.first] = out[key.first] + value * v[key.second];
  }
  return out;
}

}  // namespace

CylinderForm operator+(const CylinderForm& a, const CylinderForm& b) {
  check_same_shape(a, b);
  CylinderForm out = a;
  for (std::size_t i = 0; i < out.part_one.size(); ++i) out.part_one[i] = out.part_one[i] + b.part_one[i];
  for (std::size_t i = 0; i < out.part_two.size(); ++i) out.part_two[i] = out.part_two[i] + b.part_two[i];
  return out;
}

CylinderForm operator*(const Rational& s, const CylinderForm& a) {
  CylinderForm out = a;
  for (auto& p : out.part_one) p = s * p;
  for (auto& p : out.part_two) p = s * p;
  return out;
}

CylinderForm operator-(const CylinderForm& a, const CylinderForm& b) { return a + Rational(-1) * b; }

CylinderForm cylinder_differential(const CylinderForm& w) {
  const int q = w.degree;
  CylinderForm out = CylinderForm::zero(w.model, q + 1);
  out.part_one = apply_matrix(vertical_differential_matrix(w.model, q), w.part_one);
  out.part_two = apply_matrix(vertical_differential_matrix(w.model, q - 1), w.part_two);
  const Rational sign = (q % 2 == 0) ? 1 : -1;
  for (std::size_t i = 0; i < w.part_one.size(); ++i) {
    out.part_two[i] = out.part_two[i] + sign * w.part_one[i].derivative();
  }
  return out;
}

CylinderForm cylinder_homotopy(const CylinderForm& w) {
  CylinderForm out = CylinderForm::zero(w.model, w.degree - 1);
  for (std::size_t i = 0; i < w.part_two.size(); ++i) out.part_one[i] = w.part_two[i].antiderivative();
  return out;
}

CylinderForm project_section(const CylinderForm& w) {
  CylinderForm out = CylinderForm::zero(w.model, w.degree);
  for (std::size_t i = 0; i < w.part_one.size(); ++i) {
    out.part_one[i] = Polynomial::constant(w.part_one[i].at_zero());
  }
  return out;
}

HomotopyIdentityReport check_homotopy_identity(const ProductFoliationModel& m,
                                               const std::vector<CylinderForm>& samples) {
  HomotopyIdentityReport report;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const CylinderForm& w = samples[k];
    if (w.part_one.size() != m.form_dim(w.degree) || w.part_two.size() != m.form_dim(w.degree - 1)) {
      throw InputError("cylinder form does not match the model");
    }
    const int q = w.degree;
    const CylinderForm lhs = w - project_section(w);
    CylinderForm dk = CylinderForm::zero(m, q);
    if (q > 0) dk = cylinder_differential(cylinder_homotopy(w));
    const CylinderForm kd = cylinder_homotopy(cylinder_differential(w));
    const Rational sign = ((q - 1) % 2 == 0) ? 1 : -1;
    const CylinderForm rhs = sign * (dk - kd);
    ++report.checked;
    if (!(lhs == rhs)) {
      report.first_failure = k;
      report.lhs = describe(lhs);
      report.rhs = describe(rhs);
      break;
    }
  }
  return report;
}

CylinderForm random_cylinder_form(const ProductFoliationModel& m, int q, std::size_t max_power,
                                  std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  std::uniform_int_distribution<std::size_t> power(0, max_power);
  auto random_poly = [&] {
    std::vector<Rational> c(power(rng) + 1);
    for (auto& x : c) x = make_rational(num(rng), den(rng));
    return Polynomial(std::move(c));
  };
  CylinderForm w = CylinderForm::zero(m, q);
  for (auto& p : w.part_one) p = random_poly();
  for (auto& p : w.part_two) p = random_poly();
  return w;
}

std::string describe(const CylinderForm& w) {
  std::ostringstream os;
  os << "degree " << w.degree << " I[";
  for (std::size_t i = 0; i < w.part_one.size(); ++i) os << (i ? "; " : "") << w.part_one[i].to_string();
  os << "] II[";
  for (std::size_t i = 0; i < w.part_two.size(); ++i) os << (i ? "; " : "") << w.part_two[i].to_string();
  os << "]";
  return os.str();
}

}  // namespace foliacoh
