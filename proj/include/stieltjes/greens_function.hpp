#pragma once

#include <array>
#include <string>
#include <vector>

#include "stieltjes/bivariate.hpp"
#include "stieltjes/operator.hpp"

namespace stieltjes {

enum class Region {
  kXiBelowX,  // xi <= x
  kXBelowXi,  // x <= xi
};

/// coeff(x) * (-1)^order * delta^(order)(xi - point)
struct DiracTerm {
  Rational point;
  unsigned order = 0;
  ExpPoly coeff;
  friend bool operator==(const DiracTerm& a, const DiracTerm& b) {
    return a.point == b.point && a.order == b.order && a.coeff == b.coeff;
  }
};

/// (-1)^order * coeff(x) * delta^(order)(x - xi)
struct DiagonalTerm {
  unsigned order = 0;
  ExpPoly coeff;
  friend bool operator==(const DiagonalTerm& a, const DiagonalTerm& b) {
    return a.order == b.order && a.coeff == b.coeff;
  }
};

/// Piecewise kernel g = g~ + g^ over J = [p_1, p_m]: one bivariate branch
/// per cell [p_i, p_{i+1}] and region, plus Dirac terms at breakpoints and
/// diagonal terms from a differential part.
class GreensFunction {
 public:
  GreensFunction() = default;
  /// Throws DomainError unless breakpoints are strictly increasing with
  /// m >= 2 and there are m - 1 branch pairs.
  GreensFunction(std::vector<Rational> breakpoints, std::vector<std::array<BivariateExpPoly, 2>> branches,
                 std::vector<DiracTerm> dirac, std::vector<DiagonalTerm> diagonal);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  std::size_t interval_count() const { return branches_.size(); }
  std::size_t branch_count() const { return 2 * branches_.size(); }
  const BivariateExpPoly& branch(std::size_t interval, Region region) const;
  const std::vector<DiracTerm>& dirac_terms() const { return dirac_; }
  const std::vector<DiagonalTerm>& diagonal_terms() const { return diagonal_; }

  friend bool operator==(const GreensFunction& a, const GreensFunction& b) {
    return a.breakpoints_ == b.breakpoints_ && a.branches_ == b.branches_ && a.dirac_ == b.dirac_ &&
           a.diagonal_ == b.diagonal_;
  }

 private:
  std::vector<Rational> breakpoints_;
  std::vector<std::array<BivariateExpPoly, 2>> branches_;
  std::vector<DiracTerm> dirac_;
  std::vector<DiagonalTerm> diagonal_;
};

/// Reads the Green's function off an equitable operator. Breakpoints are
/// the operator's basepoints and evaluation points together with
/// `extra_points` (e.g. the problem's evaluation points or an explicit
/// interval).
///
/// Throws DomainError("operator not in equitable form") when global terms
/// are present and DomainError("degenerate domain: supply explicit
/// interval") when fewer than two breakpoints result.
GreensFunction extract(const Operator& equitable, const std::vector<Rational>& extra_points = {});

/// Value of the functional part at (x, xi). Interior breakpoints belong to
/// the interval on their left; the diagonal xi = x uses the xi <= x branch.
Constant eval_functional(const GreensFunction& g, const Rational& x, const Rational& xi);

/// Int_J g(x, xi) f(xi) dxi on each cell of x, first cell first.
std::vector<ExpPoly> apply_greens_piecewise(const GreensFunction& g, const ExpPoly& f);
/// Same, assembled into one function on J; throws DomainError when the
/// cells disagree.
ExpPoly apply_greens(const GreensFunction& g, const ExpPoly& f);

std::string render_latex(const GreensFunction& g);
std::string render_text(const GreensFunction& g);
/// "0 \le \xi \le 1, \xi \le x" style case label.
std::string case_label_latex(const GreensFunction& g, std::size_t interval, Region region);

}  // namespace stieltjes
