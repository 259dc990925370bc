#include "stieltjes/greens_function.hpp"

#include <set>

#include "stieltjes/error.hpp"

namespace stieltjes {

GreensFunction::GreensFunction(std::vector<Rational> breakpoints,
                               std::vector<std::array<BivariateExpPoly, 2>> branches, std::vector<DiracTerm> dirac,
                               std::vector<DiagonalTerm> diagonal)
    : breakpoints_(std::move(breakpoints)),
      branches_(std::move(branches)),
      dirac_(std::move(dirac)),
      diagonal_(std::move(diagonal)) {
  if (breakpoints_.size() < 2) throw DomainError("degenerate domain: supply explicit interval");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1] < breakpoints_[i])) throw DomainError("breakpoints must be strictly increasing");
  }
  if (branches_.size() + 1 != breakpoints_.size()) throw DomainError("expected one branch pair per interval");
}

const BivariateExpPoly& GreensFunction::branch(std::size_t interval, Region region) const {
  return branches_.at(interval)[region == Region::kXiBelowX ? 0 : 1];
}

GreensFunction extract(const Operator& equitable, const std::vector<Rational>& extra_points) {
  if (!equitable.is_equitable()) throw DomainError("operator not in equitable form");
  std::set<Rational> pts(extra_points.begin(), extra_points.end());
  for (const auto& p : equitable.points()) pts.insert(p);
  const std::vector<Rational> breakpoints(pts.begin(), pts.end());
  if (breakpoints.size() < 2) throw DomainError("degenerate domain: supply explicit interval");

  // Cell [p_i, p_{i+1}]: a term f Int_a g contributes f(x)g(xi) to the
  // xi <= x branch when a <= p_i and -f(x)g(xi) to the x <= xi branch when
  // a >= p_{i+1}.
  std::vector<std::array<BivariateExpPoly, 2>> branches(breakpoints.size() - 1);
  for (const auto& [key, f] : equitable.integral_part()) {
    const BivariateExpPoly term = BivariateExpPoly::tensor(f, ExpPoly::monomial(Constant(1), key.right));
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
      if (key.basepoint <= breakpoints[i]) branches[i][0] += term;
      if (key.basepoint >= breakpoints[i + 1]) branches[i][1] -= term;
    }
  }
  std::vector<DiracTerm> dirac;
  for (const auto& [key, f] : equitable.local_boundary()) dirac.push_back({key.point, key.order, f});
  std::vector<DiagonalTerm> diagonal;
  for (const auto& [order, f] : equitable.diff_part()) diagonal.push_back({order, f});
  return GreensFunction(breakpoints, std::move(branches), std::move(dirac), std::move(diagonal));
}

Constant eval_functional(const GreensFunction& g, const Rational& x, const Rational& xi) {
  const auto& pts = g.breakpoints();
  const auto in_domain = [&](const Rational& q) { return pts.front() <= q && q <= pts.back(); };
  if (!in_domain(x) || !in_domain(xi)) throw DomainError("point outside the domain of the Green's function");
  std::size_t interval = 0;
  while (interval + 2 < pts.size() && xi > pts[interval + 1]) ++interval;
  return g.branch(interval, xi <= x ? Region::kXiBelowX : Region::kXBelowXi).eval(x, xi);
}

namespace {

// Int_lower^upper B(x, xi) f(xi) dxi with constant limits.
ExpPoly integrate_between(const BivariateExpPoly& bf, const Rational& lower, const Rational& upper) {
  return bf.integrate_xi(lower).at_xi(upper);
}

// Int_lower^x B(x, xi) f(xi) dxi
ExpPoly integrate_up_to_x(const BivariateExpPoly& bf, const Rational& lower) {
  return bf.integrate_xi(lower).diagonal();
}

// Int_x^upper B(x, xi) f(xi) dxi
ExpPoly integrate_from_x(const BivariateExpPoly& bf, const Rational& upper) {
  return -bf.integrate_xi(upper).diagonal();
}

}  // namespace

std::vector<ExpPoly> apply_greens_piecewise(const GreensFunction& g, const ExpPoly& f) {
  const auto& pts = g.breakpoints();
  const std::size_t cells = g.interval_count();

  ExpPoly distributional;
  for (const auto& term : g.dirac_terms()) distributional += term.coeff * eval_at(derive(f, term.order), term.point);
  for (const auto& term : g.diagonal_terms()) distributional += term.coeff * derive(f, term.order);

  std::vector<std::array<BivariateExpPoly, 2>> weighted(cells);
  std::vector<std::array<ExpPoly, 2>> full(cells);
  for (std::size_t i = 0; i < cells; ++i) {
    for (int r = 0; r < 2; ++r) {
      weighted[i][r] = g.branch(i, r == 0 ? Region::kXiBelowX : Region::kXBelowXi).times_xi(f);
      full[i][r] = integrate_between(weighted[i][r], pts[i], pts[i + 1]);
    }
  }

  std::vector<ExpPoly> pieces;
  for (std::size_t k = 0; k < cells; ++k) {
    ExpPoly value = distributional;
    for (std::size_t i = 0; i < k; ++i) value += full[i][0];
    for (std::size_t i = k + 1; i < cells; ++i) value += full[i][1];
    value += integrate_up_to_x(weighted[k][0], pts[k]);
    value += integrate_from_x(weighted[k][1], pts[k + 1]);
    pieces.push_back(std::move(value));
  }
  return pieces;
}

ExpPoly apply_greens(const GreensFunction& g, const ExpPoly& f) {
  const auto pieces = apply_greens_piecewise(g, f);
  for (const auto& piece : pieces) {
    if (!(piece == pieces.front())) throw DomainError("Green's function action differs between cells");
  }
  return pieces.front();
}

std::string case_label_latex(const GreensFunction& g, std::size_t interval, Region region) {
  const auto& pts = g.breakpoints();
  return to_latex(pts.at(interval)) + " \\le \\xi \\le " + to_latex(pts.at(interval + 1)) + ", " +
         (region == Region::kXiBelowX ? "\\xi \\le x" : "x \\le \\xi");
}

namespace {

std::string dirac_latex(const std::string& arg, unsigned order) {
  if (order == 0) return "\\delta(" + arg + ")";
  if (order <= 3) return "\\delta^{" + std::string(order, '\'') + "}(" + arg + ")";
  return "\\delta^{(" + std::to_string(order) + ")}(" + arg + ")";
}

std::string shifted_xi_latex(const Rational& point) {
  if (point == 0) return "\\xi";
  const Rational mag = abs(point);
  return std::string("\\xi ") + (point < 0 ? "+ " : "- ") + to_latex(mag);
}

std::string shifted_xi_text(const Rational& point) {
  if (point == 0) return "xi";
  const Rational mag = abs(point);
  return std::string("xi ") + (point < 0 ? "+ " : "- ") + to_string(mag);
}

}  // namespace

std::string render_latex(const GreensFunction& g) {
  std::string out = "\\begin{tabular}{|l|l|}\n\\hline\n\\text{Case} & \\text{Term} \\\\ \\hline\n";
  for (std::size_t i = 0; i < g.interval_count(); ++i) {
    for (Region region : {Region::kXiBelowX, Region::kXBelowXi}) {
      out += "$" + case_label_latex(g, i, region) + "$ & $" + g.branch(i, region).to_latex() + "$ \\\\ \\hline\n";
    }
  }
  out += "\\end{tabular}\n";
  if (!g.dirac_terms().empty() || !g.diagonal_terms().empty()) {
    std::string hat;
    auto append = [&hat](const ExpPoly& coeff, bool negate, const std::string& delta) {
      const ExpPoly c = negate ? -coeff : coeff;
      std::string body = c.monomials().size() == 1 ? c.to_latex() : "\\left(" + c.to_latex() + "\\right)";
      if (c == ExpPoly(1)) body = "";
      if (c == ExpPoly(-1)) body = "-";
      const std::string term = body + (body.empty() || body == "-" ? "" : " ") + delta;
      if (hat.empty()) {
        hat = term;
      } else {
        hat += term.front() == '-' ? " - " + term.substr(1) : " + " + term;
      }
    };
    for (const auto& t : g.dirac_terms()) append(t.coeff, t.order % 2 == 1, dirac_latex(shifted_xi_latex(t.point), t.order));
    for (const auto& t : g.diagonal_terms()) append(t.coeff, t.order % 2 == 1, dirac_latex("x - \\xi", t.order));
    out += "\\[\n\\hat{g}(x,\\xi) = " + hat + "\n\\]\n";
  }
  return out;
}

std::string render_text(const GreensFunction& g) {
  std::string out;
  const auto& pts = g.breakpoints();
  for (std::size_t i = 0; i < g.interval_count(); ++i) {
    for (Region region : {Region::kXiBelowX, Region::kXBelowXi}) {
      out += to_string(pts[i]) + " <= xi <= " + to_string(pts[i + 1]) + ", " +
             (region == Region::kXiBelowX ? "xi <= x" : "x <= xi") + ": " + g.branch(i, region).to_string() + "\n";
    }
  }
  for (const auto& t : g.dirac_terms()) {
    out += "dirac: (" + (t.order % 2 == 1 ? -t.coeff : t.coeff).to_string() + ") * delta^(" +
           std::to_string(t.order) + ")(" + shifted_xi_text(t.point) + ")\n";
  }
  for (const auto& t : g.diagonal_terms()) {
    out += "diagonal: (" + (t.order % 2 == 1 ? -t.coeff : t.coeff).to_string() + ") * delta^(" +
           std::to_string(t.order) + ")(x - xi)\n";
  }
  return out;
}

}  // namespace stieltjes
