#include "detkrs/rees.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "detkrs/ideals.hpp"
#include "detkrs/krs.hpp"

namespace detkrs {

LatticeElement::LatticeElement(std::vector<int> cols) : cols_(std::move(cols)) {
  if (cols_.empty()) fail(Errc::InvalidShape, "lattice elements have size >= 1");
  for (size_t i = 0; i < cols_.size(); ++i) {
    if (cols_[i] < 1) fail(Errc::IndexOutOfRange, "column indices are 1-based");
    if (i > 0 && cols_[i] <= cols_[i - 1])
      fail(Errc::NonIncreasingIndices, "column list must strictly increase");
  }
}

Minor LatticeElement::minor() const {
  std::vector<int> rows(cols_.size());
  for (size_t i = 0; i < cols_.size(); ++i) rows[i] = static_cast<int>(i) + 1;
  return Minor(std::move(rows), cols_);
}

Monomial LatticeElement::diag_monomial() const { return diag(minor()); }

std::string LatticeElement::to_string() const {
  std::ostringstream os;
  os << "p[";
  for (size_t i = 0; i < cols_.size(); ++i) {
    if (i > 0) os << ' ';
    os << cols_[i];
  }
  os << ']';
  return os.str();
}

bool lattice_leq(const LatticeElement& a, const LatticeElement& b) {
  if (a.size() < b.size()) return false;
  for (int i = 1; i <= b.size(); ++i)
    if (a.col(i) > b.col(i)) return false;
  return true;
}

bool lattice_incomparable(const LatticeElement& a, const LatticeElement& b) {
  return !lattice_leq(a, b) && !lattice_leq(b, a);
}

LatticeElement lattice_meet(const LatticeElement& a, const LatticeElement& b) {
  const LatticeElement& big = a.size() >= b.size() ? a : b;
  const LatticeElement& small = a.size() >= b.size() ? b : a;
  std::vector<int> cols;
  for (int i = 1; i <= big.size(); ++i)
    cols.push_back(i <= small.size() ? std::min(big.col(i), small.col(i)) : big.col(i));
  return LatticeElement(std::move(cols));
}

LatticeElement lattice_join(const LatticeElement& a, const LatticeElement& b) {
  const LatticeElement& big = a.size() >= b.size() ? a : b;
  const LatticeElement& small = a.size() >= b.size() ? b : a;
  std::vector<int> cols;
  for (int i = 1; i <= small.size(); ++i)
    cols.push_back(std::max(big.col(i), small.col(i)));
  return LatticeElement(std::move(cols));
}

int lattice_linear_cmp(const LatticeElement& a, const LatticeElement& b) {
  if (a.size() != b.size()) return a.size() > b.size() ? -1 : 1;
  for (int i = a.size(); i >= 1; --i)
    if (a.col(i) != b.col(i)) return a.col(i) < b.col(i) ? -1 : 1;
  return 0;
}

std::vector<LatticeElement> lattice_elements(int m, int n) {
  std::vector<LatticeElement> out;
  std::vector<int> acc;
  std::function<void(int, int, int)> rec = [&](int size, int from, int left) {
    if (left == 0) {
      out.emplace_back(acc);
      return;
    }
    for (int c = from; c <= n - left + 1; ++c) {
      acc.push_back(c);
      rec(size, c + 1, left - 1);
      acc.pop_back();
    }
  };
  for (int s = 1; s <= std::min(m, n); ++s) rec(s, 1, s);
  std::sort(out.begin(), out.end(), LatticeLinearLess{});
  return out;
}

PMonomial::PMonomial(Monomial x_part, std::vector<LatticeElement> p_part)
    : x(std::move(x_part)), ps(std::move(p_part)) {
  std::sort(ps.begin(), ps.end(), LatticeDisplayLess{});
}

std::string PMonomial::to_string() const {
  std::ostringstream os;
  bool any = false;
  if (!x.is_one()) {
    os << x.to_string();
    any = true;
  }
  for (const auto& p : ps) {
    if (any) os << '*';
    os << p.to_string();
    any = true;
  }
  if (!any) os << '1';
  return os.str();
}

int presentation_cmp(const PMonomial& a, const PMonomial& b) {
  int da = a.x.total_degree() + a.p_degree();
  int db = b.x.total_degree() + b.p_degree();
  if (da != db) return da > db ? 1 : -1;

  // Reverse lexicographic: at the smallest variable with differing exponent
  // the smaller exponent wins. p-variables sit below the x-variables and are
  // ordered by the linear extension.
  std::vector<LatticeElement> pvars;
  for (const auto& p : a.ps) pvars.push_back(p);
  for (const auto& p : b.ps) pvars.push_back(p);
  std::sort(pvars.begin(), pvars.end(), LatticeLinearLess{});
  pvars.erase(std::unique(pvars.begin(), pvars.end()), pvars.end());
  auto pcount = [](const PMonomial& pm, const LatticeElement& el) {
    return static_cast<int>(std::count(pm.ps.begin(), pm.ps.end(), el));
  };
  for (const auto& el : pvars) {
    int ca = pcount(a, el), cb = pcount(b, el);
    if (ca != cb) return ca < cb ? 1 : -1;
  }

  std::vector<std::pair<int, int>> xvars;
  for (const auto& f : a.x.factors()) xvars.emplace_back(f.row, f.col);
  for (const auto& f : b.x.factors()) xvars.emplace_back(f.row, f.col);
  std::sort(xvars.begin(), xvars.end(), std::greater<>());  // smallest variable first
  xvars.erase(std::unique(xvars.begin(), xvars.end()), xvars.end());
  for (const auto& [row, col] : xvars) {
    int ca = a.x.exponent(row, col), cb = b.x.exponent(row, col);
    if (ca != cb) return ca < cb ? 1 : -1;
  }
  return 0;
}

std::string ReesBinomial::to_string() const {
  return lead.to_string() + " - " + trail.to_string();
}

std::vector<ReesBinomial> hibi_relations(int m, int n) {
  std::vector<ReesBinomial> out;
  auto elements = lattice_elements(m, n);
  for (size_t i = 0; i < elements.size(); ++i) {
    for (size_t j = i + 1; j < elements.size(); ++j) {
      const auto& a = elements[i];
      const auto& b = elements[j];
      if (!lattice_incomparable(a, b)) continue;
      PMonomial lead(Monomial::one(), {a, b});
      PMonomial trail(Monomial::one(), {lattice_meet(a, b), lattice_join(a, b)});
      out.push_back({std::move(lead), std::move(trail)});
    }
  }
  return out;
}

std::vector<ReesBinomial> degree_one_relations(int m, int n) {
  std::vector<ReesBinomial> out;
  for (const auto& a : lattice_elements(m, n)) {
    for (int i = 1; i <= a.size(); ++i) {
      int lo = i == 1 ? 0 : a.col(i - 1);
      for (int j = lo + 1; j < a.col(i); ++j) {
        std::vector<int> cols = a.cols();
        cols[static_cast<size_t>(i - 1)] = j;
        LatticeElement b(std::move(cols));
        PMonomial lead(Monomial::variable(i, j), {a});
        PMonomial trail(Monomial::variable(i, a.col(i)), {b});
        out.push_back({std::move(lead), std::move(trail)});
      }
    }
  }
  return out;
}

XYMonomial phi_image(const PMonomial& pm, int m, int n) {
  XYMonomial out;
  out.x = pm.x;
  out.y.assign(static_cast<size_t>(std::min(m, n)), 0);
  for (const auto& p : pm.ps) {
    out.x = out.x * p.diag_monomial();
    out.y[static_cast<size_t>(p.size() - 1)]++;
  }
  return out;
}

std::pair<Polynomial, std::vector<int>> psi_image(const PMonomial& pm, int m, int n) {
  Polynomial poly = Polynomial::term(pm.x, 1);
  std::vector<int> y(static_cast<size_t>(std::min(m, n)), 0);
  for (const auto& p : pm.ps) {
    poly = poly * expand_minor(p.minor());
    y[static_cast<size_t>(p.size() - 1)]++;
  }
  return {std::move(poly), std::move(y)};
}

namespace {

// Standardness of a presentation monomial = divisibility by no lead term.
bool avoids_lead_terms(const PMonomial& pm) {
  for (size_t i = 0; i < pm.ps.size(); ++i)
    for (size_t j = i + 1; j < pm.ps.size(); ++j)
      if (lattice_incomparable(pm.ps[i], pm.ps[j])) return false;
  for (const auto& f : pm.x.factors()) {
    for (const auto& a : pm.ps) {
      if (f.row > a.size()) continue;
      int lo = f.row == 1 ? 0 : a.col(f.row - 1);
      if (lo < f.col && f.col < a.col(f.row)) return false;
    }
  }
  return true;
}

// The normal-form description: the p-part is a chain a_1 <= ... <= a_e and
// every x_ij divides past each a_k (j >= a_{k,i} or j <= a_{k,i-1}).
bool normal_form_conditions(const PMonomial& pm) {
  // ps is sorted along a linear extension, so it is a chain iff consecutive
  // elements are comparable.
  for (size_t i = 0; i + 1 < pm.ps.size(); ++i) {
    if (!lattice_leq(pm.ps[i], pm.ps[i + 1]) && !lattice_leq(pm.ps[i + 1], pm.ps[i]))
      return false;
  }
  for (const auto& f : pm.x.factors()) {
    for (const auto& a : pm.ps) {
      if (f.row > a.size()) continue;
      int prev = f.row == 1 ? 0 : a.col(f.row - 1);
      if (!(f.col >= a.col(f.row) || f.col <= prev)) return false;
    }
  }
  return true;
}

void multisets_from(const std::vector<LatticeElement>& pool, int count, size_t from,
                    std::vector<LatticeElement>& acc,
                    std::vector<std::vector<LatticeElement>>& out) {
  if (count == 0) {
    out.push_back(acc);
    return;
  }
  for (size_t k = from; k < pool.size(); ++k) {
    acc.push_back(pool[k]);
    multisets_from(pool, count - 1, k, acc, out);
    acc.pop_back();
  }
}

void x_monomials_rec(int m, int n, int var, int remaining, Monomial& acc,
                     const std::function<void(const Monomial&)>& fn) {
  if (var == m * n) {
    if (remaining == 0) fn(acc);
    return;
  }
  int row = var / n + 1, col = var % n + 1;
  for (int e = 0; e <= remaining; ++e) {
    Monomial saved = acc;
    if (e > 0) acc = acc * Monomial::variable(row, col, e);
    x_monomials_rec(m, n, var + 1, remaining - e, acc, fn);
    acc = saved;
  }
}

}  // namespace

Report kernel_check(int m, int n, int max_p_degree, int max_x_degree) {
  Report rep;
  auto gens = hibi_relations(m, n);
  auto deg1 = degree_one_relations(m, n);
  gens.insert(gens.end(), deg1.begin(), deg1.end());

  int bad_kernel = 0, bad_order = 0;
  for (const auto& g : gens) {
    if (!(phi_image(g.lead, m, n) == phi_image(g.trail, m, n))) ++bad_kernel;
    if (presentation_cmp(g.lead, g.trail) <= 0) ++bad_order;
  }
  {
    std::ostringstream line;
    line << "generators=" << gens.size() << " in_kernel="
         << (gens.size() - static_cast<size_t>(bad_kernel)) << " lead_initial="
         << (gens.size() - static_cast<size_t>(bad_order));
    if (bad_kernel == 0 && bad_order == 0)
      rep.pass(line.str());
    else
      rep.fail(line.str());
  }

  const int v = std::min(m, n);
  std::vector<std::vector<LatticeElement>> by_size(static_cast<size_t>(v) + 1);
  for (const auto& el : lattice_elements(m, n))
    by_size[static_cast<size_t>(el.size())].push_back(el);

  for (int pd = 0; pd <= max_p_degree; ++pd) {
    for (const auto& pvec : compositions(pd, v)) {
      // p-multisets with pvec[s-1] elements of size s
      std::vector<std::vector<LatticeElement>> combined{{}};
      for (int s = 1; s <= v; ++s) {
        int want = pvec[static_cast<size_t>(s - 1)];
        if (want == 0) continue;
        std::vector<std::vector<LatticeElement>> level;
        std::vector<LatticeElement> acc;
        multisets_from(by_size[static_cast<size_t>(s)], want, 0, acc, level);
        std::vector<std::vector<LatticeElement>> next;
        for (const auto& base : combined)
          for (const auto& add : level) {
            auto merged = base;
            merged.insert(merged.end(), add.begin(), add.end());
            next.push_back(std::move(merged));
          }
        combined = std::move(next);
      }

      for (int d0 = 0; d0 <= max_x_degree; ++d0) {
        long long standard = 0;
        std::set<std::vector<int>> images;
        bool nf_agree = true;
        Monomial acc;
        x_monomials_rec(m, n, 0, d0, acc, [&](const Monomial& xm) {
          for (const auto& ps : combined) {
            PMonomial pm(xm, ps);
            bool std_pm = avoids_lead_terms(pm);
            if (std_pm != normal_form_conditions(pm)) nf_agree = false;
            if (std_pm) ++standard;
            XYMonomial img = phi_image(pm, m, n);
            std::vector<int> key(static_cast<size_t>(m * n), 0);
            for (const auto& f : img.x.factors())
              key[static_cast<size_t>((f.row - 1) * n + (f.col - 1))] = f.exp;
            key.insert(key.end(), img.y.begin(), img.y.end());
            images.insert(std::move(key));
          }
        });
        std::ostringstream line;
        line << "multidegree x=" << d0 << " p=(";
        for (int s = 1; s <= v; ++s) {
          if (s > 1) line << ',';
          line << pvec[static_cast<size_t>(s - 1)];
        }
        line << ") standard=" << standard << " semigroup=" << images.size()
             << " normal_form=" << (nf_agree ? "consistent" : "inconsistent");
        if (standard == static_cast<long long>(images.size()) && nf_agree)
          rep.pass(line.str());
        else
          rep.fail(line.str());
      }
    }
  }
  return rep;
}

Report lift_check_pair(const LatticeElement& a, const LatticeElement& b, int m, int n) {
  Report rep;
  if (!lattice_incomparable(a, b))
    fail(Errc::ComparablePair,
         a.to_string() + " and " + b.to_string() + " are comparable");

  Bitableau product({a.minor(), b.minor()});
  Bitableau meet_join({lattice_meet(a, b).minor(), lattice_join(a, b).minor()});

  auto rep_map = straighten(product, m, n);
  Monomial lead = expand_bitableau(product).leading_monomial();

  Rational coeff = 0;
  bool smaller_ok = true;
  Monomial worst;
  for (const auto& [sigma, c] : rep_map) {
    if (sigma == meet_join) {
      coeff = c;
      continue;
    }
    Monomial lm = expand_bitableau(sigma).leading_monomial();
    if (diag_cmp(lm, lead) >= 0) {
      smaller_ok = false;
      worst = lm;
    }
  }

  std::ostringstream line;
  line << a.to_string() << ' ' << b.to_string() << " -> " << meet_join.to_string()
       << " coefficient=" << coeff.get_str() << " other_summands="
       << (rep_map.size() - (coeff != 0 ? 1 : 0));
  if (coeff != 0 && coeff != 1) line << " COEFF_NOT_ONE";
  if (coeff != 0 && smaller_ok) {
    rep.pass(line.str());
  } else {
    if (!smaller_ok) line << " offending_lm=" << worst.to_string();
    rep.fail(line.str());
  }
  return rep;
}

Report lift_check(int m, int n) {
  Report rep;
  auto elements = lattice_elements(m, n);
  int pairs = 0;
  for (size_t i = 0; i < elements.size(); ++i) {
    for (size_t j = i + 1; j < elements.size(); ++j) {
      if (!lattice_incomparable(elements[i], elements[j])) continue;
      ++pairs;
      rep.merge(lift_check_pair(elements[i], elements[j], m, n));
    }
  }
  rep.note("incomparable pairs: " + std::to_string(pairs));
  return rep;
}

LatticeElement parse_lattice_element(const std::string& text, char) {
  std::string body = text;
  size_t lb = body.find('[');
  size_t rb = body.find(']');
  if (lb != std::string::npos) {
    if (rb == std::string::npos || rb < lb)
      fail(Errc::ParseError, "bad lattice element '" + text + "'");
    body = body.substr(lb + 1, rb - lb - 1);
  }
  for (char& c : body)
    if (c == ',') c = ' ';
  std::istringstream is(body);
  std::vector<int> cols;
  int vcol = 0;
  while (is >> vcol) cols.push_back(vcol);
  if (!is.eof()) fail(Errc::ParseError, "bad lattice element '" + text + "'");
  return LatticeElement(std::move(cols));
}

}  // namespace detkrs
