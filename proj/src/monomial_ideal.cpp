#include "detkrs/monomial_ideal.hpp"

#include <algorithm>
#include <sstream>

#include "detkrs/error.hpp"

namespace detkrs {

MonomialIdeal::MonomialIdeal(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), DiagGreater{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : gens) {
      if (&g != &h && h.divides(g) && !(g == h)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) gens_.push_back(g);
  }
}

bool MonomialIdeal::member(const Monomial& w) const {
  for (const auto& g : gens_)
    if (g.divides(w)) return true;
  return false;
}

MonomialIdeal MonomialIdeal::product(const MonomialIdeal& other) const {
  std::vector<Monomial> gens;
  for (const auto& a : gens_)
    for (const auto& b : other.gens_) gens.push_back(a * b);
  return MonomialIdeal(std::move(gens));
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& other) const {
  std::vector<Monomial> gens;
  for (const auto& a : gens_)
    for (const auto& b : other.gens_) gens.push_back(Monomial::lcm(a, b));
  return MonomialIdeal(std::move(gens));
}

MonomialIdeal MonomialIdeal::power(int e) const {
  if (e < 0) fail(Errc::IndexOutOfRange, "negative ideal power");
  if (e == 0) return MonomialIdeal({Monomial::one()});
  MonomialIdeal out = *this;
  for (int i = 1; i < e; ++i) out = out.product(*this);
  return out;
}

int MonomialIdeal::generation_degree() const {
  if (gens_.empty()) return -1;
  int d = gens_.front().total_degree();
  for (const auto& g : gens_)
    if (g.total_degree() != d) return -1;
  return d;
}

Monomial MonomialIdeal::lcm_of_generators() const {
  Monomial out;
  for (const auto& g : gens_) out = Monomial::lcm(out, g);
  return out;
}

bool MonomialIdeal::equal_up_to(const MonomialIdeal& other, int degree_bound) const {
  // Graded pieces up to the bound agree iff each side's generators of degree
  // <= bound lie in the other ideal.
  for (const auto& g : gens_)
    if (g.total_degree() <= degree_bound && !other.member(g)) return false;
  for (const auto& g : other.gens_)
    if (g.total_degree() <= degree_bound && !member(g)) return false;
  return true;
}

std::string MonomialIdeal::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0) os << ", ";
    os << gens_[i].to_string();
  }
  os << ')';
  return os.str();
}

}  // namespace detkrs
