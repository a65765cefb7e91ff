#pragma once

#include <map>
#include <set>
#include <vector>

#include "detkrs/linalg.hpp"
#include "detkrs/monomial_ideal.hpp"
#include "detkrs/polynomial.hpp"
#include "detkrs/report.hpp"
#include "detkrs/shape.hpp"

namespace detkrs {

/// All row-superstandard bitableaux of shape s: products of factors
/// [1..s_i | c_1 < ... < c_{s_i}] over all column choices. These generate the
/// product ideal J(S) = J_{s_1} ... J_{s_v}. Parts larger than n give the
/// zero ideal (empty list); parts larger than m are invalid.
std::vector<Bitableau> superstandard_generators(int m, int n, const Shape& s);

/// The monomial ideal spanned by the generator diagonals; candidate initial
/// ideal of J(S).
MonomialIdeal diagonal_ideal(int m, int n, const Shape& s);

std::vector<Polynomial> expand_all(const std::vector<Bitableau>& bts);

/// Echelon basis of span{g * w : g in gens, w a monomial, deg(g*w) = b}.
/// gens must be bidegree-homogeneous. Throws DegreeBoundExceeded when the
/// dimension outgrows dim_cap.
EchelonBasis graded_piece(const std::vector<Polynomial>& gens, const Bidegree& b,
                          int m, int n, int dim_cap = 100000);

/// Leading monomials of the graded piece.
std::set<Monomial, DiagGreater> initial_space(const std::vector<Polynomial>& gens,
                                              const Bidegree& b, int m, int n);

/// The bidegrees of total degree d whose row part dominates the fixed row
/// content of shape-s generators; all other pieces of J(S) vanish.
std::vector<Bidegree> active_bidegrees(int m, int n, const Shape& s, int d);

/// Per bidegree of total degree <= degree_bound: the initial space of J(S)
/// equals the graded piece of the diagonal ideal. Also checks the product
/// and intersection identities of the initial ideals.
Report grobner_check(int m, int n, const Shape& s, int degree_bound);

/// Per bidegree: membership of a standard bitableau in J(S) is equivalent to
/// containing a superstandard subtableau of shape s, and the piece dimension
/// matches the count.
Report standard_basis_check(int m, int n, const Shape& s, int degree_bound);

/// Verifies J(S) = intersection of J_{t_i}^{e_i} on all graded pieces up to
/// the bound, and exhibits irredundancy witnesses.
Report primary_check(int m, int n, const Shape& s, int degree_bound);

/// The unique representation of expand(d) over standard bitableaux of the
/// same content, found by an exact linear solve.
std::map<Bitableau, Rational> straighten(const Bitableau& d, int m, int n);

/// Multigraded Betti numbers of a monomial ideal generated in one total
/// degree g, via reduced simplicial homology of the upper Koszul complexes.
/// Passes iff every nonzero beta_{i,b} has |b| = g + i.
Report betti_linear_check(const MonomialIdeal& ideal, int m, int n,
                          int multidegree_bound);

}  // namespace detkrs
