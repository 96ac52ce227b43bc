#ifndef HENON_EXACT_ROOTS_HPP
#define HENON_EXACT_ROOTS_HPP

#include <vector>

#include "henon/unipoly.hpp"

namespace henon {

/// Squarefree part of a nonzero polynomial, made monic.
UniPoly squarefree_part(const UniPoly& p);

/// All distinct rational roots of p, ascending. Works on the squarefree part:
/// roots modulo a prime of good reduction are Hensel-lifted past the
/// reconstruction bound and every candidate is checked exactly, so the result
/// is complete and exact.
std::vector<Rational> rational_roots(const UniPoly& p);

/// Multiplicity of the root r of p (0 if p(r) != 0).
int root_multiplicity(const UniPoly& p, const Rational& r);

}  // namespace henon

#endif  // HENON_EXACT_ROOTS_HPP
