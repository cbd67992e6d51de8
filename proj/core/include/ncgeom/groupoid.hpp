#pragma once

#include <cstdint>
#include <string>

#include "ncgeom/errors.hpp"
#include "ncgeom/group.hpp"

namespace ncgeom {

// Arrow of a pair groupoid over a point set P: (a, b) runs from b to a, so
// composition matches matrix-unit multiplication, (a,z) after (z,b) lands at
// (a,b).  The base coordinate of the full groupoid is carried separately by
// the function entries of the convolution algebra and plays no role in
// composability, so arrows here are purely discrete.
template <class P>
struct Arrow {
  P a;
  P b;

  friend bool operator==(const Arrow& x, const Arrow& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const Arrow& x, const Arrow& y) { return !(x == y); }
};

template <class P>
P source(const Arrow<P>& g) {
  return g.b;
}

template <class P>
P target(const Arrow<P>& g) {
  return g.a;
}

template <class P>
Arrow<P> unit(const P& p) {
  return Arrow<P>{p, p};
}

template <class P>
Arrow<P> invert(const Arrow<P>& g) {
  return Arrow<P>{g.b, g.a};
}

template <class P>
bool composable(const Arrow<P>& g, const Arrow<P>& h) {
  return g.b == h.a;
}

template <class P>
Arrow<P> compose(const Arrow<P>& g, const Arrow<P>& h) {
  if (!composable(g, h)) {
    throw NotComposable("arrows do not match at the middle point");
  }
  return Arrow<P>{g.a, h.b};
}

using GroupArrow = Arrow<std::size_t>;
using LatticeArrow = Arrow<std::int64_t>;

// Action coordinates for the transformation groupoid of a group acting on
// itself: the pair (p, g) names the arrow starting at p with group label g.
struct ActionArrow {
  std::size_t p;
  std::size_t g;

  friend bool operator==(const ActionArrow& x, const ActionArrow& y) {
    return x.p == y.p && x.g == y.g;
  }
};

// The groupoid isomorphism j(p, g) = (p, p*g) between action and pair
// coordinates, and its inverse.
GroupArrow to_pair(const FiniteGroup& grp, const ActionArrow& a);
ActionArrow to_action(const FiniteGroup& grp, const GroupArrow& a);

// Composition in action coordinates: (p, g) after (p*g, h) gives (p, g*h).
// Defined exactly when the first arrow ends where the second starts.
bool composable_action(const FiniteGroup& grp, const ActionArrow& x, const ActionArrow& y);
ActionArrow compose_action(const FiniteGroup& grp, const ActionArrow& x, const ActionArrow& y);

}  // namespace ncgeom
