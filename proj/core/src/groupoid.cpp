#include "ncgeom/groupoid.hpp"

namespace ncgeom {

GroupArrow to_pair(const FiniteGroup& grp, const ActionArrow& a) {
  return GroupArrow{a.p, grp.mul(a.p, a.g)};
}

ActionArrow to_action(const FiniteGroup& grp, const GroupArrow& a) {
  return ActionArrow{a.a, grp.mul(grp.inv(a.a), a.b)};
}

bool composable_action(const FiniteGroup& grp, const ActionArrow& x, const ActionArrow& y) {
  return grp.mul(x.p, x.g) == y.p;
}

ActionArrow compose_action(const FiniteGroup& grp, const ActionArrow& x, const ActionArrow& y) {
  if (!composable_action(grp, x, y)) {
    throw NotComposable("action arrows do not match at the middle point");
  }
  return ActionArrow{x.p, grp.mul(x.g, y.g)};
}

}  // namespace ncgeom
