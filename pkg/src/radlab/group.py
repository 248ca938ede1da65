"""Deterministic permutation group engine built on stabilizer chains.

The chain is computed by a deterministic Schreier-Sims procedure: base points
are chosen as the least moved point of each new residue, orbits are explored
breadth-first with generators in list order, and every data structure is an
insertion-ordered dict or list, so the chain, the element enumeration order,
and all downstream verdicts are reproducible run to run.

Raw images tables (see perm.py) are used internally; the public surface talks
in Perm objects.
"""

from __future__ import annotations

from .arith import factorize, p_part
from .errors import (
    CapExceededError,
    DegreeMismatchError,
    MembershipError,
)
from .perm import (
    Perm,
    format_cycles,
    ident_table,
    inv,
    is_ident,
    min_moved,
    mul,
    pow_table,
    table_order,
)

DEFAULT_ENUMERATION_CAP = 200_000
DEFAULT_CLASS_CAP = 100_000


class _Level:
    __slots__ = ("base", "gens", "gen_invs", "orbit")

    def __init__(self, base: int):
        self.base = base
        self.gens: list = []
        self.gen_invs: list = []
        # point -> (u, u_inverse) with u mapping base to point; insertion = BFS order
        self.orbit: dict = {}


class PermutationGroup:
    """Group generated by permutations of a fixed degree."""

    def __init__(self, degree: int, generators: list[Perm], name: str | None = None):
        if degree < 1:
            raise DegreeMismatchError(f"degree must be >= 1, got {degree}")
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatchError(
                    f"generator degree {g.degree} does not match group degree {degree}"
                )
        self.degree = degree
        self.name = name
        self._ident = ident_table(degree)
        # input generators, identity dropped, order preserved, duplicates kept out
        tables = []
        for g in generators:
            if not is_ident(g.t) and g.t not in tables:
                tables.append(g.t)
        self.gens = tables
        self.gen_invs = [inv(t, degree) for t in tables]
        self._levels: list[_Level] = []
        self._order: int | None = None
        self._pelement_cache: dict[int, tuple] = {}
        for t in tables:
            self._add_generator(t)

    # -- chain construction -------------------------------------------------

    def _sift(self, t, start: int = 0):
        """Reduce t through levels from `start`; return (residue, stop_level)."""
        i = start
        levels = self._levels
        while i < len(levels):
            lvl = levels[i]
            p = t[lvl.base]
            if p != lvl.base:
                pair = lvl.orbit.get(p)
                if pair is None:
                    return t, i
                t = mul(t, pair[1])
            i += 1
        return t, i

    def _add_generator(self, t) -> bool:
        """Grow the chain by one table if it is not already a member."""
        res, i = self._sift(t)
        if is_ident(res):
            return False
        self._insert_strong(0, i, res)
        self._order = None
        self._pelement_cache.clear()
        return True

    def _adopt(self, t) -> bool:
        """Add t as a listed generator if it enlarges the group.

        Builders that grow a group element by element (normal closure, the
        radical) use this so that .gens stays a true generating list.
        """
        if self._add_generator(t):
            self.gens.append(t)
            self.gen_invs.append(inv(t, self.degree))
            return True
        return False

    def _insert_strong(self, start: int, j: int, t) -> None:
        """Install residue t (which fixes the base prefix of level j) as a strong
        generator of levels start..j, then re-verify those levels deepest-first.

        Levels below `start` generate the same subgroups as before (t is a word
        in their generators), so their orbits and checked Schreier pairs stay
        valid; the cascade never touches them.
        """
        if j == len(self._levels):
            self._levels.append(_Level(min_moved(t, self.degree)))
        tinv = inv(t, self.degree)
        for m in range(start, j + 1):
            lvl = self._levels[m]
            lvl.gens.append(t)
            lvl.gen_invs.append(tinv)
        for m in range(j, start - 1, -1):
            self._verify_level(m)

    def _verify_level(self, i: int) -> None:
        """Rebuild level i's orbit and make all its Schreier generators sift."""
        lvl = self._levels[i]
        self._rebuild_orbit(lvl)
        orbit = lvl.orbit
        for p, (u, _uinv) in orbit.items():
            for s in lvl.gens:
                q = s[p]
                us = mul(u, s)
                schreier = mul(us, orbit[q][1])
                if is_ident(schreier):
                    continue
                res, j = self._sift(schreier, i + 1)
                if not is_ident(res):
                    self._insert_strong(i + 1, j, res)

    def _rebuild_orbit(self, lvl: _Level) -> None:
        ident = self._ident
        orbit = {lvl.base: (ident, ident)}
        queue = [lvl.base]
        qi = 0
        while qi < len(queue):
            p = queue[qi]
            qi += 1
            u = orbit[p][0]
            for s in lvl.gens:
                q = s[p]
                if q not in orbit:
                    uq = mul(u, s)
                    orbit[q] = (uq, inv(uq, self.degree))
                    queue.append(q)
        lvl.orbit = orbit

    # -- basic queries --------------------------------------------------------

    @property
    def order(self) -> int:
        if self._order is None:
            o = 1
            for lvl in self._levels:
                o *= len(lvl.orbit)
            self._order = o
        return self._order

    @property
    def base(self) -> tuple[int, ...]:
        """1-based base points of the chain."""
        return tuple(lvl.base + 1 for lvl in self._levels)

    def is_trivial(self) -> bool:
        return not self._levels

    def contains_table(self, t) -> bool:
        res, _ = self._sift(t)
        return is_ident(res)

    def contains(self, p: Perm) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatchError(
                f"element degree {p.degree} does not match group degree {self.degree}"
            )
        return self.contains_table(p.t)

    def __contains__(self, p: Perm) -> bool:
        return self.contains(p)

    @property
    def generators(self) -> list[Perm]:
        return [Perm(self.degree, t) for t in self.gens]

    def strong_generators(self) -> list[Perm]:
        out = []
        seen = set()
        for lvl in self._levels:
            for t in lvl.gens:
                if t not in seen:
                    seen.add(t)
                    out.append(Perm(self.degree, t))
        return out

    # -- element enumeration ---------------------------------------------------

    def tables(self, cap: int = DEFAULT_ENUMERATION_CAP):
        """Yield every element's raw table once, in deterministic chain order."""
        if self.order > cap:
            raise CapExceededError(
                f"group order {self.order} exceeds enumeration cap {cap}"
            )
        levels = self._levels
        if not levels:
            yield self._ident
            return
        k = len(levels)
        us = [[pair[0] for pair in lvl.orbit.values()] for lvl in levels]
        sizes = [len(u) for u in us]
        idx = [0] * k
        partial = [self._ident] * (k + 1)
        i = 0
        while True:
            while i < k:
                u = us[i][idx[i]]
                partial[i + 1] = mul(u, partial[i]) if idx[i] else partial[i]
                i += 1
            yield partial[k]
            i = k - 1
            while i >= 0:
                idx[i] += 1
                if idx[i] < sizes[i]:
                    break
                idx[i] = 0
                i -= 1
            if i < 0:
                return

    def elements(self, cap: int = DEFAULT_ENUMERATION_CAP):
        """Yield every element once as Perm, in deterministic order."""
        for t in self.tables(cap):
            yield Perm(self.degree, t)

    def random_element(self, rng) -> Perm:
        """Uniformly random element from a seeded random.Random."""
        t = self._ident
        for lvl in self._levels:
            us = list(lvl.orbit.values())
            t = mul(us[rng.randrange(len(us))][0], t)
        return Perm(self.degree, t)

    # -- derived constructions ---------------------------------------------------

    def subgroup(self, gens: list[Perm], name: str | None = None) -> "PermutationGroup":
        """Group generated by gens, each of which must lie in this group."""
        for g in gens:
            if not self.contains(g):
                raise MembershipError(f"{g.cycles()} is not an element of the group")
        return PermutationGroup(self.degree, gens, name=name)

    def normal_closure(self, seeds: list[Perm]) -> "PermutationGroup":
        """Smallest normal subgroup containing seeds (which must lie in the group).

        Closure by FIFO conjugation sweep: each adopted generator is conjugated
        by every group generator in order; new elements join the queue.
        """
        for g in seeds:
            if not self.contains(g):
                raise MembershipError(f"{g.cycles()} is not an element of the group")
        return self._normal_closure_tables([g.t for g in seeds])

    def _normal_closure_tables(self, seed_tables: list) -> "PermutationGroup":
        n = PermutationGroup(self.degree, [])
        queue: list = []
        for t in seed_tables:
            if not is_ident(t) and n._adopt(t):
                queue.append(t)
        qi = 0
        while qi < len(queue):
            y = queue[qi]
            qi += 1
            for g, ginv in zip(self.gens, self.gen_invs):
                z = mul(mul(ginv, y), g)
                if not n.contains_table(z):
                    n._adopt(z)
                    queue.append(z)
        return n

    def conjugacy_class_tables(self, t, class_cap: int = DEFAULT_CLASS_CAP):
        """(members_in_BFS_order, size). Members list is None above the cap."""
        seen = {t}
        queue = [t]
        qi = 0
        while qi < len(queue):
            y = queue[qi]
            qi += 1
            for g, ginv in zip(self.gens, self.gen_invs):
                z = mul(mul(ginv, y), g)
                if z not in seen:
                    seen.add(z)
                    queue.append(z)
        size = len(queue)
        return (queue if size <= class_cap else None), size

    def conjugacy_class(self, x: Perm, class_cap: int = DEFAULT_CLASS_CAP) -> "ConjugacyClass":
        if not self.contains(x):
            raise MembershipError(f"{x.cycles()} is not an element of the group")
        members, size = self.conjugacy_class_tables(x.t, class_cap)
        return ConjugacyClass(
            representative=x,
            size=size,
            members=None if members is None else tuple(Perm(self.degree, t) for t in members),
        )

    def class_representatives_tables(
        self,
        order_filter: int | None = None,
        cap: int = DEFAULT_ENUMERATION_CAP,
        class_cap: int = DEFAULT_CLASS_CAP,
    ):
        """Yield (rep_table, class_size) per conjugacy class, enumeration order.

        With order_filter only classes of that exact element order are visited;
        the seen-set then holds only elements of that order, keeping memory
        proportional to the filtered count.
        """
        checker = None
        if order_filter is not None:
            checker = self._order_checker(order_filter)
        seen: set = set()
        for t in self.tables(cap):
            if checker is not None and not checker(t):
                continue
            if t in seen:
                continue
            members, size = self.conjugacy_class_tables(t, class_cap=1 << 62)
            seen.update(members)
            yield t, size

    def _order_checker(self, k: int):
        """Predicate: element has order exactly k (k >= 1)."""
        n = self.degree
        ident = self._ident
        maximal = [k // p for p in factorize(k).primes]

        def check(t) -> bool:
            if pow_table(t, k, n) != ident:
                return False
            return all(pow_table(t, m, n) != ident for m in maximal)

        return check

    def class_representatives(
        self,
        order_filter: int | None = None,
        cap: int = DEFAULT_ENUMERATION_CAP,
        class_cap: int = DEFAULT_CLASS_CAP,
    ) -> list["ConjugacyClass"]:
        out = []
        for t, size in self.class_representatives_tables(order_filter, cap, class_cap):
            out.append(ConjugacyClass(Perm(self.degree, t), size, None))
        return out

    # -- element family caches ----------------------------------------------------

    def p_element_tables(self, p: int, cap: int = DEFAULT_ENUMERATION_CAP) -> tuple:
        """All nonidentity elements of p-power order, deterministic order, cached."""
        cached = self._pelement_cache.get(p)
        if cached is not None:
            return cached
        pe = p_part(self.order, p)
        n = self.degree
        ident = self._ident
        out = []
        if pe > 1:
            for t in self.tables(cap):
                if t is not ident and t != ident and pow_table(t, pe, n) == ident:
                    out.append(t)
        result = tuple(out)
        self._pelement_cache[p] = result
        return result

    def element_order(self, t) -> int:
        return table_order(t, self.degree)

    def __repr__(self) -> str:
        label = self.name or "PermutationGroup"
        return f"<{label} degree={self.degree} order={self.order}>"


class ConjugacyClass:
    """A conjugacy class: representative, exact size, optional member list."""

    __slots__ = ("representative", "size", "members")

    def __init__(self, representative: Perm, size: int, members):
        self.representative = representative
        self.size = size
        self.members = members

    def __repr__(self) -> str:
        return f"ConjugacyClass({self.representative.cycles()}, size={self.size})"


def group_from_cycles(degree: int, cycle_strings: list[str], name: str | None = None) -> PermutationGroup:
    gens = [Perm.from_cycles(s, degree) for s in cycle_strings]
    return PermutationGroup(degree, gens, name=name)


def pair_group(degree: int, a, b) -> PermutationGroup:
    """Group generated by two raw tables; used heavily by the criteria loops."""
    g = PermutationGroup.__new__(PermutationGroup)
    g.degree = degree
    g.name = None
    g._ident = ident_table(degree)
    tables = []
    for t in (a, b):
        if not is_ident(t) and t not in tables:
            tables.append(t)
    g.gens = tables
    g.gen_invs = [inv(t, degree) for t in tables]
    g._levels = []
    g._order = None
    g._pelement_cache = {}
    for t in tables:
        g._add_generator(t)
    g._order = None
    return g


def canonical(t, n: int) -> str:
    return format_cycles(t, n)
