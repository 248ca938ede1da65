"""Solvable-radical membership criteria decided by pair subgroups.

An element x of a finite group G lies in the solvable radical R(G) exactly
when <x, y> is solvable for every y in G. The point of the restricted
criteria is that far smaller y-sets already decide membership:

  b1           y ranges over all of G (the baseline equivalence)
  odd-p        y ranges over p-elements for every odd prime p dividing |G|
  two-element  x itself is a p-element for an odd p; y ranges over 2-elements
  combined     x = x2 * x2' (2-part times 2'-part): the 2-part is checked
               against odd-prime p-elements, and each odd primary component
               of x2' against 2-elements; together these decide x.

A false verdict always carries a Witness: a concrete y with <x', y> not
solvable (x' is x or the primary component that failed), re-checkable from
its fields alone.

All loops are deterministic. Exhaustive phases skip y when an earlier tested
y' already covers it: y covered means y = x^-j y'^k x^j with k coprime to
o(y'), which makes <x, y> and <x, y'> conjugate, hence equisolvable. A cheap
deterministic probe (built from strong generators) runs before exhaustive
member_* loops to find witnesses early; find_witness keeps the strict
primes-ascending, enumeration-order, first-hit contract and no probe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import factorize
from .errors import CapExceededError, MembershipError, PreconditionError
from .group import DEFAULT_ENUMERATION_CAP, PermutationGroup, pair_group
from .perm import Perm, inv, is_ident, mul, pow_table, table_order
from .structure import derived_subgroup, primary_decomposition, two_part_split

DEFAULT_PAIR_CAP = 10_000_000

METHOD_B1 = "b1"
METHOD_ODD_P = "odd-p"
METHOD_TWO_ELEMENT = "two-element"
METHOD_COMBINED = "combined"

CONSTRAINT_ODD_P = "odd-p"
CONSTRAINT_TWO_ELEMENT = "two-element"
CONSTRAINT_ANY = "any"


@dataclass(frozen=True)
class Witness:
    """A pair proving non-membership: <x, y> is not solvable.

    prime: y is a p-element of this prime; None when y has composite order
    (possible only for method b1, whose quantifier ranges over all of G).
    derived_steps: strict descents of the pair subgroup's derived series
    before it stabilized.
    """

    x: Perm
    y: Perm
    prime: int | None
    subgroup_order: int
    derived_steps: int


@dataclass(frozen=True)
class MembershipVerdict:
    element: Perm
    method: str
    member: bool
    witness: Witness | None
    pairs_tested: int


def _pair_solvable(degree: int, a, b) -> tuple[bool, int, int]:
    """(solvable, subgroup_order, derived_steps) for <a, b>.

    Solvable exits may use sufficient conditions (cyclic generation, at most
    two distinct prime divisors of a term's order); a nonsolvable exit always
    comes from an honestly stabilized descent, so derived_steps is exact.
    """
    pg = pair_group(degree, a, b)
    order = pg.order
    if len(pg.gens) <= 1:
        return True, order, 0
    h = pg
    steps = 0
    while True:
        o = h.order
        if o == 1 or len(factorize(o)) <= 2:
            return True, order, steps
        d = derived_subgroup(h)
        if d.order == o:
            return False, order, steps
        h = d
        steps += 1


def _prime_of_order(o: int) -> int | None:
    f = factorize(o).pairs
    return f[0][0] if len(f) == 1 else None


def _component_table(t, n: int, p: int):
    """p-component of a raw table (power of t with p-power order)."""
    o = table_order(t, n)
    a = 0
    pa = 1
    while o % (pa * p) == 0:
        pa *= p
        a += 1
    if a == 0:
        return None
    rest = o // pa
    if rest == 1:
        return t
    # k = 1 mod pa, 0 mod rest
    k = (rest * pow(rest, -1, pa)) % o
    return pow_table(t, k, n)


def _probe_tables(g: PermutationGroup, xt, prime_kind) -> list:
    """Deterministic cheap witness candidates, all elements of g.

    prime_kind None: strong generators, x-conjugates of them, a few products.
    prime_kind "odd"/2/p: the matching primary components of those elements.
    """
    n = g.degree
    base: list = []
    strong = []
    for lvl in g._levels:
        for t in lvl.gens:
            if t not in strong:
                strong.append(t)
    base.extend(strong)
    for s in strong:
        base.append(mul(mul(inv(s, n), xt), s))
    for i, s in enumerate(strong[:6]):
        for t in strong[i + 1 : 6]:
            base.append(mul(s, t))
    out: list = []
    seen: set = set()
    for t in base:
        if prime_kind is None:
            cands = [t]
        elif prime_kind == "odd":
            cands = []
            for p, _a in factorize(table_order(t, n)):
                if p != 2:
                    cands.append(_component_table(t, n, p))
        else:
            c = _component_table(t, n, prime_kind)
            cands = [c] if c is not None else []
        for c in cands:
            if c is not None and not is_ident(c) and c not in seen:
                seen.add(c)
                out.append(c)
    return out


def _coverage(xt, x_order: int, yt, n: int) -> set:
    """{x^-j y^k x^j : gcd(k, o(y)) = 1, 0 <= j < o(x)} as raw tables."""
    o = table_order(yt, n)
    gens_of_cyclic = []
    power = yt
    for k in range(1, o + 1):
        if math.gcd(k, o) == 1:
            gens_of_cyclic.append(power)
        if k < o:
            power = mul(power, yt)
    out = set()
    xinv = inv(xt, n)
    for z in gens_of_cyclic:
        cur = z
        for _ in range(max(1, x_order)):
            out.add(cur)
            cur = mul(mul(xinv, cur), xt)
    return out


def _require_member(g: PermutationGroup, x: Perm) -> None:
    if x.degree != g.degree or not g.contains(x):
        raise MembershipError(f"{x.cycles()} is not an element of the group")


def member_b1(
    g: PermutationGroup,
    x: Perm,
    pair_cap: int = DEFAULT_PAIR_CAP,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> MembershipVerdict:
    """x in R(G) iff <x, y> is solvable for every y in G."""
    _require_member(g, x)
    xt = x.t
    n = g.degree
    if is_ident(xt):
        # <identity, y> is cyclic, hence solvable, for every y
        return MembershipVerdict(x, METHOD_B1, True, None, 0)
    tested = 0
    for yt in _probe_tables(g, xt, None):
        tested += 1
        solvable, order, steps = _pair_solvable(n, xt, yt)
        if not solvable:
            w = Witness(x, Perm(n, yt), _prime_of_order(table_order(yt, n)), order, steps)
            return MembershipVerdict(x, METHOD_B1, False, w, tested)
    x_order = x.order()
    covered: set = set()
    for yt in g.tables(cap):
        if is_ident(yt) or yt in covered:
            continue
        tested += 1
        if tested > pair_cap:
            raise CapExceededError(f"pair cap {pair_cap} exhausted before a verdict")
        solvable, order, steps = _pair_solvable(n, xt, yt)
        if not solvable:
            w = Witness(x, Perm(n, yt), _prime_of_order(table_order(yt, n)), order, steps)
            return MembershipVerdict(x, METHOD_B1, False, w, tested)
        covered |= _coverage(xt, x_order, yt, n)
    return MembershipVerdict(x, METHOD_B1, True, None, tested)


def _check_against_p_elements(
    g: PermutationGroup,
    checked,
    checked_perm: Perm,
    p: int,
    pair_cap: int,
    cap: int,
    tested: int,
    probe: bool,
) -> tuple[Witness | None, int]:
    """Run <checked, y> over the p-elements of g; first witness or None."""
    n = g.degree
    if probe:
        kind = "odd" if p != 2 else 2
        for yt in _probe_tables(g, checked, kind):
            yp = _prime_of_order(table_order(yt, n))
            if p == 2:
                if yp != 2:
                    continue
            elif yp is None or yp == 2:
                continue
            tested += 1
            solvable, order, steps = _pair_solvable(n, checked, yt)
            if not solvable:
                return Witness(checked_perm, Perm(n, yt), yp, order, steps), tested
    x_order = table_order(checked, n)
    covered: set = set()
    for yt in g.p_element_tables(p, cap):
        if yt in covered:
            continue
        tested += 1
        if tested > pair_cap:
            raise CapExceededError(f"pair cap {pair_cap} exhausted before a verdict")
        solvable, order, steps = _pair_solvable(n, checked, yt)
        if not solvable:
            return Witness(checked_perm, Perm(n, yt), p, order, steps), tested
        covered |= _coverage(checked, x_order, yt, n)
    return None, tested


def member_oddp(
    g: PermutationGroup,
    x: Perm,
    pair_cap: int = DEFAULT_PAIR_CAP,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> MembershipVerdict:
    """x in R(G) iff <x, y> is solvable for every p-element y, p odd."""
    _require_member(g, x)
    xt = x.t
    if is_ident(xt):
        return MembershipVerdict(x, METHOD_ODD_P, True, None, 0)
    tested = 0
    for p in factorize(g.order).primes:
        if p == 2:
            continue
        w, tested = _check_against_p_elements(g, xt, x, p, pair_cap, cap, tested, probe=True)
        if w is not None:
            return MembershipVerdict(x, METHOD_ODD_P, False, w, tested)
    return MembershipVerdict(x, METHOD_ODD_P, True, None, tested)


def member_two_element(
    g: PermutationGroup,
    x: Perm,
    pair_cap: int = DEFAULT_PAIR_CAP,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> MembershipVerdict:
    """For x a p-element with p odd: x in R(G) iff <x, y> is solvable for
    every 2-element y."""
    _require_member(g, x)
    o = x.order()
    f = factorize(o).pairs
    if len(f) != 1 or f[0][0] == 2:
        raise PreconditionError(
            f"x must be a p-element for an odd prime, but o(x) = {o}"
        )
    tested = 0
    w, tested = _check_against_p_elements(g, x.t, x, 2, pair_cap, cap, tested, probe=True)
    if w is not None:
        return MembershipVerdict(x, METHOD_TWO_ELEMENT, False, w, tested)
    return MembershipVerdict(x, METHOD_TWO_ELEMENT, True, None, tested)


def member_combined(
    g: PermutationGroup,
    x: Perm,
    pair_cap: int = DEFAULT_PAIR_CAP,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> MembershipVerdict:
    """Split check: the 2-part of x against odd-prime p-elements, each odd
    primary component of x against 2-elements."""
    _require_member(g, x)
    split = two_part_split(x)
    tested = 0
    x2 = split.two_part
    if not x2.is_identity():
        for p in factorize(g.order).primes:
            if p == 2:
                continue
            w, tested = _check_against_p_elements(
                g, x2.t, x2, p, pair_cap, cap, tested, probe=True
            )
            if w is not None:
                return MembershipVerdict(x, METHOD_COMBINED, False, w, tested)
    for p, comp in primary_decomposition(split.odd_part).components:
        w, tested = _check_against_p_elements(
            g, comp.t, comp, 2, pair_cap, cap, tested, probe=True
        )
        if w is not None:
            return MembershipVerdict(x, METHOD_COMBINED, False, w, tested)
    return MembershipVerdict(x, METHOD_COMBINED, True, None, tested)


def find_witness(
    g: PermutationGroup,
    x: Perm,
    constraint: str = CONSTRAINT_ANY,
    pair_cap: int = DEFAULT_PAIR_CAP,
    cap: int = DEFAULT_ENUMERATION_CAP,
    domain: PermutationGroup | None = None,
) -> Witness | None:
    """First witness in deterministic order, or None after exhaustion.

    Order: primes ascending (odd primes for "odd-p", just 2 for
    "two-element", all primes for "any"); within a prime, the domain's
    p-element enumeration order. domain restricts where y ranges (e.g. a
    socle); the pair subgroup always lives in the ambient degree. Raises
    CapExceededError when the pair budget runs out first, which is reported
    distinctly from a completed search without a witness.
    """
    _require_member(g, x)
    dom = domain if domain is not None else g
    if dom.degree != g.degree:
        raise PreconditionError("witness domain degree differs from the group's")
    if constraint == CONSTRAINT_ODD_P:
        primes = [p for p in factorize(dom.order).primes if p != 2]
    elif constraint == CONSTRAINT_TWO_ELEMENT:
        primes = [2] if dom.order % 2 == 0 else []
    elif constraint == CONSTRAINT_ANY:
        primes = list(factorize(dom.order).primes)
    else:
        raise PreconditionError(f"unknown witness constraint {constraint!r}")
    n = g.degree
    xt = x.t
    x_order = x.order()
    tested = 0
    for p in primes:
        covered: set = set()
        for yt in dom.p_element_tables(p, cap):
            if yt in covered:
                continue
            tested += 1
            if tested > pair_cap:
                raise CapExceededError(
                    f"pair cap {pair_cap} exhausted before the search finished"
                )
            solvable, order, steps = _pair_solvable(n, xt, yt)
            if not solvable:
                return Witness(x, Perm(n, yt), p, order, steps)
            covered |= _coverage(xt, x_order, yt, n)
    return None


def witness_is_valid(
    w: Witness,
    ambient: PermutationGroup | None = None,
    y_domain: PermutationGroup | None = None,
) -> bool:
    """Re-validate a witness from its fields: the pair subgroup is not
    solvable, its order matches, derived_steps matches, y is a p-element of
    the stated prime, and the parts lie where claimed."""
    if w.x.degree != w.y.degree:
        return False
    solvable, order, steps = _pair_solvable(w.x.degree, w.x.t, w.y.t)
    if solvable or order != w.subgroup_order or steps != w.derived_steps:
        return False
    if w.prime is not None:
        f = factorize(w.y.order()).pairs
        if len(f) != 1 or f[0][0] != w.prime:
            return False
    if ambient is not None and not ambient.contains(w.x):
        return False
    if y_domain is not None and not y_domain.contains(w.y):
        return False
    return True
