"""Generate the bundled group files in src/radlab/data/.

Unitary and symplectic groups are built from form-preserving transvections;
the Suzuki group from its natural 4x4 matrices over GF(8). Linear-family
bundles are dumped from the catalog recipes. Every file is order-asserted
against the closed-form order formulas before it is written, and the
automorphism-group files carry socle_generators indices marking the simple
socle inside the extension.

Run from the repository root:

    python3 tools/make_bundled_groups.py
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from radlab import catalog
from radlab.errors import OrderMismatchError
from radlab.gf import GF, FiniteField
from radlab.group import PermutationGroup
from radlab.linalg import (
    det,
    identity_matrix,
    mat_mul,
    perm_from_domain_map,
    projective_points,
    transpose,
    vec_mat,
)

OUT_DIR = Path(__file__).resolve().parent.parent / "src" / "radlab" / "data"


# ------------------------------------------------------------ form helpers

def _bar(k: FiniteField, x: int) -> int:
    # the involutory field automorphism of GF(q0^2), x -> x^q0
    return k.frobenius(x, k.deg // 2)


def _herm(k: FiniteField, x, y) -> int:
    d = len(x)
    s = 0
    for i in range(d):
        s = k.add(s, k.mul(x[i], _bar(k, y[d - 1 - i])))
    return s


def _is_unitary(k: FiniteField, m) -> bool:
    d = len(m)
    j_form = tuple(tuple(1 if a + b == d - 1 else 0 for b in range(d)) for a in range(d))
    barmt = transpose(tuple(tuple(_bar(k, x) for x in row) for row in m))
    return mat_mul(k, mat_mul(k, m, j_form), barmt) == j_form


def _symp(k: FiniteField, x, y) -> int:
    # antidiagonal form (1, 1, -1, -1): <x,y> = x1 y4 + x2 y3 - x3 y2 - x4 y1
    d = len(x)
    s = 0
    for i in range(d):
        t = k.mul(x[i], y[d - 1 - i])
        if i >= d // 2:
            t = k.neg(t)
        s = k.add(s, t)
    return s


def _is_symplectic(k: FiniteField, m) -> bool:
    d = len(m)
    for a in range(d):
        for b in range(d):
            ea = tuple(1 if i == a else 0 for i in range(d))
            eb = tuple(1 if i == b else 0 for i in range(d))
            if _symp(k, m[a], m[b]) != _symp(k, ea, eb):
                return False
    return True


def _normalize(k: FiniteField, v):
    for x in v:
        if x:
            if x == 1:
                return tuple(v)
            c = k.inv(x)
            return tuple(k.mul(c, y) for y in v)
    return None


def _greedy_generators(degree: int, perms, target: int):
    """Smallest-prefix generating subset, in the candidates' given order."""
    chosen = []
    group = None
    for p in perms:
        if group is not None and group.contains(p):
            continue
        chosen.append(p)
        group = PermutationGroup(degree, chosen)
        if group.order == target:
            return chosen, group
    raise OrderMismatchError(
        f"candidates generate order {0 if group is None else group.order}, wanted {target}"
    )


# ----------------------------------------------------------- constructions

def unitary_group(q0: int, d: int, target: int):
    """(domain points, socle perms, field auto perms) for PSU_d(q0) with its
    full diagonal+field extension on the isotropic points of PG(d-1, q0^2)."""
    k = GF(q0 * q0)
    pts = [p for p in projective_points(k, d) if _herm(k, p, p) == 0]
    idx = {p: i for i, p in enumerate(pts)}

    mats = []
    for v in pts:
        for lam in range(1, k.q):
            rows = []
            for i in range(d):
                e = [1 if j == i else 0 for j in range(d)]
                coef = k.mul(lam, _herm(k, tuple(e), v))
                rows.append(tuple(k.add(e[j], k.mul(coef, v[j])) for j in range(d)))
            m = tuple(rows)
            if m != identity_matrix(d) and det(k, m) == 1 and _is_unitary(k, m):
                mats.append(m)

    perms = [
        perm_from_domain_map(pts, idx, lambda w, m=m: _normalize(k, vec_mat(k, w, m)))
        for m in mats
    ]
    gens, group = _greedy_generators(len(pts), perms, target)
    frob = perm_from_domain_map(pts, idx, lambda w: tuple(k.frobenius(x, 1) for x in w))
    return pts, gens, [frob], group


def symplectic_4_3():
    """(points, socle perms, similitude perm, socle group) for PSp4(3) on the
    40 points of PG(3, 3)."""
    k = GF(3)
    d = 4
    pts = projective_points(k, d)
    idx = {p: i for i, p in enumerate(pts)}

    mats = []
    for v in pts:
        for lam in (1, 2):
            rows = []
            for i in range(d):
                e = [1 if j == i else 0 for j in range(d)]
                coef = k.mul(lam, _symp(k, tuple(e), v))
                rows.append(tuple(k.add(e[j], k.mul(coef, v[j])) for j in range(d)))
            m = tuple(rows)
            if m != identity_matrix(d) and det(k, m) == 1 and _is_symplectic(k, m):
                mats.append(m)

    perms = [
        perm_from_domain_map(pts, idx, lambda w, m=m: _normalize(k, vec_mat(k, w, m)))
        for m in mats
    ]
    gens, group = _greedy_generators(len(pts), perms, catalog.psp_order(2, 3))

    sim = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 2, 0), (0, 0, 0, 2))
    mu = 2
    for a in range(d):
        for b in range(d):
            ea = tuple(1 if i == a else 0 for i in range(d))
            eb = tuple(1 if i == b else 0 for i in range(d))
            assert _symp(k, sim[a], sim[b]) == k.mul(mu, _symp(k, ea, eb))
    sim_perm = perm_from_domain_map(pts, idx, lambda w: _normalize(k, vec_mat(k, w, sim)))
    return pts, gens, [sim_perm], group


def suzuki_8():
    """(ovoid points, socle perms, field auto perms, socle group) for Sz(8)
    on its 65-point ovoid in PG(3, 8)."""
    k = GF(8)
    theta = lambda x: k.frobenius(x, 2)  # x -> x^4, the square root of Frobenius

    def u_mat(a, b):
        a_th = theta(a)
        r2c0 = k.add(k.mul(a, a_th), b)  # a^(1+theta) + b
        r3c0 = k.add(k.add(k.mul(k.mul(a, a), a_th), k.mul(a, b)), theta(b))
        return (
            (1, 0, 0, 0),
            (a, 1, 0, 0),
            (r2c0, a_th, 1, 0),
            (r3c0, b, a, 1),
        )

    # multiplication law pins down the parametrization
    for a in range(8):
        for b in range(8):
            for c in range(8):
                for e in range(8):
                    lhs = mat_mul(k, u_mat(a, b), u_mat(c, e))
                    rhs = u_mat(k.add(a, c), k.add(k.add(b, e), k.mul(a, theta(c))))
                    assert lhs == rhs, (a, b, c, e)

    def m_mat(lam):
        l2 = k.mul(lam, lam)
        l3 = k.mul(l2, lam)
        return (
            (l3, 0, 0, 0),
            (0, l2, 0, 0),
            (0, 0, k.inv(l2), 0),
            (0, 0, 0, k.inv(l3)),
        )

    t_mat = ((0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0))

    g = k.generator()
    mats = [u_mat(1, 0), u_mat(0, 1), u_mat(g, 0), u_mat(0, g), m_mat(g), t_mat]

    # ovoid = orbit of the parabolic fixed point
    start = _normalize(k, (1, 0, 0, 0))
    orbit = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for p in frontier:
            for m in mats:
                q = _normalize(k, vec_mat(k, p, m))
                if q not in orbit:
                    orbit.add(q)
                    nxt.append(q)
        frontier = nxt
    pts = sorted(orbit)
    assert len(pts) == 65, len(pts)
    idx = {p: i for i, p in enumerate(pts)}

    perms = [
        perm_from_domain_map(pts, idx, lambda w, m=m: _normalize(k, vec_mat(k, w, m)))
        for m in mats
    ]
    gens, group = _greedy_generators(65, perms, catalog.sz_order(8))
    frob = perm_from_domain_map(pts, idx, lambda w: tuple(k.frobenius(x, 1) for x in w))
    return pts, gens, [frob], group


# ----------------------------------------------------------------- emission

def emit_aut_file(name: str, degree: int, socle_gens, extra_gens, aut_order: int):
    gens = list(socle_gens) + list(extra_gens)
    aut = PermutationGroup(degree, gens, name=f"{name}_aut")
    if aut.order != aut_order:
        raise OrderMismatchError(f"{name}: extension order {aut.order}, wanted {aut_order}")
    # the stored generator list must reproduce both orders on load
    catalog.save_group_file(OUT_DIR / f"{name}.json", aut,
                            socle_indices=range(len(list(socle_gens))))
    loaded = catalog.load_group_file(OUT_DIR / f"{name}.json")
    assert loaded.group.order == aut_order
    assert loaded.socle is not None and loaded.socle.order == catalog._SOCLE_ORDERS[name]
    print(f"  {name}.json: aut {aut.order}, socle {loaded.socle.order}, degree {degree}")


def emit_socle_file(name: str):
    g = catalog.build_named(name)
    catalog.save_group_file(OUT_DIR / f"{name}.json", g)
    loaded = catalog.load_group_file(OUT_DIR / f"{name}.json")
    assert loaded.group.order == g.order
    print(f"  {name}.json: order {g.order}, degree {g.degree}")


def emit_index():
    lists = {}
    for ln, lst in sorted(catalog.CVL_LISTS.items()):
        entries = []
        for e in lst.entries:
            row = {
                "socle": e.socle,
                "socle_order": e.socle_order,
                "status": "runnable" if e.runnable else "out-of-desk-scale",
            }
            if e.runnable:
                row["aut_order"] = e.aut_order
            entries.append(row)
        lists[ln] = {
            "x_order": lst.x_order,
            "witness_kind": lst.witness_kind,
            "entries": entries,
        }
    path = OUT_DIR / "cvl_index.json"
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps({"lists": lists}, indent=2, sort_keys=True) + "\n")
    print(f"  cvl_index.json: {sum(len(v['entries']) for v in lists.values())} entries")


def main():
    OUT_DIR.mkdir(parents=True, exist_ok=True)

    print("unitary groups:")
    pts, gens, extra, socle = unitary_group(3, 3, catalog.psu_order(3, 3))
    emit_aut_file("PSU3_3", len(pts), gens, extra, 12096)
    pts, gens, extra, socle = unitary_group(2, 4, catalog.psu_order(4, 2))
    emit_aut_file("PSU4_2", len(pts), gens, extra, 51840)
    pts, gens, extra, socle = unitary_group(4, 3, catalog.psu_order(3, 4))
    emit_aut_file("PSU3_4", len(pts), gens, extra, 249600)

    print("symplectic group:")
    pts, gens, extra, socle = symplectic_4_3()
    emit_aut_file("PSp4_3", len(pts), gens, extra, 51840)

    print("Suzuki group:")
    pts, gens, extra, socle = suzuki_8()
    emit_aut_file("Sz_8", len(pts), gens, extra, 87360)

    print("linear-family bundles:")
    for name in ("A6", "PSL3_2", "PSL2_8", "PSL2_27", "PSL3_3", "PSL4_2", "PSL3_4"):
        emit_socle_file(name)

    print("index:")
    emit_index()


if __name__ == "__main__":
    main()
