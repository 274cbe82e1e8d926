"""Built-in racks and quandles, addressed by short keys such as ``R5`` or ``conjS3``."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Callable

from .errors import QuandleRingError
from .groups import FiniteGroup, small_groups
from .quandle import FiniteRack, alexander, conj, core, dihedral, flip_rack, gen_alexander, trivial, two_elem_rack


class UnknownKeyError(QuandleRingError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    description: str
    build: Callable[[], FiniteRack] = field(compare=False, repr=False)
    params: tuple = ()

    def rack(self) -> FiniteRack:
        X = self.build()
        return FiniteRack(X.table, name=self.key)


def _cyclic_mult(G: FiniteGroup, t: int) -> tuple[int, ...]:
    # element k of the cyclic group is g^k, so multiplication by t is k -> tk
    m = G.size
    return tuple((t * k) % m for k in range(m))


def _order3_aut(G: FiniteGroup) -> tuple[int, ...]:
    return next(p for p in G.automorphisms() if p != tuple(range(G.size)) and _perm_order(p) == 3)


def _perm_order(p) -> int:
    k, q = 1, tuple(p)
    ident = tuple(range(len(p)))
    while q != ident:
        q = tuple(p[i] for i in q)
        k += 1
    return k


def _first_outer(G: FiniteGroup) -> tuple[int, ...]:
    inner = {G.inner_automorphism(g) for g in range(G.size)}
    return next(p for p in G.automorphisms() if p not in inner)


@lru_cache(maxsize=1)
def catalog() -> dict[str, CatalogEntry]:
    out: dict[str, CatalogEntry] = {}

    def put(key, desc, build, params=()):
        out[key] = CatalogEntry(key, desc, build, params)

    for n in range(1, 7):
        put(f"T{n}", f"trivial quandle on {n} elements", lambda n=n: trivial(n), (n,))
    for n in range(3, 10):
        put(f"R{n}", f"dihedral quandle of order {n}", lambda n=n: dihedral(n), (n,))
    for n in range(2, 7):
        put(f"flip{n}", f"rack x_i * x_j = x_(n-1-i) on {n} elements", lambda n=n: flip_rack(n), (n,))
    put("rack2", "two-element rack that is not a quandle", two_elem_rack)

    groups = small_groups()
    for name, G in groups.items():
        put(f"conj{name}", f"conjugation quandle of {name}", lambda G=G: conj(G), (name,))
        put(f"core{name}", f"core quandle of {name}", lambda G=G: core(G), (name,))
    for m in range(3, 9):
        G = groups[f"Z{m}"]
        for t in range(2, m):
            if gcd(t, m) == 1:
                put(f"alexZ{m}t{t}", f"Alexander quandle on Z/{m} with t = {t}",
                    lambda G=G, t=t: alexander(G, _cyclic_mult(G, t)), (f"Z{m}", t))
    V4 = groups["Z2xZ2"]
    put("alexZ2xZ2", "Alexander quandle on Z2xZ2 with an order-3 automorphism",
        lambda: alexander(V4, _order3_aut(V4)), ("Z2xZ2",))
    Z4, Q8 = groups["Z4"], groups["Q8"]
    put("galexZ4inv", "generalized Alexander quandle of Z4 with inversion",
        lambda: gen_alexander(Z4, tuple(Z4.inverse)), ("Z4",))
    put("galexQ8", "generalized Alexander quandle of Q8 with an outer automorphism",
        lambda: gen_alexander(Q8, _first_outer(Q8)), ("Q8",))
    return out


def keys() -> list[str]:
    return list(catalog())


def get(key: str) -> FiniteRack:
    try:
        return catalog()[key].rack()
    except KeyError:
        raise UnknownKeyError(f"unknown catalog key {key!r}") from None


def quandles(max_size: int | None = None) -> list[FiniteRack]:
    """Every catalog entry that is a quandle, optionally bounded in size."""
    out = []
    for key in catalog():
        X = get(key)
        if X.is_quandle and (max_size is None or X.size <= max_size):
            out.append(X)
    return out


def racks(max_size: int | None = None) -> list[FiniteRack]:
    return [X for X in map(get, catalog()) if X.is_rack and (max_size is None or X.size <= max_size)]
