"""Command-line interface.

Exit codes: 0 success, 1 hypothesis not met, 2 bad input, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import catalog
from . import ideals as idl
from . import units as un
from . import zlattice as zl
from .assoc import (
    IDENTITY_CUBE,
    IDENTITY_FOURTH,
    check_element,
    core_exponent2_check,
    is_associative,
    power_assoc_numeric,
    power_assoc_symbolic,
)
from .coeff import QQ, ZZ, CoeffRing
from .errors import HypothesisError, QuandleRingError, ResourceLimitError
from .groups import small_groups
from .quandle import FiniteRack, are_isomorphic, dihedral, homomorphisms, load_quandle, orbits
from .ring import ExtElt, RingElt, basis_label

MAX_K_CAP = 12


@dataclass
class RunConfig:
    ring: CoeffRing
    fmt: str
    max_k: int
    box: int

    def __post_init__(self):
        if self.max_k < 1 or self.box < 1:
            raise ValueError("limits must be positive")


class InputError(QuandleRingError):
    pass


# -- helpers -------------------------------------------------------------


def _rack(args, key=None) -> FiniteRack:
    key = key if key is not None else getattr(args, "key", None)
    if getattr(args, "file", None) and key is None:
        return load_quandle(args.file)
    if key is None:
        raise InputError("give a catalog key or --file PATH")
    return catalog.get(key)


def _vector(text: str, ring: CoeffRing, length: int | None = None) -> list:
    try:
        vals = [ring(Fraction(s.strip())) for s in text.split(",")]
    except ValueError as exc:
        raise InputError(f"cannot parse vector {text!r}: {exc}") from None
    if length is not None and len(vals) != length:
        raise InputError(f"expected {length} comma-separated values, got {len(vals)}")
    return vals


def _fmt_set(s) -> str:
    return "{" + ",".join(map(str, sorted(s))) + "}"


def _summary(X: FiniteRack) -> str:
    if not X.is_rack:
        return "not a rack"
    parts = ["quandle" if X.is_quandle else "rack"]
    if not X.is_quandle:
        parts.append("not quandle")
    if X.is_trivial:
        parts.append("trivial")
    else:
        if X.is_involutary:
            parts.append("involutary")
        if X.is_latin:
            parts.append("latin")
        parts.append("connected" if X.is_connected else "not connected")
    parts.append("orbits " + ",".join(_fmt_set(o) for o in orbits(X)))
    return ", ".join(parts)


def _basis_text(L: zl.IntLattice) -> str:
    if L.is_zero():
        return "0"
    return "span{" + ", ".join(_vec_text(r) for r in L.basis) + "}"


def _vec_text(v) -> str:
    terms = [(c, basis_label(i)) for i, c in enumerate(v) if c]
    out = ""
    for c, lab in terms:
        sign = "-" if c < 0 else "+"
        body = lab if abs(c) == 1 else f"{abs(c)}*{lab}"
        out += (("-" if sign == "-" else "") + body) if not out else f" {sign} {body}"
    return out or "0"


class Output:
    def __init__(self, cfg: RunConfig):
        self.cfg = cfg
        self.lines: list[str] = []
        self.data: dict = {}

    def line(self, text: str = ""):
        self.lines.append(text)

    def emit(self):
        if self.cfg.fmt == "json":
            print(json.dumps(self.data, indent=2, sort_keys=True))
        else:
            print("\n".join(self.lines))


# -- subcommands -----------------------------------------------------------


def cmd_info(args, cfg, out: Output):
    X = _rack(args)
    out.line(f"{X.name or 'X'}: {_summary(X)}")
    out.line(f"size: {X.size}")
    out.line(f"classification: {X.classification.name.lower()}")
    for k, v in X.flags().items():
        out.line(f"{k}: {str(v).lower()}")
    out.data = {**X.to_dict(), "classification": X.classification.name.lower(), "flags": X.flags(),
                "summary": _summary(X), "orbits": [sorted(o) for o in orbits(X)] if X.is_rack else []}


def _graded(X: FiniteRack, k_max: int):
    if k_max > MAX_K_CAP:
        raise ResourceLimitError(f"max k {k_max} exceeds cap {MAX_K_CAP}")
    return idl.graded_series(X, k_max + 1)


def cmd_graded(args, cfg, out):
    X = _rack(args)
    k_max = args.k if args.k is not None else cfg.max_k
    gs = _graded(X, k_max)
    rows = []
    for k in range(1, k_max + 1):
        L, shape = gs.power(k), gs.shape(k)
        out.line(f"k={k}  Delta^{k} = {_basis_text(L)}  Delta^{k}/Delta^{k + 1} = {shape}")
        rows.append({"k": k, "basis": L.rows(), "quotient": shape.to_json()})
    out.data = {"rack": X.name, "series": rows}


def cmd_conjecture(args, cfg, out):
    rows = []
    out.line("n  k  quotient         order  verdict")
    for n in args.n:
        if n < 3:
            raise InputError("n must be at least 3")
        gs = _graded(dihedral(n), cfg.max_k)
        for k in range(1 if n % 2 else 2, cfg.max_k + 1):
            shape = gs.shape(k)
            ok = shape.is_cyclic_of_order(n) if n % 2 else shape.order == n
            verdict = "pass" if ok else "counterexample"
            out.line(f"{n:<2} {k:<2} {str(shape):<16} {str(shape.order):<6} {verdict}")
            rows.append({"n": n, "k": k, "quotient": shape.to_json(), "order": shape.order, "verdict": verdict})
    out.data = {"rows": rows}


def _named_ideal(X: FiniteRack, name: str) -> idl.IdealHandle:
    if name == "zero":
        return idl.zero_ideal(X)
    if name == "whole":
        return idl.whole_ring(X)
    if name == "delta":
        return idl.aug_ideal(X)
    if name.startswith("delta") and name[5:].isdigit():
        k = int(name[5:])
        if k > MAX_K_CAP:
            raise ResourceLimitError(f"power {k} exceeds cap {MAX_K_CAP}")
        return idl.ideal_power(X, k)
    raise InputError(f"unknown ideal {name!r}; use zero, whole, delta or delta<k>")


def _ideal_from_args(X, args) -> idl.IdealHandle:
    if args.gens:
        gens = [_vector(g, ZZ, X.size) for g in args.gens.split(";")]
        I = idl.two_sided_closure(X, gens)
    elif args.relative:
        I = idl.relative_ideal(X, [int(s) for s in args.relative.split(",")])
    else:
        I = _named_ideal(X, args.ideal)
    if args.modulus:
        I = idl.with_modulus(I, args.modulus)
    return I


def cmd_ideal(args, cfg, out):
    X = _rack(args)
    I = _ideal_from_args(X, args)
    shape = zl.quotient_shape(I.lattice, zl.full_lattice(X.size))
    out.line(f"ideal: {I.label or 'I'}")
    out.line(f"basis: {_basis_text(I.lattice)}")
    out.line(f"rank: {I.rank}")
    out.line(f"two-sided: {str(idl.is_two_sided(X, I.lattice)).lower()}")
    out.line(f"Z[X]/I = {shape}")
    out.data = {"label": I.label, "basis": I.lattice.rows(), "rank": I.rank,
                "two_sided": idl.is_two_sided(X, I.lattice), "quotient": shape.to_json()}


def cmd_partition(args, cfg, out):
    X = _rack(args)
    I = _ideal_from_args(X, args)
    blocks = idl.partition_from_ideal(X, I)
    out.line(f"{X.name or 'X'} by {I.label or 'I'}: {len(blocks)} blocks")
    for b in blocks:
        out.line(f"  {_fmt_set(b)}")
    out.data = {"ideal": I.label, "blocks": [sorted(b) for b in blocks]}


def cmd_dictionary(args, cfg, out):
    X = _rack(args)
    Z = catalog.get(args.target)
    rows = []
    for f in homomorphisms(X, Z, limit=args.limit):
        ok = all(idl.dictionary_check(X, x0, f) for x0 in range(X.size))
        rows.append({"map": list(f.map), "phi_psi_identity": ok})
        out.line(f"f = {list(f.map)}  Phi(Psi(Y)) = Y: {str(ok).lower()}")
    whole = idl.psi_phi_whole_ring(X)
    aug = idl.aug_ideal(X)
    same = whole.lattice == aug.lattice
    out.line(f"Psi(Phi(Z[X])) = Delta: {str(same).lower()}; Delta = Z[X]: {str(aug.lattice == zl.full_lattice(X.size)).lower()}")
    out.data = {"homs": rows, "psi_phi_whole_is_delta": same}


def cmd_units(args, cfg, out):
    X = _rack(args)
    if not X.is_trivial:
        raise HypothesisError(f"{X.name or 'X'} is not a trivial rack")
    r = cfg.ring
    n = X.size
    if args.element:
        vals = _vector(args.element, r, n + 1)
        u = ExtElt.from_coeffs(X, vals[:n], vals[n], r)
        rec = un.trivial_rack_unit(u)
        if rec is None:
            out.line(f"{u}: not a unit")
            out.data = {"element": u.to_json(), "unit": False}
        else:
            out.line(f"{u}: unit ({rec.classification}), inverse {rec.inverse}")
            out.data = {"unit": True, **rec.to_json()}
        return
    if r.kind == "Q":
        raise InputError("listing units needs --ring Z or Zmod:m, or a single --element")
    rows = un.unit_scan(X, r, cfg.box)
    disagree = [row for row in rows if row.has_inverse != row.closed_form]
    recs = [un.trivial_rack_unit(row.element) for row in rows if row.has_inverse]
    where = f"box radius {cfg.box}" if r.kind == "Z" else "whole ring"
    out.line(f"units of {r}°[{X.name or 'X'}] ({where}): {len(recs)}")
    for rec in recs:
        out.line(f"  {rec.element}   inverse {rec.inverse}   [{rec.classification}]")
    out.line(f"closed form agrees with search: {str(not disagree).lower()}")
    out.data = {"ring": str(r), "scope": where, "units": [x.to_json() for x in recs],
                "closed_form_agrees": not disagree}


def cmd_center(args, cfg, out):
    X = _rack(args)
    C = un.center_lattice(X)
    w = un.sum_element(X)
    central = un.is_central(w)
    out.line(f"center of Z[{X.name or 'X'}]: {_basis_text(C.lattice)}")
    out.line(f"w = sum of basis central: {str(central).lower()}")
    out.data = {"basis": C.lattice.rows(), "w_central": central}


def cmd_commutators(args, cfg, out):
    r = cfg.ring if cfg.ring.kind != "Z" else QQ
    T2 = catalog.get("T2")
    v = un.pair_element(T2, Fraction(args.v_eps) if r.kind == "Q" else int(args.v_eps), r)
    u = un.pair_element(T2, Fraction(args.u_eps) if r.kind == "Q" else int(args.u_eps), r)
    seq = un.commutator_sequence(v, u, args.depth)
    out.line(f"v = {v}, u = {u} over {r}")
    rows = []
    for k, (w, c) in enumerate(zip(seq.terms, seq.closed_forms or [None] * len(seq.terms)), start=1):
        match = c is not None and w == c
        out.line(f"w{k} = {w}   closed form: {str(match).lower()}")
        rows.append({"n": k, "w": w.to_json(), "text": str(w), "matches_closed_form": match})
    out.data = {"ring": str(r), "terms": rows}


def cmd_assoc(args, cfg, out):
    if args.core_groups:
        rows = []
        for name, G in small_groups().items():
            a, e = core_exponent2_check(G)
            out.line(f"Core({name}): associative {str(a).lower()}, exponent divides 2 {str(e).lower()}")
            rows.append({"group": name, "core_associative": a, "exponent_divides_2": e})
        out.data = {"groups": rows}
        return
    X = _rack(args)
    rep = is_associative(X)
    if rep.associative:
        out.line(f"{X.name or 'X'}: associative")
    else:
        x, y, z = rep.witness
        t = X.table
        out.line(f"{X.name or 'X'}: non_associative, (a{x}a{y})a{z} = a{t[t[x][y]][z]} but a{x}(a{y}a{z}) = a{t[x][t[y][z]]}")
    out.data = {"kind": rep.kind, "witness": list(rep.witness) if rep.witness else None}


def _witness_out(w, out, X):
    if w is None:
        out.line(f"{X.name or 'X'}: no witness")
        out.data = {"witness": None}
        return
    out.line(w.describe())
    out.line(f"  lhs = {w.lhs}")
    out.line(f"  rhs = {w.rhs}")
    r = w.element.ring
    out.data = {
        "identity": w.identity,
        "element": str(w.element),
        "lhs": str(w.lhs),
        "rhs": str(w.rhs),
        "basis_index": w.differing_basis_index,
        "values": [r.render(v) if not isinstance(v, int) else v for v in w.differing_values],
        "monomial": list(w.monomial) if w.monomial is not None else None,
    }


def cmd_power_assoc(args, cfg, out):
    X = _rack(args)
    ids = {"cube": (IDENTITY_CUBE,), "fourth": (IDENTITY_FOURTH,), "both": (IDENTITY_CUBE, IDENTITY_FOURTH)}[args.identity]
    if args.symbolic:
        w = power_assoc_symbolic(X, ids)
    elif args.element:
        w = check_element(RingElt(X, _vector(args.element, ZZ, X.size), ZZ), ids)
    else:
        w = power_assoc_numeric(X, cfg.box, ids)
    _witness_out(w, out, X)


def cmd_iso(args, cfg, out):
    X = _rack(args, args.key)
    Y = _rack(args, args.other)
    p = are_isomorphic(X, Y)
    if p is None:
        out.line(f"{X.name} and {Y.name}: not isomorphic")
    else:
        out.line(f"{X.name} and {Y.name}: isomorphic via {list(p)}")
    out.data = {"isomorphic": p is not None, "map": list(p) if p else None}


# -- parser ----------------------------------------------------------------


def _add_globals(p: argparse.ArgumentParser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--ring", default=d("Z"), help="coefficient ring: Z, Q or Zmod:m")
    p.add_argument("--format", dest="fmt", choices=["table", "json"], default=d("table"))
    p.add_argument("--max-k", type=int, default=d(6), help="largest ideal power")
    p.add_argument("--box", type=int, default=d(2), help="coefficient box radius for scans")
    p.add_argument("--file", default=d(None), help="read the rack from a JSON file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quandle-rings", description="Computations in rack and quandle rings.")
    _add_globals(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_globals(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, key=True):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if key:
            p.add_argument("key", nargs="?", help="catalog key, e.g. R5, T3, flip4, conjS3")
        p.set_defaults(fn=fn)
        return p

    add("info", cmd_info, "axioms, orbits and flags")
    p = add("graded", cmd_graded, "powers of the augmentation ideal and their quotients")
    p.add_argument("k", nargs="?", type=int)
    p = add("conjecture", cmd_conjecture, "quotient orders for dihedral quandles", key=False)
    p.add_argument("n", nargs="+", type=int)
    for name, fn, text in (("ideal", cmd_ideal, "describe an ideal"), ("partition", cmd_partition, "blocks X_{I,x}")):
        p = add(name, fn, text)
        p.add_argument("--ideal", default="delta", help="zero, whole, delta or delta<k>")
        p.add_argument("--gens", help="two-sided closure of ';'-separated coefficient vectors")
        p.add_argument("--relative", help="comma-separated elements of a subquandle")
        p.add_argument("--modulus", type=int)
    p = add("dictionary", cmd_dictionary, "ideal/subquandle dictionary over homomorphisms")
    p.add_argument("--target", default="T1")
    p.add_argument("--limit", type=int, default=50)
    p = add("units", cmd_units, "units of the extended ring of a trivial rack")
    p.add_argument("--element", help="coefficients c0,...,c_{n-1},e of one element")
    add("center", cmd_center, "center of Z[X]")
    p = add("commutators", cmd_commutators, "commutator sequence in the extended ring of T2", key=False)
    p.add_argument("--v-eps", default="2")
    p.add_argument("--u-eps", default="3")
    p.add_argument("--depth", type=int, default=5)
    p = add("assoc", cmd_assoc, "associativity of Z[X]")
    p.add_argument("--core-groups", action="store_true", help="check Core(G) for every group of order <= 8")
    p = add("power-assoc", cmd_power_assoc, "power-associativity witnesses")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--numeric", action="store_true")
    mode.add_argument("--symbolic", action="store_true")
    p.add_argument("--element", help="check one integer element c0,...,c_{n-1}")
    p.add_argument("--identity", choices=["cube", "fourth", "both"], default="both")
    p = add("iso", cmd_iso, "isomorphism test")
    p.add_argument("other")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        cfg = RunConfig(CoeffRing.parse(args.ring), args.fmt, args.max_k, args.box)
        out = Output(cfg)
        args.fn(args, cfg, out)
    except QuandleRingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out.emit()
    return 0


if __name__ == "__main__":
    sys.exit(main())
