"""Exhaustive and sampled verification suites shared by the CLI and scripts."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import gelfand
from .exactnum import Cyclotomic, render
from .irrchar import character_table
from .shapes import render_shape
from .wreath import (
    DEFAULT_CAP,
    WreathElement,
    conjugate_by,
    enumerate_group,
    enumerate_subgroup,
    find_K_conjugator,
    group_order,
    inverse,
    k_class_size,
    k_classes,
    marked_type_of,
)

SUITES = ("gelfand", "orthogonality", "mn-vs-def", "induced", "zonal-eq")
MAX_FAILURES_LISTED = 20


@dataclass
class Report:
    suite: str
    k: int
    n: int
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, witness) -> None:
        self.checks += 1
        if not ok:
            if len(self.failures) < MAX_FAILURES_LISTED:
                self.failures.append(witness() if callable(witness) else str(witness))
            self.notes["failure_count"] = self.notes.get("failure_count", 0) + 1

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": self.checks,
            "failure_count": self.notes.get("failure_count", 0),
            "failures": list(self.failures),
            "notes": {k: v for k, v in self.notes.items() if k != "failure_count"},
        }


def verify_gelfand(n: int, k: int, cap: int = DEFAULT_CAP) -> Report:
    """x ~_K x^-1 for every x; K-orbits are exactly the marked-type classes."""
    rep = Report("gelfand", k, n)
    group = list(enumerate_group(n, k, cap))
    sub = list(enumerate_subgroup(n, k, cap)) if n >= 1 else []
    for x in group:
        xi = inverse(x)
        same = n == 0 or marked_type_of(x) == marked_type_of(xi)
        rep.check(
            same,
            lambda: f"mty({x}) = {render_shape(marked_type_of(x))} but "
            f"mty(x^-1) = {render_shape(marked_type_of(xi))}",
        )
        if same:
            z = find_K_conjugator(x, xi)
            rep.check(
                z is not None and z.in_subgroup() and conjugate_by(x, z) == xi,
                lambda: f"no verified K-conjugator from {x} to its inverse",
            )
    if n < 1:
        return rep
    # K-orbits by brute force
    orbit_of: dict[WreathElement, int] = {}
    orbits: list[set] = []
    for x in group:
        if x in orbit_of:
            continue
        orb = {conjugate_by(x, z) for z in sub}
        for y in orb:
            orbit_of[y] = len(orbits)
        orbits.append(orb)
    by_type: dict = {}
    for x in group:
        by_type.setdefault(marked_type_of(x), set()).add(x)
    for orb in orbits:
        types = {marked_type_of(y) for y in orb}
        rep.check(len(types) == 1, lambda: f"K-orbit with several marked types {types}")
        (t,) = types if len(types) == 1 else (next(iter(types)),)
        rep.check(by_type.get(t) == orb, lambda: f"class {render_shape(t)} is not one K-orbit")
    classes = k_classes(n, k)
    rep.check(len(orbits) == len(classes), f"{len(orbits)} orbits vs {len(classes)} marked types")
    for c in classes:
        size = len(by_type.get(c, ()))
        rep.check(
            size == k_class_size(c),
            lambda: f"|C_{render_shape(c)}| = {size}, formula gives {k_class_size(c)}",
        )
    rep.notes["orbits"] = len(orbits)
    return rep


def verify_orthogonality(n: int, k: int, cap: int = DEFAULT_CAP) -> Report:
    rep = Report("orthogonality", k, n)
    order = group_order(n, k)
    t = character_table(n, k)
    rows = t.values
    for i, j in itertools.product(range(len(rows)), repeat=2):
        s = Cyclotomic(k)
        for o, a, b in zip(t.class_orders, rows[i], rows[j]):
            s = s + a * b.conjugate() * o
        rep.check(
            s == (order if i == j else 0),
            lambda: f"<chi^{render_shape(t.row_labels[i])}, chi^{render_shape(t.row_labels[j])}> "
            f"sums to {render(s)}",
        )
    if n >= 1:
        gt = gelfand.gen_char_table(n, k, "definition", cap)
        fs = gelfand.table_class_functions(gt)
        gram = []
        for a, f in zip(gt.row_labels, fs):
            row = []
            for b, g in zip(gt.row_labels, fs):
                val = gelfand.inner_product(f, g)
                row.append(render(val))
                rep.check(
                    val == gelfand.expected_inner_product(a, b),
                    lambda: f"<{render_shape(a)}, {render_shape(b)}> = {render(val)}",
                )
            gram.append(row)
        rep.notes["gram_rows"] = [render_shape(a) for a in gt.row_labels]
        rep.notes["gram"] = gram
    return rep


def verify_mn_vs_def(n: int, k: int, cap: int = DEFAULT_CAP) -> Report:
    if k != 2:
        raise ValueError("mn-vs-def needs k = 2")
    rep = Report("mn-vs-def", k, n)
    a = gelfand.gen_char_table(n, 2, "definition", cap)
    b = gelfand.gen_char_table(n, 2, "mn")
    for r, ra, rb in zip(a.row_labels, a.values, b.values):
        for c, x, y in zip(a.col_labels, ra, rb):
            rep.check(
                x == y,
                lambda: f"chi^{render_shape(r)} on {render_shape(c)}: definition {render(x)}, "
                f"MN {render(y)}",
            )
    rep.notes["indices"] = len(a.row_labels)
    rep.notes["classes"] = len(a.col_labels)
    return rep


def verify_induced(n: int, k: int, samples: int = 1000, seed: int = 0, cap: int = DEFAULT_CAP) -> Report:
    """Permutation character of G x K on G against sum chi^rho x conj(chi^sigma)."""
    rep = Report("induced", k, n)
    size = group_order(n, k) * group_order(n - 1, k)
    if size <= samples:
        pairs = [(x, y) for x in enumerate_group(n, k, cap) for y in enumerate_group(n - 1, k, cap)]
        rep.notes["mode"] = "exhaustive"
    else:
        xs = gelfand.sample_elements(n, k, samples, seed)
        ys = gelfand.sample_elements(n - 1, k, samples, seed + 1)
        pairs = list(zip(xs, ys))
        rep.notes["mode"] = "sampled"
    for x, y in pairs:
        lhs = gelfand.induced_character_value(x, y, cap)
        rhs = gelfand.induced_decomposition_value(x, y)
        rep.check(lhs == rhs, lambda: f"x={x}, y={y}: fixed points {lhs}, sum {render(rhs)}")
    return rep


def verify_zonal_equation(n: int, k: int, samples: int = 100, seed: int = 0, cap: int = DEFAULT_CAP) -> Report:
    rep = Report("zonal-eq", k, n)
    xs = gelfand.sample_elements(n, k, samples, seed)
    ys = gelfand.sample_elements(n, k, samples, seed + 1)
    indices = gelfand.gen_char_indices(n, k)
    for s, (x, y) in enumerate(zip(xs, ys)):
        idx = indices[s % len(indices)]
        lhs, rhs = gelfand.zonal_functional_equation(idx, x, y, cap)
        rep.check(
            lhs == rhs,
            lambda: f"{render_shape(idx)} at x={x}, y={y}: {render(lhs)} != {render(rhs)}",
        )
    return rep


def run_suite(suite: str, n: int, k: int, samples=None, seed: int = 0, cap: int = DEFAULT_CAP) -> Report:
    if suite == "gelfand":
        return verify_gelfand(n, k, cap)
    if suite == "orthogonality":
        return verify_orthogonality(n, k, cap)
    if suite == "mn-vs-def":
        return verify_mn_vs_def(n, k, cap)
    if suite == "induced":
        return verify_induced(n, k, 1000 if samples is None else samples, seed, cap)
    if suite == "zonal-eq":
        return verify_zonal_equation(n, k, 100 if samples is None else samples, seed, cap)
    raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
