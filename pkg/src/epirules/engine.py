"""Best-rule search over the candidates generated from training rows.

Every candidate is a same-head rule whose conditions are a subset of one
generating row's atoms. Rather than materialise those subsets row by row and
deduplicate, the search walks condition sets in influencer order and keeps
two row bitsets per prefix:

    cover  generating rows (with this head) whose atoms include the prefix
    fired  training rows on which every condition of the prefix holds

An empty cover means no row generates the prefix. A fired count at or below
``tau_support * |train|`` can only shrink further, so that branch is cut;
this makes the search exact for Best, not a heuristic.

Two interchangeable kernels implement the walk: ``_kernels`` (Cython, uint64
words) and ``_mine`` (Python ints). Set ``EPIRULES_KERNEL=python`` to force
the fallback.
"""
from __future__ import annotations

import logging
import os
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import _mine
from .language import Atom, Rule, _atom_key
from .metrics import ConfidenceMode, RuleStats

log = logging.getLogger(__name__)

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None


def available_kernels() -> list[str]:
    return ["compiled", "python"] if _compiled is not None else ["python"]


def default_kernel() -> str:
    choice = os.environ.get("EPIRULES_KERNEL", "auto").lower()
    if choice == "python" or _compiled is None:
        if choice == "compiled":
            log.warning("compiled kernel requested but not built; using python")
        return "python"
    return "compiled"


@dataclass
class MineResult:
    best: dict[Rule, RuleStats]
    visited: int
    kernel: str
    n_best: int = 0
    kernel_seconds: float = 0.0


def _bits(rows) -> int:
    m = 0
    for i in rows:
        m |= 1 << i
    return m


def _to_words(masks: Sequence[int], n_words: int):
    import numpy as np
    out = np.zeros((len(masks), n_words), dtype=np.uint64)
    for i, m in enumerate(masks):
        if m:
            out[i] = np.frombuffer(m.to_bytes(n_words * 8, "little"), dtype="<u8")
    return out


def mine(train, generated: Sequence[tuple[int, Rule]], influencers: Sequence[str],
         max_conditions: int, tau_support, tau_confidence,
         mode=ConfidenceMode.FIRED, kernel: str | None = None,
         minimal_only: bool = False) -> MineResult:
    """Score every sub-rule of the ``generated`` rules (row index, rule) on
    ``train`` and return those passing Best.

    With ``minimal_only`` only the Simplest subset of Best is materialised;
    the filter runs on atom ids, which is much cheaper than on Rule objects.
    """
    mode = ConfidenceMode(mode)
    kernel = kernel or default_kernel()
    n = len(train)
    tau_s, tau_c = Fraction(tau_support), Fraction(tau_confidence)
    pos_of = {a: p for p, a in enumerate(influencers)}

    # intern condition atoms, grouped by influencer position
    per_pos: list[set[Atom]] = [set() for _ in influencers]
    heads: set[Atom] = set()
    for _, r in generated:
        for c in r.conditions:
            per_pos[pos_of[c.arg]].add(c)
        heads.add(r.head)
    atoms: list[Atom] = []
    pos_start = [0]
    for s in per_pos:
        atoms.extend(sorted(s, key=_atom_key))
        pos_start.append(len(atoms))
    atom_id = {a: i for i, a in enumerate(atoms)}
    head_list = sorted(heads, key=_atom_key)
    head_id = {h: i for i, h in enumerate(head_list)}

    # rows by value, per argument, to build hold masks by OR
    by_value: dict[str, dict] = {}
    for arg in {a.arg for a in atoms} | {h.arg for h in head_list}:
        col: dict = {}
        for i, d in enumerate(train):
            col.setdefault(d[arg], []).append(i)
        by_value[arg] = {v: _bits(rows) for v, rows in col.items()}

    def hold_mask(atom: Atom) -> int:
        m = 0
        for v, bits in by_value[atom.arg].items():
            if atom.holds(v):
                m |= bits
        return m

    hold = [hold_mask(a) for a in atoms]
    agree = [hold_mask(h) for h in head_list]
    gen_rows: list[list[int]] = [[] for _ in atoms]
    group_rows: list[list[int]] = [[] for _ in head_list]
    for i, r in generated:
        for c in r.conditions:
            gen_rows[atom_id[c]].append(i)
        group_rows[head_id[r.head]].append(i)
    gen = [_bits(rows) for rows in gen_rows]
    groups = [_bits(rows) for rows in group_rows]

    min_fired = tau_s.numerator * n // tau_s.denominator + 1
    args = (n, min_fired, max_conditions, tau_c.numerator, tau_c.denominator,
            mode is ConfidenceMode.DATASET)
    if kernel == "compiled" and (_compiled is None or tau_c.denominator > 2**31):
        kernel = "python"
    t0 = time.perf_counter()
    if kernel == "compiled" and atoms and head_list:
        import numpy as np
        W = max(1, (n + 63) // 64)
        found, visited = _compiled.mine_best(
            _to_words(hold, W), _to_words(gen, W), np.asarray(pos_start, dtype=np.int64),
            _to_words(groups, W), _to_words(agree, W), *args)
    elif kernel in ("compiled", "python"):
        found, visited = _mine.mine_best(hold, gen, pos_start, groups, agree, *args)
    else:
        raise ValueError(f"unknown kernel {kernel!r}")

    kernel_seconds = time.perf_counter() - t0
    n_best = len(found)
    if minimal_only:
        found = minimal(found)
    n_agree = [m.bit_count() for m in agree]
    best = {}
    for h, combo, nf, nc in found:
        rule = Rule(tuple(atoms[a] for a in combo), head_list[h])
        best[rule] = RuleStats(nf, n_agree[h], nc, n, mode)
    return MineResult(best, visited, kernel, n_best, kernel_seconds)


def minimal(found):
    """Keep (head, combo, ...) entries with no same-head proper sub-combo present."""
    present = {(h, combo) for h, combo, _, _ in found}
    return [f for f in found
            if not any((f[0], sub) in present
                       for k in range(1, len(f[1]))
                       for sub in combinations(f[1], k))]
