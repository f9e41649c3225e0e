"""Matrix groups generated by R and S specialized at a root of unity."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .cyclo import CycInt, CycRing, get_ring
from .matrix import Mat2
from .qrat import R_Q, S_Q

FINISHED = "Finished"
CAP_EXCEEDED = "CapExceeded"
DEFAULT_CAP = 10_000

_LETTER = re.compile(r"([A-Za-z])\s*(?:\^\s*\(?\s*(-?\d+)\s*\)?)?")


@dataclass(frozen=True)
class Word:
    """A group word as syllables ``(generator, exponent)``; adjacent generators differ."""

    syllables: tuple = ()

    def __post_init__(self):
        merged: list[list] = []
        for g, e in self.syllables:
            if merged and merged[-1][0] == g:
                merged[-1][1] += e
            else:
                merged.append([g, e])
            if merged[-1][1] == 0:
                merged.pop()
        object.__setattr__(self, "syllables", tuple((g, e) for g, e in merged))

    @classmethod
    def parse(cls, text: str) -> Word:
        text = text.strip()
        if text in ("", "1", "E", "e"):
            return cls(())
        syl = []
        pos = 0
        while pos < len(text):
            if text[pos].isspace() or text[pos] == "*":
                pos += 1
                continue
            m = _LETTER.match(text, pos)
            if m is None:
                raise ValueError(f"malformed word {text!r} at offset {pos}")
            g, e = m.groups()
            syl.append((g, int(e) if e is not None else 1))
            pos = m.end()
        return cls(tuple(syl))

    @classmethod
    def from_letters(cls, letters: Iterable[tuple[str, int]]) -> Word:
        return cls(tuple(letters))

    def __mul__(self, other: Word) -> Word:
        return Word(self.syllables + other.syllables)

    def inverse(self) -> Word:
        return Word(tuple((g, -e) for g, e in reversed(self.syllables)))

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def __str__(self) -> str:
        if not self.syllables:
            return "E"
        return " ".join(g if e == 1 else f"{g}^{e}" for g, e in self.syllables)


def specialize(n: int) -> tuple[Mat2, Mat2]:
    """R and S at q = zeta_n: R = [[z, 1], [0, 1]], S = [[0, -z^(n-1)], [1, 0]]."""
    ring = get_ring(n)
    z = ring.zeta
    R = Mat2(z, ring.one, ring.zero, ring.one)
    S = Mat2(ring.zero, -ring.zeta_pow(n - 1), ring.one, ring.zero)
    return R, S


def evaluate(word: Word | str, gens: Mapping[str, Mat2]) -> Mat2:
    if isinstance(word, str):
        word = Word.parse(word)
    some = next(iter(gens.values()))
    m = some.identity()
    for g, e in word.syllables:
        m = m * gens[g] ** e
    return m


def word_eval(word: Word | str, n: int) -> Mat2:
    R, S = specialize(n)
    return evaluate(word, {"R": R, "S": S})


def laurent_word_eval(word: Word | str) -> Mat2:
    """The word in R_q, S_q over Z[q, q^-1]."""
    return evaluate(word, {"R": R_Q, "S": S_Q})


def matrix_key(m: Mat2) -> tuple:
    return m.a.coeffs + m.b.coeffs + m.c.coeffs + m.d.coeffs


@dataclass
class Element:
    matrix: Mat2
    word: Word
    key: tuple


@dataclass
class ClosureOutcome:
    verdict: str
    elements: list[Element]
    ring: CycRing
    generators: list[Mat2]
    names: list[str]
    order: int | None = None
    _index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {e.key: e for e in self.elements}

    @property
    def finished(self) -> bool:
        return self.verdict == FINISHED

    def __contains__(self, m: Mat2) -> bool:
        return matrix_key(m) in self._index

    def lookup(self, m: Mat2) -> Element | None:
        return self._index.get(matrix_key(m))

    def matrices(self) -> list[Mat2]:
        return [e.matrix for e in self.elements]


def closure(
    gens: Sequence[Mat2],
    cap: int = DEFAULT_CAP,
    names: Sequence[str] | None = None,
) -> ClosureOutcome:
    """Breadth-first enumeration of the group generated by ``gens``.

    Each new element is ``letter * old``; letters are tried in the order
    g0, g0^-1, g1, g1^-1, ... and each level is scanned in word order, so the
    stored word is the shortest one and lexicographically least among those.
    """
    if not gens:
        raise ValueError("closure needs at least one generator")
    if names is None:
        names = ["R", "S"] if len(gens) == 2 else [f"g{i}" for i in range(len(gens))]
    ring = gens[0].a.ring
    letters = []
    for name, g in zip(names, gens):
        letters.append(((name, 1), g))
        letters.append(((name, -1), g.inverse()))
    ident = gens[0].identity()
    seen: dict[tuple, tuple] = {matrix_key(ident): (ident, ())}
    level = [(), ]
    level_mats = {(): ident}
    exceeded = False
    while level and not exceeded:
        nxt: list[tuple] = []
        nxt_mats: dict[tuple, Mat2] = {}
        for li, (letter, lm) in enumerate(letters):
            for w in level:
                m = lm * level_mats[w]
                k = matrix_key(m)
                if k in seen:
                    continue
                nw = (li,) + w
                seen[k] = (m, nw)
                nxt.append(nw)
                nxt_mats[nw] = m
                if len(seen) > cap:
                    exceeded = True
                    break
            if exceeded:
                break
        nxt.sort()
        level, level_mats = nxt, nxt_mats
    elements = [
        Element(m, Word.from_letters(letters[i][0] for i in w), k)
        for k, (m, w) in sorted(seen.items())
    ]
    if exceeded:
        return ClosureOutcome(CAP_EXCEEDED, elements, ring, list(gens), list(names))
    return ClosureOutcome(FINISHED, elements, ring, list(gens), list(names), order=len(elements))


def group_closure(n: int, cap: int = DEFAULT_CAP) -> ClosureOutcome:
    R, S = specialize(n)
    return closure([R, S], cap, ["R", "S"])


def is_closed(outcome: ClosureOutcome) -> bool:
    """Post hoc sweep: every element times every generator and inverse stays inside."""
    movers = []
    for g in outcome.generators:
        movers += [g, g.inverse()]
    return all(g * m in outcome for m in outcome.matrices() for g in movers)


def element_order(m: Mat2, cap: int = 1000) -> int | None:
    ident = m.identity()
    p = m
    for k in range(1, cap + 1):
        if p == ident:
            return k
        p = p * m
    return None


def spectrum_data(m: Mat2) -> tuple:
    """(trace, det, trace^2 - 4 det), exactly."""
    t = m.trace()
    d = m.det()
    return t, d, t * t - 4 * d


def det_power(m: Mat2) -> int | None:
    d = m.det()
    return d.ring.zeta_log(d)


@dataclass
class GroupReport:
    n: int
    order: int
    det_classes: dict[int, int]
    sl_part: list[Mat2]
    center: list[Mat2]
    scalars: list[Mat2]
    quotient_order: int
    trace_multiset: Counter
    trace_set: list[CycInt]

    @property
    def sl_size(self) -> int:
        return len(self.sl_part)

    @property
    def center_size(self) -> int:
        return len(self.center)

    @property
    def scalar_size(self) -> int:
        return len(self.scalars)


def analyze(outcome: ClosureOutcome) -> GroupReport:
    if not outcome.finished:
        raise ValueError("analyze needs a finished closure, not a capped one")
    mats = outcome.matrices()
    gens = outcome.generators
    det_classes: Counter = Counter()
    for m in mats:
        p = det_power(m)
        det_classes[-1 if p is None else p] += 1
    sl = [m for m in mats if m.det() == 1]
    center = [m for m in mats if all(m * g == g * m for g in gens)]
    scalars = [m for m in mats if m.is_scalar()]
    traces = Counter(m.trace() for m in mats)
    trace_set = sorted(traces, key=lambda t: t.coeffs)
    return GroupReport(
        n=outcome.ring.n,
        order=len(mats),
        det_classes=dict(sorted(det_classes.items())),
        sl_part=sl,
        center=center,
        scalars=scalars,
        quotient_order=len(mats) // len(scalars),
        trace_multiset=traces,
        trace_set=trace_set,
    )


def subgroup_keys(mats: Iterable[Mat2]) -> set:
    return {matrix_key(m) for m in mats}


def product_set(xs: Iterable[Mat2], ys: Iterable[Mat2]) -> set:
    ys = list(ys)
    return {matrix_key(x * y) for x in xs for y in ys}


def group_table_document(outcome: ClosureOutcome) -> dict:
    """The group-table JSON document; elements ordered by canonical key."""
    n = outcome.ring.n
    doc: dict = {"n": n, "verdict": outcome.verdict}
    if not outcome.finished:
        doc["order"] = None
        doc["elements_found"] = len(outcome.elements)
        return doc
    report = analyze(outcome)
    doc["order"] = report.order
    doc["elements"] = [
        {
            "key": ",".join(map(str, e.key)),
            "word": str(e.word),
            "entries": [list(x.coeffs) for x in e.matrix],
            "det_power": det_power(e.matrix),
            "trace": list(e.matrix.trace().coeffs),
        }
        for e in outcome.elements
    ]
    doc["center_size"] = report.center_size
    doc["sl_size"] = report.sl_size
    doc["scalar_size"] = report.scalar_size
    doc["quotient_order"] = report.quotient_order
    doc["det_classes"] = {str(k): v for k, v in report.det_classes.items()}
    doc["trace_set"] = [list(t.coeffs) for t in report.trace_set]
    return doc
