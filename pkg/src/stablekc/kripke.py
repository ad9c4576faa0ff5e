"""Finite Kripke models for intuitionistic and intermediate logics.

Truth sets are bitmasks over the model's worlds (bit ``i`` is the world at
position ``i`` of ``model.worlds``). Forcing of every formula is computed on
these masks, so checking a property for all worlds costs one pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product
from typing import Hashable, Iterable, Iterator, Mapping, NamedTuple, Optional

from .errors import GuardExceeded, InvalidModelError
from .syntax import And, Atom, Bot, Formula, Imp, Not, Or, Rule, Top, atoms_of

MAX_WORLDS = 5
MAX_ATOMS = 4

WorldId = Hashable


@dataclass(frozen=True, eq=True)
class KripkeModel:
    """Worlds, a reflexive-transitive order given as pairs ``(a, b)`` with
    ``a <= b``, and an atom label per world.

    Construct through :meth:`build`, which closes the order. The raw
    constructor performs no checks so that :func:`validate` can describe
    broken models.
    """

    worlds: tuple
    order: frozenset
    labels: tuple  # ((world, frozenset[str]), ...) in world order

    @classmethod
    def build(cls, labels: Mapping[WorldId, Iterable[str]], order: Iterable[tuple] = ()) -> "KripkeModel":
        worlds = tuple(labels)
        rel = {(w, w) for w in worlds} | {tuple(p) for p in order}
        changed = True
        while changed:
            changed = False
            for a, b in list(rel):
                for c, d in list(rel):
                    if b == c and (a, d) not in rel:
                        rel.add((a, d))
                        changed = True
        return cls(worlds, frozenset(rel), tuple((w, frozenset(labels[w])) for w in worlds))

    def checked(self) -> "KripkeModel":
        problems = validate(self)
        if problems:
            raise InvalidModelError("; ".join(str(v) for v in problems))
        return self

    def label(self, w: WorldId) -> frozenset[str]:
        return self._label_map[w]

    def leq(self, a: WorldId, b: WorldId) -> bool:
        return (a, b) in self.order

    def successors(self, w: WorldId) -> list:
        """Worlds ``v >= w`` (including ``w``)."""
        return [v for v in self.worlds if (w, v) in self.order]

    def terminal_nodes(self) -> list:
        return [w for w in self.worlds if all(v == w for v in self.successors(w))]

    def single_top(self) -> bool:
        return len(self.terminal_nodes()) == 1

    def roots(self) -> list:
        return [w for w in self.worlds if all(self.leq(w, v) for v in self.worlds)]

    def covers(self) -> list[tuple]:
        """The covering relation: ``a < b`` with nothing strictly between."""
        out = []
        for a, b in sorted(self.order, key=lambda p: (self.index(p[0]), self.index(p[1]))):
            if a == b:
                continue
            if not any(c not in (a, b) and self.leq(a, c) and self.leq(c, b) for c in self.worlds):
                out.append((a, b))
        return out

    def atoms(self) -> frozenset[str]:
        return frozenset().union(*(lab for _, lab in self.labels)) if self.labels else frozenset()

    def index(self, w: WorldId) -> int:
        return self._index[w]

    @cached_property
    def _index(self) -> dict:
        return {w: i for i, w in enumerate(self.worlds)}

    @cached_property
    def _label_map(self) -> dict:
        return dict(self.labels)

    @cached_property
    def up_masks(self) -> tuple[int, ...]:
        idx = self._index
        masks = [0] * len(self.worlds)
        for a, b in self.order:
            if a in idx and b in idx:
                masks[idx[a]] |= 1 << idx[b]
        return tuple(masks)

    @cached_property
    def full_mask(self) -> int:
        return (1 << len(self.worlds)) - 1

    @cached_property
    def _truth_cache(self) -> dict:
        return {}

    # Forcing clauses on truth sets. ``imp`` and ``neg`` quantify over the
    # upward cone of each world.

    def atom_mask(self, name: str) -> int:
        m = 0
        for i, (_, lab) in enumerate(self.labels):
            if name in lab:
                m |= 1 << i
        return m

    def imp_mask(self, a: int, b: int) -> int:
        bad = a & ~b
        m = 0
        for i, up in enumerate(self.up_masks):
            if not up & bad:
                m |= 1 << i
        return m

    def neg_mask(self, a: int) -> int:
        m = 0
        for i, up in enumerate(self.up_masks):
            if not up & a:
                m |= 1 << i
        return m

    def truth_mask(self, f: "Formula | Rule") -> int:
        """Bitmask of the worlds forcing ``f``."""
        cache = self._truth_cache
        hit = cache.get(f)
        if hit is not None:
            return hit
        if isinstance(f, Atom):
            m = self.atom_mask(f.name)
        elif isinstance(f, Top):
            m = self.full_mask
        elif isinstance(f, Bot):
            m = 0
        elif isinstance(f, Not):
            m = self.neg_mask(self.truth_mask(f.arg))
        elif isinstance(f, And):
            m = self.truth_mask(f.left) & self.truth_mask(f.right)
        elif isinstance(f, Or):
            m = self.truth_mask(f.left) | self.truth_mask(f.right)
        elif isinstance(f, Imp):
            m = self.imp_mask(self.truth_mask(f.left), self.truth_mask(f.right))
        elif isinstance(f, Rule):
            m = self.imp_mask(self.truth_mask(f.body), self.truth_mask(f.head))
        else:
            raise TypeError(f"not a formula: {f!r}")
        cache[f] = m
        return m

    def worlds_in(self, mask: int) -> list:
        return [w for i, w in enumerate(self.worlds) if mask >> i & 1]

    def __str__(self):
        labs = ", ".join(f"{w}:{{{','.join(sorted(lab))}}}" for w, lab in self.labels)
        cov = ", ".join(f"{a}<{b}" for a, b in self.covers())
        return f"Kripke[{labs}; {cov}]" if cov else f"Kripke[{labs}]"


def forces(model: KripkeModel, w: WorldId, f: "Formula | Rule") -> bool:
    if w not in model._index:
        raise KeyError(f"unknown world {w!r}")
    return bool(model.truth_mask(f) >> model.index(w) & 1)


def forces_all(model: KripkeModel, w: WorldId, fs: Iterable["Formula | Rule"]) -> bool:
    return all(forces(model, w, f) for f in fs)


class Violation(NamedTuple):
    kind: str
    pair: tuple

    def __str__(self):
        return f"{self.kind} violated at {self.pair}"


def validate(model: KripkeModel) -> list[Violation]:
    """Empty list iff the order is a partial order and labels are monotone."""
    out: list[Violation] = []
    worlds = set(model.worlds)
    labels = dict(model.labels)
    for a, b in sorted(model.order, key=repr):
        if a not in worlds or b not in worlds:
            out.append(Violation("unknown world", (a, b)))
    for w in model.worlds:
        if (w, w) not in model.order:
            out.append(Violation("reflexivity", (w, w)))
    seen = set()
    for a, b in sorted(model.order, key=repr):
        if a != b and (b, a) in model.order and (b, a) not in seen:
            seen.add((a, b))
            out.append(Violation("antisymmetry", (a, b)))
    for a, b in sorted(model.order, key=repr):
        for c, d in sorted(model.order, key=repr):
            if b == c and (a, d) not in model.order:
                out.append(Violation("transitivity", (a, d)))
    for a, b in sorted(model.order, key=repr):
        if a in labels and b in labels and not labels[a] <= labels[b]:
            out.append(Violation("monotonicity", (a, b)))
    return out


def diamond_model() -> KripkeModel:
    """w below u and v, both below t; u has p, v has q, t has both."""
    return KripkeModel.build(
        {"w": (), "u": ("p",), "v": ("q",), "t": ("p", "q")},
        [("w", "u"), ("w", "v"), ("u", "t"), ("v", "t")],
    )


def chain_model(*labels: Iterable[str]) -> KripkeModel:
    """Worlds 0 < 1 < ... with the given labels."""
    return KripkeModel.build({i: lab for i, lab in enumerate(labels)},
                             [(i, i + 1) for i in range(len(labels) - 1)])


# --- enumeration -------------------------------------------------------------

def _rooted_posets(n: int) -> list[frozenset]:
    """Rooted partial orders on 0..n-1, one per isomorphism class.

    Each is the set of strict pairs ``(i, j)``; index order is a linear
    extension and 0 is the root.
    """
    if n == 1:
        return [frozenset()]
    inner = [(i, j) for i in range(1, n) for j in range(i + 1, n)]
    root_pairs = frozenset((0, j) for j in range(1, n))
    found: dict[tuple, frozenset] = {}
    for bits in range(1 << len(inner)):
        rel = {inner[k] for k in range(len(inner)) if bits >> k & 1}
        if any((a, d) not in rel for a, b in rel for c, d in rel if b == c):
            continue
        rel = frozenset(rel) | root_pairs
        key = _poset_canon(rel, n)
        found.setdefault(key, rel)
    return [found[k] for k in sorted(found)]


def _poset_canon(rel: frozenset, n: int) -> tuple:
    best = None
    for perm in permutations(range(1, n)):
        mapping = (0,) + perm
        img = tuple(sorted((mapping[a], mapping[b]) for a, b in rel))
        if best is None or img < best:
            best = img
    return best


def _automorphisms(rel: frozenset, n: int) -> list[tuple]:
    out = []
    for perm in permutations(range(1, n)):
        mapping = (0,) + perm
        if {(mapping[a], mapping[b]) for a, b in rel} == rel:
            out.append(mapping)
    return out


def _upsets(rel: frozenset, n: int) -> list[int]:
    above = [0] * n
    for a, b in rel:
        above[a] |= 1 << b
    return [m for m in range(1 << n)
            if all(not (m >> i & 1) or (above[i] & m) == above[i] for i in range(n))]


def _permute_mask(mask: int, mapping: tuple) -> int:
    out = 0
    for i, j in enumerate(mapping):
        if mask >> i & 1:
            out |= 1 << j
    return out


def check_model_guard(max_worlds: int, n_atoms: int, force: bool):
    if force:
        return
    if max_worlds > MAX_WORLDS:
        raise GuardExceeded(f"{max_worlds} worlds exceeds the guard of {MAX_WORLDS}; use force to override")
    if n_atoms > MAX_ATOMS:
        raise GuardExceeded(f"{n_atoms} atoms exceeds the guard of {MAX_ATOMS}; use force to override")


def enumerate_models(max_worlds: int, atoms: Iterable[str], single_top: bool = False,
                     force: bool = False) -> Iterator[KripkeModel]:
    """Every rooted model with at most ``max_worlds`` worlds over ``atoms``,
    one per isomorphism class, smallest first.

    Worlds are the integers ``0..n-1`` with 0 the root. Each atom's extension
    is an upward-closed set, which makes every labeling monotone.
    """
    if max_worlds < 1:
        raise ValueError("max_worlds must be at least 1")
    names = sorted(atoms)
    check_model_guard(max_worlds, len(names), force)
    for n in range(1, max_worlds + 1):
        for rel in _rooted_posets(n):
            full = rel | {(i, i) for i in range(n)}
            if single_top:
                maximal = [i for i in range(n) if not any(a == i for a, _ in rel)]
                if len(maximal) != 1:
                    continue
            autos = _automorphisms(rel, n)
            ups = _upsets(rel, n)
            for ext in product(ups, repeat=len(names)):
                if len(autos) > 1 and any(
                        tuple(_permute_mask(m, g) for m in ext) < ext for g in autos):
                    continue
                labels = tuple(
                    (i, frozenset(a for a, m in zip(names, ext) if m >> i & 1)) for i in range(n))
                yield KripkeModel(tuple(range(n)), frozenset(full), labels)


class Countermodel(NamedTuple):
    model: KripkeModel
    witness: WorldId

    def to_json(self) -> dict:
        return model_to_json(self.model, self.witness)


def refuting_worlds(model: KripkeModel, premises: Iterable, goal) -> int:
    mask = model.full_mask
    for p in premises:
        mask &= model.truth_mask(p)
    return mask & ~model.truth_mask(goal)


def countermodel_search(premises: Iterable["Formula | Rule"], goal: "Formula | Rule",
                        single_top: bool = False, max_worlds: int = 3,
                        force: bool = False) -> Optional[Countermodel]:
    """Smallest model with a world forcing every premise but not the goal.

    ``None`` means only that no such model exists within ``max_worlds``.
    """
    premises = list(premises)
    names = atoms_of(premises) | atoms_of(goal)
    for model in enumerate_models(max_worlds, names, single_top, force):
        bad = refuting_worlds(model, premises, goal)
        if bad:
            low = (bad & -bad).bit_length() - 1
            return Countermodel(model, model.worlds[low])
    return None


# --- JSON ----------------------------------------------------------------------

def model_to_json(model: KripkeModel, witness: Optional[WorldId] = None) -> dict:
    out = {
        "worlds": [{"id": w, "atoms": sorted(lab)} for w, lab in model.labels],
        "order": [[a, b] for a, b in model.covers()],
    }
    if witness is not None:
        out["witness"] = witness
    return out


def model_from_json(data: Mapping) -> tuple[KripkeModel, Optional[WorldId]]:
    labels = {w["id"]: w.get("atoms", ()) for w in data["worlds"]}
    model = KripkeModel.build(labels, [tuple(p) for p in data.get("order", ())])
    return model, data.get("witness")
