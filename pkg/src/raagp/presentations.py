"""Words, finite presentations, mod-p characters and abelian invariants.

Conventions used throughout the package:

* commutator ``[u, v] = u^-1 v^-1 u v``
* conjugation ``z^t = t^-1 z t``

Abelianization is computed over Z from the relator exponent-sum matrix and
then completed at p: an invariant factor d contributes Z/p^{v_p(d)} (nothing
when p does not divide d), and each generator beyond the rank of the matrix
contributes a copy of Z_p.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .graph import SimplicialGraph
from .snf import SmithForm, smith_normal_form


class PresentationError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def require_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise PresentationError(f"{p!r} is not a prime")
    return p


def p_valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    n = abs(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


# --- words ----------------------------------------------------------------------


def _reduce(syllables: Iterable[tuple[str, int]]) -> tuple[tuple[str, int], ...]:
    stack: list[list] = []
    for gen, exp in syllables:
        if not exp:
            continue
        if stack and stack[-1][0] == gen:
            stack[-1][1] += exp
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([gen, exp])
    return tuple((g, e) for g, e in stack)


@dataclass(frozen=True)
class Word:
    """A freely reduced word, stored as (generator, nonzero exponent) syllables."""

    syllables: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "syllables", _reduce((str(g), int(e)) for g, e in self.syllables))

    @classmethod
    def gen(cls, g: str, exp: int = 1) -> "Word":
        return cls(((g, exp),))

    @classmethod
    def of(cls, *parts: str | tuple[str, int] | "Word") -> "Word":
        """Concatenate generators, ``(generator, exponent)`` pairs and words."""
        out: list[tuple[str, int]] = []
        for part in parts:
            if isinstance(part, Word):
                out.extend(part.syllables)
            elif isinstance(part, str):
                out.append((part, 1))
            else:
                out.append(part)
        return cls(tuple(out))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.syllables + other.syllables)

    def __pow__(self, k: int) -> "Word":
        base = self if k >= 0 else self.inverse()
        return Word(base.syllables * abs(k))

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.syllables)))

    def __len__(self) -> int:
        """Length as a word in generators and their inverses."""
        return sum(abs(e) for _, e in self.syllables)

    def __bool__(self) -> bool:
        return bool(self.syllables)

    def generators(self) -> set[str]:
        return {g for g, _ in self.syllables}

    def letters(self):
        """Yield (generator, +1/-1) one letter at a time."""
        for g, e in self.syllables:
            step = 1 if e > 0 else -1
            for _ in range(abs(e)):
                yield g, step

    def exponent_sum(self, g: str) -> int:
        return sum(e for h, e in self.syllables if h == g)

    def substitute(self, images: Mapping[str, "Word"]) -> "Word":
        """Replace each generator in ``images`` by its image word."""
        out: list[tuple[str, int]] = []
        for g, e in self.syllables:
            if g in images:
                out.extend((images[g] ** e).syllables)
            else:
                out.append((g, e))
        return Word(tuple(out))

    def cyclic_reduce(self) -> "Word":
        s = list(self.syllables)
        while len(s) > 1 and s[0][0] == s[-1][0]:
            g, e = s[0][0], s[0][1] + s[-1][1]
            s = s[1:-1]
            if e:
                s.insert(0, (g, e))
        return Word(tuple(s))

    def __str__(self) -> str:
        if not self.syllables:
            return "1"
        return " ".join(g if e == 1 else f"{g}^{e}" for g, e in self.syllables)


IDENTITY = Word()


def commutator(u: Word | str, v: Word | str) -> Word:
    u = Word.gen(u) if isinstance(u, str) else u
    v = Word.gen(v) if isinstance(v, str) else v
    return u.inverse() * v.inverse() * u * v


def conjugate(z: Word | str, t: Word | str) -> Word:
    """``z^t = t^-1 z t``."""
    z = Word.gen(z) if isinstance(z, str) else z
    t = Word.gen(t) if isinstance(t, str) else t
    return t.inverse() * z * t


# --- presentations ----------------------------------------------------------------


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        gens = tuple(self.generators)
        if len(set(gens)) != len(gens):
            raise PresentationError(f"duplicate generators in {gens}")
        rels = tuple(r if isinstance(r, Word) else Word(tuple(r)) for r in self.relators)
        known = set(gens)
        for r in rels:
            missing = r.generators() - known
            if missing:
                raise PresentationError(f"relator {r} uses undeclared generators {sorted(missing)}")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", rels)

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "relators": [[[g, e] for g, e in r.syllables] for r in self.relators],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":")) + "\n"

    def __str__(self) -> str:
        rels = ", ".join(str(r) for r in self.relators)
        return f"< {', '.join(self.generators)} | {rels} >"


def raag_presentation(g: SimplicialGraph) -> GroupPresentation:
    """Generators are the vertices; one commutator per edge, endpoints in vertex order."""
    return GroupPresentation(g.vertices, tuple(commutator(u, v) for u, v in g.edges))


_COMMUTATOR = re.compile(r"^\[\s*([^,\[\]\s]+)\s*,\s*([^,\[\]\s]+)\s*\]$")
_SYMBOLIC = re.compile(r"^([+-]?)(\d*)\*?(p)?(?:\^(\d+))?$")


def _exponent(value, p: int | None) -> int:
    """An integer, or a string like ``"p"``, ``"-p"``, ``"2p"``, ``"p^2"`` instantiated at ``p``."""
    if isinstance(value, bool):
        raise PresentationError(f"bad exponent {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        m = _SYMBOLIC.match(value.replace(" ", ""))
        if m and (m.group(2) or m.group(3)):
            sign, coeff, sym, power = m.groups()
            k = int(coeff) if coeff else 1
            if sym:
                if p is None:
                    raise PresentationError(f"exponent {value!r} needs a prime p")
                k *= p ** (int(power) if power else 1)
            elif power:
                raise PresentationError(f"bad exponent {value!r}")
            return -k if sign == "-" else k
    raise PresentationError(f"bad exponent {value!r}")


def word_from_json(data, p: int | None = None) -> Word:
    """A word given as ``[[gen, exp], ...]`` or the shorthand ``"[a,b]"``."""
    if isinstance(data, str):
        m = _COMMUTATOR.match(data.strip())
        if not m:
            raise PresentationError(f"cannot parse word {data!r}")
        return commutator(m.group(1), m.group(2))
    if not isinstance(data, list):
        raise PresentationError(f"cannot parse word {data!r}")
    syl = []
    for item in data:
        if not (isinstance(item, list) and len(item) == 2 and isinstance(item[0], str)):
            raise PresentationError(f"bad syllable {item!r}")
        syl.append((item[0], _exponent(item[1], p)))
    return Word(tuple(syl))


def presentation_from_dict(data, p: int | None = None) -> GroupPresentation:
    if not isinstance(data, dict) or not isinstance(data.get("generators"), list):
        raise PresentationError('presentation JSON must be an object with a "generators" array')
    rels = data.get("relators", [])
    if not isinstance(rels, list):
        raise PresentationError('"relators" must be an array')
    return GroupPresentation(tuple(data["generators"]), tuple(word_from_json(r, p) for r in rels))


def parse_presentation(text: str, p: int | None = None) -> GroupPresentation:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PresentationError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return presentation_from_dict(data, p)


# --- abelianization ------------------------------------------------------------------


def abelianization_matrix(pres: GroupPresentation) -> list[list[int]]:
    """Rows are relators, columns generators; entries are exponent sums."""
    col = {g: j for j, g in enumerate(pres.generators)}
    rows = []
    for r in pres.relators:
        row = [0] * len(col)
        for g, e in r.syllables:
            row[col[g]] += e
        rows.append(row)
    return rows


@dataclass(frozen=True)
class AbelianInvariants:
    """Z_p^free_rank plus one Z/p^k summand per entry of ``torsion_exponents``."""

    p: int
    free_rank: int
    torsion_exponents: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion_exponents", tuple(sorted(self.torsion_exponents)))

    @property
    def torsion_free(self) -> bool:
        return not self.torsion_exponents

    def to_dict(self) -> dict:
        return {"p": self.p, "free_rank": self.free_rank, "torsion": list(self.torsion_exponents)}

    def __str__(self) -> str:
        parts = [] if not self.free_rank else ["Z_p" if self.free_rank == 1 else f"Z_p^{self.free_rank}"]
        parts += ["C_p" if k == 1 else f"Z/p^{k}" for k in self.torsion_exponents]
        return " + ".join(parts) if parts else "0"


def pro_p_abelian_invariants(pres: GroupPresentation, p: int) -> AbelianInvariants:
    require_prime(p)
    m = abelianization_matrix(pres)
    n = len(pres.generators)
    factors = smith_normal_form(m).factors if m else ()
    torsion = [p_valuation(d, p) for d in factors]
    return AbelianInvariants(p, n - len(factors), tuple(k for k in torsion if k > 0))


def integral_abelianization(pres: GroupPresentation) -> tuple[int, tuple[int, ...]]:
    """(free rank, invariant factors > 1) of the abstract abelianization."""
    m = abelianization_matrix(pres)
    factors = smith_normal_form(m).factors if m else ()
    return len(pres.generators) - len(factors), tuple(d for d in factors if d > 1)


# --- mod-p characters ---------------------------------------------------------------


@dataclass(frozen=True)
class ModPCharacter:
    p: int
    assignments: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        require_prime(self.p)
        object.__setattr__(self, "assignments", {g: int(v) % self.p for g, v in self.assignments.items()})

    def __call__(self, w: Word) -> int:
        return sum(self.assignments[g] * e for g, e in w.syllables) % self.p

    def to_dict(self) -> dict:
        return {"p": self.p, "assignments": dict(self.assignments)}


def check_character(pres: GroupPresentation, chi: ModPCharacter) -> None:
    """Raise unless ``chi`` assigns every generator and kills every relator."""
    missing = [g for g in pres.generators if g not in chi.assignments]
    if missing:
        raise PresentationError(f"character does not assign {missing}")
    extra = sorted(set(chi.assignments) - set(pres.generators))
    if extra:
        raise PresentationError(f"character assigns unknown generators {extra}")
    for r in pres.relators:
        if chi(r):
            raise PresentationError(f"character sends relator {r} to {chi(r)} mod {chi.p}")


def exponent_character(g: SimplicialGraph, p: int) -> ModPCharacter:
    """The exponent-sum homomorphism reduced mod p: every vertex goes to 1."""
    return ModPCharacter(p, {v: 1 for v in g.vertices})


def character_from_dict(data) -> ModPCharacter:
    if not isinstance(data, dict) or "p" not in data or not isinstance(data.get("assignments"), dict):
        raise PresentationError('character JSON must have "p" and "assignments"')
    return ModPCharacter(int(data["p"]), {str(k): int(v) for k, v in data["assignments"].items()})


# --- Tietze moves -------------------------------------------------------------------------


def tietze_cleanup(pres: GroupPresentation) -> GroupPresentation:
    """Conservative Tietze simplification.

    Drops trivial relators, kills generators that are relators on their own
    (``g`` or ``g^-1``), and merges generators identified by a relator of
    two letters (``a b^-1`` and its variants), keeping the earlier of the
    two. Longer relators are never used to eliminate, so the result keeps
    the visible structure of the input.
    """
    gens = list(pres.generators)
    rels = [r for r in pres.relators if r]
    while True:
        move = None
        for i, r in enumerate(rels):
            letters = list(r.letters())
            if len(letters) == 1:
                move = (i, letters[0][0], IDENTITY)
                break
            if len(letters) == 2 and letters[0][0] != letters[1][0]:
                (a, ea), (b, eb) = letters
                keep, drop, ek, ed = (a, b, ea, eb) if gens.index(a) < gens.index(b) else (b, a, eb, ea)
                # keep^ek drop^ed = 1 up to rotation, so drop = keep^(-ek*ed)
                move = (i, drop, Word.gen(keep, -ek * ed))
                break
        if move is None:
            break
        i, drop, image = move
        del rels[i]
        gens.remove(drop)
        rels = [w for w in (r.substitute({drop: image}) for r in rels) if w]
    return GroupPresentation(tuple(gens), _dedupe(rels))


def _dedupe(rels: Sequence[Word]) -> tuple[Word, ...]:
    seen = set()
    out = []
    for r in rels:
        if r not in seen:
            seen.add(r)
            out.append(r)
    return tuple(out)
