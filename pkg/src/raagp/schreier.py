"""Reidemeister-Schreier rewriting for kernels of characters onto C_p."""

from __future__ import annotations

from .presentations import (
    IDENTITY,
    GroupPresentation,
    ModPCharacter,
    PresentationError,
    Word,
    check_character,
)


class _Transversal:
    """Cosets of ker(chi) represented by powers g^0 .. g^(p-1) of one generator."""

    def __init__(self, pres: GroupPresentation, chi: ModPCharacter):
        check_character(pres, chi)
        self.p = p = chi.p
        self.chi = chi
        units = [g for g in pres.generators if chi.assignments[g] % p]
        if not units:
            raise PresentationError("character is not surjective onto C_p")
        self.g = units[0]
        self.inv = pow(chi.assignments[self.g], -1, p)
        self.pres = pres

    def index(self, residue: int) -> int:
        """Exponent k with chi(g^k) == residue."""
        return residue * self.inv % self.p

    def step(self, k: int, x: str) -> int:
        """Coset index after right-multiplying the coset of g^k by x."""
        return self.index(self.chi.assignments[self.g] * k + self.chi.assignments[x])

    def back(self, k: int, x: str) -> int:
        """Coset index j with step(j, x) == k."""
        return self.index(self.chi.assignments[self.g] * k - self.chi.assignments[x])

    def word(self, k: int, x: str) -> Word:
        return Word.gen(self.g, k) * Word.gen(x) * Word.gen(self.g, -self.step(k, x))

    @staticmethod
    def name(k: int, x: str) -> str:
        return f"{x}_{k}"

    def generators(self) -> dict[str, Word]:
        out = {}
        for k in range(self.p):
            for x in self.pres.generators:
                w = self.word(k, x)
                if w:
                    out[self.name(k, x)] = w
        return out

    def rewrite(self, r: Word, k: int) -> Word:
        syl = []
        for x, e in r.letters():
            if e > 0:
                syl.append((self.name(k, x), 1))
                k = self.step(k, x)
            else:
                k = self.back(k, x)
                syl.append((self.name(k, x), -1))
        return Word(tuple(syl))


def schreier_generators(pres: GroupPresentation, chi: ModPCharacter) -> dict[str, Word]:
    """Nontrivial Schreier generators of ker(chi) as words in the original generators."""
    return _Transversal(pres, chi).generators()


def reidemeister_schreier(pres: GroupPresentation, chi: ModPCharacter) -> GroupPresentation:
    """Presentation of ker(chi), an index-p subgroup.

    The generator ``x_k`` stands for g^k x g^-m, where g is the first
    generator with chi(g) a unit and g^m represents the coset of g^k x.
    Generators equal to the identity in the free group (``g_k`` for
    k < p-1) are dropped, leaving p*n - (p-1). Each relator is rewritten
    once from every coset, giving p relators per original relator.
    """
    tr = _Transversal(pres, chi)
    gens = tr.generators()
    trivial = {
        tr.name(k, x): IDENTITY for k in range(tr.p) for x in pres.generators if tr.name(k, x) not in gens
    }
    rels = []
    for r in pres.relators:
        for k in range(tr.p):
            rels.append(tr.rewrite(r, k).substitute(trivial))
    return GroupPresentation(tuple(gens), tuple(rels))
