"""Betti numbers and Stanley-Reisner presentations of toric manifolds.

For a toric manifold over a simple polytope with nerve K the integral
cohomology is torsion free, concentrated in even degrees, and
b_{2i} = h_i(K).  No ring normal forms are computed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characteristic import CharacteristicMatrix
from .errors import InputError
from .homology import BettiTable
from .simplicial import SimplicialComplex, h_vector, minimal_non_faces

NON_POLYTOPAL_WARNING = (
    "complex is not asserted to be a polytope nerve; values are raw h-vector entries")


def toric_betti(K: SimplicialComplex, n: int | None = None, *, polytopal: bool = True) -> BettiTable:
    if not K.is_pure():
        raise InputError("toric_betti needs a pure complex")
    h = h_vector(K, n)
    return BettiTable({2 * i: hi for i, hi in enumerate(h)},
                      warning=None if polytopal else NON_POLYTOPAL_WARNING)


@dataclass(frozen=True)
class RingPresentation:
    generators: tuple
    monomial_relations: tuple[tuple, ...]
    linear_relations: tuple[tuple[int, ...], ...]

    def to_text(self) -> str:
        names = [f"v{i}" for i in range(1, len(self.generators) + 1)]
        pos = {g: name for g, name in zip(self.generators, names)}
        monos = ["*".join(pos[g] for g in rel) for rel in self.monomial_relations]
        lins = []
        for row in self.linear_relations:
            terms = []
            for c, name in zip(row, names):
                if c == 0:
                    continue
                sign = "-" if c < 0 else "+"
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                terms.append(f"{sign} {mag}{name}")
            if not terms:
                lins.append("0")
                continue
            text = " ".join(terms)
            lins.append(text[2:] if text.startswith("+") else "-" + text[2:])
        ideal = ", ".join(monos + lins)
        return f"Z[{', '.join(names)}] / ({ideal}),  deg v_i = 2"


def cohomology_presentation(K: SimplicialComplex, lam: CharacteristicMatrix) -> RingPresentation:
    """Generators per vertex, Stanley-Reisner monomials, and one linear form per row of λ."""
    if set(lam.column_labels) != set(K.vertices):
        raise InputError("column labels of λ do not match the vertices of K")
    lam = lam.reorder(K.vertices)
    monos = sorted((K.sort_face(s) for s in minimal_non_faces(K)),
                   key=lambda f: (len(f), [K.index(v) for v in f]))
    return RingPresentation(K.vertices, tuple(monos), lam.matrix.data)
