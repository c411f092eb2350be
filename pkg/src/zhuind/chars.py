"""Finite-type characters over finite-dimensional presented algebras.

The character of a module is the trace of its action on each normal-word
basis element of the owner.  Characters are symmetric functions, they
separate the catalog's semisimple modules, and over a polynomial source
they support the rational-coefficient induction solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from zhuind.algebra import AlgebraHandle, Element
from zhuind.linalg import invert, rank
from zhuind.repmod import FinModule, check_module


@dataclass(frozen=True)
class CharacterVector:
    owner_name: str
    values: tuple[Fraction, ...]  # trace on each basis word, in basis order

    def __add__(self, other: "CharacterVector") -> "CharacterVector":
        if other.owner_name != self.owner_name:
            raise ValueError("characters over different algebras")
        return CharacterVector(self.owner_name, tuple(a + b for a, b in zip(self.values, other.values)))

    def scale(self, c: Fraction | int) -> "CharacterVector":
        return CharacterVector(self.owner_name, tuple(Fraction(c) * v for v in self.values))


def char_vector(module: FinModule) -> CharacterVector:
    owner = module.owner
    if owner.basis is None:
        raise ValueError("characters need a finite-dimensional owner")
    values = []
    for w in owner.basis:
        mat = module.action_of_word(w)
        values.append(sum((mat[i][i] for i in range(module.dim)), Fraction(0)))
    return CharacterVector(owner.name, tuple(values))


def symmetry_violations(module: FinModule) -> list[tuple[int, int]]:
    """Basis pairs (i, j) with chi(b_i b_j) != chi(b_j b_i); empty = pass."""
    owner = module.owner
    assert owner.basis is not None
    mats = [module.action_of_word(w) for w in owner.basis]
    bad = []
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            ab = sum((sum(mats[i][r][k] * mats[j][k][r] for k in range(module.dim)) for r in range(module.dim)), Fraction(0))
            ba = sum((sum(mats[j][r][k] * mats[i][k][r] for k in range(module.dim)) for r in range(module.dim)), Fraction(0))
            if ab != ba:
                bad.append((i, j))
    return bad


@dataclass(frozen=True)
class CharacterRing:
    """Integer combinations of the irreducible characters of one algebra."""

    owner_name: str
    irreducibles: tuple[CharacterVector, ...]

    def element(self, coefficients: list[int]) -> CharacterVector:
        if len(coefficients) != len(self.irreducibles):
            raise ValueError("one integer per irreducible character")
        total = CharacterVector(self.owner_name, tuple([Fraction(0)] * len(self.irreducibles[0].values)))
        for c, chi in zip(coefficients, self.irreducibles):
            total = total + chi.scale(c)
        return total


def independence_check(ring: "CharacterRing | list[CharacterVector]") -> bool:
    """True when the stacked character vectors have full rank."""
    characters = list(ring.irreducibles) if isinstance(ring, CharacterRing) else list(ring)
    if not characters:
        return True
    rows = [list(c.values) for c in characters]
    return rank(rows) == len(characters)


class ArtinError(Exception):
    pass


def artin_solve(
    target: AlgebraHandle,
    omega_image: Element,
    weights: list[Fraction],
    irreducibles: list[FinModule],
) -> list[list[Fraction]]:
    """Express irreducible characters through characters induced from
    one-variable modules along y -> omega_image.

    ``weights[i]`` must be the scalar by which ``omega_image`` acts on
    ``irreducibles[i]`` and the weights must be pairwise distinct.  The
    returned row ``i`` gives rational coefficients c_ij with
    chi_i = sum_j c_ij * chi(Ind_j).
    """
    from zhuind.algebra import AlgebraHandle as _AH, Presentation
    from zhuind.freealg import MonomialOrder, NcPoly
    from zhuind.induct import induce
    from zhuind.morphism import AlgebraMorphism

    if len(set(weights)) != len(weights):
        raise ArtinError("weights must be pairwise distinct")
    if omega_image.algebra is not target:
        raise ArtinError("omega image must live in the target algebra")
    for w, irr in zip(weights, irreducibles):
        mat = irr.evaluate(omega_image.poly)
        for i in range(irr.dim):
            for j in range(irr.dim):
                expect = w if i == j else Fraction(0)
                if mat[i][j] != expect:
                    raise ArtinError(f"omega image does not act as {w} on {irr.label}")

    # one-variable source algebra C[y]
    poly_line = _AH.build(Presentation("poly_line", ("y",), MonomialOrder((0,)), ()))
    morphism = AlgebraMorphism(poly_line, target, [omega_image], name=f"line->{target.name}")
    y = NcPoly.gen(0)
    kernel_poly = NcPoly.one()
    for w in weights:
        kernel_poly = kernel_poly * (y - NcPoly.one().scale(w))
    kernel = [poly_line.element(kernel_poly)]

    mult_matrix: list[list[int]] = [[0] * len(weights) for _ in irreducibles]
    for j, w in enumerate(weights):
        point = FinModule(poly_line, 1, {0: [[w]]}, label=f"line@{w}")
        result = induce(morphism, kernel, point, irreducibles)
        assert result.decomposition is not None
        if result.decomposition.residual:
            raise ArtinError("induced module does not decompose over the given irreducibles")
        found = result.decomposition.as_dict()
        for i, irr in enumerate(irreducibles):
            mult_matrix[i][j] = found.get(irr.label, 0)

    n = [[Fraction(x) for x in row] for row in mult_matrix]
    n_inv = invert(n)
    if n_inv is None:
        raise ArtinError("induced characters are linearly dependent")
    # chi(Ind_j) = sum_i N[i][j] chi_i, so the coefficient matrix is (N^T)^-1 = (N^-1)^T
    return [[n_inv[j][i] for j in range(len(weights))] for i in range(len(irreducibles))]
