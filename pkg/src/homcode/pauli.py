"""Pauli words in the binary symplectic picture and stabilizer-code parameters.

A word on ``n`` qubits is a sign and two bit-vectors: qubit ``i`` carries
I, X, Z or Y for ``(x_i, z_i) = (0,0), (1,0), (0,1), (1,1)``.  Letters are
the Hermitian Paulis, so the operator is ``sign * P_0 (x) ... (x) P_{n-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import gf2
from .errors import LengthMismatch, MinusIdentityInGroup, NonAbelian, ParseError, ZeroLogicalQubits

LETTERS = "IXZY"  # index = x + 2 z
_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}


class PauliWord:
    __slots__ = ("x", "z", "sign")

    def __init__(self, x, z, sign: int = 1):
        self.x = np.asarray(x, dtype=np.uint8) % 2
        self.z = np.asarray(z, dtype=np.uint8) % 2
        if self.x.shape != self.z.shape or self.x.ndim != 1:
            raise LengthMismatch("x and z parts must be 1-d and of equal length")
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        self.sign = sign

    @classmethod
    def identity(cls, n: int) -> "PauliWord":
        return cls(np.zeros(n, np.uint8), np.zeros(n, np.uint8))

    @classmethod
    def from_string(cls, text: str) -> "PauliWord":
        text = text.strip()
        sign = 1
        if text[:1] in "+-":
            sign = -1 if text[0] == "-" else 1
            text = text[1:]
        try:
            bits = [_BITS[c] for c in text]
        except KeyError as exc:
            raise ParseError(f"not a Pauli letter: {exc.args[0]!r}") from None
        x = [b[0] for b in bits]
        z = [b[1] for b in bits]
        return cls(x, z, sign)

    @classmethod
    def from_letters(cls, n: int, letters: dict[int, str]) -> "PauliWord":
        x = np.zeros(n, np.uint8)
        z = np.zeros(n, np.uint8)
        for q, c in letters.items():
            x[q], z[q] = _BITS[c]
        return cls(x, z)

    @property
    def n(self) -> int:
        return int(self.x.size)

    @property
    def weight(self) -> int:
        return int(np.count_nonzero(self.x | self.z))

    def support(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.x | self.z)]

    def letter(self, q: int) -> str:
        return LETTERS[int(self.x[q]) + 2 * int(self.z[q])]

    def vector(self) -> np.ndarray:
        """Symplectic vector ``(x | z)``."""
        return np.concatenate([self.x, self.z])

    def __str__(self) -> str:
        body = "".join(LETTERS[a + 2 * b] for a, b in zip(self.x.tolist(), self.z.tolist()))
        return ("+" if self.sign == 1 else "-") + body

    def __repr__(self) -> str:
        return f"PauliWord({str(self)!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, PauliWord):
            return NotImplemented
        return self.sign == other.sign and np.array_equal(self.x, other.x) and np.array_equal(self.z, other.z)

    def __hash__(self) -> int:
        return hash((self.sign, self.x.tobytes(), self.z.tobytes()))

    def __mul__(self, other: "PauliWord") -> "PauliWord":
        """Product of two commuting words (the result is again Hermitian)."""
        _check_len(self, other)
        phase = _phase_exponent(self, other)
        if phase % 2:
            raise NonAbelian("product of anticommuting words is not Hermitian", witness=(str(self), str(other)))
        sign = self.sign * other.sign * (-1 if phase % 4 == 2 else 1)
        return PauliWord(self.x ^ other.x, self.z ^ other.z, sign)


def _check_len(a: PauliWord, b: PauliWord):
    if a.n != b.n:
        raise LengthMismatch(f"words act on {a.n} and {b.n} qubits")


def _phase_exponent(a: PauliWord, b: PauliWord) -> int:
    """Power of ``i`` picked up when multiplying the letters of ``a`` and ``b``
    qubit by qubit (XY = iZ, YZ = iX, ZX = iY and reversed with ``-i``)."""
    x1, z1 = a.x.astype(int), a.z.astype(int)
    x2, z2 = b.x.astype(int), b.z.astype(int)
    g = np.where(
        (x1 == 1) & (z1 == 1),
        z2 - x2,
        np.where(x1 == 1, z2 * (2 * x2 - 1), np.where(z1 == 1, x2 * (1 - 2 * z2), 0)),
    )
    return int(g.sum()) % 4


def commutes(a: PauliWord, b: PauliWord) -> bool:
    _check_len(a, b)
    return not (int(a.x @ b.z) + int(a.z @ b.x)) % 2


def as_matrix(generators: Sequence[PauliWord], n: int | None = None) -> np.ndarray:
    """Stack generators into the ``m x 2n`` symplectic matrix ``[X | Z]``."""
    if n is None:
        if not generators:
            raise ValueError("qubit count needed for an empty generator list")
        n = generators[0].n
    for g in generators:
        if g.n != n:
            raise LengthMismatch(f"generator on {g.n} qubits in a {n}-qubit code")
    if not generators:
        return np.zeros((0, 2 * n), dtype=np.uint8)
    return np.array([g.vector() for g in generators], dtype=np.uint8)


def commutation_matrix(generators: Sequence[PauliWord], others: Sequence[PauliWord] | None = None) -> np.ndarray:
    """Entry ``(i, j)`` is 1 iff generator ``i`` anticommutes with word ``j``."""
    others = generators if others is None else others
    if not generators or not others:
        return np.zeros((len(generators), len(others)), dtype=np.uint8)
    A = as_matrix(generators)
    B = as_matrix(others, A.shape[1] // 2)
    n = A.shape[1] // 2
    return ((A[:, :n].astype(int) @ B[:, n:].T + A[:, n:].astype(int) @ B[:, :n].T) % 2).astype(np.uint8)


@dataclass(frozen=True)
class AboveCap:
    """No logical operator of weight up to ``cap`` exists."""

    cap: int

    def __str__(self) -> str:
        return "above cap"


@dataclass(frozen=True)
class CodeParams:
    n: int
    s_generators_given: int
    s_independent: int
    k: int
    d: int | AboveCap | None = None

    @property
    def redundancies(self) -> int:
        return self.s_generators_given - self.s_independent

    def with_distance(self, d) -> "CodeParams":
        return CodeParams(self.n, self.s_generators_given, self.s_independent, self.k, d)

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "k": self.k,
            "s_given": self.s_generators_given,
            "s_independent": self.s_independent,
            "redundancies": self.redundancies,
        }
        if self.d is not None:
            out["d"] = self.d if isinstance(self.d, int) else "above cap"
            if isinstance(self.d, AboveCap):
                out["distance_cap"] = self.d.cap
        return out


def check_abelian(generators: Sequence[PauliWord]) -> None:
    C = commutation_matrix(generators)
    bad = np.argwhere(np.triu(C))
    if bad.size:
        i, j = (int(v) for v in bad[0])
        raise NonAbelian(f"generators {i} and {j} anticommute", witness=[i, j])


def check_no_minus_identity(generators: Sequence[PauliWord], n: int) -> None:
    """The group contains ``-I`` iff some product of generators with trivial
    symplectic vector carries sign ``-1``; checking a basis of such products
    suffices because their signs multiply."""
    if not generators:
        return
    A = as_matrix(generators, n)
    for combo in gf2.nullspace(A.T):
        prod = PauliWord.identity(n)
        for i in np.flatnonzero(combo):
            prod = prod * generators[int(i)]
        if prod.sign == -1:
            raise MinusIdentityInGroup("a product of generators equals -I", witness=[int(i) for i in np.flatnonzero(combo)])


def consistent_signs(generators: Sequence[PauliWord], n: int | None = None) -> list[int]:
    """Signs making the group free of ``-I`` for commuting, letter-valid words.

    Products of Y-carrying words can pick up ``-1`` (for instance
    ``X^n Z^n = (-i)^n Y^n``).  Each independent relation among the
    generators is a reduced row of the relation space; flipping its pivot
    generator whenever the relation multiplies to ``-I`` fixes all of them
    at once, since each pivot occurs in exactly one reduced relation.
    """
    if not generators:
        return []
    n = generators[0].n if n is None else n
    plain = [PauliWord(g.x, g.z) for g in generators]
    signs = [1] * len(plain)
    relations = gf2.nullspace(as_matrix(plain, n).T)
    if relations.size == 0:
        return signs
    R, pivots = gf2.row_reduce(relations)
    for row, p in zip(R, pivots):
        prod = PauliWord.identity(n)
        for i in np.flatnonzero(row):
            prod = prod * plain[int(i)]
        if prod.sign == -1:
            signs[p] = -1
    return signs


def stabilizer_params(generators: Sequence[PauliWord], n: int | None = None) -> CodeParams:
    """``(n, s_given, s_independent, k = n - s_independent)`` for a commuting
    generator set; pass ``n`` when the list may be empty."""
    A = as_matrix(generators, n)
    n = A.shape[1] // 2
    check_abelian(generators)
    check_no_minus_identity(generators, n)
    r = gf2.rank(A) if len(generators) else 0
    return CodeParams(n, len(generators), r, n - r)


def _symplectic(u: np.ndarray, v: np.ndarray, n: int) -> int:
    return (int(u[:n] @ v[n:]) + int(u[n:] @ v[:n])) % 2


def normalizer_basis(generators: Sequence[PauliWord], n: int | None = None) -> np.ndarray:
    """Symplectic vectors commuting with every generator (rows)."""
    A = as_matrix(generators, n)
    n = A.shape[1] // 2
    if not len(generators):
        return np.eye(2 * n, dtype=np.uint8)
    return gf2.nullspace(np.hstack([A[:, n:], A[:, :n]]))


def logical_basis(generators: Sequence[PauliWord], n: int | None = None) -> list[tuple[PauliWord, PauliWord]]:
    """``k`` pairs ``(Xbar_j, Zbar_j)`` by symplectic Gram-Schmidt.

    Candidates are normalizer vectors outside the stabilizer span, taken in
    the order of the normalizer basis (lowest free coordinate first).
    """
    params = stabilizer_params(generators, n)
    n = params.n
    A = as_matrix(generators, n)
    pool = [row.copy() for row in gf2.complement_basis(A if len(generators) else np.zeros((0, 2 * n), np.uint8), normalizer_basis(generators, n))]
    pairs = []
    while pool:
        a = pool.pop(0)
        j = next(i for i, c in enumerate(pool) if _symplectic(a, c, n))
        b = pool.pop(j)
        fixed = []
        for c in pool:
            if _symplectic(c, b, n):
                c = c ^ a
            if _symplectic(c, a, n):
                c = c ^ b
            fixed.append(c)
        pool = fixed
        pairs.append((PauliWord(a[:n], a[n:]), PauliWord(b[:n], b[n:])))
    assert len(pairs) == params.k
    return pairs


def in_stabilizer_span(generators: Sequence[PauliWord], word: PauliWord) -> bool:
    if not generators:
        return word.weight == 0
    return gf2.in_span(as_matrix(generators, word.n), word.vector())


def syndrome(generators: Sequence[PauliWord], error: PauliWord) -> np.ndarray:
    """Bit ``j`` is 1 iff ``error`` anticommutes with generator ``j``."""
    for g in generators:
        _check_len(g, error)
    if not generators:
        return np.zeros(0, dtype=np.uint8)
    return commutation_matrix(generators, [error])[:, 0]


class _Searcher:
    """Weight-ordered enumeration of Pauli words with syndrome pruning.

    Supports are grown in increasing qubit order.  Once the next qubit index
    exceeds the largest qubit of an anticommuting generator, no later choice
    can fix that syndrome bit, so the branch is cut.
    """

    def __init__(self, generators: Sequence[PauliWord], n: int):
        self.n = n
        A = as_matrix(generators, n)
        self.echelon = gf2.IntEchelon(gf2.bits_to_int(row) for row in A)
        self.syn = [[0, 0, 0, 0] for _ in range(n)]
        self.vec = [[0, 0, 0, 0] for _ in range(n)]
        last = [max(g.support(), default=-1) for g in generators]
        for q in range(n):
            for code in (1, 2, 3):
                x, z = code & 1, code >> 1
                s = 0
                for j, g in enumerate(generators):
                    if (x * int(g.z[q]) + z * int(g.x[q])) % 2:
                        s |= 1 << j
                self.syn[q][code] = s
                self.vec[q][code] = (x << q) | (z << (q + n))
        self.dead = [0] * (n + 1)
        for q in range(n + 1):
            self.dead[q] = sum(1 << j for j, m in enumerate(last) if m < q)

    def find(self, w: int):
        """First logical (commutes with all, outside the group) of weight ``w``."""
        n = self.n
        stack = [(0, 0, 0, 0, ())]
        while stack:
            start, depth, syn, vec, picks = stack.pop()
            if depth == w:
                if syn == 0 and not self.echelon.contains(vec):
                    return picks
                continue
            children = []
            for q in range(start, n - (w - depth) + 1):
                for code in (1, 2, 3):
                    s2 = syn ^ self.syn[q][code]
                    if s2 & self.dead[q + 1]:
                        continue
                    children.append((q + 1, depth + 1, s2, vec ^ self.vec[q][code], picks + ((q, code),)))
            stack.extend(reversed(children))
        return None

    def word(self, picks) -> PauliWord:
        x = np.zeros(self.n, np.uint8)
        z = np.zeros(self.n, np.uint8)
        for q, code in picks:
            x[q], z[q] = code & 1, code >> 1
        return PauliWord(x, z)


def find_logical(generators: Sequence[PauliWord], weight_cap: int, n: int | None = None) -> PauliWord | None:
    """Lowest-weight logical operator up to ``weight_cap`` (ties broken by
    lexicographic qubit/letter order), or None."""
    params = stabilizer_params(generators, n)
    if params.k == 0:
        raise ZeroLogicalQubits("code encodes no logical qubits", witness=params.to_dict())
    searcher = _Searcher(generators, params.n)
    for w in range(1, min(weight_cap, params.n) + 1):
        picks = searcher.find(w)
        if picks is not None:
            return searcher.word(picks)
    return None


def min_distance(generators: Sequence[PauliWord], weight_cap: int, n: int | None = None) -> int | AboveCap:
    found = find_logical(generators, weight_cap, n)
    return AboveCap(weight_cap) if found is None else found.weight


def stabilizer_element(generators: Sequence[PauliWord], mask) -> PauliWord:
    """Product of the generators selected by a 0/1 mask."""
    out = PauliWord.identity(generators[0].n)
    for i in np.flatnonzero(np.asarray(mask)):
        out = out * generators[int(i)]
    return out

