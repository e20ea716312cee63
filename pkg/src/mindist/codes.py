"""Binary linear block code constructions: BCH, QR, DCC, and QDC families.

All constructors return a LinearCode whose generator matrix is in
systematic form [I_k | P] (cyclic constructions are systematized; the
double-circulant families are systematic by shape).  Column permutations
applied during systematization preserve minimum distance, so estimates on
the stored generator transfer to the original cyclic code.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from pathlib import Path
from typing import TextIO

from .errors import ConsistencyError, DimensionError, RankError
from .gf2 import (
    BinPoly,
    BitMatrix,
    BitWord,
    GF2mField,
    PRIMITIVE_POLYS,
    cyclotomic_coset,
    poly_gcd,
    systematize,
)

__all__ = [
    "LinearCode",
    "ResidueSet",
    "quadratic_residues",
    "build_bch",
    "build_qr",
    "build_dcc",
    "build_qdc",
    "load_code",
    "save_code",
]

FAMILIES = ("BCH", "QR", "DCC", "QDC", "GENERIC")


@dataclass(frozen=True)
class LinearCode:
    """An (n, k) binary linear code given by a full-rank generator matrix."""

    n: int
    k: int
    generator: BitMatrix
    family: str = "GENERIC"
    design_distance: int | None = None
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        if not 1 <= self.k < self.n:
            raise ValueError(f"need n > k >= 1, got ({self.n}, {self.k})")
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.generator.nrows != self.k or self.generator.cols != self.n:
            raise DimensionError(
                f"generator is {self.generator.nrows}x{self.generator.cols}, "
                f"expected {self.k}x{self.n}"
            )
        r = self.generator.rank()
        if r != self.k:
            raise RankError(f"generator rank {r} < k = {self.k}", rank=r)

    def encode(self, info: BitWord) -> BitWord:
        """info * G; length-k info word to length-n codeword."""
        return self.generator.mul_word(info)

    def label(self) -> str:
        return f"{self.family}({self.n},{self.k})"


@dataclass(frozen=True)
class ResidueSet:
    """Nonzero quadratic residues modulo an odd prime."""

    p: int
    residues: frozenset[int]

    def __contains__(self, x: int) -> bool:
        return x % self.p in self.residues


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def quadratic_residues(p: int) -> ResidueSet:
    """The set {x^2 mod p : 1 <= x <= p-1} for an odd prime p."""
    if not _is_prime(p) or p == 2:
        raise ValueError(f"{p} is not an odd prime")
    return ResidueSet(p, frozenset((x * x) % p for x in range(1, p)))


# ---------------------------------------------------------------------------
# BCH


def build_bch(m: int, t: int, design_distance: int | None = None) -> LinearCode:
    """Narrow-sense primitive BCH code of length 2^m - 1.

    The generator polynomial is the lcm of the minimal polynomials of
    alpha^1 .. alpha^2t over the fixed GF(2^m) representation.  The designed
    distance defaults to 2t + 1; pass ``design_distance`` to pin the Bose
    distance label instead when it is larger.
    """
    if not 3 <= m <= 9:
        raise ValueError(f"BCH field degree {m} outside supported range 3..9")
    if t < 1:
        raise ValueError(f"error capacity t must be >= 1, got {t}")
    n = (1 << m) - 1
    f = GF2mField(m)
    g = BinPoly(1)
    covered: set[int] = set()
    for i in range(1, 2 * t + 1):
        if i % n in covered:
            continue
        coset = cyclotomic_coset(i % n, n)
        covered.update(coset)
        g = g * f.minimal_polynomial(i)
    k = n - g.degree
    if k <= 0:
        raise ValueError(
            f"generator polynomial absorbs the whole length: deg g = {g.degree} >= n = {n}"
        )
    gen, perm = systematize(_cyclic_generator(g, n))
    return LinearCode(
        n,
        k,
        gen,
        family="BCH",
        design_distance=design_distance if design_distance is not None else 2 * t + 1,
        metadata={
            "m": m,
            "t": t,
            "generator_poly": g.bits,
            "primitive_poly": PRIMITIVE_POLYS[m],
            "column_permutation": perm,
        },
    )


def _cyclic_generator(g: BinPoly, n: int) -> BitMatrix:
    """Rows x^i * g(x) for i = 0..k-1, packed as length-n words."""
    k = n - g.degree
    return BitMatrix(n, tuple(g.bits << i for i in range(k)))


# ---------------------------------------------------------------------------
# QR


def multiplicative_order_of_2(p: int) -> int:
    o, x = 1, 2 % p
    while x != 1:
        x = (2 * x) % p
        o += 1
    return o


def qr_generator_poly(p: int) -> BinPoly:
    """Degree-(p-1)/2 generator polynomial of a binary QR code of length p.

    Derived from the residue idempotent: with 2 a residue mod p, the residue
    polynomial sum_{r in Q} x^r has all residue-indexed roots or all
    non-residue-indexed roots of x^p - 1, so its gcd with x^p - 1 (after
    stripping a possible x + 1 factor) is one of the two degree-(p-1)/2
    factors.  The two factors generate equivalent codes.  When the splitting
    field fits in the supported table range the root set is checked and the
    residue-side factor is returned.
    """
    Q = quadratic_residues(p)
    if 2 not in Q:
        raise ValueError(
            f"2 is not a quadratic residue mod {p} (need p = +-1 mod 8, got {p % 8})"
        )
    theta = BinPoly.from_exponents(Q.residues)
    x_p_1 = BinPoly((1 << p) | 1)
    g = poly_gcd(theta, x_p_1)
    x_plus_1 = BinPoly(0b11)
    head, rem = divmod(g, x_plus_1)
    if not rem:
        g = head
    if g.degree != (p - 1) // 2:
        raise ConsistencyError(
            f"QR({p}) generator degree {g.degree} != {(p - 1) // 2}"
        )
    if x_p_1 % g:
        raise ConsistencyError(f"QR({p}) generator does not divide x^{p} - 1")
    m = multiplicative_order_of_2(p)
    if m in PRIMITIVE_POLYS:
        g = _qr_pick_residue_side(p, g, x_p_1, Q, m)
    return g


def _qr_pick_residue_side(
    p: int, g: BinPoly, x_p_1: BinPoly, Q: ResidueSet, m: int
) -> BinPoly:
    """Return the factor whose roots are alpha^r for r in Q, verified in GF(2^m)."""
    f = GF2mField(m)
    # beta = alpha^((2^m - 1)/p) has multiplicative order exactly p
    beta = f.alpha_pow(f.order // p)
    assert f.pow(beta, p) == 1 and beta != 1
    r0 = next(iter(Q.residues))
    if g.evaluate_in(f, f.pow(beta, r0)) == 0:
        chosen = g
    else:
        chosen = (x_p_1 // BinPoly(0b11)) // g
    for r in Q.residues:
        if chosen.evaluate_in(f, f.pow(beta, r)) != 0:
            raise ConsistencyError(f"QR({p}) root check failed at residue {r}")
    return chosen


def build_qr(p: int) -> LinearCode:
    """Binary quadratic residue code of prime length p (p = +-1 mod 8).

    Dimension (p+1)/2, generated by the residue-side factor of x^p - 1.
    """
    g = qr_generator_poly(p)
    n, k = p, (p + 1) // 2
    gen, perm = systematize(_cyclic_generator(g, n))
    return LinearCode(
        n,
        k,
        gen,
        family="QR",
        metadata={
            "p": p,
            "generator_poly": g.bits,
            "column_permutation": perm,
        },
    )


# ---------------------------------------------------------------------------
# double circulants


def _rotate_right(v: int, shift: int, width: int) -> int:
    shift %= width
    if shift == 0:
        return v
    mask = (1 << width) - 1
    return ((v << shift) | (v >> (width - shift))) & mask


def build_dcc(header: BitWord) -> LinearCode:
    """Rate-1/2 double-circulant code [I_k | A] from a circulant header.

    Row i of A is the header cyclically right-shifted by i positions.
    """
    k = header.length
    if k < 2:
        raise ValueError(f"header length {k} < 2")
    rows = tuple(
        (1 << i) | (_rotate_right(header.bits, i, k) << k) for i in range(k)
    )
    return LinearCode(
        2 * k,
        k,
        BitMatrix(2 * k, rows),
        family="DCC",
        metadata={"header": header.to01()},
    )


def build_qdc(p: int, corner: int = 0) -> LinearCode:
    """Bordered quadratic double-circulant code of length 2(p + 1).

    Requires a prime p = +-3 (mod 8).  The right block B has the bordered
    shape: corner entry (default 0), an all-ones first row and first column,
    and a p x p circulant body built from the residue polynomial
    b(x) = 1 + sum_{r in Q} x^r when p = 3 (mod 8) and sum_{r in Q} x^r when
    p = -3 (mod 8).
    """
    if p % 8 not in (3, 5):
        raise ValueError(f"p = {p} is not +-3 mod 8 (p mod 8 = {p % 8})")
    if corner not in (0, 1):
        raise ValueError(f"corner entry must be 0 or 1, got {corner}")
    Q = quadratic_residues(p)
    b = 0
    for r in Q.residues:
        b |= 1 << r
    if p % 8 == 3:
        b |= 1
    k = p + 1
    n = 2 * k
    ones = (1 << p) - 1
    b_rows = [corner | (ones << 1)]
    b_rows += [1 | (_rotate_right(b, i, p) << 1) for i in range(p)]
    rows = tuple((1 << i) | (b_rows[i] << k) for i in range(k))
    return LinearCode(
        n,
        k,
        BitMatrix(n, rows),
        family="QDC",
        metadata={"p": p, "corner": corner, "b_poly": b},
    )


# ---------------------------------------------------------------------------
# matrix file I/O
#
# Text format: line 1 = "n k"; then k rows of n characters from {0, 1}.


def save_code(code: LinearCode, dest: str | Path | TextIO) -> None:
    if hasattr(dest, "write"):
        _write_matrix(code, dest)
    else:
        with open(dest, "w", encoding="ascii") as fh:
            _write_matrix(code, fh)


def _write_matrix(code: LinearCode, fh: TextIO) -> None:
    fh.write(f"{code.n} {code.k}\n")
    for i in range(code.k):
        fh.write(code.generator.row_word(i).to01())
        fh.write("\n")


def load_code(src: str | Path | TextIO) -> LinearCode:
    """Read a generator matrix file; verifies shape and full rank."""
    if hasattr(src, "read"):
        return _read_matrix(src)
    with open(src, "r", encoding="ascii") as fh:
        return _read_matrix(fh)


def _read_matrix(fh: TextIO) -> LinearCode:
    header = fh.readline().split()
    if len(header) != 2:
        raise ValueError(f"expected 'n k' header line, got {header!r}")
    try:
        n, k = int(header[0]), int(header[1])
    except ValueError:
        raise ValueError(f"non-integer dimensions in header {header!r}") from None
    rows = []
    for i in range(k):
        line = fh.readline().strip()
        if len(line) != n:
            raise ValueError(
                f"row {i}: expected {n} symbols, got {len(line)}"
            )
        if set(line) - {"0", "1"}:
            raise ValueError(f"row {i}: symbols outside {{0,1}}")
        rows.append(line)
    return LinearCode(n, k, BitMatrix.from_strings(rows), family="GENERIC")


def loads_code(text: str) -> LinearCode:
    return _read_matrix(io.StringIO(text))
