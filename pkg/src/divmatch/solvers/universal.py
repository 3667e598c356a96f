"""
Universal set families.

A family of subsets of ``{0..m-1}`` is (m, κ)-universal when its traces on
every κ-subset S realise all 2^κ subsets of S. Families are drawn at
random with a seeded generator, verified, re-drawn on failure and frozen,
so a fixed (m, κ, seed) always yields the same family.

Size rule: ``min(2^m, floor(C(κ) · log2(max(m, 2))))`` members with
``C(κ) = c · 2^κ · max(κ, 1)``; ``c`` is the ``size_constant``
(default 3). When ``2^m`` does not exceed that size the power set is used.
"""

import math
import os
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, islice
from typing import Dict, List, Optional, Tuple

import numpy as np

from divmatch.errors import DivMatchError, UsageError
from divmatch.logging import get_logger


logger = get_logger(__name__)

SIZE_CONSTANT = 3
MAX_ATTEMPTS = 32
VERIFY_BUDGET = 20_000_000
BATCH_CELLS = 2_000_000
PROVEN_SIZE_LIMIT = 1 << 20

_CACHE: Dict[Tuple[int, ...], "UniversalFamily"] = {}


@dataclass(frozen=True)
class UniversalFamily:
    """
    A family of subsets of ``{0..ground_size-1}`` stored as integer bitsets.

    Attributes:
        ground_size: m.
        kappa: κ.
        members: Bitset of every member; bit i set means i is in the member.
        verified: Whether coverage was checked exhaustively.
        is_power_set: Whether ``members`` is ``0..2^m-1``.
    """

    ground_size: int
    kappa: int
    members: Tuple[int, ...]
    verified: bool = True
    is_power_set: bool = False

    def __len__(self) -> int:
        return len(self.members)

    @cached_property
    def matrix(self) -> np.ndarray:
        """Membership matrix, one boolean row per member."""
        return _bitsets_to_matrix(self.members, self.ground_size)

    def member_sets(self) -> List[frozenset]:
        return [frozenset(i for i in range(self.ground_size) if member >> i & 1) for member in self.members]


def size_coefficient(kappa: int, size_constant: int = SIZE_CONSTANT) -> int:
    """C(κ) = c · 2^κ · max(κ, 1)."""
    return size_constant * (1 << kappa) * max(kappa, 1)


def size_bound(m: int, kappa: int, size_constant: int = SIZE_CONSTANT) -> int:
    """Largest family size ``construct_universal`` may return for (m, κ)."""
    bound = int(size_coefficient(kappa, size_constant) * math.log2(max(m, 2)))
    if m < 63:
        return min(1 << m, bound)
    return bound


def _bitsets_to_matrix(members: Tuple[int, ...], m: int) -> np.ndarray:
    nbytes = max(1, (m + 7) // 8)
    matrix = np.zeros((len(members), m), dtype=bool)
    for row, member in enumerate(members):
        raw = np.frombuffer(member.to_bytes(nbytes, "little"), dtype=np.uint8)
        matrix[row] = np.unpackbits(raw, bitorder="little")[:m].astype(bool)
    return matrix


def _matrix_to_bitsets(matrix: np.ndarray) -> Tuple[int, ...]:
    return tuple(
        int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little") for row in matrix
    )


def _covers(matrix: np.ndarray, subsets: np.ndarray, kappa: int) -> bool:
    """Check that the rows of ``matrix`` realise every trace on each row of ``subsets``."""
    traces = 1 << kappa
    batch_size = max(1, BATCH_CELLS // max(1, len(matrix)))
    for start in range(0, len(subsets), batch_size):
        batch = subsets[start:start + batch_size]
        # codes[f, s] = trace of member f on subset s, as a κ-bit integer
        codes = np.zeros((len(matrix), len(batch)), dtype=np.int64)
        for j in range(kappa):
            codes |= matrix[:, batch[:, j]].astype(np.int64) << j
        codes += np.arange(len(batch), dtype=np.int64) * traces
        counts = np.bincount(codes.ravel(), minlength=len(batch) * traces)
        if not np.all(counts.reshape(len(batch), traces) > 0):
            return False
    return True


def _subset_array(m: int, kappa: int, limit: Optional[int] = None) -> np.ndarray:
    subsets = combinations(range(m), kappa)
    if limit is not None:
        subsets = islice(subsets, limit)
    return np.array(list(subsets), dtype=np.int64).reshape(-1, kappa)


def _matrix_universal(matrix: np.ndarray, m: int, kappa: int) -> bool:
    if kappa == 0:
        return len(matrix) > 0
    if len(matrix) < (1 << kappa):
        return False
    return _covers(matrix, _subset_array(m, kappa), kappa)


def verify_universal(family: UniversalFamily) -> bool:
    """
    Exhaustively check the coverage property.

    Args:
        family: The family to check.

    Returns:
        True iff every κ-subset sees all 2^κ traces.
    """
    m, kappa = family.ground_size, family.kappa
    if kappa < 0 or kappa > m:
        return False
    return _matrix_universal(family.matrix, m, kappa)


def _sample_covers(matrix: np.ndarray, m: int, kappa: int, samples: int,
                   rng: np.random.Generator) -> bool:
    subsets = np.array([np.sort(rng.choice(m, size=kappa, replace=False)) for _ in range(samples)],
                       dtype=np.int64).reshape(-1, kappa)
    return _covers(matrix, subsets, kappa)


def power_set_family(m: int, kappa: Optional[int] = None) -> UniversalFamily:
    """The full power set of ``{0..m-1}``, universal for every κ ≤ m."""
    return UniversalFamily(m, m if kappa is None else kappa, tuple(range(1 << m)),
                           verified=True, is_power_set=True)


def construct_universal(m: int, kappa: int, seed: int = 0,
                        size_constant: int = SIZE_CONSTANT,
                        max_attempts: int = MAX_ATTEMPTS,
                        verify_budget: int = VERIFY_BUDGET,
                        cache_dir: Optional[str] = None) -> UniversalFamily:
    """
    Construct an (m, κ)-universal family.

    Args:
        m: Ground set size.
        kappa: κ, with 0 <= κ <= m.
        seed: Seed of the random draw.
        size_constant: The constant c in C(κ).
        max_attempts: Number of draws before giving up.
        verify_budget: Maximum number of (member, subset) trace checks for an
            exhaustive verification; larger families are checked on a sample
            and flagged unverified.
        cache_dir: Optional directory of cached families.

    Returns:
        The frozen family.

    Raises:
        UsageError: If κ is outside [0, m].
        DivMatchError: If no draw passed verification.
    """
    if not 0 <= kappa <= m:
        raise UsageError(f"need 0 <= kappa <= m, got kappa={kappa}, m={m}")

    key = (m, kappa, seed, size_constant, verify_budget)
    if key in _CACHE:
        return _CACHE[key]

    if cache_dir is not None:
        cached = load_family(cache_dir, m, kappa, verify_budget)
        if cached is not None and len(cached) <= size_bound(m, kappa, size_constant):
            _CACHE[key] = cached
            return cached

    family = _draw_family(m, kappa, seed, size_constant, max_attempts, verify_budget)
    _CACHE[key] = family
    if cache_dir is not None:
        save_family(family, cache_dir)
    return family


def _draw_family(m: int, kappa: int, seed: int, size_constant: int,
                 max_attempts: int, verify_budget: int) -> UniversalFamily:
    size = size_bound(m, kappa, size_constant)
    if m < 63 and (1 << m) <= size:
        logger.debug(f"Universal family ({m}, {kappa}): power set of size {1 << m}")
        return power_set_family(m, kappa)
    if kappa == 0:
        return UniversalFamily(m, 0, (0,))

    rng = np.random.default_rng([seed, m, kappa])
    exhaustive = math.comb(m, kappa) * size <= verify_budget
    for attempt in range(1, max_attempts + 1):
        matrix = rng.random((size, m)) < 0.5
        if exhaustive:
            ok = _matrix_universal(matrix, m, kappa)
        else:
            ok = _sample_covers(matrix, m, kappa, max(1, verify_budget // size), rng)
        if ok:
            if not exhaustive:
                logger.warning(
                    f"Universal family ({m}, {kappa}) of size {size} checked on a sample only; "
                    "coverage is not guaranteed"
                )
            logger.info(f"Universal family ({m}, {kappa}): {size} members after {attempt} draw(s)")
            return UniversalFamily(m, kappa, _matrix_to_bitsets(matrix), verified=exhaustive)
        logger.debug(f"Universal family draw {attempt} for ({m}, {kappa}) failed verification")
    raise DivMatchError(f"no ({m}, {kappa})-universal family found in {max_attempts} draws of size {size}")


def family_path(directory: str, m: int, kappa: int) -> str:
    return os.path.join(directory, f"universal_m{m}_k{kappa}.txt")


def save_family(family: UniversalFamily, directory: str) -> str:
    """
    Write a family as a header ``m kappa count`` followed by hex bitsets.

    Returns:
        The path written.
    """
    os.makedirs(directory, exist_ok=True)
    path = family_path(directory, family.ground_size, family.kappa)
    with open(path, "w") as f:
        f.write(f"{family.ground_size} {family.kappa} {len(family)}\n")
        for member in family.members:
            f.write(f"{member:x}\n")
    return path


def load_family(directory: str, m: int, kappa: int,
                verify_budget: int = VERIFY_BUDGET) -> Optional[UniversalFamily]:
    """
    Read a cached family, re-verifying it when the check fits the budget.

    Returns:
        The family, or None if absent, malformed or failing verification.
    """
    path = family_path(directory, m, kappa)
    if not os.path.exists(path):
        return None
    with open(path, "r") as f:
        lines = [line.strip() for line in f if line.strip()]
    try:
        header_m, header_kappa, count = (int(token) for token in lines[0].split())
        members = tuple(int(line, 16) for line in lines[1:])
    except (IndexError, ValueError):
        logger.warning(f"Ignoring malformed universal family cache file {path}")
        return None
    if (header_m, header_kappa, count) != (m, kappa, len(members)) or any(x >> m for x in members):
        logger.warning(f"Ignoring inconsistent universal family cache file {path}")
        return None

    is_power_set = m < 63 and len(members) == 1 << m and members == tuple(range(1 << m))
    family = UniversalFamily(m, kappa, members, verified=False, is_power_set=is_power_set)
    if is_power_set or math.comb(m, kappa) * len(members) <= verify_budget:
        if not (is_power_set or verify_universal(family)):
            logger.warning(f"Cached family {path} fails verification")
            return None
        family = UniversalFamily(m, kappa, members, verified=True, is_power_set=is_power_set)
    return family


# x^t + ... + 1 as bitsets; each is irreducible over GF(2).
FIELD_POLYNOMIALS = {
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001001,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100010001000011,
    15: 0b1000000000000011,
    16: 0b10001000000001011,
}


def _field_multiply(a: int, b: int, degree: int, polynomial: int) -> int:
    product = 0
    while b:
        if b & 1:
            product ^= a
        b >>= 1
        a <<= 1
        if a >> degree & 1:
            a ^= polynomial
    return product


@dataclass(frozen=True)
class LinearFamily:
    """
    A κ-wise independent family of subsets of ``{0..ground_size-1}``.

    Element i gets the column ``(1, a_i, a_i^3, ..., a_i^(2r-1))`` over
    GF(2^t) with distinct nonzero ``a_i = i + 1`` and ``r = floor(κ/2)``;
    any 2r + 1 such columns are linearly independent over GF(2). Member s
    contains i iff the inner product of s with column i is odd, so every
    κ-subset sees all 2^κ traces and the family is universal by
    construction, with no verification step.

    Attributes:
        ground_size: m.
        kappa: κ.
        columns: Column bitset of every element.
        dimension: Length of the columns; the family has 2^dimension members.
    """

    ground_size: int
    kappa: int
    columns: Tuple[int, ...]
    dimension: int

    def __len__(self) -> int:
        return 1 << self.dimension

    def member(self, index: int) -> int:
        """Bitset of member ``index``; ``member(s ^ 1)`` is its complement."""
        return sum(((index & column).bit_count() & 1) << i for i, column in enumerate(self.columns))

    def materialize(self) -> UniversalFamily:
        """Every member listed as a ``UniversalFamily``."""
        members = tuple(self.member(index) for index in range(len(self)))
        return UniversalFamily(self.ground_size, self.kappa, members, verified=True)


def linear_family_degree(m: int) -> int:
    """Degree t of the field GF(2^t) holding m distinct nonzero points."""
    return max(2, m.bit_length())


def linear_family_size(m: int, kappa: int) -> Optional[int]:
    """Number of members of ``linear_family(m, kappa)``, or None if no field polynomial is tabulated."""
    degree = linear_family_degree(m)
    if degree not in FIELD_POLYNOMIALS:
        return None
    return 1 << (1 + degree * (kappa // 2))


def linear_family(m: int, kappa: int) -> LinearFamily:
    """
    Build the κ-wise independent family for a ground set of size m.

    Raises:
        UsageError: If κ is outside [0, m] or m needs a field larger than GF(2^16).
    """
    if not 0 <= kappa <= m:
        raise UsageError(f"need 0 <= kappa <= m, got kappa={kappa}, m={m}")
    degree = linear_family_degree(m)
    if degree not in FIELD_POLYNOMIALS:
        raise UsageError(f"no field of degree {degree} for a ground set of size {m}")
    polynomial = FIELD_POLYNOMIALS[degree]
    rounds = kappa // 2

    columns = []
    for i in range(m):
        point = i + 1
        square = _field_multiply(point, point, degree, polynomial)
        column, power = 1, point
        for j in range(rounds):
            column |= power << (1 + j * degree)
            power = _field_multiply(power, square, degree, polynomial)
        columns.append(column)
    family = LinearFamily(m, kappa, tuple(columns), 1 + degree * rounds)
    logger.debug(f"Linear family ({m}, {kappa}) over GF(2^{degree}): {len(family)} members")
    return family
