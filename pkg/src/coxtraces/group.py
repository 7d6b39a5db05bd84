"""Breadth-first generation of finite reflection groups.

Elements are stored as permutations of the root list (bytes for up to
256 roots, so composition is a single bytes.translate call).  Ids are
dense and follow discovery order, which is deterministic: the BFS walks
generators in simple-root order, layer by layer.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

from .field import ONE, ZERO, FieldElement
from .linalg import Matrix, solve_in_basis, vneg
from .roots import RootSystem, reflect, root_permutation, system_from_spec

DEFAULT_BUDGET = 10_000_000
# enumerations past this order (W(E7), D8, A9, ...) must be asked for explicitly
HEAVY_THRESHOLD = 1_000_000

_E8_ORDER = 696_729_600

_CACHE_MAGIC = b"CXGC"
_CACHE_VERSION = 1


class BudgetExceededError(RuntimeError):
    """Requested enumeration is larger than the configured budget allows."""


class MatrixFreeSystemError(RuntimeError):
    """The system has no vector model; use the closed-form counting path."""


@dataclass(frozen=True)
class GroupElement:
    """One group element: a dense id inside its parent group."""

    group: "Group"
    index: int

    @property
    def perm(self):
        return self.group.perms[self.index]

    def matrix(self) -> Matrix:
        return self.group.matrix_of(self.index)

    def __eq__(self, other):
        return (isinstance(other, GroupElement)
                and self.group is other.group and self.index == other.index)

    def __hash__(self):
        return hash((id(self.group), self.index))

    def __repr__(self):
        return f"GroupElement({self.group.system.label}, {self.index})"


class Group:
    """A fully enumerated reflection group over a root system."""

    def __init__(self, system: RootSystem, perms, index, generator_ids):
        self.system = system
        self.perms = perms
        self.index = index
        self.generator_ids = tuple(generator_ids)
        self.order = len(perms)
        self._basis_data = None

    # -- elements ---------------------------------------------------------

    @property
    def identity(self) -> GroupElement:
        return GroupElement(self, 0)

    def element(self, i: int) -> GroupElement:
        if not 0 <= i < self.order:
            raise IndexError(f"element id {i} outside 0..{self.order - 1}")
        return GroupElement(self, i)

    @property
    def generators(self):
        return [GroupElement(self, i) for i in self.generator_ids]

    def __iter__(self):
        return (GroupElement(self, i) for i in range(self.order))

    def __len__(self):
        return self.order

    # -- composition --------------------------------------------------------

    def compose_ids(self, i: int, j: int) -> int:
        """Id of the product: element i applied after element j."""
        return self.index[_compose(self.perms[i], self.perms[j])]

    def inverse_id(self, i: int) -> int:
        return self.index[_invert(self.perms[i])]

    # -- matrices ------------------------------------------------------------

    def _basis(self):
        """Simple-root basis data: coordinates of every root, lazily."""
        if self._basis_data is None:
            system = self.system
            basis_ids = system.simple_root_indices
            basis = [system.roots[i] for i in basis_ids]
            coords = solve_in_basis(basis, list(system.roots)) if basis else []
            full_rank = len(basis) == system.dimension
            basis_inverse = None
            if full_rank and basis:
                # columns of the inverse of [basis as columns]
                unit = [tuple(ONE if k == i else ZERO for k in range(system.dimension))
                        for i in range(system.dimension)]
                basis_inverse = Matrix.from_columns(solve_in_basis(basis, unit))
            self._basis_data = (basis_ids, coords, full_rank, basis_inverse)
        return self._basis_data

    def span_matrix_of(self, i: int) -> Matrix:
        """Matrix of element i on the span of the roots, in the simple basis.

        This is the space on which eigenvalues are counted; for A-type
        factors it drops the fixed all-ones direction, as required.
        """
        basis_ids, coords, _, _ = self._basis()
        perm = self.perms[i]
        return Matrix.from_columns([coords[perm[b]] for b in basis_ids])

    def matrix_of(self, i: int) -> Matrix:
        """Exact matrix of element i: ambient when the roots span the
        whole space (then it is orthogonal and matches reflection_matrix),
        otherwise the span-basis matrix."""
        basis_ids, _, full_rank, basis_inverse = self._basis()
        if not full_rank:
            return self.span_matrix_of(i)
        perm = self.perms[i]
        image_cols = [self.system.roots[perm[b]] for b in basis_ids]
        return Matrix.from_columns(image_cols) * basis_inverse

    # -- distinguished elements ------------------------------------------------

    def reflection_id(self, root_index: int) -> int:
        """Id of the reflection in the given root."""
        perm = root_permutation(self.system, self.system.roots[root_index])
        return self.index[perm]


def _compose(p, q):
    """p after q, i.e. (p o q)[i] = p[q[i]]."""
    if isinstance(p, bytes):
        return q.translate(p.ljust(256, b"\x00"))
    return tuple(p[x] for x in q)


def _invert(p):
    if isinstance(p, bytes):
        out = bytearray(len(p))
        for i, x in enumerate(p):
            out[x] = i
        return bytes(out)
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def compose(g: GroupElement, h: GroupElement) -> GroupElement:
    if g.group is not h.group:
        raise ValueError("elements of different groups")
    return GroupElement(g.group, g.group.compose_ids(g.index, h.index))


def inverse(g: GroupElement) -> GroupElement:
    return GroupElement(g.group, g.group.inverse_id(g.index))


def to_matrix(g: GroupElement) -> Matrix:
    return g.matrix()


def generate_group(system: RootSystem, budget: int = DEFAULT_BUDGET,
                   heavy: bool = False, allow_e8: bool = False) -> Group:
    """Enumerate the reflection group of a vector-backed root system.

    Refuses matrix-free systems, anything above the budget, and — unless
    explicitly unlocked — W(E8) and orders past the heavy threshold.
    """
    if system.matrix_free:
        free = [f.label for f in system.factors if not f.has_matrix_model]
        raise MatrixFreeSystemError(
            f"{system.label} has no exact vector model (factors {', '.join(free)}); "
            "use the closed-form counting path")
    estimate = system.known_order
    if any(f.family == "E" and f.n == 8 for f in system.factors) and not allow_e8:
        raise BudgetExceededError(
            f"enumerating {system.label} means walking W(E8) "
            f"(order {_E8_ORDER:,}), which is beyond desk scale; counts for it "
            "come from the closed form")
    if estimate > budget:
        raise BudgetExceededError(
            f"estimated order {estimate:,} of {system.label} exceeds the "
            f"enumeration budget {budget:,} (W(E8), order {_E8_ORDER:,}, is "
            "the known system above the default budget)")
    if estimate > HEAVY_THRESHOLD and not heavy:
        raise BudgetExceededError(
            f"estimated order {estimate:,} of {system.label} exceeds "
            f"{HEAVY_THRESHOLD:,}; pass heavy=True (--heavy) to run it")

    n = len(system.roots)
    gen_perms = [root_permutation(system, system.roots[i])
                 for i in system.simple_root_indices]
    ident = bytes(range(n)) if n <= 256 else tuple(range(n))
    perms = [ident]
    index = {ident: 0}
    if gen_perms:
        if isinstance(ident, bytes):
            tables = [g.ljust(256, b"\x00") for g in gen_perms]
            frontier = [ident]
            while frontier:
                fresh = []
                for p in frontier:
                    for t in tables:
                        q = p.translate(t)
                        if q not in index:
                            index[q] = len(perms)
                            perms.append(q)
                            fresh.append(q)
                frontier = fresh
        else:
            frontier = [ident]
            while frontier:
                fresh = []
                for p in frontier:
                    for g in gen_perms:
                        q = tuple(g[x] for x in p)
                        if q not in index:
                            index[q] = len(perms)
                            perms.append(q)
                            fresh.append(q)
                frontier = fresh
    if len(perms) != estimate:
        raise RuntimeError(
            f"generated {len(perms)} elements for {system.label}, "
            f"expected {estimate}")
    generator_ids = [index[g] for g in gen_perms]
    return Group(system, perms, index, generator_ids)


def contains_minus_identity(group: Group) -> bool:
    """Whether -identity (on the full ambient space) lies in the group."""
    system = group.system
    if system.trivial_dims > 0:
        # directions with no roots are fixed pointwise by every element
        return False
    neg = [system.root_index[vneg(r)] for r in system.roots]
    perm = bytes(neg) if isinstance(group.perms[0], bytes) else tuple(neg)
    return perm in group.index


# -- shared in-process cache ----------------------------------------------------


_SHARED: dict = {}


def shared_group(system: RootSystem, budget: int = DEFAULT_BUDGET,
                 heavy: bool = False) -> Group:
    """Memoized generate_group keyed by the system label."""
    key = system.label
    group = _SHARED.get(key)
    if group is None:
        group = generate_group(system, budget=budget, heavy=heavy)
        _SHARED[key] = group
    return group


# -- on-disk cache ----------------------------------------------------------------


class CacheFormatError(ValueError):
    """The cache file is not readable as a group snapshot."""


def save_group(group: Group, path) -> None:
    """Write a versioned binary snapshot: header plus fixed-width perms."""
    n = len(group.system.roots)
    width = 1 if n <= 256 else (2 if n <= 65536 else 4)
    label = group.system.label.encode()
    head = struct.pack("<4sBBH", _CACHE_MAGIC, _CACHE_VERSION, width, len(label))
    head += label
    head += struct.pack("<IQH", n, group.order, len(group.generator_ids))
    head += struct.pack(f"<{len(group.generator_ids)}I", *group.generator_ids)
    with open(path, "wb") as fh:
        fh.write(head)
        if width == 1:
            for p in group.perms:
                fh.write(p if isinstance(p, bytes) else bytes(p))
        else:
            code = "H" if width == 2 else "I"
            for p in group.perms:
                fh.write(struct.pack(f"<{n}{code}", *p))


def load_group(path) -> Group:
    """Rebuild a group from a snapshot; the root system is rebuilt from its label."""
    with open(path, "rb") as fh:
        blob = fh.read()
    try:
        magic, version, width, label_len = struct.unpack_from("<4sBBH", blob, 0)
        if magic != _CACHE_MAGIC:
            raise CacheFormatError(f"{path} is not a group cache file")
        if version != _CACHE_VERSION:
            raise CacheFormatError(
                f"{path} has cache version {version}, expected {_CACHE_VERSION}")
        offset = 8
        label = blob[offset:offset + label_len].decode()
        offset += label_len
        n, order, n_gens = struct.unpack_from("<IQH", blob, offset)
        offset += 14
        generator_ids = list(struct.unpack_from(f"<{n_gens}I", blob, offset))
        offset += 4 * n_gens
        system = system_from_spec(label)
        if len(system.roots) != n:
            raise CacheFormatError(
                f"{path}: root count {n} does not match the {label} model")
        perms = []
        if width == 1:
            for k in range(order):
                perms.append(blob[offset + k * n:offset + (k + 1) * n])
        else:
            code = "H" if width == 2 else "I"
            step = n * width
            for k in range(order):
                perms.append(struct.unpack_from(f"<{n}{code}", blob,
                                                offset + k * step))
        if len(perms) != order or (order and len(perms[-1]) != n):
            raise CacheFormatError(f"{path}: truncated permutation payload")
    except struct.error as exc:
        raise CacheFormatError(f"{path}: truncated header ({exc})") from exc
    index = {p: i for i, p in enumerate(perms)}
    return Group(system, perms, index, generator_ids)
