"""Finite groups on dense element indices.

Elements are plain ints ``0 .. order-1`` and the identity is always 0.
The group object supplies multiplication and inversion, which keeps
exhaustive iteration trivial (``range(g.order)``) and makes elements
serialize as integers.
"""

from __future__ import annotations

import itertools
from dataclasses import InitVar, dataclass, field
from typing import Sequence

__all__ = [
    "GroupError",
    "CapExceeded",
    "FiniteGroup",
    "GroupHom",
    "cyclic",
    "direct_product",
    "table_group",
    "group_from_name",
    "validate_group",
    "validate_hom",
    "identity_hom",
    "compose_homs",
    "projections",
    "pairing",
    "enumerate_homs",
    "generating_set",
]


class GroupError(ValueError):
    pass


class CapExceeded(ValueError):
    """An exhaustive search was asked to run beyond its configured size cap."""


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its full multiplication table.

    ``kind`` is ``"cyclic"``, ``"product"`` or ``"table"``.  Products keep
    their two factors and encode the pair ``(a, b)`` as ``a * |right| + b``.
    """

    kind: str
    table: tuple[tuple[int, ...], ...]
    n: int = 0
    factors: tuple["FiniteGroup", "FiniteGroup"] | None = None
    _inverse: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        order = len(self.table)
        inverse = [0] * order
        for a in range(order):
            row = self.table[a]
            for b in range(order):
                if b < len(row) and row[b] == 0:
                    inverse[a] = b
                    break
        object.__setattr__(self, "_inverse", tuple(inverse))

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def identity(self) -> int:
        return 0

    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inverse[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        x = 0
        for _ in range(k):
            x = self.mul(x, a)
        return x

    def element_order(self, a: int) -> int:
        x, k = a, 1
        while x != 0:
            x = self.mul(x, a)
            k += 1
        return k

    def involutions(self) -> list[int]:
        """Elements with ``a·a = e`` (the identity included)."""
        return [a for a in self.elements() if self.mul(a, a) == 0]

    def check_element(self, a: int) -> None:
        if not (isinstance(a, int) and 0 <= a < self.order):
            raise GroupError(f"{a!r} is not an element of {self.name}")

    # product helpers
    def pair(self, a: int, b: int) -> int:
        left, right = self._factors()
        left.check_element(a)
        right.check_element(b)
        return a * right.order + b

    def unpair(self, x: int) -> tuple[int, int]:
        _, right = self._factors()
        return divmod(x, right.order)

    def _factors(self) -> tuple["FiniteGroup", "FiniteGroup"]:
        if self.factors is None:
            raise GroupError(f"{self.name} is not a direct product")
        return self.factors

    def leaves(self) -> list["FiniteGroup"]:
        """Non-product factors, left to right."""
        if self.factors is None:
            return [self]
        return self.factors[0].leaves() + self.factors[1].leaves()

    def components(self, x: int) -> list[int]:
        """Flatten ``x`` into one index per leaf factor."""
        if self.factors is None:
            return [x]
        a, b = self.unpair(x)
        return self.factors[0].components(a) + self.factors[1].components(b)

    def from_components(self, parts: Sequence[int]) -> int:
        parts = list(parts)
        if len(parts) != len(self.leaves()):
            raise GroupError(
                f"{self.name} needs {len(self.leaves())} components, got {len(parts)}"
            )
        return self._build(parts)

    def _build(self, parts: list[int]) -> int:
        if self.factors is None:
            x = parts.pop(0)
            self.check_element(x)
            return x
        a = self.factors[0]._build(parts)
        b = self.factors[1]._build(parts)
        return a * self.factors[1].order + b

    def format_element(self, x: int) -> str:
        return ",".join(str(c) for c in self.components(x))

    def parse_element(self, text: str) -> int:
        try:
            parts = [int(p) for p in text.split(",")]
        except ValueError:
            raise GroupError(f"bad element {text!r}") from None
        if any(p < 0 for p in parts):
            raise GroupError(f"bad element {text!r}")
        return self.from_components(parts)

    @property
    def name(self) -> str:
        if self.kind == "cyclic":
            return f"Z{self.n}"
        if self.kind == "product":
            left, right = self._factors()
            lname = left.name if left.kind != "product" else f"({left.name})"
            rname = right.name if right.kind != "product" else f"({right.name})"
            return f"{lname}x{rname}"
        return f"T{self.order}"

    def declaration(self) -> str:
        """Prefix declaration, e.g. ``product cyclic 2 cyclic 3``."""
        if self.kind == "cyclic":
            return f"cyclic {self.n}"
        if self.kind == "product":
            left, right = self._factors()
            return f"product {left.declaration()} {right.declaration()}"
        return f"table {self.order}"

    def table_groups(self) -> list["FiniteGroup"]:
        """Table-kind leaves in declaration order (their rows follow the header)."""
        return [g for g in self.leaves() if g.kind == "table"]

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name})"


def cyclic(n: int) -> FiniteGroup:
    if not isinstance(n, int) or n < 1:
        raise GroupError(f"cyclic group needs n >= 1, got {n!r}")
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return FiniteGroup("cyclic", table, n=n)


def direct_product(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    m = g2.order
    table = tuple(
        tuple(
            g1.mul(x // m, y // m) * m + g2.mul(x % m, y % m)
            for y in range(g1.order * m)
        )
        for x in range(g1.order * m)
    )
    return FiniteGroup("product", table, factors=(g1, g2))


def table_group(rows: Sequence[Sequence[int]], check: bool = True) -> FiniteGroup:
    """Group from an explicit operation table.

    If some element acts as a two-sided identity it is relabelled to 0
    (swapping with whatever held index 0).  With ``check`` the group axioms
    are verified exhaustively and a violation raises :class:`GroupError`.
    """
    n = len(rows)
    table = [list(r) for r in rows]
    ident = next(
        (
            e
            for e in range(n)
            if len(table[e]) == n
            and table[e] == list(range(n))
            and all(len(table[a]) == n and table[a][e] == a for a in range(n))
        ),
        None,
    )
    if ident not in (None, 0):
        swap = {0: ident, ident: 0}
        relabel = [swap.get(i, i) for i in range(n)]
        new = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                new[relabel[a]][relabel[b]] = relabel[table[a][b]]
        table = new
    group = FiniteGroup("table", tuple(tuple(r) for r in table))
    if check:
        problem = validate_group(group)
        if problem:
            raise GroupError(problem)
    return group


def group_from_name(name: str) -> FiniteGroup:
    """Parse short names such as ``Z3``, ``Z2xZ3`` or ``(Z2xZ2)xZ3``.

    ``x`` associates to the left when unparenthesised.
    """
    text = name.replace(" ", "")
    pos = 0

    def atom() -> FiniteGroup:
        nonlocal pos
        if pos < len(text) and text[pos] == "(":
            pos += 1
            g = expr()
            if pos >= len(text) or text[pos] != ")":
                raise GroupError(f"unbalanced parentheses in {name!r}")
            pos += 1
            return g
        if pos < len(text) and text[pos] in "Zz":
            pos += 1
            start = pos
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            if start == pos:
                raise GroupError(f"missing order in {name!r}")
            return cyclic(int(text[start:pos]))
        raise GroupError(f"cannot parse group name {name!r}")

    def expr() -> FiniteGroup:
        nonlocal pos
        g = atom()
        while pos < len(text) and text[pos] == "x":
            pos += 1
            g = direct_product(g, atom())
        return g

    group = expr()
    if pos != len(text):
        raise GroupError(f"trailing input in group name {name!r}")
    return group


def validate_group(g: FiniteGroup) -> str | None:
    """Return the first violated group axiom, or ``None``.

    Cyclic and product groups are correct by construction; only table
    groups are checked exhaustively.
    """
    if g.kind != "table":
        return None
    n = g.order
    if n == 0:
        return "empty table"
    for a, row in enumerate(g.table):
        if len(row) != n:
            return f"row {a} has {len(row)} entries, expected {n}"
        for b, c in enumerate(row):
            if not (0 <= c < n):
                return f"closure: {a}·{b} = {c} is out of range"
    for a in range(n):
        if g.mul(0, a) != a or g.mul(a, 0) != a:
            return f"identity: 0 is not a two-sided identity at {a}"
    for a in range(n):
        if not any(g.mul(a, b) == 0 and g.mul(b, a) == 0 for b in range(n)):
            return f"inverse: {a} has no two-sided inverse"
    for a, b, c in itertools.product(range(n), repeat=3):
        if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)):
            return f"associativity fails at ({a}, {b}, {c})"
    return None


@dataclass(frozen=True)
class GroupHom:
    source: FiniteGroup
    target: FiniteGroup
    images: tuple[int, ...]
    check: InitVar[bool] = True

    def __post_init__(self, check: bool) -> None:
        object.__setattr__(self, "images", tuple(self.images))
        if check:
            problem = validate_hom(self)
            if problem:
                raise GroupError(problem)

    def __call__(self, x: int) -> int:
        return self.images[x]


def validate_hom(h: GroupHom) -> str | None:
    src, tgt = h.source, h.target
    if len(h.images) != src.order:
        return f"hom has {len(h.images)} images for a group of order {src.order}"
    for x, y in enumerate(h.images):
        if not (isinstance(y, int) and 0 <= y < tgt.order):
            return f"image of {x} is {y!r}, not an element of {tgt.name}"
    for a in range(src.order):
        for b in range(src.order):
            lhs = h.images[src.mul(a, b)]
            rhs = tgt.mul(h.images[a], h.images[b])
            if lhs != rhs:
                return f"h({a}·{b}) = {lhs} but h({a})·h({b}) = {rhs}"
    return None


def identity_hom(g: FiniteGroup) -> GroupHom:
    return GroupHom(g, g, tuple(g.elements()), check=False)


def compose_homs(first: GroupHom, second: GroupHom) -> GroupHom:
    """``second ∘ first``."""
    if first.target != second.source:
        raise GroupError("homs are not composable")
    return GroupHom(
        first.source,
        second.target,
        tuple(second.images[y] for y in first.images),
        check=False,
    )


def projections(g: FiniteGroup) -> tuple[GroupHom, GroupHom]:
    left, right = g._factors()
    m = right.order
    return (
        GroupHom(g, left, tuple(x // m for x in g.elements()), check=False),
        GroupHom(g, right, tuple(x % m for x in g.elements()), check=False),
    )


def pairing(h1: GroupHom, h2: GroupHom, product: FiniteGroup | None = None) -> GroupHom:
    """The hom ``x ↦ (h1(x), h2(x))`` into ``h1.target × h2.target``."""
    if h1.source != h2.source:
        raise GroupError("pairing needs homs with a common source")
    if product is None:
        product = direct_product(h1.target, h2.target)
    m = h2.target.order
    return GroupHom(
        h1.source,
        product,
        tuple(h1.images[x] * m + h2.images[x] for x in h1.source.elements()),
    )


def generating_set(g: FiniteGroup) -> list[int]:
    """A small generating set, chosen greedily in index order."""
    gens: list[int] = []
    reached = {0}
    for a in g.elements():
        if a in reached:
            continue
        gens.append(a)
        frontier = list(reached)
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = g.mul(x, s)
                    if y not in reached:
                        reached.add(y)
                        nxt.append(y)
            frontier = nxt
        if len(reached) == g.order:
            break
    return gens


def _extend(
    g1: FiniteGroup, g2: FiniteGroup, gens: list[int], imgs: tuple[int, ...]
) -> list[int] | None:
    # right-multiplication closure; a conflict means no hom with these images
    image: list[int | None] = [None] * g1.order
    image[0] = 0
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for s, t in zip(gens, imgs):
                y = g1.mul(x, s)
                val = g2.mul(image[x], t)  # type: ignore[arg-type]
                if image[y] is None:
                    image[y] = val
                    nxt.append(y)
                elif image[y] != val:
                    return None
        frontier = nxt
    return image  # type: ignore[return-value]


def enumerate_homs(
    g1: FiniteGroup,
    g2: FiniteGroup,
    max_source: int = 8,
    max_target: int = 12,
) -> list[GroupHom]:
    """All homomorphisms ``g1 → g2``, in lexicographic order of generator images."""
    if g1.order > max_source or g2.order > max_target:
        raise CapExceeded(
            f"hom enumeration capped at |source| <= {max_source}, |target| <= {max_target}; "
            f"got {g1.name} -> {g2.name}"
        )
    gens = generating_set(g1)
    choices = [
        [t for t in g2.elements() if g1.element_order(s) % g2.element_order(t) == 0]
        for s in gens
    ]
    homs = []
    for imgs in itertools.product(*choices):
        image = _extend(g1, g2, gens, imgs)
        if image is None:
            continue
        h = GroupHom(g1, g2, tuple(image), check=False)
        if validate_hom(h) is None:
            homs.append(h)
    return homs

