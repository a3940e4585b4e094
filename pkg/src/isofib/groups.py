"""Concrete finite groups stored as Cayley tables.

Elements are the integers ``0..N-1`` with ``0`` the identity.  Every
group keeps a list of named generators and a breadth-first spanning
tree over them, which gives each element a shortest word and lets
homomorphisms be extended from generator images.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import gcd
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

ORDER_LIMIT = 10_000
AUT_BOUND = 64


class GroupError(ValueError):
    pass


class PresentationError(GroupError):
    """The relators are not of the supported normal-form shape."""


class FiniteGroup:
    def __init__(self, table, generators: Sequence[int], name: str = "G",
                 generator_names: Sequence[str] | None = None,
                 labels: Sequence[str] | None = None, verify: bool = True):
        table = np.ascontiguousarray(table, dtype=np.int64)
        N = table.shape[0]
        if table.shape != (N, N) or N < 1:
            raise GroupError("table must be square and nonempty")
        self.table = table
        self.table.setflags(write=False)
        self.N = N
        self.name = name
        self.generators = [int(g) for g in generators]
        if generator_names is None:
            generator_names = [f"g{i + 1}" for i in range(len(self.generators))]
        self.generator_names = list(generator_names)
        if len(self.generator_names) != len(self.generators):
            raise GroupError("one name per generator is required")

        ar = np.arange(N)
        if not (np.array_equal(table[0], ar) and np.array_equal(table[:, 0], ar)):
            raise GroupError("element 0 must be the identity")
        if verify:
            self._verify_axioms()
        self.inv = np.argmin(table, axis=1)
        if not np.all(table[ar, self.inv] == 0):
            raise GroupError("missing inverses")

        self._spanning_tree()
        self.orders = self._element_orders()
        self.class_id, self.classes = self._conjugacy()
        self.labels = list(labels) if labels is not None else [self._word_label(i) for i in range(N)]
        self._by_name = dict(zip(self.generator_names, self.generators))

    # construction helpers

    def _verify_axioms(self):
        t, N = self.table, self.N
        srt = np.sort(t, axis=1)
        ar = np.arange(N)
        if not (np.all(srt == ar) and np.all(np.sort(t, axis=0) == ar[:, None])):
            raise GroupError("table is not a Latin square")
        # Light's test: associativity on a generating set implies it everywhere
        for s in self.generators:
            if not np.array_equal(t[t[:, s], :], t[:, t[s, :]]):
                raise GroupError("multiplication is not associative")

    def _spanning_tree(self):
        parent = np.full(self.N, -1, dtype=np.int64)
        via = np.full(self.N, -1, dtype=np.int64)
        seen = np.zeros(self.N, dtype=bool)
        seen[0] = True
        bfs = [0]
        for x in bfs:
            for k, s in enumerate(self.generators):
                y = int(self.table[x, s])
                if not seen[y]:
                    seen[y] = True
                    parent[y], via[y] = x, k
                    bfs.append(y)
        if len(bfs) != self.N:
            raise GroupError("generators do not generate the group")
        self.parent, self.via, self.bfs_order = parent, via, np.array(bfs)

    def _element_orders(self):
        N, t = self.N, self.table
        orders = np.zeros(N, dtype=np.int64)
        ar = np.arange(N)
        cur = ar.copy()
        for k in range(1, N + 1):
            hit = (cur == 0) & (orders == 0)
            orders[hit] = k
            if orders.all():
                break
            cur = t[cur, ar]
        return orders

    def _conjugacy(self):
        class_id = np.full(self.N, -1, dtype=np.int64)
        classes = []
        for x in range(self.N):
            if class_id[x] >= 0:
                continue
            orbit = np.unique(self.table[self.table[:, x], self.inv])
            class_id[orbit] = len(classes)
            classes.append(tuple(int(y) for y in orbit))
        return class_id, classes

    def word(self, i: int) -> list[int]:
        """Generator positions of a shortest word for element i."""
        out = []
        while i != 0:
            out.append(int(self.via[i]))
            i = int(self.parent[i])
        return out[::-1]

    def _word_label(self, i: int) -> str:
        if i == 0:
            return "1"
        w = self.word(i)
        parts = []
        for k, grp in itertools.groupby(w):
            e = len(list(grp))
            name = self.generator_names[k]
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)

    # integer-level arithmetic

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def power(self, a: int, e: int) -> int:
        if e < 0:
            a, e = int(self.inv[a]), -e
        e %= int(self.orders[a])
        r = 0
        for _ in range(e):
            r = int(self.table[r, a])
        return r

    def conj(self, s: int, a: int) -> int:
        """s a s^-1"""
        return int(self.table[self.table[s, a], self.inv[s]])

    def product(self, elems: Iterable[int]) -> int:
        r = 0
        for a in elems:
            r = int(self.table[r, a])
        return r

    def commutator(self, a: int, b: int) -> int:
        """[a, b] = a b a^-1 b^-1"""
        return self.product([a, b, int(self.inv[a]), int(self.inv[b])])

    def cyclic_subgroup(self, a: int) -> frozenset[int]:
        out, x = [0], a
        while x != 0:
            out.append(x)
            x = int(self.table[x, a])
        return frozenset(out)

    def closure(self, elems: Iterable[int]) -> frozenset[int]:
        gens = sorted(set(int(a) for a in elems) - {0})
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = int(self.table[x, g])
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    # element-level conveniences

    def __len__(self) -> int:
        return self.N

    @property
    def order(self) -> int:
        return self.N

    def element(self, i: int) -> "GroupElement":
        if not 0 <= int(i) < self.N:
            raise IndexError(f"no element {i} in {self.name}")
        return GroupElement(self, int(i))

    @property
    def identity(self) -> "GroupElement":
        return GroupElement(self, 0)

    @property
    def elements(self) -> list["GroupElement"]:
        return [GroupElement(self, i) for i in range(self.N)]

    def gen(self, name: str) -> "GroupElement":
        return GroupElement(self, self._by_name[name])

    @property
    def gens(self) -> list["GroupElement"]:
        return [GroupElement(self, g) for g in self.generators]

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def elements_of_order(self, m: int) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.orders == m)]

    def parse_word(self, text: str) -> "GroupElement":
        return GroupElement(self, _WordParser(self, text).parse())

    def __repr__(self) -> str:
        return f"<FiniteGroup {self.name} of order {self.N}>"


@dataclass(frozen=True, eq=False)
class GroupElement:
    group: FiniteGroup
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.group.N:
            raise IndexError("element index out of range")

    def _other(self, other) -> int:
        if not isinstance(other, GroupElement) or other.group is not self.group:
            raise GroupError("elements belong to different groups")
        return other.index

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.group, self.group.mul(self.index, self._other(other)))

    def __pow__(self, e: int) -> "GroupElement":
        return GroupElement(self.group, self.group.power(self.index, e))

    def inverse(self) -> "GroupElement":
        return GroupElement(self.group, int(self.group.inv[self.index]))

    @property
    def order(self) -> int:
        return int(self.group.orders[self.index])

    def conjugate_by(self, s: "GroupElement") -> "GroupElement":
        return GroupElement(self.group, self.group.conj(self._other(s), self.index))

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupElement) and other.group is self.group and other.index == self.index

    def __hash__(self) -> int:
        return hash((id(self.group), self.index))

    def __int__(self) -> int:
        return self.index

    def __repr__(self) -> str:
        return self.group.labels[self.index]


def _idx(G: FiniteGroup, x) -> int:
    if isinstance(x, GroupElement):
        if x.group is not G:
            raise GroupError("element of a different group")
        return x.index
    return int(x)


def _elements(G: FiniteGroup, idxs: Iterable[int]) -> frozenset[GroupElement]:
    return frozenset(GroupElement(G, int(i)) for i in idxs)


# word parser: products of generator names with integer exponents and parentheses

_TOKEN = re.compile(r"\s*(?:(\()|(\))|(\*)|(\^)|(-?\d+)|([A-Za-z_][A-Za-z_0-9]*))")


class _WordParser:
    def __init__(self, G: FiniteGroup, text: str):
        self.G, self.text = G, text
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise GroupError(f"cannot parse word {self.text!r} at position {pos}")
            kind = m.lastindex
            self.tokens.append((kind, m.group(kind)))
            pos = m.end()
            while pos < len(text) and text[pos].isspace():
                pos += 1
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self, kind):
        k, v = self.peek()
        if k != kind:
            raise GroupError(f"cannot parse word {self.text!r}")
        self.pos += 1
        return v

    def parse(self) -> int:
        if not self.tokens:
            raise GroupError("empty word")
        value = self.product()
        if self.pos != len(self.tokens):
            raise GroupError(f"trailing input in word {self.text!r}")
        return value

    def product(self) -> int:
        value = self.factor()
        while self.peek()[0] in (3, 1, 6):
            if self.peek()[0] == 3:
                self.pos += 1
            value = self.G.mul(value, self.factor())
        return value

    def factor(self) -> int:
        k, v = self.peek()
        if k == 1:
            self.pos += 1
            base = self.product()
            self.take(2)
        elif k == 6:
            self.pos += 1
            if v not in self.G._by_name:
                raise GroupError(f"unknown generator {v!r} in {self.G.name}")
            base = self.G._by_name[v]
        elif k == 5 and v == "1":
            self.pos += 1
            base = 0
        else:
            raise GroupError(f"cannot parse word {self.text!r}")
        while self.peek()[0] == 4:
            self.pos += 1
            base = self.G.power(base, int(self.take(5)))
        return base


# constructors

def from_closure(generators: Sequence[Hashable], mul: Callable, identity: Hashable,
                 name: str = "G", generator_names: Sequence[str] | None = None,
                 label: Callable | None = None, limit: int = ORDER_LIMIT) -> FiniteGroup:
    """Enumerate the closure of ``generators`` under an associative ``mul``.

    Only ``N * len(generators)`` raw products are formed; the rest of the
    Cayley table follows from the spanning tree, column by column.
    """
    elems = [identity]
    index = {identity: 0}
    parent, via = [-1], [-1]
    rmul: list[list[int]] = [[] for _ in generators]
    i = 0
    while i < len(elems):
        x = elems[i]
        for k, g in enumerate(generators):
            y = mul(x, g)
            j = index.get(y)
            if j is None:
                if len(elems) >= limit:
                    raise GroupError(f"closure exceeds {limit} elements")
                j = index[y] = len(elems)
                elems.append(y)
                parent.append(i)
                via.append(k)
            rmul[k].append(j)
        i += 1
    N = len(elems)
    R = [np.array(r, dtype=np.int64) for r in rmul]
    table = np.empty((N, N), dtype=np.int64)
    table[:, 0] = np.arange(N)
    for b in range(1, N):
        table[:, b] = R[via[b]][table[:, parent[b]]]
    gen_idx = [index[g] for g in generators]
    labels = [label(e) for e in elems] if label else None
    return FiniteGroup(table, gen_idx, name, generator_names, labels)


def cyclic(n: int, name: str | None = None, generator: str = "x") -> FiniteGroup:
    if n < 1:
        raise GroupError("n must be positive")
    ar = np.arange(n)
    table = (ar[:, None] + ar[None, :]) % n
    labels = ["1"] + [generator if i == 1 else f"{generator}^{i}" for i in range(1, n)]
    return FiniteGroup(table, [1 % n], name or f"Z{n}", [generator], labels)


_DEFAULT_NAMES = "xyzwuvst"


def abelian(orders: Sequence[int], names: Sequence[str] | None = None) -> FiniteGroup:
    orders = [int(m) for m in orders]
    if not orders or any(m < 2 for m in orders):
        raise GroupError("abelian() needs orders >= 2")
    if names is None:
        names = _DEFAULT_NAMES[: len(orders)] if len(orders) <= len(_DEFAULT_NAMES) else [f"a{i + 1}" for i in range(len(orders))]
    gens = []
    for i, m in enumerate(orders):
        e = [0] * len(orders)
        e[i] = 1
        gens.append(tuple(e))

    def mul(a, b):
        return tuple((x + y) % m for x, y, m in zip(a, b, orders))

    def label(e):
        parts = [n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k]
        return "*".join(parts) or "1"

    return from_closure(gens, mul, tuple([0] * len(orders)), "x".join(f"Z{m}" for m in orders),
                        list(names), label)


def parse_cycles(degree: int, text: str) -> tuple[int, ...]:
    """Permutation of 0..degree-1 from 1-based cycle notation like ``(1,2,3)(4,5)``."""
    perm = list(range(degree))
    for cyc in re.findall(r"\(([^()]*)\)", text):
        pts = [int(p) - 1 for p in re.split(r"[,\s]+", cyc.strip()) if p]
        if any(not 0 <= p < degree for p in pts) or len(set(pts)) != len(pts):
            raise GroupError(f"bad cycle ({cyc}) for degree {degree}")
        for a, b in zip(pts, pts[1:] + pts[:1]):
            perm[a] = b
    if re.sub(r"\([^()]*\)", "", text).strip():
        raise GroupError(f"cannot parse cycles {text!r}")
    return tuple(perm)


def from_permutations(degree: int, generators: Sequence, name: str = "G",
                      generator_names: Sequence[str] | None = None,
                      limit: int = ORDER_LIMIT) -> FiniteGroup:
    """Closure of permutations of ``degree`` points.

    Generators are image tuples on ``0..degree-1`` or cycle strings on
    ``1..degree``.  Products compose right to left: ``(g*h)(p) = g(h(p))``.
    """
    perms = []
    for g in generators:
        p = parse_cycles(degree, g) if isinstance(g, str) else tuple(int(v) for v in g)
        if sorted(p) != list(range(degree)):
            raise GroupError(f"{g!r} is not a permutation of {degree} points")
        perms.append(p)
    if generator_names is None:
        generator_names = list("abcdefgh"[: len(perms)])

    def mul(g, h):
        return tuple(g[i] for i in h)

    return from_closure(perms, mul, tuple(range(degree)), name, generator_names, limit=limit)


def symmetric(n: int) -> FiniteGroup:
    if n < 2:
        return cyclic(1, "S1")
    gens = ["(1,2)", "(" + ",".join(str(i) for i in range(1, n + 1)) + ")"] if n > 2 else ["(1,2)"]
    return from_permutations(n, gens, f"S{n}", ["s", "t"][: len(gens)])


def alternating(n: int) -> FiniteGroup:
    gens = [f"(1,2,{k})" for k in range(3, n + 1)]
    return from_permutations(n, gens, f"A{n}", [f"c{k}" for k in range(3, n + 1)])


def dihedral(m: int) -> FiniteGroup:
    """Symmetries of the m-gon, order 2m."""
    rot = tuple((i + 1) % m for i in range(m))
    ref = tuple((-i) % m for i in range(m))
    return from_permutations(m, [ref, rot], f"D{2 * m}", ["s", "r"])


def psl2(p: int) -> FiniteGroup:
    """PSL(2, p) acting on the projective line F_p and infinity.

    ``a`` is z -> -1/z and ``b`` is z -> -1/(z+1), so ``a*b`` is z -> z+1.
    """
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise GroupError("p must be prime")
    inf = p

    def mobius(a, b, c, d):
        img = []
        for z in range(p + 1):
            if z == inf:
                num, den = a, c
            else:
                num, den = (a * z + b) % p, (c * z + d) % p
            img.append(inf if den % p == 0 else num * pow(den, -1, p) % p)
        return tuple(img)

    gens = [mobius(0, -1, 1, 0), mobius(0, -1, 1, 1)]
    return from_permutations(p + 1, gens, f"PSL2({p})", ["a", "b"])


# homomorphisms and automorphisms

def extend_homomorphism(G: FiniteGroup, H: FiniteGroup, images: Sequence[int]) -> np.ndarray | None:
    """The homomorphism G -> H sending generator k to images[k], if it exists."""
    images = [int(i) for i in images]
    f = np.zeros(G.N, dtype=np.int64)
    for b in G.bfs_order[1:]:
        f[b] = H.table[f[G.parent[b]], images[G.via[b]]]
    for k, s in enumerate(G.generators):
        if not np.array_equal(f[G.table[:, s]], H.table[f, images[k]]):
            return None
    return f


def automorphism_group(G: FiniteGroup, bound: int = AUT_BOUND) -> list[tuple[int, ...]]:
    """All automorphisms of G as permutations of element indices."""
    if G.N > bound:
        raise GroupError(f"|G| = {G.N} exceeds the automorphism bound {bound}")
    choices = [G.elements_of_order(int(G.orders[s])) for s in G.generators]
    out = []
    for imgs in itertools.product(*choices):
        f = extend_homomorphism(G, G, imgs)
        if f is not None and len(set(f.tolist())) == G.N:
            out.append(tuple(int(v) for v in f))
    return out


def semidirect_product(K: FiniteGroup, N: FiniteGroup, action: Sequence[Sequence[int]],
                       name: str | None = None) -> FiniteGroup:
    """K acting on N; ``action[k]`` is the automorphism of N (as an index
    permutation) by which K's k-th generator conjugates.

    Elements are pairs (k, n) read as the product k*n.
    """
    autos = [np.asarray(a, dtype=np.int64) for a in action]
    if len(autos) != len(K.generators):
        raise GroupError("one automorphism per generator of K is required")
    # extend to a homomorphism K -> Aut(N), stored as an array of permutations
    phi = np.zeros((K.N, N.N), dtype=np.int64)
    phi[0] = np.arange(N.N)
    for b in K.bfs_order[1:]:
        phi[b] = phi[K.parent[b]][autos[K.via[b]]]
    for k, s in enumerate(K.generators):
        if not np.array_equal(phi[K.table[:, s]], phi[:, autos[k]]):
            raise GroupError("action does not define a homomorphism into Aut(N)")
    for a in autos:
        f = extend_homomorphism(N, N, a[N.generators])
        if sorted(a.tolist()) != list(range(N.N)) or f is None or not np.array_equal(f, a):
            raise GroupError("action is not by automorphisms")
    phi_l = phi.tolist()
    Kt, Nt, Kinv = K.table, N.table, K.inv

    def mul(a, b):
        k1, n1 = a
        k2, n2 = b
        return (int(Kt[k1, k2]), int(Nt[phi_l[int(Kinv[k2])][n1], n2]))

    gens = [(s, 0) for s in K.generators] + [(0, t) for t in N.generators]
    names = K.generator_names + N.generator_names

    def label(e):
        k, n = e
        parts = [p for p in (K.labels[k], N.labels[n]) if p != "1"]
        return "*".join(parts) or "1"

    return from_closure(gens, mul, (0, 0), name or f"{K.name}:{N.name}", names, label)


def from_presentation_regular(generators: Sequence[tuple[str, int]],
                              conjugations: dict[tuple[str, str], str] | None = None,
                              name: str = "G") -> FiniteGroup:
    """Polycyclic-style presentation with normal forms a1^e1 * ... * ak^ek.

    ``generators`` lists (name, order) in normal-form order.  Each entry
    ``(ai, aj) -> word`` of ``conjugations`` with i < j says
    ``ai * aj * ai^-1 = word`` where the word only uses generators after
    ``ai``; unlisted pairs commute.  Anything else is rejected.
    """
    conjugations = dict(conjugations or {})
    names = [g for g, _ in generators]
    if len(set(names)) != len(names):
        raise PresentationError("repeated generator name")
    pos = {g: i for i, g in enumerate(names)}
    for (a, b) in conjugations:
        if a not in pos or b not in pos:
            raise PresentationError(f"unknown generator in relation {a}{b}{a}^-1")
        if pos[a] >= pos[b]:
            raise PresentationError(f"{a} must precede {b} in the normal form to conjugate it")
    gname, gorder = generators[-1]
    if gorder < 1:
        raise PresentationError("orders must be positive")
    G = cyclic(gorder, gname, gname)
    for a, order in reversed(generators[:-1]):
        images = []
        for b in G.generator_names:
            word = conjugations.get((a, b), b)
            try:
                images.append(G.parse_word(word).index)
            except GroupError as exc:
                raise PresentationError(f"{a}*{b}*{a}^-1 = {word}: {exc}") from None
        f = extend_homomorphism(G, G, images)
        if f is None or len(set(f.tolist())) != G.N:
            raise PresentationError(f"conjugation by {a} is not an automorphism")
        try:
            G = semidirect_product(cyclic(order, a, a), G, [f], name)
        except GroupError:
            raise PresentationError(f"conjugation by {a} has order not dividing {order}") from None
    G.name = name
    return G


_RELATOR_POWER = re.compile(r"^([A-Za-z_]\w*)\^(\d+)$")
_RELATOR_COMM = re.compile(r"^\[([A-Za-z_]\w*),([A-Za-z_]\w*)\]$")
_RELATOR_CONJ = re.compile(r"^([A-Za-z_]\w*)\*([A-Za-z_]\w*)\*([A-Za-z_]\w*)\^-1=(.+)$")


def parse_presentation(text: str, name: str = "G") -> FiniteGroup:
    """From text such as ``x^2, y^8, x*y*x^-1 = y^5``.

    Supported relators: powers ``g^m`` (one per generator, in normal-form
    order), commutators ``[a,b]`` and conjugations ``a*b*a^-1 = word``.
    """
    gens: list[tuple[str, int]] = []
    conj: dict[tuple[str, str], str] = {}
    for part in _split_top(text):
        s = part.replace(" ", "")
        if not s:
            continue
        if m := _RELATOR_POWER.match(s):
            gens.append((m.group(1), int(m.group(2))))
        elif m := _RELATOR_COMM.match(s):
            continue
        elif (m := _RELATOR_CONJ.match(s)) and m.group(1) == m.group(3):
            conj[(m.group(1), m.group(2))] = m.group(4)
        else:
            raise PresentationError(f"unsupported relator {part.strip()!r}")
    if not gens:
        raise PresentationError("no generator orders given")
    return from_presentation_regular(gens, conj, name)


def _split_top(text: str) -> list[str]:
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    out.append(cur)
    return out


# subgroup queries

def conjugacy_classes(G: FiniteGroup) -> list[frozenset[GroupElement]]:
    return [_elements(G, c) for c in G.classes]


def are_conjugate(G: FiniteGroup, a, b) -> bool:
    return bool(G.class_id[_idx(G, a)] == G.class_id[_idx(G, b)])


def power_conjugacy_profile(G: FiniteGroup, m: int) -> dict[GroupElement, frozenset[int]]:
    """For each element of order m, the units j mod m with g^j conjugate to g."""
    units = [j for j in range(1, m + 1) if gcd(j, m) == 1]
    out = {}
    for g in G.elements_of_order(m):
        out[GroupElement(G, g)] = frozenset(j for j in units if G.class_id[G.power(g, j)] == G.class_id[g])
    return out


def subgroup_generated(G: FiniteGroup, elements: Iterable) -> frozenset[GroupElement]:
    return _elements(G, G.closure(_idx(G, x) for x in elements))


def centralizer(G: FiniteGroup, h) -> frozenset[GroupElement]:
    h = _idx(G, h)
    return _elements(G, np.flatnonzero(G.table[:, h] == G.table[h, :]))


def normalizer(G: FiniteGroup, H: Iterable) -> frozenset[GroupElement]:
    Hs = sorted({_idx(G, x) for x in H})
    Hset = np.zeros(G.N, dtype=bool)
    Hset[Hs] = True
    keep = []
    for s in range(G.N):
        conj = G.table[G.table[s, Hs], G.inv[s]]
        if Hset[conj].all():
            keep.append(s)
    return _elements(G, keep)


def derived_subgroup(G: FiniteGroup) -> frozenset[GroupElement]:
    t, inv = G.table, G.inv
    comms = set()
    for a in range(G.N):
        # a b a^-1 b^-1 for all b at once
        comms.update(np.unique(t[t[t[a, :], inv[a]], inv]).tolist())
    return _elements(G, G.closure(comms))


def left_cosets(G: FiniteGroup, H: Iterable) -> list[frozenset[GroupElement]]:
    """Cosets sH, listed by their minimal element index (the representative)."""
    return [_elements(G, c) for c in left_coset_indices(G, {_idx(G, x) for x in H})]


def left_coset_indices(G: FiniteGroup, H: Iterable[int]) -> list[frozenset[int]]:
    Hs = np.array(sorted(set(H)), dtype=np.int64)
    done = np.zeros(G.N, dtype=bool)
    out = []
    for s in range(G.N):
        if not done[s]:
            c = G.table[s, Hs]
            done[c] = True
            out.append(frozenset(int(v) for v in c))
    return out


def invariant_fingerprint(G: FiniteGroup) -> tuple:
    """Cheap isomorphism invariant: sorted (order, class size) pairs."""
    return tuple(sorted((int(G.orders[c[0]]), len(c)) for c in G.classes))


# named groups

def _g_16_6() -> FiniteGroup:
    return from_presentation_regular([("x", 2), ("y", 8)], {("x", "y"): "y^5"}, "G(16,6)")


def _g_24_8() -> FiniteGroup:
    return from_presentation_regular(
        [("x", 2), ("y", 2), ("z", 2), ("w", 3)],
        {("x", "z"): "z*y", ("x", "w"): "w^-1"}, "G(24,8)")


def _g_32_9() -> FiniteGroup:
    return from_presentation_regular([("x", 2), ("y", 2), ("z", 8)], {("x", "z"): "y*z^3"}, "G(32,9)")


def _d4() -> FiniteGroup:
    return from_presentation_regular([("x", 2), ("y", 4)], {("x", "y"): "y^-1"}, "G(8,3)")


def has_generating_vector(G: FiniteGroup, orders: Sequence[int]) -> bool:
    """Whether G is (0 | orders)-generated, for three branch orders."""
    return next(iter_triangle_vectors(G, orders), None) is not None


def iter_triangle_vectors(G: FiniteGroup, orders: Sequence[int]):
    """Triples (g1, g2, g3) of the given orders with g1 g2 g3 = 1 generating G."""
    m1, m2, m3 = orders
    for a in G.elements_of_order(m1):
        for b in G.elements_of_order(m2):
            c = int(G.inv[G.table[a, b]])
            if G.orders[c] == m3 and len(G.closure([a, b])) == G.N:
                yield (a, b, c)


def candidates_32_11() -> list[FiniteGroup]:
    """Semidirect products Z2 x| G(16,6) that are (0|2,4,8)-generated."""
    N = _g_16_6()
    K = cyclic(2, "Z2", "u")
    out = []
    for alpha in automorphism_group(N):
        a = np.array(alpha)
        if not np.array_equal(a[a], np.arange(N.N)):
            continue
        G = semidirect_product(K, N, [a], "G(32,11)?")
        if has_generating_vector(G, (2, 4, 8)):
            out.append(G)
    return out


def candidates_96_64() -> list[FiniteGroup]:
    """Semidirect products S3 x| (Z4)^2 that are (0|2,3,8)-generated."""
    N = abelian([4, 4], ["y", "z"])
    K = symmetric(3)
    autos = [np.array(a) for a in _abelian_44_automorphisms(N)]
    ident = np.arange(N.N)
    inv_s = [a for a in autos if np.array_equal(a[a], ident)]
    ord3 = [b for b in autos if np.array_equal(b[b[b]], ident)]
    out = []
    for a in inv_s:
        for b in ord3:
            # images of s (a transposition) and t (a 3-cycle); s t has order 2 in S3
            ab = a[b]
            if not np.array_equal(ab[ab], ident):
                continue
            G = semidirect_product(K, N, [a, b], "G(96,64)?")
            if has_generating_vector(G, (2, 3, 8)):
                out.append(G)
    return out


def _abelian_44_automorphisms(N: FiniteGroup) -> list[tuple[int, ...]]:
    return automorphism_group(N, bound=16)


_REGISTRY: dict[tuple[int, int], Callable[[], FiniteGroup]] = {
    (8, 3): _d4,
    (16, 6): _g_16_6,
    (24, 8): _g_24_8,
    (32, 9): _g_32_9,
    (168, 42): lambda: psl2(7),
}


def registry(order: int, label: int) -> FiniteGroup:
    try:
        return _REGISTRY[(order, label)]()
    except KeyError:
        known = ", ".join(f"{o},{l}" for o, l in sorted(_REGISTRY))
        raise GroupError(f"group ({order},{label}) is not in the registry (known: {known})") from None


def parse_group_spec(spec: str) -> FiniteGroup:
    """``cyclic:N``, ``abelian:N1xN2``, ``psl2:P``, ``registry:ORDER,LABEL``,
    ``perm:DEGREE:CYCLES;CYCLES`` or ``pres:RELATORS``."""
    kind, _, rest = spec.strip().partition(":")
    kind = kind.lower()
    try:
        if kind == "cyclic":
            return cyclic(int(rest))
        if kind == "abelian":
            return abelian([int(m) for m in rest.lower().split("x")])
        if kind == "psl2":
            return psl2(int(rest))
        if kind == "registry":
            o, l = rest.split(",")
            return registry(int(o), int(l))
        if kind == "perm":
            deg, _, cyc = rest.partition(":")
            return from_permutations(int(deg), [c for c in cyc.split(";") if c.strip()], "perm")
        if kind == "pres":
            return parse_presentation(rest)
        if kind == "symmetric":
            return symmetric(int(rest))
        if kind == "dihedral":
            return dihedral(int(rest))
    except (ValueError, TypeError) as exc:
        if isinstance(exc, GroupError):
            raise
        raise GroupError(f"bad group spec {spec!r}: {exc}") from None
    raise GroupError(f"unknown group spec {spec!r}")
