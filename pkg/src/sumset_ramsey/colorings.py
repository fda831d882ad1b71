"""Colourings of group elements.

Every colouring is a callable ``c(g) -> Color``.  Colours are either small
integers or finite sequences of nonzero :class:`~sumset_ramsey.gvalue.GValue`;
the two kinds never compare equal.
"""

from __future__ import annotations

import hashlib
import shlex
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from .errors import DomainError, ParseError
from .groups import Element, GroupSpec, canonical_gvalue, double_image, enumerate_fragment
from .gvalue import GValue
from .patterns import leader_russell_patterns, pattern_apply


@dataclass(frozen=True, order=True)
class Color:
    kind: str
    value: Hashable

    def __post_init__(self):
        if self.kind == "small":
            if not isinstance(self.value, int) or self.value < 0:
                raise ValueError(f"small colour must be a non-negative int, got {self.value!r}")
        elif self.kind == "seq":
            values = tuple(self.value)
            if any(v.is_zero() for v in values):
                raise ValueError("sequence colours never contain zero")
            object.__setattr__(self, "value", values)
        else:
            raise ValueError(f"unknown colour kind {self.kind!r}")

    def __str__(self):
        if self.kind == "small":
            return str(self.value)
        return "[" + ",".join(str(v) for v in self.value) + "]"


def Small(i: int) -> Color:
    return Color("small", i)


def Seq(values: Iterable[GValue]) -> Color:
    return Color("seq", tuple(values))


class Coloring:
    """Base class.  Subclasses implement :meth:`color`."""

    rule = "custom"
    num_colors: int | None = None

    def color(self, g: Element) -> Color:
        raise NotImplementedError

    def __call__(self, g: Element) -> Color:
        return self.color(g)

    def params(self) -> dict[str, str]:
        return {}


class SupportColoring(Coloring):
    """Colour of ``g`` is the sequence of its nonzero canonical coordinates.

    Indices are forgotten, so ``(1/2, 0)`` at position 0 and at position 5
    give the same colour.
    """

    rule = "support"

    def color(self, g):
        return Seq(v for _, v in canonical_gvalue(g))

    def __eq__(self, other):
        return isinstance(other, SupportColoring)

    def __hash__(self):
        return hash(self.rule)


def support_color(g: Element) -> Color:
    return SupportColoring().color(g)


class Finite2GColoring(Coloring):
    """Injective on the doubles ``2G`` of a fragment, one extra colour elsewhere."""

    rule = "finite2g"

    def __init__(self, spec: GroupSpec, bound: int = 0):
        self.spec = spec
        self.bound = bound
        self.doubles = double_image(spec, bound).elements
        self._index = {h: i for i, h in enumerate(self.doubles)}
        self.num_colors = len(self.doubles) + 1

    def color(self, g):
        return Small(self._index.get(g, len(self.doubles)))

    def params(self):
        return {"group": str(self.spec), "bound": str(self.bound)}

    def __eq__(self, other):
        return isinstance(other, Finite2GColoring) and (self.spec, self.bound) == (other.spec, other.bound)

    def __hash__(self):
        return hash((self.rule, self.spec, self.bound))


def finite_2G_coloring(spec: GroupSpec, bound: int = 0) -> Finite2GColoring:
    return Finite2GColoring(spec, bound)


class InjectiveColoring(Coloring):
    """A distinct colour for each element of a finite domain."""

    rule = "injective"

    def __init__(self, domain: Iterable[Element], spec: GroupSpec | None = None, bound: int | None = None):
        self.domain = tuple(dict.fromkeys(domain))
        self._index = {g: i for i, g in enumerate(self.domain)}
        self.num_colors = len(self.domain)
        self.spec = spec
        self.bound = bound

    @classmethod
    def on_fragment(cls, spec: GroupSpec, bound: int = 0) -> InjectiveColoring:
        return cls(enumerate_fragment(spec, bound), spec=spec, bound=bound)

    def color(self, g):
        try:
            return Small(self._index[g])
        except KeyError:
            raise DomainError(f"{g!r} is outside the injective colouring's domain") from None

    def params(self):
        if self.spec is None:
            raise ValueError("only fragment-based injective colourings can be serialized")
        return {"group": str(self.spec), "bound": str(self.bound)}

    def __eq__(self, other):
        return isinstance(other, InjectiveColoring) and self.domain == other.domain

    def __hash__(self):
        return hash((self.rule, self.domain))


def injective_coloring(domain: Iterable[Element]) -> InjectiveColoring:
    return InjectiveColoring(domain)


class TableColoring(Coloring):
    rule = "table"

    def __init__(self, table: Mapping[Element, Color | int], spec: GroupSpec | None = None):
        self.table = {g: (Small(c) if isinstance(c, int) else c) for g, c in table.items()}
        if spec is None and self.table:
            spec = next(iter(self.table)).spec
        self.spec = spec
        self.num_colors = len(set(self.table.values()))

    def color(self, g):
        try:
            return self.table[g]
        except KeyError:
            raise DomainError(f"{g!r} is not covered by the colour table") from None

    def params(self):
        return {"group": str(self.spec)}

    def __eq__(self, other):
        return isinstance(other, TableColoring) and self.spec == other.spec and self.table == other.table

    def __hash__(self):
        return hash((self.rule, self.spec, frozenset(self.table.items())))


class HashColoring(Coloring):
    """Pseudo-random but total and reproducible: colour from a keyed hash of the coordinates."""

    rule = "random"

    def __init__(self, colors: int, seed: int = 0):
        if colors < 1:
            raise ValueError("need at least one colour")
        self.num_colors = colors
        self.seed = seed

    def color(self, g):
        if self.num_colors == 1:
            return Small(0)
        digest = hashlib.blake2b(f"{self.seed}|{g}".encode(), digest_size=8).digest()
        return Small(int.from_bytes(digest, "big") % self.num_colors)

    def params(self):
        return {"colors": str(self.num_colors), "seed": str(self.seed)}

    def __eq__(self, other):
        return isinstance(other, HashColoring) and (self.num_colors, self.seed) == (other.num_colors, other.seed)

    def __hash__(self):
        return hash((self.rule, self.num_colors, self.seed))


class ConstantColoring(Coloring):
    rule = "constant"
    num_colors = 1

    def color(self, g):
        return Small(0)

    def __eq__(self, other):
        return isinstance(other, ConstantColoring)

    def __hash__(self):
        return hash(self.rule)


class FunctionColoring(Coloring):
    """Wrap an arbitrary callable.  Not serializable."""

    def __init__(self, fn: Callable[[Element], Color | int], num_colors: int | None = None, name: str = "custom"):
        self.fn = fn
        self.num_colors = num_colors
        self.rule = name

    def color(self, g):
        c = self.fn(g)
        return Small(c) if isinstance(c, int) else c


# -- tuple colourings -------------------------------------------------------


@dataclass
class TupleColoring:
    """Colouring of strictly increasing ``arity``-tuples drawn from ``index_domain``."""

    arity: int
    index_domain: tuple[int, ...]
    rule: Callable[[tuple[int, ...]], Hashable]
    base: Coloring | None = None
    _cache: dict = field(default_factory=dict, repr=False)

    def __call__(self, ks: Sequence[int]) -> Hashable:
        ks = tuple(ks)
        try:
            return self._cache[ks]
        except KeyError:
            pass
        if len(ks) != self.arity or any(a >= b for a, b in zip(ks, ks[1:])):
            raise DomainError(f"{ks} is not a strictly increasing {self.arity}-tuple")
        value = self.rule(ks)
        self._cache[ks] = value
        return value


def induced_tuple_coloring(c: Coloring, mode: str, terms: Sequence[Element], arity: int) -> TupleColoring:
    """Colour index tuples through combinations of ``terms``.

    ``mode="sum2"``: ``d(k_1..k_n) = c(2 t_{k_1} + ... + 2 t_{k_n})`` with ``n = arity``
    (with ``terms`` the basis vectors of a power of Z/4 this is the doubled-basis
    colouring).

    ``mode="leader-russell"``: ``arity`` must be even, ``arity = 2r``; the colour is the
    ``(r+1)``-tuple of base colours of the patterns ``(4,)*(r-i) + (2,)*(2i)``
    applied to ``(t_{k_1}, ..., t_{k_2r})``.
    """
    terms = tuple(terms)
    if len(terms) < arity:
        raise DomainError(f"{len(terms)} terms cannot support {arity}-tuples")
    domain = tuple(range(len(terms)))
    if mode == "sum2":

        def rule(ks):
            total = terms[0].spec.zero()
            for k in ks:
                total = total + terms[k] + terms[k]
            return c(total)

    elif mode == "leader-russell":
        if arity % 2:
            raise ValueError("pattern tuples have even arity 2r")
        patterns = leader_russell_patterns(arity // 2)

        def rule(ks):
            gs = [terms[k] for k in ks]
            return tuple(c(pattern_apply(eps, gs)) for eps in patterns)

    else:
        raise ValueError(f"unknown tuple colouring mode {mode!r}")
    return TupleColoring(arity, domain, rule, base=c)


def tuple_coloring_from_function(fn: Callable[[tuple[int, ...]], Hashable], arity: int, size: int) -> TupleColoring:
    return TupleColoring(arity, tuple(range(size)), fn)


# -- text format ------------------------------------------------------------


def save_coloring(c: Coloring) -> str:
    """Serialize a colouring.  The first line names the rule, ``key=value`` parameters follow."""
    params = c.params()
    head = " ".join([c.rule] + [f"{k}={shlex.quote(v)}" for k, v in params.items()])
    if c.rule not in RULES:
        raise ValueError(f"colouring rule {c.rule!r} cannot be serialized")
    lines = [head]
    if isinstance(c, TableColoring):
        for g in sorted(c.table):
            color = c.table[g]
            if color.kind != "small":
                raise ValueError("table files only hold integer colour ids")
            lines.append(f"{g} -> {color.value}")
    return "\n".join(lines) + "\n"


def _param_int(params, key, line, default=None):
    if key not in params:
        if default is None:
            raise ParseError(f"missing parameter {key!r}", line=line, token=key)
        return default
    try:
        return int(params[key])
    except ValueError:
        raise ParseError(f"parameter {key} must be an integer", line=line, token=params[key]) from None


def load_coloring(text: str, spec: GroupSpec | None = None) -> Coloring:
    """Inverse of :func:`save_coloring`.

    ``spec`` supplies the group when the header does not carry ``group=``.
    Blank lines and ``#`` comments are skipped.
    """
    lines = [(no, ln.split("#", 1)[0].strip()) for no, ln in enumerate(text.splitlines(), 1)]
    lines = [(no, ln) for no, ln in lines if ln]
    if not lines:
        raise ParseError("empty colouring file", line=1)
    head_no, head = lines[0]
    try:
        tokens = shlex.split(head)
    except ValueError as exc:
        raise ParseError(str(exc), line=head_no) from None
    rule, params = tokens[0], {}
    for tok in tokens[1:]:
        if "=" not in tok:
            raise ParseError(f"expected key=value, got {tok!r}", line=head_no, token=tok)
        k, v = tok.split("=", 1)
        params[k] = v
    if rule not in RULES:
        raise ParseError(f"unknown colouring rule {rule!r}", line=head_no, token=rule)
    if "group" in params:
        spec = GroupSpec.parse(params["group"])
    body = lines[1:]
    if body and rule != "table":
        raise ParseError(f"rule {rule!r} takes no body lines", line=body[0][0])

    if rule == "support":
        return SupportColoring()
    if rule == "constant":
        return ConstantColoring()
    if rule == "random":
        return HashColoring(_param_int(params, "colors", head_no), _param_int(params, "seed", head_no, 0))
    if spec is None:
        raise ParseError(f"rule {rule!r} needs a group", line=head_no)
    if rule == "finite2g":
        return Finite2GColoring(spec, _param_int(params, "bound", head_no, 0))
    if rule == "injective":
        return InjectiveColoring.on_fragment(spec, _param_int(params, "bound", head_no, 0))

    table = {}
    for no, ln in body:
        if "->" not in ln:
            raise ParseError(f"expected 'coords -> colour', got {ln!r}", line=no, token=ln)
        lhs, rhs = (s.strip() for s in ln.split("->", 1))
        try:
            g = spec.parse_element(lhs)
        except ParseError as exc:
            raise ParseError(str(exc), line=no, token=lhs) from None
        try:
            color = int(rhs)
        except ValueError:
            raise ParseError(f"colour id must be an integer, got {rhs!r}", line=no, token=rhs) from None
        if color < 0:
            raise ParseError("colour ids are non-negative", line=no, token=rhs)
        if g in table:
            raise ParseError(f"element {lhs} listed twice", line=no, token=lhs)
        table[g] = color
    return TableColoring(table, spec)


RULES = ("support", "finite2g", "injective", "table", "random", "constant")


def coloring_from_rule(text: str, spec: GroupSpec | None = None, bound: int = 0) -> Coloring:
    """Short inline rule names used on the command line: ``support``, ``finite2g``,
    ``injective``, ``constant``, ``random:<colors>[:<seed>]``.

    ``injective`` colours the ``2B`` fragment so that ``X + X`` is covered for
    every ``X`` inside the ``B`` fragment.
    """
    name, *args = text.split(":")
    if name == "support":
        return SupportColoring()
    if name == "constant":
        return ConstantColoring()
    if name == "random":
        if not args:
            raise ParseError("random needs a colour count, e.g. random:3", token=text)
        try:
            ints = [int(a) for a in args]
        except ValueError:
            raise ParseError(f"bad random rule {text!r}", token=text) from None
        return HashColoring(*ints[:2])
    if spec is None:
        raise ParseError(f"rule {name!r} needs a group", token=text)
    if name == "finite2g":
        return Finite2GColoring(spec, bound)
    if name == "injective":
        # sums of two bound-B elements have coordinates up to 2B
        return InjectiveColoring.on_fragment(spec, 2 * bound)
    raise ParseError(f"unknown colouring rule {text!r}", token=text)


def random_table_coloring(elements: Iterable[Element], colors: int, rng) -> TableColoring:
    """Table colouring with colours drawn from ``rng.randrange(colors)``."""
    return TableColoring({g: rng.randrange(colors) for g in elements})
