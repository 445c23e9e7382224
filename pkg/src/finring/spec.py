"""Ring specification strings such as ``prod(Z(4),M(2,GF(2)))``.

Grammar::

    spec := NAME '(' arg (',' arg)* ')'
    arg  := INT | STRING | PATH | spec

Constructors: ``Z(n)``, ``GF(q)``, ``M(k, spec)``, ``UT(k, spec)``,
``prod(spec, spec, ...)``, ``op(spec)`` and ``file(path)``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Union

from . import construct
from .ring import FiniteRing


class SpecError(ValueError):
    """Base class for unusable ring specifications."""


class SpecSyntaxError(SpecError):
    def __init__(self, message: str, pos: int, text: str = ""):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}")


class SpecRangeError(SpecError):
    pass


@dataclass(frozen=True)
class Z:
    n: int

    def pretty(self) -> str:
        return f"Z({self.n})"


@dataclass(frozen=True)
class GF:
    q: int

    def pretty(self) -> str:
        return f"GF({self.q})"


@dataclass(frozen=True)
class Mat:
    k: int
    base: "Spec"

    def pretty(self) -> str:
        return f"M({self.k},{self.base.pretty()})"


@dataclass(frozen=True)
class UT:
    k: int
    base: "Spec"

    def pretty(self) -> str:
        return f"UT({self.k},{self.base.pretty()})"


@dataclass(frozen=True)
class Prod:
    parts: tuple["Spec", ...]

    def pretty(self) -> str:
        return "prod(" + ",".join(p.pretty() for p in self.parts) + ")"


@dataclass(frozen=True)
class Op:
    base: "Spec"

    def pretty(self) -> str:
        return f"op({self.base.pretty()})"


@dataclass(frozen=True)
class File:
    path: str

    def pretty(self) -> str:
        return f"file({json.dumps(self.path)})"


Spec = Union[Z, GF, Mat, UT, Prod, Op, File]

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<string>"(?:[^"\\]|\\.)*")
  | (?P<punct>[(),])
  | (?P<path>[^\s(),"]+)
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise SpecSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self, kind: str, value: str | None = None) -> tuple[str, str, int]:
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = repr(value) if value else kind
            got = repr(tok[1]) if tok[1] else "end of input"
            raise SpecSyntaxError(f"expected {want}, got {got}", tok[2], self.text)
        self.i += 1
        return tok

    def spec(self) -> Spec:
        _, name, pos = self.take("name")
        self.take("punct", "(")
        if name == "file":
            kind, value, apos = self.peek()
            if kind == "string":
                self.i += 1
                path = json.loads(value)
            elif kind in ("path", "name", "int"):
                # bare paths may be split into several tokens, glue them back
                start = apos
                end = apos
                while self.peek()[0] in ("path", "name", "int") and self.peek()[2] == end:
                    _, v, p = self.peek()
                    end = p + len(v)
                    self.i += 1
                path = self.text[start:end]
            else:
                raise SpecSyntaxError("expected a file path", apos, self.text)
            self.take("punct", ")")
            return File(path)
        args: list[Union[int, Spec]] = [self.arg()]
        while self.peek()[1] == ",":
            self.i += 1
            args.append(self.arg())
        self.take("punct", ")")
        return _make(name, args, pos)

    def arg(self) -> Union[int, Spec]:
        kind, value, _ = self.peek()
        if kind == "int":
            self.i += 1
            return int(value)
        if kind == "name":
            return self.spec()
        raise SpecSyntaxError(f"unexpected {value or 'end of input'!r}", self.peek()[2], self.text)


def _make(name: str, args: list, pos: int) -> Spec:
    def ints(k: int) -> None:
        if len(args) != k or not all(isinstance(a, int) for a in args):
            raise SpecRangeError(f"{name} takes {k} integer argument(s) (position {pos})")

    if name == "Z":
        ints(1)
        if args[0] < 2:
            raise SpecRangeError(f"Z(n) needs n >= 2, got {args[0]}")
        return Z(args[0])
    if name == "GF":
        ints(1)
        if construct.prime_power(args[0]) is None:
            raise SpecRangeError(f"GF({args[0]}): not a prime power")
        return GF(args[0])
    if name in ("M", "UT"):
        if len(args) != 2 or not isinstance(args[0], int) or isinstance(args[1], int):
            raise SpecRangeError(f"{name} takes (size, spec) (position {pos})")
        lo = 1 if name == "M" else 2
        if args[0] < lo:
            raise SpecRangeError(f"{name}(k, ...) needs k >= {lo}, got {args[0]}")
        return Mat(args[0], args[1]) if name == "M" else UT(args[0], args[1])
    if name == "prod":
        if len(args) < 2 or any(isinstance(a, int) for a in args):
            raise SpecRangeError(f"prod needs at least two ring arguments (position {pos})")
        return Prod(tuple(args))
    if name == "op":
        if len(args) != 1 or isinstance(args[0], int):
            raise SpecRangeError(f"op takes one ring argument (position {pos})")
        return Op(args[0])
    raise SpecSyntaxError(f"unknown constructor {name!r}", pos)


def parse_spec(text: str) -> Spec:
    parser = _Parser(text)
    node = parser.spec()
    parser.take("end")
    return node


def pretty(spec: Spec) -> str:
    return spec.pretty()


def build(spec: Spec | str) -> FiniteRing:
    """Construct the ring a spec describes; caps from the current limits apply."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    if isinstance(spec, Z):
        return construct.build_cyclic(spec.n)
    if isinstance(spec, GF):
        return construct.build_field(spec.q)
    if isinstance(spec, Mat):
        return construct.build_matrix(spec.k, build(spec.base))
    if isinstance(spec, UT):
        return construct.build_upper_triangular(spec.k, build(spec.base))
    if isinstance(spec, Prod):
        return construct.build_product([build(p) for p in spec.parts])
    if isinstance(spec, Op):
        return construct.build_opposite(build(spec.base))
    if isinstance(spec, File):
        return construct.load_ring(Path(spec.path))
    raise TypeError(f"not a ring spec: {spec!r}")
