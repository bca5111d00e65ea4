"""Relation systems over arc variables, their text DSL, and link diagrams.

A relation system is a list of equations ``term = term`` where a term is a
variable or one of ``*1 *2 /1 /2`` (infix, left-associative) or ``R1(s, t)``,
``R2(s, t)`` applied to sub-terms.

DSL, one equation per line::

    format=1              # optional version line
    vars x y              # optional: declare variables up front
    z*R1(x,y)=R2(x,y)     # bare * and / mean *1 and /1
    x *1 (y *2 z) = w
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Union

__all__ = [
    "App",
    "Crossing",
    "DiagramReport",
    "DslSyntaxError",
    "Equation",
    "LinkDiagram",
    "RelationSystem",
    "Var",
    "format_diagram",
    "format_system",
    "parse_diagram",
    "parse_relation_dsl",
    "relations_from_diagram",
    "validate_diagram",
]

INFIX_OPS = ("*1", "*2", "/1", "/2")
FUNCTION_OPS = ("R1", "R2")


@dataclass(frozen=True)
class Var:
    name: str

    def variables(self) -> Iterator[str]:
        yield self.name

    def symbols(self) -> Iterator[str]:
        return iter(())

    def rename(self, mapping: dict[str, str]) -> Var:
        return Var(mapping.get(self.name, self.name))

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class App:
    op: str
    left: Term
    right: Term

    def __post_init__(self):
        if self.op not in INFIX_OPS + FUNCTION_OPS:
            raise ValueError(f"unknown operation {self.op!r}")

    def variables(self) -> Iterator[str]:
        yield from self.left.variables()
        yield from self.right.variables()

    def symbols(self) -> Iterator[str]:
        yield self.op
        yield from self.left.symbols()
        yield from self.right.symbols()

    def rename(self, mapping: dict[str, str]) -> App:
        return App(self.op, self.left.rename(mapping), self.right.rename(mapping))

    def __str__(self) -> str:
        if self.op in FUNCTION_OPS:
            return f"{self.op}({self.left},{self.right})"
        right = str(self.right)
        if isinstance(self.right, App) and self.right.op in INFIX_OPS:
            right = f"({right})"
        return f"{self.left}{self.op}{right}"


Term = Union[Var, App]


@dataclass(frozen=True)
class Equation:
    lhs: Term
    rhs: Term

    def variables(self) -> Iterator[str]:
        yield from self.lhs.variables()
        yield from self.rhs.variables()

    def __str__(self) -> str:
        return f"{self.lhs}={self.rhs}"


@dataclass(frozen=True)
class RelationSystem:
    variables: tuple[str, ...]
    equations: tuple[Equation, ...]
    name: str = ""

    def __post_init__(self):
        declared = set(self.variables)
        if len(declared) != len(self.variables):
            raise ValueError("duplicate variable declaration")
        for eq in self.equations:
            missing = set(eq.variables()) - declared
            if missing:
                raise ValueError(f"equation {eq} uses undeclared variables {sorted(missing)}")

    def symbols(self) -> set[str]:
        out: set[str] = set()
        for eq in self.equations:
            out.update(eq.lhs.symbols())
            out.update(eq.rhs.symbols())
        return out

    def rename(self, mapping: dict[str, str]) -> RelationSystem:
        """Apply a bijective renaming of variables."""
        new_vars = tuple(mapping.get(v, v) for v in self.variables)
        if len(set(new_vars)) != len(new_vars):
            raise ValueError("renaming is not injective on the declared variables")
        eqs = tuple(Equation(e.lhs.rename(mapping), e.rhs.rename(mapping)) for e in self.equations)
        return RelationSystem(new_vars, eqs, self.name)

    def __str__(self) -> str:
        return format_system(self)


def format_system(system: RelationSystem, *, header: bool = True) -> str:
    """Print in the DSL. The ``vars`` line keeps variable order and unused variables."""
    lines = []
    if header:
        lines.append("format=1")
    lines.append("vars " + " ".join(system.variables))
    lines.extend(str(eq) for eq in system.equations)
    return "\n".join(lines) + "\n"


class DslSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<op>[*/][12]?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[(),=])
    """,
    re.VERBOSE,
)


@dataclass
class _Tok:
    kind: str
    text: str
    col: int


def _tokenize(line: str, lineno: int) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(line):
        m = _TOKEN_RE.match(line, pos)
        if not m:
            raise DslSyntaxError(f"unexpected character {line[pos]!r}", lineno, pos + 1)
        kind = m.lastgroup
        if kind != "ws":
            text = m.group()
            if kind == "op" and len(text) == 1:
                text += "1"
            toks.append(_Tok(kind, text, m.start() + 1))
        pos = m.end()
    toks.append(_Tok("end", "", len(line) + 1))
    return toks


class _Parser:
    def __init__(self, toks: list[_Tok], lineno: int):
        self.toks = toks
        self.i = 0
        self.lineno = lineno

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self, kind: str, text: str | None = None) -> _Tok:
        tok = self.peek()
        if tok.kind != kind or (text is not None and tok.text != text):
            want = text or kind
            got = tok.text or "end of line"
            raise DslSyntaxError(f"expected {want!r}, got {got!r}", self.lineno, tok.col)
        self.i += 1
        return tok

    def equation(self) -> Equation:
        lhs = self.term()
        self.take("punct", "=")
        rhs = self.term()
        self.take("end")
        return Equation(lhs, rhs)

    def term(self) -> Term:
        node = self.atom()
        while self.peek().kind == "op":
            op = self.take("op").text
            node = App(op, node, self.atom())
        return node

    def atom(self) -> Term:
        tok = self.peek()
        if tok.kind == "punct" and tok.text == "(":
            self.take("punct", "(")
            node = self.term()
            self.take("punct", ")")
            return node
        if tok.kind == "name":
            self.i += 1
            if self.peek().kind == "punct" and self.peek().text == "(":
                if tok.text not in FUNCTION_OPS:
                    raise DslSyntaxError(f"unknown function {tok.text!r}; only R1 and R2 exist", self.lineno, tok.col)
                self.take("punct", "(")
                left = self.term()
                self.take("punct", ",")
                right = self.term()
                self.take("punct", ")")
                return App(tok.text, left, right)
            if tok.text in FUNCTION_OPS:
                raise DslSyntaxError(f"{tok.text} must be applied to two arguments", self.lineno, tok.col)
            return Var(tok.text)
        raise DslSyntaxError(f"expected a term, got {tok.text or 'end of line'!r}", self.lineno, tok.col)


def parse_relation_dsl(text: str, name: str = "") -> RelationSystem:
    """Parse the relation DSL. Variables are ordered by first occurrence
    (``vars`` declarations count as occurrences)."""
    order: list[str] = []
    seen: set[str] = set()
    equations: list[Equation] = []

    def note(v: str) -> None:
        if v not in seen:
            seen.add(v)
            order.append(v)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        stripped = line.strip()
        if not stripped:
            continue
        if re.fullmatch(r"format\s*=\s*\d+", stripped):
            version = int(stripped.split("=")[1])
            if version != 1:
                raise DslSyntaxError(f"unsupported format version {version}", lineno, 1)
            continue
        m = re.match(r"\s*vars?\b(.*)$", line)
        if m and "=" not in line:
            for v in re.split(r"[\s,]+", m.group(1).strip()):
                if not v:
                    continue
                if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v) or v in FUNCTION_OPS:
                    raise DslSyntaxError(f"bad variable name {v!r}", lineno, line.find(v) + 1)
                note(v)
            continue
        eq = _Parser(_tokenize(line, lineno), lineno).equation()
        for v in eq.variables():
            note(v)
        equations.append(eq)
    return RelationSystem(tuple(order), tuple(equations), name)


# --- diagrams -------------------------------------------------------------

CROSSING_KINDS = ("pos", "neg", "sing")


@dataclass(frozen=True)
class Crossing:
    """Four arc slots.

    Classical (``pos``/``neg``): incoming-under, incoming-over, outgoing-under,
    outgoing-over. The over strand is one arc, so both over slots name it.
    Singular (``sing``): incoming-left, incoming-right, outgoing-left,
    outgoing-right. The strand entering on the left leaves on the right and
    vice versa.
    """

    kind: str
    slots: tuple[str, str, str, str]

    def __post_init__(self):
        if self.kind not in CROSSING_KINDS:
            raise ValueError(f"crossing kind must be one of {CROSSING_KINDS}, got {self.kind!r}")
        if len(self.slots) != 4:
            raise ValueError("a crossing has exactly four slots")

    def __str__(self) -> str:
        return f"{self.kind}({','.join(self.slots)})"


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[Crossing, ...]
    components: dict[str, frozenset[str]] = field(hash=False)
    labels: dict[str, int] = field(hash=False)

    @property
    def arcs(self) -> list[str]:
        """All arcs in order of first appearance (crossings first, then free arcs)."""
        out: list[str] = []
        seen: set[str] = set()
        for c in self.crossings:
            for a in c.slots:
                if a not in seen:
                    seen.add(a)
                    out.append(a)
        for comp in self.components.values():
            for a in sorted(comp):
                if a not in seen:
                    seen.add(a)
                    out.append(a)
        return out

    def component_of(self, arc: str) -> str | None:
        for cid, arcs in self.components.items():
            if arc in arcs:
                return cid
        return None


@dataclass(frozen=True)
class DiagramReport:
    violations: tuple[str, ...]

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid


def validate_diagram(d: LinkDiagram) -> DiagramReport:
    """Well-formedness: arc endpoints, component consistency, labels."""
    problems: list[str] = []
    owner: dict[str, str] = {}
    for cid, arcs in d.components.items():
        if cid not in d.labels:
            problems.append(f"component {cid} has no label")
        elif d.labels[cid] not in (1, 2):
            problems.append(f"component {cid} has label {d.labels[cid]!r}; labels are 1 or 2")
        for a in arcs:
            if a in owner:
                problems.append(f"arc {a} belongs to components {owner[a]} and {cid}")
            owner[a] = cid
    for cid in d.labels:
        if cid not in d.components:
            problems.append(f"label given for unknown component {cid}")

    starts: dict[str, int] = {}
    ends: dict[str, int] = {}
    for i, c in enumerate(d.crossings):
        for a in c.slots:
            if a not in owner:
                problems.append(f"crossing {i}: arc {a} is not in any component")
        if c.kind == "sing":
            in_l, in_r, out_l, out_r = c.slots
            pairs = [(in_l, out_r, "left-in/right-out"), (in_r, out_l, "right-in/left-out")]
            ins, outs = (in_l, in_r), (out_l, out_r)
        else:
            in_u, over_in, out_u, over_out = c.slots
            if over_in != over_out:
                problems.append(f"crossing {i}: over strand must be a single arc, got {over_in} and {over_out}")
            pairs = [(in_u, out_u, "under strand")]
            ins, outs = (in_u,), (out_u,)
        for a, b, what in pairs:
            if a in owner and b in owner and owner[a] != owner[b]:
                problems.append(f"crossing {i}: {what} joins arcs {a} and {b} of different components")
        for a in ins:
            ends[a] = ends.get(a, 0) + 1
        for a in outs:
            starts[a] = starts.get(a, 0) + 1

    for a in d.arcs:
        s, e = starts.get(a, 0), ends.get(a, 0)
        if (s, e) not in ((1, 1), (0, 0)):
            problems.append(f"arc {a} starts at {s} and ends at {e} crossings; expected one of each")
        if (s, e) == (0, 0) and any(a in c.slots for c in d.crossings):
            # an arc with no endpoints is a closed over-arc; its component has no other arcs
            cid = owner.get(a)
            if cid is not None and len(d.components[cid]) != 1:
                problems.append(f"arc {a} has no endpoints but shares component {cid} with other arcs")
    return DiagramReport(tuple(problems))


def relations_from_diagram(d: LinkDiagram, name: str = "") -> RelationSystem:
    """Compile a diagram to its coloring relations.

    - positive crossing, under-in ``x``, over ``y``, over label ``k``:
      ``x *k y = out``
    - negative crossing: ``out *k y = x``
    - singular crossing with inputs ``x, y``: ``R1(x,y) = out_left`` and
      ``R2(x,y) = out_right``
    """
    report = validate_diagram(d)
    if not report.valid:
        raise ValueError("invalid diagram: " + "; ".join(report.violations))
    owner = {a: cid for cid, arcs in d.components.items() for a in arcs}
    eqs: list[Equation] = []
    for c in d.crossings:
        a, b, e, _ = c.slots
        if c.kind == "sing":
            eqs.append(Equation(App("R1", Var(a), Var(b)), Var(e)))
            eqs.append(Equation(App("R2", Var(a), Var(b)), Var(c.slots[3])))
            continue
        k = d.labels[owner[b]]
        op = f"*{k}"
        if c.kind == "pos":
            eqs.append(Equation(App(op, Var(a), Var(b)), Var(e)))
        else:
            eqs.append(Equation(App(op, Var(e), Var(b)), Var(a)))
    return RelationSystem(tuple(d.arcs), tuple(eqs), name)


_CROSSING_RE = re.compile(r"^(pos|neg|sing)\s*\(\s*([^)]*)\)\s*$")
_COMPONENT_RE = re.compile(r"^component\s+(\S+)\s*=\s*\{([^}]*)\}\s*label\s+(\S+)\s*$")


def parse_diagram(text: str) -> LinkDiagram:
    """Parse ``pos(a,b,c,d)`` / ``neg(...)`` / ``sing(...)`` lines and
    ``component c1 = {a,b} label 1`` lines. Raises DslSyntaxError."""
    crossings: list[Crossing] = []
    components: dict[str, frozenset[str]] = {}
    labels: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if re.fullmatch(r"format\s*=\s*\d+", line):
            if int(line.split("=")[1]) != 1:
                raise DslSyntaxError("unsupported format version", lineno, 1)
            continue
        m = _CROSSING_RE.match(line)
        if m:
            slots = tuple(s.strip() for s in m.group(2).split(","))
            if len(slots) != 4 or not all(slots):
                raise DslSyntaxError("a crossing needs four arc names", lineno, 1)
            crossings.append(Crossing(m.group(1), slots))
            continue
        m = _COMPONENT_RE.match(line)
        if m:
            cid = m.group(1)
            if cid in components:
                raise DslSyntaxError(f"component {cid} declared twice", lineno, 1)
            arcs = [a.strip() for a in m.group(2).split(",") if a.strip()]
            components[cid] = frozenset(arcs)
            try:
                labels[cid] = int(m.group(3))
            except ValueError:
                raise DslSyntaxError(f"label must be 1 or 2, got {m.group(3)!r}", lineno, 1) from None
            continue
        raise DslSyntaxError(f"cannot parse {line!r}", lineno, 1)
    return LinkDiagram(tuple(crossings), components, labels)


def format_diagram(d: LinkDiagram) -> str:
    lines = ["format=1"]
    lines.extend(str(c) for c in d.crossings)
    for cid, arcs in d.components.items():
        lines.append(f"component {cid} = {{{','.join(sorted(arcs))}}} label {d.labels.get(cid, '?')}")
    return "\n".join(lines) + "\n"
