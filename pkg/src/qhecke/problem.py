"""Line-oriented problem files.

Example::

    # D8 acting on a 3-dimensional space
    field 4
    dim 3
    Q
      q12 = -1
      q13 = 1
      q23 = -1
    generator 0, 0, 1, 0, -1, 0, 1, 0, 0
    generator 1, 0, 0, 0, -1, 0, 0, 0, -1
    kappa
      g1 1 3 = 1

Indices in files are 1-based: variables v1..vn, group elements g1..g|G| with
g1 the identity, in the breadth-first enumeration of the generators.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field

from .freealg import Alphabet, MonomialOrder, Polynomial, default_order, format_polynomial, parse_polynomial
from .group import FiniteGroup, generate
from .linalg import Matrix
from .qdha import KappaParam, QuantumParams
from .scalar import (CONDUCTOR_CAP, CycloField, Scalar, ScalarParseError, cyclotomic_field, embed,
                     format_scalar, parse_scalar)

HEADERS = ("field", "dim", "Q", "generator", "kappa", "order", "precedence", "letters", "relations")
ORDERS = ("degrightlex", "degleftlex")


class ProblemError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line, self.column = line, column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


@dataclass
class ProblemFile:
    field: CycloField
    n: int | None = None
    q: QuantumParams | None = None
    generators: list[Matrix] = dc_field(default_factory=list)
    kappa: dict[tuple[int, int, int], Scalar] = dc_field(default_factory=dict)
    order: str | None = None
    precedence: list[str] | None = None
    letters: list[str] | None = None
    relations: list[Polynomial] = dc_field(default_factory=list)
    _group: FiniteGroup | None = dc_field(default=None, repr=False, compare=False)

    def group(self) -> FiniteGroup:
        if self._group is None:
            if self.n is None:
                raise ProblemError("a group needs 'dim'")
            self._group = generate([[list(r) for r in m] for m in self.generators], self.field, n=self.n)
        return self._group

    def quantum_params(self) -> QuantumParams:
        if self.q is None:
            if self.n is None:
                raise ProblemError("missing 'dim'")
            return QuantumParams.from_upper(self.n, {}, self.field)
        return self.q

    def kappa_param(self) -> KappaParam:
        G = self.group()
        for (g, _, _) in self.kappa:
            if g >= len(G):
                raise ProblemError(f"kappa refers to g{g + 1} but the group has order {len(G)}")
        return KappaParam(self.kappa, self.field)

    def relation_alphabet(self) -> Alphabet:
        if self.letters is None:
            raise ProblemError("'relations' need a 'letters' line")
        return Alphabet(self.letters)

    def monomial_order(self, alphabet: Alphabet) -> MonomialOrder:
        style = self.order or "degrightlex"
        if self.precedence is None:
            return default_order(alphabet, style)
        try:
            prec = [alphabet.letter(x) for x in self.precedence]
        except KeyError as exc:
            raise ProblemError(f"precedence names unknown letter {exc.args[0]!r}") from None
        if sorted(prec) != list(range(len(alphabet))):
            raise ProblemError("precedence must list every letter exactly once")
        return MonomialOrder(prec, style)

    def lifted(self, conductor: int) -> ProblemFile:
        """The same problem with every scalar embedded into Q(zeta_conductor)."""
        if conductor == self.field.conductor:
            return self
        if conductor % self.field.conductor:
            raise ProblemError(f"field conductor {conductor} is not a multiple of {self.field.conductor}")
        F = cyclotomic_field(conductor)
        up = lambda x: embed(x, F)
        q = None if self.q is None else QuantumParams([[up(x) for x in r] for r in self.q.q], F)
        gens = [tuple(tuple(up(x) for x in r) for r in m) for m in self.generators]
        kap = {k: up(v) for k, v in self.kappa.items()}
        rels = [Polynomial(F, {w: up(c) for w, c in p.terms.items()}) for p in self.relations]
        return ProblemFile(F, self.n, q, gens, kap, self.order, self.precedence, self.letters, rels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProblemFile):
            return NotImplemented
        return (self.field is other.field and self.n == other.n and self.q == other.q
                and self.generators == other.generators and self.kappa == other.kappa
                and self.order == other.order and self.precedence == other.precedence
                and self.letters == other.letters and self.relations == other.relations)


_QENTRY = re.compile(r"^q(\d)(\d)\s*=\s*(.*)$")
_QENTRY_LONG = re.compile(r"^q\((\d+)\s*,\s*(\d+)\)\s*=\s*(.*)$")
_KAPPA = re.compile(r"^g(\d+)\s+(\d+)\s+(\d+)\s*=\s*(.*)$")


def _strip_comment(line: str) -> str:
    k = line.find("#")
    return line if k < 0 else line[:k]


def parse_problem(text: str) -> ProblemFile:
    lines = text.splitlines()
    fld: CycloField | None = None
    n: int | None = None
    q_upper: dict = {}
    q_rows: list = []
    gens_raw: list = []  # (lineno, col, text)
    kappa_raw: list = []
    rel_raw: list = []
    order = precedence = letters = None
    section = None
    seen: set = set()

    def scalar_at(txt: str, lineno: int, col: int) -> Scalar:
        try:
            return parse_scalar(txt, fld or cyclotomic_field(1))
        except ScalarParseError as exc:
            c = col + (exc.pos or 0)
            raise ProblemError(str(exc).split(" (at column")[0], lineno, c + 1) from None

    for lineno, raw in enumerate(lines, 1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        stripped = line.strip()
        col = line.index(stripped[0])
        parts = stripped.split(None, 1)
        head = parts[0]
        rest = parts[1].strip() if len(parts) > 1 else ""
        rest_col = col + len(stripped) - len(rest)
        if head in HEADERS:
            once = head not in ("generator",)
            if once and head in seen:
                raise ProblemError(f"duplicate '{head}'", lineno, col + 1)
            seen.add(head)
            section = None
            if head == "field":
                if not re.fullmatch(r"\d+", rest) or not 1 <= int(rest) <= CONDUCTOR_CAP:
                    raise ProblemError(f"field conductor must be an integer in 1..{CONDUCTOR_CAP}", lineno, col + 7)
                fld = cyclotomic_field(int(rest))
            elif head == "dim":
                if not re.fullmatch(r"\d+", rest) or int(rest) < 1:
                    raise ProblemError("dim must be a positive integer", lineno, col + 5)
                n = int(rest)
            elif head == "Q":
                if rest:
                    raise ProblemError("'Q' takes no arguments; entries follow on their own lines", lineno, col + 3)
                section = "Q"
            elif head == "kappa":
                if rest:
                    raise ProblemError("'kappa' takes no arguments", lineno, col + 7)
                section = "kappa"
            elif head == "relations":
                if rest:
                    raise ProblemError("'relations' takes no arguments", lineno, col + 11)
                section = "relations"
            elif head == "generator":
                gens_raw.append((lineno, rest_col, rest))
            elif head == "order":
                if rest not in ORDERS:
                    raise ProblemError(f"order must be one of {', '.join(ORDERS)}", lineno, col + 7)
                order = rest
            elif head == "precedence":
                precedence = rest.split()
            elif head == "letters":
                letters = rest.split()
                if not letters:
                    raise ProblemError("'letters' needs at least one name", lineno)
            continue
        if section == "Q":
            m = _QENTRY.match(stripped) or _QENTRY_LONG.match(stripped)
            if m:
                q_upper[(int(m.group(1)), int(m.group(2)))] = (lineno, col + m.start(3), m.group(3))
            else:
                q_rows.append((lineno, col, stripped))
            continue
        if section == "kappa":
            m = _KAPPA.match(stripped)
            if not m:
                raise ProblemError("kappa lines look like 'g<k> <i> <j> = <scalar>'", lineno, col + 1)
            kappa_raw.append((lineno, col, m))
            continue
        if section == "relations":
            rel_raw.append((lineno, col, stripped))
            continue
        raise ProblemError(f"unknown key {head!r}", lineno, col + 1)

    fld = fld or cyclotomic_field(1)
    prob = ProblemFile(fld, n, order=order, precedence=precedence, letters=letters)

    if (q_upper or q_rows or gens_raw or kappa_raw) and n is None:
        raise ProblemError("missing 'dim'")
    if q_upper and q_rows:
        raise ProblemError("give Q either as qIJ entries or as full rows, not both")
    if q_upper:
        upper = {}
        for (i, j), (lineno, col, txt) in sorted(q_upper.items()):
            if not (1 <= i <= n and 1 <= j <= n) or i >= j:
                raise ProblemError(f"q{i}{j}: entries need 1 <= i < j <= {n}", lineno, 1)
            v = scalar_at(txt, lineno, col)
            if not v:
                raise ProblemError("quantum parameter must be nonzero", lineno, col + 1)
            upper[(i - 1, j - 1)] = v
        prob.q = QuantumParams.from_upper(n, upper, fld)
    elif q_rows:
        if len(q_rows) != n:
            raise ProblemError(f"Q needs {n} rows, got {len(q_rows)}", q_rows[-1][0])
        rows = []
        for lineno, col, txt in q_rows:
            row = _scalar_list(txt, n, lineno, col, scalar_at, "Q row")
            for k, v in enumerate(row):
                if not v:
                    raise ProblemError("quantum parameter must be nonzero", lineno, col + 1)
            rows.append(row)
        prob.q = QuantumParams(rows, fld)
    for lineno, col, txt in gens_raw:
        vals = _scalar_list(txt, n * n, lineno, col, scalar_at, "generator")
        prob.generators.append(tuple(tuple(vals[r * n:(r + 1) * n]) for r in range(n)))
    for lineno, col, m in kappa_raw:
        g, i, j = int(m.group(1)), int(m.group(2)), int(m.group(3))
        if g < 1:
            raise ProblemError("group elements are numbered from g1 (the identity)", lineno, col + 1)
        if not (1 <= i <= n and 1 <= j <= n):
            raise ProblemError(f"kappa indices must lie in 1..{n}", lineno, col + 1)
        if i >= j:
            raise ProblemError(
                f"kappa is given for i < j only; state g{g} {min(i, j)} {max(i, j)} instead "
                f"(the 2-form extension to the other order is automatic)", lineno, col + 1)
        v = scalar_at(m.group(4), lineno, col + m.start(4))
        key = (g - 1, i - 1, j - 1)
        if key in prob.kappa:
            raise ProblemError(f"duplicate kappa entry g{g} {i} {j}", lineno, col + 1)
        if v:
            prob.kappa[key] = v
    if rel_raw:
        alpha = Alphabet(letters) if letters else None
        if alpha is None:
            raise ProblemError("'relations' need a 'letters' line", rel_raw[0][0])
        for lineno, col, txt in rel_raw:
            try:
                prob.relations.append(parse_polynomial(txt, alpha, fld))
            except ScalarParseError as exc:
                raise ProblemError(str(exc).split(" (at column")[0], lineno, col + (exc.pos or 0) + 1) from None
    return prob


def _scalar_list(txt: str, count: int, lineno: int, col: int, scalar_at, what: str) -> list[Scalar]:
    parts = txt.split(",")
    if len(parts) != count:
        raise ProblemError(f"{what} needs {count} comma-separated entries, got {len(parts)}", lineno, col + 1)
    out = []
    offset = 0
    for p in parts:
        out.append(scalar_at(p, lineno, col + offset))
        offset += len(p) + 1
    return out


def format_problem(prob: ProblemFile) -> str:
    """Canonical text; parse_problem(format_problem(p)) == p."""
    out = [f"field {prob.field.conductor}"]
    if prob.n is not None:
        out.append(f"dim {prob.n}")
    if prob.q is not None:
        out.append("Q")
        Q = prob.q
        if Q.is_qps:
            for i in range(Q.n):
                for j in range(i + 1, Q.n):
                    name = f"q{i + 1}{j + 1}" if Q.n <= 9 else f"q({i + 1},{j + 1})"
                    out.append(f"  {name} = {format_scalar(Q(i, j))}")
        else:
            for r in Q.q:
                out.append("  " + ", ".join(format_scalar(x) for x in r))
    for m in prob.generators:
        out.append("generator " + ", ".join(format_scalar(x) for r in m for x in r))
    if prob.kappa:
        out.append("kappa")
        for (g, i, j), v in sorted(prob.kappa.items()):
            out.append(f"  g{g + 1} {i + 1} {j + 1} = {format_scalar(v)}")
    if prob.order is not None:
        out.append(f"order {prob.order}")
    if prob.letters is not None:
        out.append("letters " + " ".join(prob.letters))
    if prob.precedence is not None:
        out.append("precedence " + " ".join(prob.precedence))
    if prob.relations:
        alpha = Alphabet(prob.letters)
        out.append("relations")
        for p in prob.relations:
            out.append("  " + format_polynomial(p, alpha))
    return "\n".join(out) + "\n"


def load_problem(path: str) -> ProblemFile:
    with open(path, encoding="utf-8") as fh:
        return parse_problem(fh.read())
