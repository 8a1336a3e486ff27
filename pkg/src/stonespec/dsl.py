"""Line-oriented text format for lattices, spaces, functions and families.

Grammar (comments run from ``#`` to end of line; clauses end with ``;``)::

    lattice NAME { elements: a, b ; order: a < b ; ortho: a <-> b ; }
    topology NAME on {p, q} { opens: {}, {p}, {p,q} ; }
    field NAME on {p, q, r} { atoms: {p}, {q,r} ; }
    family NAME in HOST { 0: a ; 1: 1 ; }            # or set literals for
    family2 NAME in HOST { 0,0: a ; 0,1: b ; ... }   # field/topology hosts
    function NAME on HOST { p: 1/2 ; q: 1 ; }
    ideal NAME in FIELD { generators: {p} ; }

Rationals are written ``p/q`` or as finite decimals and are converted
exactly.  Parsing is total: the result is either a resolved instance file or
a nonempty diagnostic list, never both.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, InvalidFamilyError
from .family import ComplexSpectralFamily, SpectralFamily
from .lattice import Lattice, bits
from .measurable import FieldOfSets, MeasurableFunction, SetIdeal
from .topology import TopSpace

KINDS = ("lattice", "topology", "field", "family", "family2", "function", "ideal")

_RESERVED = set("{},;:<#")


@dataclass(frozen=True)
class Diagnostic:
    severity: str
    line: int
    column: int
    code: str
    message: str
    suggestion: str | None = None

    def __str__(self):
        s = f"{self.line}:{self.column}: {self.severity}: {self.message} [{self.code}]"
        if self.suggestion:
            s += f" (hint: {self.suggestion})"
        return s


@dataclass(frozen=True)
class PointFunction:
    """A rational point function on a topological space (no measurability
    constraint applies there)."""

    space: TopSpace
    values: tuple

    def __call__(self, point):
        return self.values[self.space.points.index(point)]


@dataclass
class BlockInfo:
    kind: str
    name: str
    host: str | None
    obj: object

    def __eq__(self, other):
        if not isinstance(other, BlockInfo):
            return NotImplemented
        return (self.kind == other.kind and self.name == other.name
                and self.host == other.host and self.obj == other.obj)


@dataclass
class InstanceFile:
    blocks: list

    def objects(self) -> dict:
        return {b.name: b.obj for b in self.blocks}

    def find(self, name: str) -> BlockInfo | None:
        for b in self.blocks:
            if b.name == name:
                return b
        return None

    def __eq__(self, other):
        if not isinstance(other, InstanceFile):
            return NotImplemented
        return self.blocks == other.blocks


@dataclass
class ParseResult:
    file: InstanceFile | None
    diagnostics: list

    @property
    def ok(self) -> bool:
        return self.file is not None


# --- scanning ----------------------------------------------------------------


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.n = len(text)
        self.i = 0
        self.line_starts = [0]
        for k, ch in enumerate(text):
            if ch == "\n":
                self.line_starts.append(k + 1)

    def linecol(self, i: int) -> tuple:
        row = bisect_right(self.line_starts, i) - 1
        return row + 1, i - self.line_starts[row] + 1

    def skip_ws(self):
        while self.i < self.n:
            ch = self.text[self.i]
            if ch == "#":
                while self.i < self.n and self.text[self.i] != "\n":
                    self.i += 1
            elif ch.isspace():
                self.i += 1
            else:
                return

    def at_end(self) -> bool:
        self.skip_ws()
        return self.i >= self.n

    def token(self) -> tuple:
        """Read a maximal run of non-reserved, non-space characters."""
        self.skip_ws()
        start = self.i
        while self.i < self.n:
            ch = self.text[self.i]
            if ch in _RESERVED or ch.isspace():
                break
            self.i += 1
        return self.text[start:self.i], start

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.i] if self.i < self.n else ""

    def expect(self, ch: str) -> bool:
        if self.peek() == ch:
            self.i += 1
            return True
        return False

    def body(self) -> tuple:
        """Consume text up to the matching close brace (the open brace has
        been consumed); returns (raw, start_index, balanced)."""
        start = self.i
        depth = 1
        while self.i < self.n:
            ch = self.text[self.i]
            if ch == "#":
                while self.i < self.n and self.text[self.i] != "\n":
                    self.i += 1
                continue
            if ch == "{":
                depth += 1
            elif ch == "}":
                depth -= 1
                if depth == 0:
                    raw = self.text[start:self.i]
                    self.i += 1
                    return raw, start, True
            self.i += 1
        return self.text[start:self.i], start, False

    def skip_to_close(self):
        depth = 0
        while self.i < self.n:
            ch = self.text[self.i]
            if ch == "{":
                depth += 1
            elif ch == "}":
                if depth <= 1:
                    self.i += 1
                    return
                depth -= 1
            self.i += 1


@dataclass
class _RawBlock:
    kind: str
    name: str
    link: str | None      # the keyword "on"/"in"
    host: str | None      # host name, when the link argument is a name
    host_set: list | None  # point labels, when the link argument is a set
    clauses: list         # (text, absolute index)
    at: int


def _split_top(text: str, sep: str):
    """Split on a separator at brace depth zero, keeping offsets."""
    parts = []
    depth = 0
    start = 0
    for k, ch in enumerate(text):
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append((text[start:k], start))
            start = k + 1
    parts.append((text[start:], start))
    return parts


def _scan(text: str):
    sc = _Scanner(text)
    blocks = []
    diags = []

    def diag(code, msg, at, suggestion=None):
        line, col = sc.linecol(at)
        diags.append(Diagnostic("error", line, col, code, msg, suggestion))

    while not sc.at_end():
        kind, at = sc.token()
        if kind not in KINDS:
            diag("unknown-block", f"unknown block kind {kind or sc.peek()!r}", at,
                 "expected one of: " + ", ".join(KINDS))
            sc.skip_to_close()
            continue
        name, name_at = sc.token()
        if not name:
            diag("malformed-header", f"{kind} block is missing a name", name_at)
            sc.skip_to_close()
            continue
        link = host = None
        host_set = None
        if sc.peek() not in "{":
            link, link_at = sc.token()
            if link not in ("on", "in"):
                diag("malformed-header", f"expected 'on', 'in' or '{{' after the name", link_at)
                sc.skip_to_close()
                continue
            if sc.peek() == "{":
                sc.expect("{")
                raw, raw_at, ok = sc.body()
                if not ok:
                    diag("malformed-header", "unterminated point set", raw_at)
                    continue
                host_set = [t.strip() for t, _ in _split_top(raw, ",") if t.strip()]
            else:
                host, _ = sc.token()
                if not host:
                    diag("malformed-header", f"missing host name after '{link}'", link_at)
                    sc.skip_to_close()
                    continue
        if not sc.expect("{"):
            diag("malformed-header", f"expected '{{' to open the {kind} body", sc.i)
            sc.skip_to_close()
            continue
        raw, raw_at, ok = sc.body()
        if not ok:
            diag("malformed-header", f"unterminated {kind} block", at)
            continue
        clauses = [(t, raw_at + off) for t, off in _split_top(raw, ";") if t.strip()]
        blocks.append(_RawBlock(kind, name, link, host, host_set, clauses, at))
    return blocks, diags


# --- construction --------------------------------------------------------------


def _strip_at(piece):
    text, at = piece
    stripped = text.lstrip()
    return stripped.rstrip(), at + (len(text) - len(stripped))


def _parse_rational(token: str):
    token = token.strip()
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        return None


def _parse_setlit(text: str):
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        return None
    inner = text[1:-1]
    return [t.strip() for t, _ in _split_top(inner, ",") if t.strip()]


class _Builder:
    def __init__(self, scanner_text: str):
        self.sc = _Scanner(scanner_text)
        self.diags = []
        self.by_name = {}

    def diag(self, code, msg, at, suggestion=None):
        line, col = self.sc.linecol(at)
        self.diags.append(Diagnostic("error", line, col, code, msg, suggestion))

    def clause_map(self, rb: _RawBlock, allowed):
        out = {}
        ok = True
        for text, at in rb.clauses:
            head, _ = _strip_at((text, at))
            parts = _split_top(text, ":")
            if len(parts) != 2:
                self.diag("malformed-clause", f"expected 'key: payload' in {head!r}", at)
                ok = False
                continue
            (key, key_at), (payload, payload_at) = parts
            key = key.strip()
            if key not in allowed:
                self.diag("malformed-clause",
                          f"unknown clause {key!r} in a {rb.kind} block", at + key_at,
                          "expected one of: " + ", ".join(allowed))
                ok = False
                continue
            if key in out:
                self.diag("malformed-clause", f"duplicate clause {key!r}", at + key_at)
                ok = False
                continue
            out[key] = (payload, at + payload_at)
        return out if ok else None

    def resolve(self, rb: _RawBlock, kinds):
        info = self.by_name.get(rb.host)
        if info is None or info.kind not in kinds:
            self.diag("dangling-reference",
                      f"{rb.kind} {rb.name!r} refers to unknown {' or '.join(kinds)} {rb.host!r}",
                      rb.at)
            return None
        return info

    # -- per-kind builders

    def build_lattice(self, rb: _RawBlock):
        cm = self.clause_map(rb, ("elements", "order", "ortho"))
        if cm is None:
            return None
        if "elements" not in cm:
            self.diag("malformed-clause", "lattice block needs an 'elements' clause", rb.at)
            return None
        payload, at = cm["elements"]
        names = [t.strip() for t, _ in _split_top(payload, ",") if t.strip()]
        order = []
        if "order" in cm:
            payload, at = cm["order"]
            for part, off in _split_top(payload, ","):
                part_s = part.strip()
                if not part_s:
                    continue
                halves = part_s.split("<")
                if len(halves) != 2 or "->" in part_s:
                    self.diag("malformed-clause",
                              f"expected 'a < b' in order clause, got {part_s!r}", at + off)
                    return None
                order.append((halves[0].strip(), halves[1].strip()))
        ortho = None
        if "ortho" in cm:
            payload, at = cm["ortho"]
            ortho = {}
            for part, off in _split_top(payload, ","):
                part_s = part.strip()
                if not part_s:
                    continue
                halves = part_s.split("<->")
                if len(halves) != 2:
                    self.diag("malformed-clause",
                              f"expected 'a <-> b' in ortho clause, got {part_s!r}", at + off)
                    return None
                ortho[halves[0].strip()] = halves[1].strip()
        try:
            return Lattice(names, order, ortho=ortho)
        except InputError as e:
            self.diag("bad-lattice", str(e), rb.at)
            return None

    def build_topology(self, rb: _RawBlock):
        if rb.host_set is None:
            self.diag("malformed-header",
                      "topology blocks need 'on {points}' before the body", rb.at)
            return None
        cm = self.clause_map(rb, ("opens", "generators"))
        if cm is None:
            return None
        if ("opens" in cm) == ("generators" in cm):
            self.diag("malformed-clause",
                      "topology block needs exactly one of 'opens' or 'generators'",
                      rb.at)
            return None
        key = "opens" if "opens" in cm else "generators"
        payload, at = cm[key]
        sets = []
        for part, off in _split_top(payload, ","):
            if not part.strip():
                continue
            lit = _parse_setlit(part)
            if lit is None:
                self.diag("malformed-clause", f"expected a set literal, got {part.strip()!r}",
                          at + off)
                return None
            sets.append(lit)
        try:
            if key == "generators":
                return TopSpace.generated(rb.host_set, sets)
            return TopSpace.from_sets(rb.host_set, sets)
        except InputError as e:
            self.diag("bad-topology", str(e), rb.at)
            return None

    def build_field(self, rb: _RawBlock):
        if rb.host_set is None:
            self.diag("malformed-header",
                      "field blocks need 'on {points}' before the body", rb.at)
            return None
        cm = self.clause_map(rb, ("atoms",))
        if cm is None or "atoms" not in cm:
            if cm is not None:
                self.diag("malformed-clause", "field block needs an 'atoms' clause", rb.at)
            return None
        payload, at = cm["atoms"]
        blocks = []
        for part, off in _split_top(payload, ","):
            if not part.strip():
                continue
            lit = _parse_setlit(part)
            if lit is None:
                self.diag("malformed-clause", f"expected a set literal, got {part.strip()!r}",
                          at + off)
                return None
            blocks.append(lit)
        try:
            return FieldOfSets.from_partition(rb.host_set, blocks)
        except InputError as e:
            self.diag("bad-field", str(e), rb.at)
            return None

    def _host_lattice(self, info: BlockInfo):
        if info.kind == "lattice":
            return info.obj
        return info.obj.lattice()

    def _resolve_value(self, info: BlockInfo, token_text: str, at):
        lat = self._host_lattice(info)
        token_text = token_text.strip()
        if info.kind == "lattice":
            if token_text in lat.index:
                return lat.index[token_text]
            self.diag("unknown-element", f"unknown element {token_text!r}", at)
            return None
        lit = _parse_setlit(token_text)
        if lit is None:
            self.diag("malformed-clause",
                      f"values over a {info.kind} are set literals, got {token_text!r}", at)
            return None
        try:
            mask = info.obj.mask_of(lit)
            return lat.payload.index(mask)
        except (InputError, ValueError):
            self.diag("unknown-element",
                      f"{token_text!r} is not a member of {info.name!r}", at)
            return None

    def build_family(self, rb: _RawBlock):
        info = self.resolve(rb, ("lattice", "field", "topology"))
        if info is None:
            return None
        jumps = []
        last_t = None
        for text, at in rb.clauses:
            parts = _split_top(text, ":")
            if len(parts) != 2:
                self.diag("malformed-clause", "expected 'threshold: value'", at)
                return None
            (t_text, t_at), (v_text, v_at) = parts
            _, t_pos = _strip_at((t_text, at + t_at))
            t = _parse_rational(t_text)
            if t is None:
                self.diag("malformed-rational", f"malformed rational {t_text.strip()!r}",
                          t_pos)
                return None
            if last_t is not None and t <= last_t:
                self.diag("non-monotone-family",
                          f"non-increasing thresholds: {t} after {last_t}", t_pos)
                return None
            last_t = t
            v = self._resolve_value(info, v_text, at + v_at)
            if v is None:
                return None
            jumps.append((t, v))
        try:
            return SpectralFamily(self._host_lattice(info), jumps)
        except InvalidFamilyError as e:
            self.diag("invalid-family", str(e), rb.at)
            return None

    def build_family2(self, rb: _RawBlock):
        info = self.resolve(rb, ("lattice", "field", "topology"))
        if info is None:
            return None
        entries = {}
        for text, at in rb.clauses:
            parts = _split_top(text, ":")
            if len(parts) != 2:
                self.diag("malformed-clause", "expected 'x,y: value'", at)
                return None
            (key, key_at), (v_text, v_at) = parts
            key_parts = _split_top(key, ",")
            if len(key_parts) != 2:
                self.diag("malformed-clause", "grid keys are pairs 'x,y'", at + key_at)
                return None
            x = _parse_rational(key_parts[0][0])
            y = _parse_rational(key_parts[1][0])
            if x is None or y is None:
                self.diag("malformed-rational", f"malformed rational in {key.strip()!r}",
                          at + key_at)
                return None
            v = self._resolve_value(info, v_text, at + v_at)
            if v is None:
                return None
            entries[(x, y)] = v
        xs = sorted({x for x, _ in entries})
        ys = sorted({y for _, y in entries})
        missing = [(x, y) for x in xs for y in ys if (x, y) not in entries]
        if missing:
            self.diag("malformed-clause",
                      f"grid is not complete; missing entry at {missing[0]}", rb.at)
            return None
        matrix = [[entries[(x, y)] for y in ys] for x in xs]
        try:
            return ComplexSpectralFamily(self._host_lattice(info), xs, ys, matrix)
        except InvalidFamilyError as e:
            self.diag("invalid-family", str(e), rb.at)
            return None

    def build_function(self, rb: _RawBlock):
        info = self.resolve(rb, ("field", "topology"))
        if info is None:
            return None
        ground = info.obj.ground if info.kind == "field" else info.obj.points
        values = {}
        for text, at in rb.clauses:
            parts = _split_top(text, ":")
            if len(parts) != 2:
                self.diag("malformed-clause", "expected 'point: value'", at)
                return None
            (p_text, p_at), (v_text, v_at) = parts
            p = p_text.strip()
            if p not in ground:
                self.diag("unknown-element", f"unknown point {p!r}", at + p_at)
                return None
            v = _parse_rational(v_text)
            if v is None:
                self.diag("malformed-rational", f"malformed rational {v_text.strip()!r}",
                          at + v_at)
                return None
            values[p] = v
        missing = [p for p in ground if p not in values]
        if missing:
            self.diag("malformed-clause", f"missing value for point {missing[0]!r}", rb.at)
            return None
        try:
            if info.kind == "field":
                return MeasurableFunction(info.obj, values)
            return PointFunction(info.obj, tuple(values[p] for p in ground))
        except InputError as e:
            self.diag("bad-function", str(e), rb.at)
            return None

    def build_ideal(self, rb: _RawBlock):
        info = self.resolve(rb, ("field",))
        if info is None:
            return None
        cm = self.clause_map(rb, ("generators",))
        if cm is None or "generators" not in cm:
            if cm is not None:
                self.diag("malformed-clause", "ideal block needs a 'generators' clause", rb.at)
            return None
        payload, at = cm["generators"]
        sets = []
        for part, off in _split_top(payload, ","):
            if not part.strip():
                continue
            lit = _parse_setlit(part)
            if lit is None:
                self.diag("malformed-clause", f"expected a set literal, got {part.strip()!r}",
                          at + off)
                return None
            sets.append(lit)
        try:
            return SetIdeal.from_generators(info.obj, sets)
        except InputError as e:
            self.diag("bad-ideal", str(e), rb.at)
            return None


def parse(text: str) -> ParseResult:
    """Parse an instance file; returns either a resolved file or diagnostics."""
    raw_blocks, diags = _scan(text)
    builder = _Builder(text)
    builder.diags.extend(diags)
    host_kinds = ("lattice", "topology", "field")
    build_order = ([i for i, rb in enumerate(raw_blocks) if rb.kind in host_kinds]
                   + [i for i, rb in enumerate(raw_blocks) if rb.kind not in host_kinds])
    infos = [None] * len(raw_blocks)
    for i in build_order:
        rb = raw_blocks[i]
        if rb.name in builder.by_name:
            builder.diag("duplicate-name",
                         f"block name {rb.name!r} is already in use", rb.at)
            continue
        obj = getattr(builder, f"build_{rb.kind}")(rb)
        if obj is None:
            continue
        info = BlockInfo(rb.kind, rb.name, rb.host, obj)
        builder.by_name[rb.name] = info
        infos[i] = info
    if builder.diags:
        return ParseResult(None, builder.diags)
    return ParseResult(InstanceFile([x for x in infos if x is not None]), [])


# --- emission ------------------------------------------------------------------


def _covers(lat: Lattice):
    """Transitive reduction of the order for compact emission."""
    out = []
    for a in range(lat.n):
        for b in bits(lat.up[a] & ~(1 << a)):
            between = lat.up[a] & lat.down[b] & ~(1 << a) & ~(1 << b)
            if between == 0:
                out.append((a, b))
    return out


def emit_text(file: InstanceFile) -> str:
    """Canonical text form; parse(emit_text(parse(x))) is a fixpoint."""
    chunks = []
    for b in file.blocks:
        chunks.append(_emit_block(b, file))
    return "\n".join(chunks)


def _emit_block(b: BlockInfo, file: InstanceFile) -> str:
    if b.kind == "lattice":
        lat = b.obj
        lines = [f"lattice {b.name} {{"]
        lines.append("  elements: " + ", ".join(lat.names) + " ;")
        covers = _covers(lat)
        if covers:
            lines.append("  order: " + ", ".join(
                f"{lat.names[a]} < {lat.names[x]}" for a, x in covers) + " ;")
        if lat.ortho is not None:
            pairs = [(a, o) for a, o in enumerate(lat.ortho) if a <= o]
            lines.append("  ortho: " + ", ".join(
                f"{lat.names[a]} <-> {lat.names[o]}" for a, o in pairs) + " ;")
        lines.append("}")
        return "\n".join(lines)
    if b.kind == "topology":
        t = b.obj
        pts = ", ".join(str(p) for p in t.points)
        opens = ", ".join(t.set_name(m) for m in sorted(t.opens))
        return (f"topology {b.name} on {{{pts}}} {{\n  opens: {opens} ;\n}}")
    if b.kind == "field":
        f = b.obj
        pts = ", ".join(str(p) for p in f.ground)
        atoms = ", ".join(f.set_name(a) for a in f.atoms)
        return f"field {b.name} on {{{pts}}} {{\n  atoms: {atoms} ;\n}}"
    host_info = file.find(b.host) if b.host else None
    if b.kind == "family":
        fam = b.obj
        entries = []
        for t, v in zip(fam.thresholds, fam.values):
            entries.append(f"  {t}: {_value_text(host_info, fam.lattice, v)} ;")
        return f"family {b.name} in {b.host} {{\n" + "\n".join(entries) + "\n}"
    if b.kind == "family2":
        fam = b.obj
        entries = []
        for i, x in enumerate(fam.xs):
            for j, y in enumerate(fam.ys):
                entries.append(
                    f"  {x},{y}: {_value_text(host_info, fam.lattice, fam.matrix[i][j])} ;")
        return f"family2 {b.name} in {b.host} {{\n" + "\n".join(entries) + "\n}"
    if b.kind == "function":
        fn = b.obj
        if isinstance(fn, MeasurableFunction):
            ground = fn.field.ground
            vals = fn.values
        else:
            ground = fn.space.points
            vals = fn.values
        entries = [f"  {p}: {v} ;" for p, v in zip(ground, vals)]
        return f"function {b.name} on {b.host} {{\n" + "\n".join(entries) + "\n}"
    if b.kind == "ideal":
        ideal = b.obj
        return (f"ideal {b.name} in {b.host} {{\n"
                f"  generators: {ideal.field.set_name(ideal.mask)} ;\n}}")
    raise InputError(f"cannot emit block kind {b.kind!r}")


def _value_text(host_info: BlockInfo | None, lat: Lattice, v: int) -> str:
    if host_info is not None and host_info.kind in ("field", "topology"):
        mask = lat.payload[v]
        obj = host_info.obj
        labels = obj.ground if host_info.kind == "field" else obj.points
        return "{" + ",".join(str(labels[i]) for i in bits(mask)) + "}"
    return lat.names[v]


def emit_json(b: BlockInfo, file: InstanceFile) -> dict:
    """A JSON-ready dict for one block; rationals appear as exact strings."""
    if b.kind == "lattice":
        lat = b.obj
        return {
            "kind": "lattice", "name": b.name,
            "elements": list(lat.names),
            "order": [[lat.names[a], lat.names[x]] for a, x in _covers(lat)],
            "ortho": None if lat.ortho is None else
                     [[lat.names[a], lat.names[o]] for a, o in enumerate(lat.ortho) if a <= o],
            "bottom": lat.names[lat.bottom], "top": lat.names[lat.top],
        }
    if b.kind == "topology":
        t = b.obj
        return {"kind": "topology", "name": b.name,
                "points": [str(p) for p in t.points],
                "opens": [t.set_name(m) for m in sorted(t.opens)]}
    if b.kind == "field":
        f = b.obj
        return {"kind": "field", "name": b.name,
                "points": [str(p) for p in f.ground],
                "atoms": [f.set_name(a) for a in f.atoms]}
    host_info = file.find(b.host) if b.host else None
    if b.kind == "family":
        fam = b.obj
        return {"kind": "family", "name": b.name, "in": b.host,
                "jumps": [[str(t), _value_text(host_info, fam.lattice, v)]
                          for t, v in zip(fam.thresholds, fam.values)]}
    if b.kind == "family2":
        fam = b.obj
        return {"kind": "family2", "name": b.name, "in": b.host,
                "grid_x": [str(x) for x in fam.xs],
                "grid_y": [str(y) for y in fam.ys],
                "matrix": [[_value_text(host_info, fam.lattice, v) for v in row]
                           for row in fam.matrix]}
    if b.kind == "function":
        fn = b.obj
        if isinstance(fn, MeasurableFunction):
            ground, vals = fn.field.ground, fn.values
        else:
            ground, vals = fn.space.points, fn.values
        return {"kind": "function", "name": b.name, "on": b.host,
                "values": {str(p): str(v) for p, v in zip(ground, vals)}}
    if b.kind == "ideal":
        ideal = b.obj
        return {"kind": "ideal", "name": b.name, "in": b.host,
                "generators": [ideal.field.set_name(ideal.mask)]}
    raise InputError(f"cannot emit block kind {b.kind!r}")


def emit_dot(b: BlockInfo) -> str:
    """Hasse diagram of a lattice, topology or field as a DOT digraph."""
    if b.kind == "lattice":
        lat = b.obj
    elif b.kind in ("topology", "field"):
        lat = b.obj.lattice()
    else:
        raise InputError(f"cannot draw block kind {b.kind!r}")
    lines = [f'digraph "{b.name}" {{', "  rankdir=BT;"]
    for name in lat.names:
        lines.append(f'  "{name}";')
    for a, x in _covers(lat):
        lines.append(f'  "{lat.names[a]}" -> "{lat.names[x]}";')
    lines.append("}")
    return "\n".join(lines)
