"""Line-oriented plain-text format for pairs (g, h).

Human-auditable mathematical input: every number is an exact fraction
literal ("-3/2"; a U+2212 minus is accepted), all indices are 1-based.  The
formal grammar lives in docs/pair_format.md; parse errors and validation
failures carry the offending line number.

A `complexify auto` directive rebuilds the mechanical complexification from
the torus-g rows (the split Cartan part) and any cartan-compact rows, exactly
as the catalog does, so serialization round-trips.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import LieAlgebra, SubalgebraEmbedding, ValidationError, validate
from .catalog import AlgebraData, _complexify_pair
from .checks import Expectation, Pair
from .linalg import frac
from .weights import validate_torus


class ParseError(ValueError):
    """Malformed pair file; message carries the 1-based line number."""


def _err(lineno, msg):
    return ParseError(f"line {lineno}: {msg}")


def _parse_fraction(tok, lineno):
    try:
        return frac(tok)
    except (ValueError, ZeroDivisionError, TypeError):
        raise _err(lineno, f"bad fraction literal {tok!r}") from None


def _parse_row(toks, lineno):
    return [_parse_fraction(t, lineno) for t in toks]


class _AlgebraBlock:
    def __init__(self):
        self.name = "g"
        self.dim = None
        self.labels = None
        self.constants = {}
        self.matsize = None
        self.matrices = {}
        self.complex_rows = {}
        self.cartan_compact = []


def parse_pair_text(text: str, origin="<string>") -> Pair:
    """Parse and validate a pair file; raises ParseError or ValidationError
    with line-anchored diagnostics."""
    lines = text.splitlines()
    name = ""
    provenance = origin
    notes = []
    expectations = []
    complexify_auto = False
    torus_h_maximal = True
    alg_block = None
    h_rows = []
    torus_rows = {"h": [], "g": []}
    i = 0
    n_lines = len(lines)
    while i < n_lines:
        lineno = i + 1
        line = lines[i].split("#", 1)[0].strip()
        i += 1
        if not line:
            continue
        toks = line.split()
        head = toks[0]
        if head == "pair":
            name = line[len("pair"):].strip()
        elif head == "provenance":
            provenance = line[len("provenance"):].strip()
        elif head == "note":
            notes.append(line[len("note"):].strip())
        elif head == "torus-h-maximality":
            if len(toks) != 2 or toks[1] not in ("asserted", "unasserted"):
                raise _err(lineno, "expected 'asserted' or 'unasserted'")
            torus_h_maximal = toks[1] == "asserted"
        elif head == "complexify":
            if len(toks) != 2 or toks[1] != "auto":
                raise _err(lineno, "only 'complexify auto' is supported")
            complexify_auto = True
        elif head == "expect":
            expectations.append(_parse_expect(line, lineno))
        elif head == "begin":
            block, i = _parse_block(lines, i - 1)
            kind = block["kind"]
            if kind == "algebra":
                alg_block = block["algebra"]
            elif kind == "subalgebra":
                h_rows = block["rows"]
            elif kind == "torus":
                torus_rows[block["which"]] = block["rows"]
            else:
                raise _err(lineno, f"unknown block {kind!r}")
        else:
            raise _err(lineno, f"unknown directive {head!r}")
    if alg_block is None:
        raise ParseError("no algebra block found")
    g = _build_algebra(alg_block)
    rep = validate(g, jacobi="auto")
    if not rep.ok:
        raise ValidationError(f"algebra invalid: {rep.first_problem}")
    h = SubalgebraEmbedding.create(g, h_rows)
    torus_h = validate_torus(torus_rows["h"], h)
    torus_g = validate_torus(torus_rows["g"],
                             SubalgebraEmbedding.whole(g))
    J = None
    if alg_block.complex_rows:
        J = _rows_dict_to_matrix(alg_block.complex_rows, g.dim, "complex")
        from .checks import _check_complex_structure
        _check_complex_structure(g, J, h)
    comp = None
    if complexify_auto:
        gdata = AlgebraData(
            algebra=g,
            split_rows=tuple(tuple(r) for r in torus_rows["g"]),
            compact_rows=tuple(tuple(r) for r in alg_block.cartan_compact),
            complexifiable=True,
            complex_structure=J,
            spec="")
        comp = _complexify_pair(gdata, h.rows, torus_h.rows, name)
    return Pair(g=g, h=h, torus_h=torus_h, torus_g=torus_g, name=name,
                provenance=provenance, complex_structure=J,
                complexification=comp,
                torus_h_asserted_maximal=torus_h_maximal,
                notes=tuple(notes), expectations=tuple(expectations))


def parse_pair_file(path) -> Pair:
    with open(path, encoding="utf-8") as fh:
        return parse_pair_text(fh.read(), origin=str(path))


def _parse_expect(line, lineno):
    toks = line.split()
    if len(toks) < 3:
        raise _err(lineno, "expect needs a question and an outcome")
    question, outcome = toks[1], toks[2]
    margin = None
    dimension = None
    source = ""
    rest = line.split(None, 3)[3] if len(toks) > 3 else ""
    while rest:
        if rest.startswith("margin="):
            tok, _, rest = rest[len("margin="):].partition(" ")
            margin = _parse_fraction(tok, lineno)
            rest = rest.strip()
        elif rest.startswith("dim="):
            tok, _, rest = rest[len("dim="):].partition(" ")
            try:
                dimension = int(tok)
            except ValueError:
                raise _err(lineno, f"bad dimension {tok!r}") from None
            rest = rest.strip()
        elif rest.startswith("source="):
            source = rest[len("source="):].strip()
            rest = ""
        else:
            raise _err(lineno, f"bad expect attribute near {rest!r}")
    return Expectation(question=question, outcome=outcome, margin=margin,
                       dimension=dimension, source=source)


def _parse_block(lines, start):
    lineno = start + 1
    header = lines[start].split("#", 1)[0].strip().split()
    out = {}
    if header[:2] == ["begin", "algebra"]:
        out["kind"] = "algebra"
        block = _AlgebraBlock()
    elif header[:2] == ["begin", "subalgebra"]:
        out["kind"] = "subalgebra"
        rows = []
    elif header[:2] == ["begin", "torus"]:
        if len(header) != 3 or header[2] not in ("h", "g"):
            raise _err(lineno, "expected 'begin torus h' or 'begin torus g'")
        out["kind"] = "torus"
        out["which"] = header[2]
        rows = []
    else:
        raise _err(lineno, f"unknown block header {' '.join(header)!r}")
    i = start + 1
    while i < len(lines):
        lineno = i + 1
        line = lines[i].split("#", 1)[0].strip()
        i += 1
        if not line:
            continue
        if line == "end":
            if out["kind"] == "algebra":
                out["algebra"] = block
            else:
                out["rows"] = rows
            return out, i
        toks = line.split()
        if out["kind"] in ("subalgebra", "torus"):
            if toks[0] != "row" or len(toks) < 2 or toks[1] != "=":
                raise _err(lineno, "expected 'row = v1 v2 ...'")
            rows.append(_parse_row(toks[2:], lineno))
            continue
        head = toks[0]
        if head == "dim":
            block.dim = int(toks[1])
        elif head == "name":
            block.name = line[len("name"):].strip()
        elif head == "labels":
            block.labels = toks[1:]
        elif head == "c":
            if len(toks) < 5 or toks[3] != "=":
                raise _err(lineno, "expected 'c i j = k:val ...'")
            ii, jj = int(toks[1]) - 1, int(toks[2]) - 1
            if not 0 <= ii < jj:
                raise _err(lineno, "structure constants need 1 <= i < j")
            entry = {}
            for tok in toks[4:]:
                k, _, v = tok.partition(":")
                entry[int(k) - 1] = _parse_fraction(v, lineno)
            block.constants[(ii, jj)] = entry
        elif head == "matsize":
            block.matsize = int(toks[1])
        elif head == "matrix":
            if len(toks) < 3 or toks[2] != "=":
                raise _err(lineno, "expected 'matrix i = entries...'")
            block.matrices[int(toks[1]) - 1] = _parse_row(toks[3:], lineno)
        elif head == "complex":
            if len(toks) < 3 or toks[2] != "=":
                raise _err(lineno, "expected 'complex i = entries...'")
            block.complex_rows[int(toks[1]) - 1] = _parse_row(toks[3:], lineno)
        elif head == "cartan-compact":
            if toks[1] != "=":
                raise _err(lineno, "expected 'cartan-compact = v1 v2 ...'")
            block.cartan_compact.append(_parse_row(toks[2:], lineno))
        else:
            raise _err(lineno, f"unknown algebra directive {head!r}")
    raise _err(len(lines), "unterminated block (missing 'end')")


def _rows_dict_to_matrix(rows, dim, what):
    M = []
    for i in range(dim):
        if i not in rows:
            raise ParseError(f"{what} row {i + 1} missing")
        if len(rows[i]) != dim:
            raise ParseError(f"{what} row {i + 1} has wrong length")
        M.append(tuple(rows[i]))
    return tuple(M)


def _build_algebra(block: _AlgebraBlock) -> LieAlgebra:
    if block.dim is None:
        raise ParseError("algebra block missing 'dim'")
    n = block.dim
    labels = block.labels or [f"e{k + 1}" for k in range(n)]
    if len(labels) != n:
        raise ParseError(f"expected {n} labels, got {len(labels)}")
    realization = None
    if block.matrices:
        if block.matsize is None:
            raise ParseError("matrix rows given without 'matsize'")
        m = block.matsize
        realization = []
        for k in range(n):
            if k not in block.matrices:
                raise ParseError(f"matrix {k + 1} missing")
            flatv = block.matrices[k]
            if len(flatv) != m * m:
                raise ParseError(
                    f"matrix {k + 1} has {len(flatv)} entries, expected {m * m}")
            realization.append([flatv[r * m:(r + 1) * m] for r in range(m)])
    return LieAlgebra.from_structure(labels, block.constants,
                                     realization=realization, name=block.name)


def _fr(x: Fraction) -> str:
    return str(x)


def serialize_pair(pair: Pair) -> str:
    """Canonical text for a pair; parse_pair_text inverts it exactly."""
    g = pair.g
    out = []
    out.append(f"pair {pair.name}")
    out.append(f"provenance {pair.provenance}")
    for note in pair.notes:
        out.append(f"note {note}")
    if not pair.torus_h_asserted_maximal:
        out.append("torus-h-maximality unasserted")
    out.append("")
    out.append("begin algebra g")
    out.append(f"name {g.name}")
    out.append(f"dim {g.dim}")
    out.append(f"labels {' '.join(g.basis_labels)}")
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            entries = [(k, c) for k, c in g.sparse[i][j]]
            if entries:
                body = " ".join(f"{k + 1}:{_fr(c)}" for k, c in entries)
                out.append(f"c {i + 1} {j + 1} = {body}")
    if g.matrix_realization is not None:
        m = len(g.matrix_realization[0])
        out.append(f"matsize {m}")
        for k, M in enumerate(g.matrix_realization):
            flatv = " ".join(_fr(x) for row in M for x in row)
            out.append(f"matrix {k + 1} = {flatv}")
    if pair.complex_structure is not None:
        for i, row in enumerate(pair.complex_structure):
            out.append(f"complex {i + 1} = {' '.join(_fr(x) for x in row)}")
    for row in _compact_cartan_rows_of(pair):
        out.append(f"cartan-compact = {' '.join(_fr(x) for x in row)}")
    out.append("end")
    out.append("")
    out.append("begin subalgebra h")
    for row in pair.h.rows:
        out.append(f"row = {' '.join(_fr(x) for x in row)}")
    out.append("end")
    out.append("")
    out.append("begin torus h")
    for row in pair.torus_h.rows:
        out.append(f"row = {' '.join(_fr(x) for x in row)}")
    out.append("end")
    out.append("")
    out.append("begin torus g")
    for row in pair.torus_g.rows:
        out.append(f"row = {' '.join(_fr(x) for x in row)}")
    out.append("end")
    out.append("")
    if pair.complexification is not None:
        out.append("complexify auto")
    for e in pair.expectations:
        line = f"expect {e.question} {e.outcome}"
        if e.margin is not None:
            line += f" margin={_fr(e.margin)}"
        if e.dimension is not None:
            line += f" dim={e.dimension}"
        if e.source:
            line += f" source={e.source}"
        out.append(line)
    return "\n".join(out).rstrip() + "\n"


def _compact_cartan_rows_of(pair: Pair):
    """Recover the compact Cartan rows from an attached complexification:
    its torus rows with vanishing left half are i·t for compact t."""
    comp = pair.complexification
    if comp is None:
        return []
    d = pair.g.dim
    rows = []
    for r in comp.torus_g.rows:
        if all(x == 0 for x in r[:d]):
            rows.append(tuple(r[d:]))
    return rows
