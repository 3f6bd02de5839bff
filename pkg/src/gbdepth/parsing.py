"""Text formats: polynomials, ideal files, monomial lists, order strings,
lattice cover files. Parse errors carry 1-based line and column.

Polynomial grammar: terms joined by + or -, ^ for powers, * optional
between factors, integer or rational (a/b) coefficients, variables x1..xn.
Printing puts the leading term first under the active order, so a binomial
renders as LT - tail.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .orders import LexOrder, MonomialOrder, WeightOrder, validate_order
from .rings import (MAX_VARS, Ideal, Polynomial, PolyRing, QQ, format_mono,
                    mono_is_unit)

# ---------------------------------------------------------------------------
# polynomial parsing


def _lex_poly(text, line, col):
    toks = []
    i = 0
    ln, cl = line, col
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            ln += 1
            cl = 1
            i += 1
            continue
        if ch in " \t\r":
            cl += 1
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(("int", text[i:j], ln, cl, int(text[i:j])))
            cl += j - i
            i = j
            continue
        if ch == "x":
            if i + 1 >= len(text) or not text[i + 1].isdigit():
                raise ParseError("variables are written x<k> with a 1-based index k", ln, cl)
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(("var", text[i:j], ln, cl, int(text[i + 1:j]) - 1))
            cl += j - i
            i = j
            continue
        if ch in "+-*^/":
            toks.append((ch, ch, ln, cl, None))
            cl += 1
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", ln, cl)
    return toks


def _parse_term(toks, pos, ring):
    coeff = Fraction(1)
    expo = [0] * ring.n
    seen = False
    while pos < len(toks):
        kind, text, ln, cl, value = toks[pos]
        if kind == "*":
            if not seen:
                raise ParseError("'*' with nothing to its left", ln, cl)
            pos += 1
            if pos >= len(toks) or toks[pos][0] not in ("int", "var"):
                raise ParseError("expected a factor after '*'", ln, cl + 1)
            continue
        if kind == "int":
            pos += 1
            num = Fraction(value)
            if pos < len(toks) and toks[pos][0] == "/":
                slash = toks[pos]
                pos += 1
                if pos >= len(toks) or toks[pos][0] != "int":
                    raise ParseError("expected an integer denominator after '/'",
                                     slash[2], slash[3] + 1)
                if toks[pos][4] == 0:
                    raise ParseError("zero denominator", toks[pos][2], toks[pos][3])
                num = Fraction(value, toks[pos][4])
                pos += 1
            coeff *= num
            seen = True
            continue
        if kind == "var":
            pos += 1
            if not 0 <= value < ring.n:
                raise ParseError(
                    f"variable {text} outside ring with {ring.n} variables", ln, cl)
            e = 1
            if pos < len(toks) and toks[pos][0] == "^":
                caret = toks[pos]
                pos += 1
                if pos >= len(toks) or toks[pos][0] != "int":
                    where = toks[pos] if pos < len(toks) else caret
                    raise ParseError("expected a nonnegative integer exponent after '^'",
                                     where[2], where[3] + (0 if pos < len(toks) else 1))
                e = toks[pos][4]
                pos += 1
            expo[value] += e
            seen = True
            continue
        if kind in ("^", "/"):
            raise ParseError(f"unexpected {text!r}", ln, cl)
        break  # + or - ends the term
    if not seen:
        if pos < len(toks):
            raise ParseError(f"expected a term, found {toks[pos][1]!r}",
                             toks[pos][2], toks[pos][3])
        raise ParseError("expected a term", toks[-1][2], toks[-1][3] + 1)
    return coeff, tuple(expo), pos


def parse_polynomial(text: str, ring: PolyRing, line: int = 1, col: int = 1) -> Polynomial:
    """Parse one polynomial; line/col offset error positions into a larger file."""
    toks = _lex_poly(text, line, col)
    if not toks:
        raise ParseError("empty polynomial", line, col)
    pos = 0
    sign = 1
    if toks[0][0] in ("+", "-"):
        sign = -1 if toks[0][0] == "-" else 1
        pos = 1
    terms = []
    while True:
        coeff, mono, pos = _parse_term(toks, pos, ring)
        terms.append((mono, coeff * sign))
        if pos >= len(toks):
            break
        op = toks[pos]
        if op[0] not in ("+", "-"):
            raise ParseError(f"expected '+' or '-', found {op[1]!r}", op[2], op[3])
        sign = -1 if op[0] == "-" else 1
        pos += 1
        if pos >= len(toks):
            raise ParseError("dangling operator at end of polynomial", op[2], op[3])
    return ring.poly(terms)


# ---------------------------------------------------------------------------
# ideal files and monomial lists


def _strip_comment(raw: str) -> str:
    idx = raw.find("#")
    return raw if idx < 0 else raw[:idx]


def parse_ideal_text(text: str, field=QQ) -> Ideal:
    """Ideal file: a 'vars: <n>' header line, then one polynomial per line.
    '#' starts a comment; blank lines are skipped."""
    ring = None
    gens = []
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        part = _strip_comment(raw)
        if not part.strip():
            continue
        if ring is None:
            m = re.match(r"^\s*vars\s*:\s*(\d+)\s*$", part)
            if not m:
                col = len(part) - len(part.lstrip()) + 1
                raise ParseError("expected 'vars: <n>' header before any polynomial",
                                 lineno, col)
            n = int(m.group(1))
            if not 1 <= n <= MAX_VARS:
                raise ParseError(f"variable count must be in 1..{MAX_VARS}, got {n}",
                                 lineno, m.start(1) + 1)
            ring = PolyRing(n, field)
            continue
        gens.append(parse_polynomial(part, ring, line=lineno, col=1))
    if ring is None:
        raise ParseError("missing 'vars: <n>' header", max(lineno, 1), 1)
    return Ideal(ring, gens)


def parse_inline_ideal(text: str, n: int, field=QQ) -> Ideal:
    """Semicolon-separated polynomials with an explicit variable count."""
    ring = PolyRing(n, field)
    gens = []
    col = 1
    for chunk in text.split(";"):
        if chunk.strip():
            gens.append(parse_polynomial(chunk, ring, line=1, col=col))
        col += len(chunk) + 1
    return Ideal(ring, gens)


def parse_monomial_list(text: str, n: int) -> list:
    """Comma-separated monomials, e.g. 'x1^2,x1*x2'; coefficient must be 1."""
    ring = PolyRing(n)
    monos = []
    col = 1
    for chunk in text.split(","):
        if not chunk.strip():
            raise ParseError("empty monomial entry", 1, col)
        p = parse_polynomial(chunk, ring, line=1, col=col)
        if len(p.coeffs) != 1 or p.leading_coeff(LexOrder(tuple(range(n)))) != 1:
            raise ParseError("expected a monomial with coefficient 1", 1, col)
        monos.append(next(iter(p.coeffs)))
        col += len(chunk) + 1
    return monos


# ---------------------------------------------------------------------------
# order strings


_VAR_RE = re.compile(r"^x(\d+)$")


def parse_order(text: str, n: int = None) -> MonomialOrder:
    """Order grammar: 'lex', 'lex:x3>x1>x2', 'weight:1,2,2;tie=lex' (ties may
    nest). With n given, the order is validated against the ring arity and
    the order axioms (OrderError on violation)."""
    s = text.strip()
    if s == "lex":
        order = LexOrder()
    elif s.startswith("lex:"):
        chain = s[4:]
        perm = []
        col = text.find("lex:") + 5
        for part in chain.split(">"):
            name = part.strip()
            m = _VAR_RE.match(name)
            if not m:
                raise ParseError(f"expected a variable name, found {name!r}", 1, col)
            idx = int(m.group(1)) - 1
            if idx in perm:
                raise ParseError(f"variable {name} listed twice in lex priority", 1, col)
            perm.append(idx)
            col += len(part) + 1
        order = LexOrder(tuple(perm))
    elif s.startswith("weight:"):
        rest = s[7:]
        tie = LexOrder()
        if ";tie=" in rest:
            w_part, tie_part = rest.split(";tie=", 1)
            tie = parse_order(tie_part)
        else:
            w_part = rest
        weights = []
        col = text.find("weight:") + 8
        for part in w_part.split(","):
            tok = part.strip()
            if not tok.isdigit():
                raise ParseError(
                    f"expected a positive integer weight, found {tok!r}", 1, col)
            weights.append(int(tok))
            col += len(part) + 1
        order = WeightOrder(tuple(weights), tie)
    else:
        raise ParseError(
            f"unknown order {s!r}; expected 'lex', 'lex:...', or 'weight:...'", 1, 1)
    if n is not None:
        order = validate_order(order, n)
    return order


def format_order(order: MonomialOrder) -> str:
    """Inverse of parse_order up to normalization."""
    if isinstance(order, LexOrder):
        if order.perm is None or tuple(order.perm) == tuple(range(len(order.perm))):
            return "lex"
        return "lex:" + ">".join(f"x{i + 1}" for i in order.perm)
    if isinstance(order, WeightOrder):
        return ("weight:" + ",".join(str(w) for w in order.weights)
                + ";tie=" + format_order(order.tie))
    raise TypeError(f"cannot format order of type {type(order).__name__}")


# ---------------------------------------------------------------------------
# printing


def format_polynomial(p: Polynomial, order: MonomialOrder = None) -> str:
    """Terms largest-first under the order (canonical exponent order if
    order is None); reparses to an equal polynomial."""
    if p.is_zero:
        return "0"
    items = p.terms_desc(order) if order is not None else list(p.terms)
    one = p.ring.field.one
    parts = []
    for mono, c in items:
        neg = isinstance(c, Fraction) and c < 0
        mag = -c if neg else c
        if mono_is_unit(mono):
            body = str(mag)
        elif mag == one:
            body = format_mono(mono)
        else:
            body = f"{mag}*{format_mono(mono)}"
        parts.append((neg, body))
    out = ("-" if parts[0][0] else "") + parts[0][1]
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


def format_ideal(ideal: Ideal, order: MonomialOrder = None) -> str:
    """Render in the ideal-file format; parse_ideal_text round-trips it."""
    lines = [f"vars: {ideal.ring.n}"]
    lines.extend(format_polynomial(g, order) for g in ideal.generators)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# lattice cover files


_LABEL_RE = re.compile(r"^[A-Za-z0-9_.\-]+$")


def parse_lattice_text(text: str):
    """Lattice file: an 'elements: <labels>' header, then one cover relation
    'a < b' per line. Returns (labels, cover_pairs); building and checking
    the lattice happens elsewhere."""
    elements = None
    covers = []
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        part = _strip_comment(raw)
        if not part.strip():
            continue
        lead_col = len(part) - len(part.lstrip()) + 1
        header = re.match(r"^\s*elements\s*:\s*(.*)$", part)
        if elements is None:
            if not header:
                raise ParseError("expected 'elements: <labels>' header", lineno, lead_col)
            labels = header.group(1).split()
            if not labels:
                raise ParseError("empty element list", lineno, lead_col)
            seen = set()
            for lab in labels:
                if not _LABEL_RE.match(lab):
                    raise ParseError(f"bad element label {lab!r}", lineno, lead_col)
                if lab in seen:
                    raise ParseError(f"duplicate element {lab!r}", lineno, lead_col)
                seen.add(lab)
            elements = labels
            continue
        if header:
            raise ParseError("duplicate 'elements:' header", lineno, lead_col)
        m = re.match(r"^\s*([^<\s]+)\s*<\s*([^<\s]+)\s*$", part)
        if not m:
            raise ParseError("expected a cover relation 'a < b'", lineno, lead_col)
        lo, hi = m.group(1), m.group(2)
        for lab, start in ((lo, m.start(1)), (hi, m.start(2))):
            if lab not in elements:
                raise ParseError(f"unknown element {lab!r}", lineno, start + 1)
        covers.append((lo, hi))
    if elements is None:
        raise ParseError("missing 'elements: <labels>' header", max(lineno, 1), 1)
    return elements, covers
