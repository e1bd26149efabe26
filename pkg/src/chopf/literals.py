"""Text and JSON forms of elements.

The text grammar follows the paper-style bracket literals::

    2*F[12;01] + F[21;10]      G[3142;2412]       S[[1,0],[0,2]]
    Smr[(2;0),(1;1)]           P[((•,•),•);01]    Pb[1122;+-]

Words and color words are compact digit strings when every entry is a
single digit, comma-separated integers otherwise.  parse/render round-trip
on canonical forms.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import colorcore as cc
from . import fqsym, pbt, pqsym, symql
from .colorcore import ColorMonoid
from .linear import Basis, Element, Poly


class LiteralError(ValueError):
    def __init__(self, message, pos=None):
        self.pos = pos
        super().__init__(message if pos is None
                         else f"{message} (at position {pos})")


ALGEBRAS = {
    "fqsym-g": ("fqsym.G", "G"),
    "fqsym-f": ("fqsym.F", "F"),
    "sym": ("sym.S", "S"),
    "qsym": ("qsym.M", "M"),
    "mr": ("mr.S", "Smr"),
    "mr-dual": ("mr.M", "Mmr"),
    "pqsym-g": ("pqsym.G", "Gp"),
    "pqsym-f": ("pqsym.F", "Fp"),
    "pbt": ("pbt.P", "P"),
    "ncb": ("ncb.P", "Pb"),
}


def algebra_basis(algebra: str, monoid: ColorMonoid) -> Basis:
    if algebra not in ALGEBRAS:
        raise LiteralError(f"unknown algebra {algebra!r}; know {sorted(ALGEBRAS)}")
    name = ALGEBRAS[algebra][0]
    if name == "fqsym.G":
        return fqsym.g_basis(monoid)
    if name == "fqsym.F":
        return fqsym.f_basis(monoid)
    if name == "sym.S":
        return symql.s_basis(monoid)
    if name == "qsym.M":
        return symql.m_basis(monoid)
    if name == "mr.S":
        return symql.mr_s_basis(_need_mod(monoid))
    if name == "mr.M":
        return symql.mr_m_basis(_need_mod(monoid))
    if name == "pqsym.G":
        return pqsym.pg_basis(monoid)
    if name == "pqsym.F":
        return pqsym.pf_basis(monoid)
    if name == "pbt.P":
        return pbt.pbt_basis(monoid)
    if name == "ncb.P":
        return pqsym.ncb_basis(_need_mod(monoid))
    raise LiteralError(f"no basis for {algebra}")


def _need_mod(monoid):
    if monoid.kind != "mod":
        raise LiteralError(f"this algebra needs cyclic colors, got {monoid}")
    return monoid.l


# ---------------------------------------------------------------------------
# parsing

class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch):
        self.skip_ws()
        if not self.text.startswith(ch, self.pos):
            raise LiteralError(f"expected {ch!r}", self.pos)
        self.pos += len(ch)

    def take_until(self, closer):
        """Consume to the matching closer, honouring nested brackets."""
        self.skip_ws()
        depth = 0
        start = self.pos
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch in "[(":
                depth += 1
            elif ch in "])":
                if depth == 0 and ch == closer:
                    body = self.text[start:self.pos]
                    self.pos += 1
                    return body
                depth -= 1
            self.pos += 1
        raise LiteralError(f"missing {closer!r}", start)

    def take_name(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        if start == self.pos:
            raise LiteralError("expected a basis name", start)
        return self.text[start:self.pos]

    def take_number(self):
        """Unsigned integer or fraction; signs belong to the term grammar."""
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos < len(self.text) and self.text[self.pos] == "/":
            self.pos += 1
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
        body = self.text[start:self.pos]
        try:
            return Fraction(body)
        except (ValueError, ZeroDivisionError):
            raise LiteralError(f"bad number {body!r}", start) from None


def _parse_int_word(text, pos):
    text = text.strip()
    if not text:
        return ()
    if "," in text or text.lstrip("-").isdigit() and not text.isdigit():
        try:
            return tuple(int(x) for x in text.split(","))
        except ValueError:
            raise LiteralError(f"bad word {text!r}", pos) from None
    if text.isdigit():
        return tuple(int(ch) for ch in text)
    raise LiteralError(f"bad word {text!r}", pos)


def _parse_pair_payload(body, pos):
    if ";" not in body:
        raise LiteralError("expected 'word;colors'", pos)
    w, u = body.split(";", 1)
    return _parse_int_word(w, pos), _parse_int_word(u, pos)


def _parse_columns(body, pos):
    body = body.strip()
    if not body:
        return ()
    cols = []
    scanner = _Scanner(body)
    while scanner.peek():
        scanner.take("[")
        inner = scanner.take_until("]")
        cols.append(_parse_int_word(inner, pos))
        if scanner.peek() == ",":
            scanner.take(",")
    return tuple(cols)


def _parse_mr_pairs(body, pos):
    body = body.strip()
    if not body:
        return ()
    pairs = []
    scanner = _Scanner(body)
    while scanner.peek():
        scanner.take("(")
        inner = scanner.take_until(")")
        if ";" not in inner:
            raise LiteralError("expected '(part;color)'", pos)
        p, u = inner.split(";", 1)
        pairs.append((int(p), int(u)))
        if scanner.peek() == ",":
            scanner.take(",")
    return tuple(pairs)


def parse_tree(text, pos=0):
    text = text.strip()
    if text in ("•", "o"):
        return None
    if not (text.startswith("(") and text.endswith(")")):
        raise LiteralError(f"bad tree {text!r}", pos)
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 1:
            return (parse_tree(text[1:i], pos), parse_tree(text[i + 1:-1], pos))
    raise LiteralError(f"bad tree {text!r}", pos)


def _parse_factor_colors(text, pos):
    text = text.strip()
    if all(ch in "+-−" for ch in text) and text:
        return tuple(0 if ch == "+" else 1 for ch in text)
    return _parse_int_word(text, pos)


def _parse_key(algebra, body, monoid, pos):
    name = ALGEBRAS[algebra][0]
    if name in ("fqsym.G", "fqsym.F"):
        perm, colors = _parse_pair_payload(body, pos)
        if not cc.is_permutation(perm):
            raise LiteralError(f"{perm} is not a permutation", pos)
        if len(perm) != len(colors):
            raise LiteralError("color word length mismatch", pos)
        return (perm, monoid.reduce_word(colors))
    if name in ("pqsym.G", "pqsym.F"):
        word, colors = _parse_pair_payload(body, pos)
        if not cc.is_parking(word):
            raise LiteralError(f"{word} is not a parking function", pos)
        if len(word) != len(colors):
            raise LiteralError("color word length mismatch", pos)
        return (word, monoid.reduce_word(colors))
    if name in ("sym.S", "qsym.M"):
        cols = _parse_columns(body, pos)
        try:
            return symql.composition_key(cols, monoid)
        except ValueError as exc:
            raise LiteralError(str(exc), pos) from None
    if name in ("mr.S", "mr.M"):
        pairs = _parse_mr_pairs(body, pos)
        l = monoid.l
        if any(p < 1 for p, _ in pairs):
            raise LiteralError("parts must be positive", pos)
        return tuple((p, u % l) for p, u in pairs)
    if name == "pbt.P":
        if ";" not in body:
            raise LiteralError("expected 'tree;colors'", pos)
        t, u = body.rsplit(";", 1)
        tree = parse_tree(t, pos)
        colors = monoid.reduce_word(_parse_int_word(u, pos))
        if len(colors) != cc.tree_size(tree):
            raise LiteralError("one color per internal node", pos)
        return (tree, colors)
    if name == "ncb.P":
        if ";" not in body:
            raise LiteralError("expected 'word;factor colors'", pos)
        w, u = body.split(";", 1)
        word = _parse_int_word(w, pos)
        colors = _parse_factor_colors(u, pos)
        try:
            return pqsym.ncb_key(word, colors, monoid.l)
        except ValueError as exc:
            raise LiteralError(str(exc), pos) from None
    raise LiteralError(f"cannot parse keys of {algebra}", pos)


def parse_element(text: str, algebra: str, monoid: ColorMonoid) -> Element:
    """Parse a linear combination of bracket literals."""
    basis = algebra_basis(algebra, monoid)
    expected_name = ALGEBRAS[algebra][1]
    scanner = _Scanner(text)
    terms = {}
    first = True
    while True:
        ch = scanner.peek()
        if not ch:
            if first:
                raise LiteralError("empty element", scanner.pos)
            break
        sign = 1
        if ch == "+":
            if first:
                raise LiteralError("element cannot start with '+'", scanner.pos)
            scanner.take("+")
        elif ch == "-":
            scanner.take("-")
            sign = -1
        elif not first:
            raise LiteralError(f"expected '+' or '-', got {ch!r}", scanner.pos)
        first = False
        coeff = Fraction(1)
        ch = scanner.peek()
        if ch.isdigit():
            coeff = scanner.take_number()
            if scanner.peek() == "*":
                scanner.take("*")
            elif scanner.peek() and scanner.peek() not in "+-":
                raise LiteralError("expected '*' after a coefficient",
                                   scanner.pos)
            else:
                # bare number: only allowed for the empty key
                key = basis.unit_key
                terms[key] = terms.get(key, 0) + sign * coeff
                continue
        pos = scanner.pos
        name = scanner.take_name()
        if name != expected_name:
            raise LiteralError(
                f"unknown basis tag {name!r} (expected {expected_name!r})", pos)
        scanner.take("[")
        body = scanner.take_until("]")
        key = _parse_key(algebra, body, monoid, pos)
        terms[key] = terms.get(key, 0) + sign * coeff
    return basis.element(terms)


# ---------------------------------------------------------------------------
# rendering

def _word_text(word):
    if all(0 <= x <= 9 for x in word):
        return "".join(str(x) for x in word)
    return ",".join(str(x) for x in word)


def key_text(basis_name, key, literal_name):
    if basis_name in ("fqsym.G", "fqsym.F", "pqsym.G", "pqsym.F", "words"):
        return f"{literal_name}[{_word_text(key[0])};{_word_text(key[1])}]"
    if basis_name in ("sym.S", "qsym.M", "msym.h"):
        cols = ",".join("[" + ",".join(str(x) for x in col) + "]" for col in key)
        return f"{literal_name}[{cols}]"
    if basis_name in ("mr.S", "mr.M"):
        pairs = ",".join(f"({p};{u})" for p, u in key)
        return f"{literal_name}[{pairs}]"
    if basis_name == "pbt.P":
        return f"{literal_name}[{cc.tree_to_text(key[0])};{_word_text(key[1])}]"
    if basis_name == "ncb.P":
        return f"{literal_name}[{_word_text(key[0])};{_word_text(key[1])}]"
    raise LiteralError(f"cannot render keys of {basis_name}")


def sort_key(basis, key):
    if basis.name == "pbt.P":
        return (basis.size(key), cc.tree_to_text(key[0]), key[1])
    return (basis.size(key), key)


def _literal_name(basis_name):
    for alg, (name, lit) in ALGEBRAS.items():
        if name == basis_name:
            return lit
    return basis_name


def _coeff_text(c):
    if isinstance(c, Poly):
        return f"({c})"
    return str(c)


def render_text(x: Element) -> str:
    if not x.terms:
        return "0"
    basis = x.basis
    lit = _literal_name(basis.name)
    bits = []
    for key in sorted(x.terms, key=lambda k: sort_key(basis, k)):
        c = x.terms[key]
        body = key_text(basis.name, key, lit) if key != basis.unit_key else "1"
        if c == 1 and key != basis.unit_key:
            bits.append(body)
        elif c == -1 and key != basis.unit_key:
            bits.append("-" + body)
        elif key == basis.unit_key:
            bits.append(_coeff_text(c))
        else:
            bits.append(f"{_coeff_text(c)}*{body}")
    out = bits[0]
    for b in bits[1:]:
        out += " - " + b[1:] if b.startswith("-") else " + " + b
    return out


def render_tensor_text(t) -> str:
    if not t.terms:
        return "0"
    basis = t.basis
    lit = _literal_name(basis.name)
    bits = []
    for key in sorted(t.terms, key=lambda ks: tuple(sort_key(basis, k)
                                                    for k in ks)):
        c = t.terms[key]
        body = " ⊗ ".join(key_text(basis.name, k, lit)
                          if k != basis.unit_key else "1" for k in key)
        bits.append(body if c == 1 else f"{_coeff_text(c)}*({body})")
    return " + ".join(bits)


def _key_json(basis_name, key):
    if basis_name in ("fqsym.G", "fqsym.F", "pqsym.G", "pqsym.F", "words"):
        return {"word": list(key[0]), "colors": list(key[1])}
    if basis_name in ("sym.S", "qsym.M", "msym.h"):
        return {"columns": [list(col) for col in key]}
    if basis_name in ("mr.S", "mr.M"):
        return {"parts": [p for p, _ in key], "colors": [u for _, u in key]}
    if basis_name == "pbt.P":
        return {"tree": cc.tree_to_text(key[0]), "colors": list(key[1])}
    if basis_name == "ncb.P":
        return {"word": list(key[0]), "factor_colors": list(key[1])}
    raise LiteralError(f"cannot render keys of {basis_name}")


def render_json(x: Element) -> str:
    basis = x.basis
    monoid = basis.monoid
    colors = {"kind": monoid.kind}
    if monoid.l is not None:
        colors["l"] = monoid.l
    terms = [{"coeff": str(x.terms[k]),
              "key": _key_json(basis.name, k)}
             for k in sorted(x.terms, key=lambda k: sort_key(basis, k))]
    return json.dumps({"algebra": basis.name, "colors": colors,
                       "terms": terms}, ensure_ascii=False)
