"""Text form of Chen-Ruan classes.

Grammar::

    expr     := term (('+' | '-') term)*
    term     := rational ('*' atom)? | atom
    atom     := 'k' ('^' nat)? | '[' label (';' monomial)? ']'
    label    := 'O' | bitstring of length 2g
    monomial := '1' | gen ('.' gen)*
    gen      := ('e' | 'f') index
    rational := int ('/' nat)?

Whitespace between tokens is ignored. A bare rational is a multiple of the unit.
"""
from __future__ import annotations

from fractions import Fraction

from .exact_arith import format_rational
from .exterior import ExteriorClass, monomial_str, popcount, wedge_sign
from .gamma import TwoTorsionLabel
from .ring import CRClass, UnsupportedClass

__all__ = ["ParseError", "parse_class", "format_class", "random_expression"]


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.message = message
        self.position = position
        self.text = text
        super().__init__(f"at position {position}: {message}")

    def caret(self) -> str:
        return f"{self.text}\n{' ' * self.position}^ {self.message}"


class _Parser:
    def __init__(self, text: str, g: int):
        self.text = text
        self.g = g
        self.pos = 0

    def error(self, msg, pos=None):
        raise ParseError(msg, self.pos if pos is None else pos, self.text)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}, found {self.peek() or 'end of input'!r}")
        self.pos += 1

    def digits(self) -> str:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected a number")
        return self.text[start : self.pos]

    def expr(self) -> CRClass:
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        total = self.term().scale(sign)
        while True:
            ch = self.peek()
            if ch == "":
                return total
            if ch not in "+-":
                self.error(f"unexpected {ch!r}")
            self.pos += 1
            t = self.term()
            total = total + t if ch == "+" else total - t

    def term(self) -> CRClass:
        ch = self.peek()
        if ch.isdigit():
            num = int(self.digits())
            den = 1
            if self.peek() == "/":
                self.pos += 1
                at = self.pos
                den = int(self.digits())
                if den == 0:
                    self.error("zero denominator", at)
            coeff = Fraction(num, den)
            if self.peek() == "*":
                self.pos += 1
                return self.atom().scale(coeff)
            return CRClass.unit(self.g).scale(coeff)
        if ch in ("k", "["):
            return self.atom()
        self.error(f"expected a term, found {ch or 'end of input'!r}")

    def atom(self) -> CRClass:
        ch = self.peek()
        if ch == "k":
            self.pos += 1
            m = 1
            if self.peek() == "^":
                self.pos += 1
                m = int(self.digits())
            return CRClass.kappa_power(self.g, m)
        if ch == "[":
            self.pos += 1
            return self.sector()
        self.error(f"expected 'k' or '[', found {ch or 'end of input'!r}")

    def sector(self) -> CRClass:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in ";] \t":
            self.pos += 1
        raw = self.text[start : self.pos]
        if raw != "O":
            if not raw or set(raw) - {"0", "1"}:
                self.error(f"bad label {raw!r}", start)
            if len(raw) != 2 * self.g:
                self.error(f"label {raw!r} has length {len(raw)}, expected {2 * self.g}", start)
        label = TwoTorsionLabel.parse(raw, self.g)
        sign, mask = 1, 0
        if self.peek() == ";":
            self.pos += 1
            sign, mask = self.monomial()
        self.eat("]")
        if label.is_zero():
            if mask:
                self.error("untwisted classes are restricted to powers of kappa", start)
            return CRClass.unit(self.g).scale(sign)
        return CRClass.sector_class(label, ExteriorClass(self.g, {mask: sign}))

    def monomial(self) -> tuple[int, int]:
        self.skip()
        if self.peek() == "1":
            self.pos += 1
            return 1, 0
        start = self.pos
        sign, mask, count = 1, 0, 0
        while True:
            self.skip()
            at = self.pos
            kind = self.peek()
            if kind not in ("e", "f"):
                self.error(f"expected generator, found {kind or 'end of input'!r}")
            self.pos += 1
            idx = int(self.digits())
            if not 1 <= idx <= self.g - 1:
                self.error(f"generator index {idx} out of range 1..{self.g - 1}", at)
            bit = 1 << (2 * (idx - 1) + (kind == "f"))
            s = wedge_sign(mask, bit)
            sign = sign * s if s else 0
            mask |= bit
            count += 1
            if self.peek() != ".":
                break
            self.pos += 1
        if count % 2:
            self.error("odd-degree sector monomial", start)
        # a repeated generator zeroes the term
        return sign, (mask if sign else 0)


def parse_class(text: str, g: int) -> CRClass:
    """Parse an expression such as ``"k^2 + 3*[0101; e1.f1]"`` at genus ``g``."""
    p = _Parser(text, g)
    if p.peek() == "":
        p.error("empty expression")
    try:
        return p.expr()
    except UnsupportedClass as exc:
        raise ParseError(str(exc), p.pos, text) from None


def _terms(x: CRClass):
    for m, c in enumerate(x.kappa):
        if c:
            yield c, ("1" if m == 0 else "k" if m == 1 else f"k^{m}")
    for label, ext in x.twisted.items():
        for mask in sorted(ext.terms, key=lambda mk: (popcount(mk), mk)):
            mono = monomial_str(mask)
            atom = f"[{label}]" if mask == 0 else f"[{label};{mono}]"
            yield ext.terms[mask], atom


def format_class(x: CRClass) -> str:
    """Normalized text; ``parse_class(format_class(x), x.g) == x``."""
    parts = []
    for c, atom in _terms(x):
        mag = abs(c)
        if atom == "1":
            body = format_rational(mag)
        elif mag == 1:
            body = atom
        else:
            body = f"{format_rational(mag)}*{atom}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) if parts else "0"


def random_expression(rng, g: int, max_terms: int = 4) -> str:
    """Random well-formed expression text, unnormalized (generator order shuffled,
    spacing varied, occasional repeated generators)."""
    parts = []
    gens = [f"{kind}{i}" for i in range(1, g) for kind in "ef"]
    for n in range(rng.randint(1, max_terms)):
        op = "" if n == 0 else rng.choice([" + ", " - ", "+", "-"])
        num, den = rng.randint(0, 9), rng.randint(1, 5)
        coeff = str(num) if den == 1 else f"{num}/{den}"
        kind = rng.random()
        if kind < 0.3:
            atom = "k" if rng.random() < 0.3 else f"k^{rng.randint(0, 3 * g - 1)}"
        elif kind < 0.4:
            atom = None
        else:
            label = "O" if rng.random() < 0.05 else format(rng.randrange(1, 1 << (2 * g)), f"0{2 * g}b")
            size = 2 * rng.randint(0, g - 1)
            if label == "O":
                size = 0
            chosen = [rng.choice(gens) for _ in range(size)]
            if size == 0:
                atom = f"[{label}]" if rng.random() < 0.5 else f"[{label}; 1]"
            else:
                atom = f"[{label};{'.'.join(chosen)}]"
        if atom is None:
            parts.append(op + coeff)
        elif rng.random() < 0.4:
            parts.append(op + atom)
        else:
            parts.append(f"{op}{coeff}*{atom}")
    return "".join(parts)
