"""Mini-DSL for groups, elements, cuts, anchors, and morphisms.

Recursive-descent parser over the grammar pinned in the CLI contract, plus
canonical printers; printing any value and reparsing yields an equal value.
"""

from fractions import Fraction

from .errors import ParseError
from . import scalars
from .scalars import Scalar, RankOneKind
from . import lexgroups
from .lexgroups import LexGroup, FactorwiseInjection
from . import cuts
from . import hahnomega
from .hahnomega import OmegaGroup


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, message):
        raise ParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, lit):
        self.skip_ws()
        return self.text.startswith(lit, self.pos)

    def eat(self, lit):
        if not self.peek(lit):
            return False
        self.pos += len(lit)
        return True

    def expect(self, lit):
        if not self.eat(lit):
            self.error("expected %r" % lit)

    def at_end(self):
        self.skip_ws()
        return self.pos == len(self.text)

    def expect_end(self):
        if not self.at_end():
            self.error("unexpected trailing input")

    def parse_uint(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def parse_int(self):
        neg = self.eat("-")
        v = self.parse_uint()
        return -v if neg else v

    def parse_rat(self):
        num = self.parse_int()
        if self.eat("/"):
            den = self.parse_uint()
            if den == 0:
                self.error("zero denominator")
            return Fraction(num, den)
        return Fraction(num)

    def parse_scalar(self):
        a = self.parse_rat()
        save = self.pos
        sign = 0
        if self.eat("+"):
            sign = 1
        elif self.eat("-"):
            sign = -1
        if sign == 0:
            return Scalar.make(a)
        self.skip_ws()
        mark = self.pos
        try:
            b = self.parse_rat()
        except ParseError:
            self.pos = save
            return Scalar.make(a)
        if not self.eat("*sqrt("):
            self.pos = save
            return Scalar.make(a)
        d = self.parse_uint()
        self.expect(")")
        return Scalar.make(a, sign * b, d)

    def parse_factor(self):
        for tag in ("Z", "Q"):
            if self.eat(tag + "[sqrt"):
                d = self.parse_uint()
                self.expect("]")
                return RankOneKind(tag, d)
            if self.eat(tag):
                return RankOneKind(tag, 0)
        self.error("expected a factor Z, Q, Z[sqrt D], or Q[sqrt D]")

    def parse_group(self):
        if self.eat("lex("):
            factors = []
            if not self.eat(")"):
                factors.append(self.parse_factor())
                while self.eat(","):
                    factors.append(self.parse_factor())
                self.expect(")")
            return LexGroup(tuple(factors))
        if self.eat("hahn_omega("):
            factor = self.parse_factor()
            self.expect(")")
            return OmegaGroup(factor)
        self.error("expected lex(...) or hahn_omega(...)")

    def parse_scalar_list(self, open_tok, close_tok):
        self.expect(open_tok)
        out = []
        if not self.eat(close_tok):
            out.append(self.parse_scalar())
            while self.eat(","):
                out.append(self.parse_scalar())
            self.expect(close_tok)
        return out

    def parse_element(self, group):
        coords = self.parse_scalar_list("[", "]")
        if len(coords) != group.rank:
            self.error("element needs %d coordinates" % group.rank)
        return lexgroups.element(group, coords)

    def parse_oelement(self, group):
        self.expect("{")
        pairs = []
        if not self.eat("}"):
            while True:
                i = self.parse_uint()
                self.expect(":")
                pairs.append((i, self.parse_scalar()))
                if not self.eat(","):
                    break
            self.expect("}")
        return hahnomega.omega_element(group, pairs)

    def parse_cut(self, group):
        if self.eat("all_below"):
            return cuts.AllBelow(group)
        if self.eat("all_above"):
            return cuts.AllAbove(group)
        for side in (cuts.BELOW, cuts.ABOVE):
            if self.eat(side + "("):
                coords = self.parse_scalar_list("[", "]")
                self.expect(";")
                self.expect("C")
                k = self.parse_uint()
                self.expect(")")
                if len(coords) != group.rank:
                    self.error("anchor needs %d coordinates" % group.rank)
                return cuts.principal(group, side, coords, k)
        if self.eat("gap("):
            prefix = self.parse_scalar_list("[", "]")
            self.expect(";")
            k = self.parse_uint()
            self.expect(";")
            delta = self.parse_scalar()
            self.expect(")")
            return cuts.gap_cut(group, prefix, k, delta)
        self.error("expected a cut expression")

    def parse_oanchor(self, group):
        if self.eat("point("):
            e = self.parse_oelement(group)
            self.expect(")")
            return hahnomega.OmegaPoint(group, e)
        if self.eat("gap_at("):
            prefix = self.parse_oelement(group)
            self.expect(";")
            i = self.parse_uint()
            self.expect(";")
            delta = self.parse_scalar()
            self.expect(")")
            return hahnomega.OmegaGapAt(group, prefix, i, delta)
        if self.eat("periodic("):
            pre = self.parse_scalar_list("[", "]")
            self.expect(";")
            per = self.parse_scalar_list("[", "]")
            self.expect(")")
            return hahnomega.OmegaPeriodic(group, tuple(pre), tuple(per))
        self.error("expected an anchor expression")

    def parse_morphism(self, group):
        if self.eat("widen"):
            return lexgroups.widening(group)
        if self.eat("scale("):
            rats = [self.parse_rat()]
            while self.eat(","):
                rats.append(self.parse_rat())
            self.expect(")")
            if len(rats) != group.rank:
                self.error("scale needs %d entries" % group.rank)
            cod = []
            for kind, s in zip(group.factors, rats):
                gens = [scalars.ONE]
                if kind.d:
                    gens.append(Scalar.make(0, 1, kind.d))
                if all(scalars.contains(kind, g * s) for g in gens):
                    cod.append(kind)
                else:
                    cod.append(scalars.divisible_hull_kind(kind))
            return FactorwiseInjection(group, LexGroup(tuple(cod)),
                                       tuple(rats))
        self.error("expected a morphism (widen or scale(...))")


def _parse_with(fn_name, text, *args):
    p = _Parser(text)
    value = getattr(p, fn_name)(*args)
    p.expect_end()
    return value


def parse_group(text):
    return _parse_with("parse_group", text)


def parse_scalar(text):
    return _parse_with("parse_scalar", text)


def parse_element(text, group):
    return _parse_with("parse_element", text, group)


def parse_oelement(text, group):
    return _parse_with("parse_oelement", text, group)


def parse_cut(text, group):
    return _parse_with("parse_cut", text, group)


def parse_oanchor(text, group):
    return _parse_with("parse_oanchor", text, group)


def parse_morphism(text, group):
    return _parse_with("parse_morphism", text, group)


# ---------------------------------------------------------------------------
# printers (canonical: lowest terms, radical omitted when b = 0)

def print_rat(q):
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def print_scalar(x):
    if x.b == 0:
        return print_rat(x.a)
    return "%s + %s*sqrt(%d)" % (print_rat(x.a), print_rat(x.b), x.d)


def print_factor(kind):
    if kind.d == 0:
        return kind.tag
    return "%s[sqrt %d]" % (kind.tag, kind.d)


def print_group(g):
    if isinstance(g, OmegaGroup):
        return "hahn_omega(%s)" % print_factor(g.factor)
    return "lex(%s)" % ",".join(print_factor(k) for k in g.factors)


def print_element(x):
    return "[%s]" % ",".join(print_scalar(c) for c in x.coords)


def print_oelement(x):
    return "{%s}" % ",".join("%d:%s" % (i, print_scalar(v))
                             for i, v in x.support)


def print_cut(c):
    if isinstance(c, cuts.AllBelow):
        return "all_below"
    if isinstance(c, cuts.AllAbove):
        return "all_above"
    if isinstance(c, cuts.Principal):
        return "%s(%s; C %d)" % (c.side, print_element(c.anchor), c.level)
    pad = ",".join(print_scalar(s) for s in c.prefix)
    return "gap([%s]; %d; %s)" % (pad, c.level, print_scalar(c.delta))


def print_oanchor(a):
    if isinstance(a, hahnomega.OmegaPoint):
        return "point(%s)" % print_oelement(a.point)
    if isinstance(a, hahnomega.OmegaGapAt):
        return "gap_at(%s; %d; %s)" % (print_oelement(a.prefix), a.index,
                                       print_scalar(a.delta))
    return "periodic([%s]; [%s])" % (
        ",".join(print_scalar(v) for v in a.preperiod),
        ",".join(print_scalar(v) for v in a.period))


def print_morphism(m):
    if all(s == 1 for s in m.scales) and m.cod == lexgroups.widening(m.dom).cod:
        return "widen"
    return "scale(%s)" % ",".join(print_rat(s) for s in m.scales)
