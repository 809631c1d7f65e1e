"""Turtle parsing/serialization and the in-memory triple graph.

The parser is a hand-written lexer + recursive-descent parser covering the
Turtle constructs the engine relies on: @prefix/@base, prefixed names, the
`a` keyword, datatyped and language-tagged literals, numeric/boolean
shorthand, predicate and object lists, blank-node property lists, and RDF
collections (expanded into rdf:first/rdf:rest/rdf:nil chains).

Graphs have set semantics and a deterministic iteration order, so
serialization is a pure function: equal graphs serialize to identical bytes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Union
from urllib.parse import urljoin

from .errors import ParseError, UnknownPrefixError
from .vocab import (
    RDF_FIRST,
    RDF_NIL,
    RDF_REST,
    RDF_TYPE,
    XSD_BOOLEAN,
    XSD_DECIMAL,
    XSD_DOUBLE,
    XSD_INTEGER,
)

# ---------------------------------------------------------------------------
# Terms
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Iri:
    """An absolute IRI. Equality is byte equality of the string."""

    value: str

    def local_name(self) -> str:
        """Substring after the last '#', else after the last '/'."""
        if "#" in self.value:
            return self.value.rsplit("#", 1)[1]
        return self.value.rstrip("/").rsplit("/", 1)[-1]

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, order=True)
class BlankNode:
    label: str

    def __str__(self) -> str:
        return "_:" + self.label


@dataclass(frozen=True)
class Literal:
    """A literal value. `datatype` and `language` are mutually exclusive;
    both absent means a plain string literal."""

    lexical: str
    datatype: Optional[Iri] = None
    language: Optional[str] = None

    def __post_init__(self):
        if self.datatype is not None and self.language is not None:
            raise ValueError("literal cannot carry both datatype and language")

    def __str__(self) -> str:
        if self.language:
            return f'"{self.lexical}"@{self.language}'
        if self.datatype:
            return f'"{self.lexical}"^^<{self.datatype.value}>'
        return f'"{self.lexical}"'


Term = Union[Iri, BlankNode, Literal]
SubjectTerm = Union[Iri, BlankNode]


@dataclass(frozen=True)
class Triple:
    subject: SubjectTerm
    predicate: Iri
    object: Term

    def __post_init__(self):
        if isinstance(self.subject, Literal):
            raise ValueError("literal cannot be a triple subject")
        if not isinstance(self.predicate, Iri):
            raise ValueError("predicate must be an IRI")


_ESCAPES = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\r": "\\r", "\t": "\\t"}


def _escape_literal(text: str) -> str:
    return "".join(_ESCAPES.get(c, c) for c in text)


def term_key(term: Term) -> str:
    """Canonical rendering used for sorting triples deterministically."""
    if isinstance(term, Iri):
        return f"<{term.value}>"
    if isinstance(term, BlankNode):
        return f"_:{term.label}"
    suffix = ""
    if term.language:
        suffix = "@" + term.language
    elif term.datatype:
        suffix = f"^^<{term.datatype.value}>"
    return f'"{_escape_literal(term.lexical)}"{suffix}'


def triple_key(t: Triple) -> tuple[str, str, str]:
    return (term_key(t.subject), term_key(t.predicate), term_key(t.object))


# ---------------------------------------------------------------------------
# Graph
# ---------------------------------------------------------------------------


class Graph:
    """A set of triples plus declared prefixes.

    Treated as immutable once construction finishes; duplicate insertion is
    a no-op, and iteration is lexicographic over the rendered triples.
    """

    def __init__(
        self,
        triples: Iterable[Triple] = (),
        prefixes: Optional[dict[str, str]] = None,
        base: Optional[str] = None,
    ):
        self._triples: set[Triple] = set()
        self._by_subject: dict[SubjectTerm, set[Triple]] = {}
        self._by_predicate: dict[Iri, set[Triple]] = {}
        self.prefixes: dict[str, str] = dict(prefixes or {})
        self.base = base
        for t in triples:
            self.add(t)

    def add(self, triple: Triple) -> None:
        if triple in self._triples:
            return
        self._triples.add(triple)
        self._by_subject.setdefault(triple.subject, set()).add(triple)
        self._by_predicate.setdefault(triple.predicate, set()).add(triple)

    def discard(self, triple: Triple) -> None:
        if triple not in self._triples:
            return
        self._triples.discard(triple)
        self._by_subject[triple.subject].discard(triple)
        self._by_predicate[triple.predicate].discard(triple)

    def __len__(self) -> int:
        return len(self._triples)

    def __contains__(self, triple: Triple) -> bool:
        return triple in self._triples

    def __iter__(self) -> Iterator[Triple]:
        return iter(sorted(self._triples, key=triple_key))

    def __eq__(self, other: object) -> bool:
        # Set equality of triples; prefixes are presentation metadata.
        if not isinstance(other, Graph):
            return NotImplemented
        return self._triples == other._triples

    def triple_set(self) -> frozenset[Triple]:
        return frozenset(self._triples)

    def triples(
        self,
        subject: Optional[SubjectTerm] = None,
        predicate: Optional[Iri] = None,
        object: Optional[Term] = None,
    ) -> Iterator[Triple]:
        """Match triples against a (subject, predicate, object) pattern,
        where None is a wildcard. Deterministic order."""
        if subject is not None:
            pool = self._by_subject.get(subject, set())
        elif predicate is not None:
            pool = self._by_predicate.get(predicate, set())
        else:
            pool = self._triples
        for t in sorted(pool, key=triple_key):
            if predicate is not None and t.predicate != predicate:
                continue
            if object is not None and t.object != object:
                continue
            yield t

    def objects(self, subject: SubjectTerm, predicate: Iri) -> list[Term]:
        return [t.object for t in self.triples(subject, predicate)]

    def copy(self) -> "Graph":
        return Graph(self._triples, self.prefixes, self.base)


def graph_union(a: Graph, b: Graph) -> Graph:
    """Set union of two graphs; a's prefix bindings win on conflict."""
    merged = dict(b.prefixes)
    merged.update(a.prefixes)
    out = Graph(prefixes=merged, base=a.base or b.base)
    for t in a.triple_set():
        out.add(t)
    for t in b.triple_set():
        out.add(t)
    return out


# ---------------------------------------------------------------------------
# Lexer
# ---------------------------------------------------------------------------

# Token kinds
_IRIREF = "IRIREF"
_PNAME = "PNAME"
_BLANK = "BLANK"
_STRING = "STRING"
_LANGTAG = "LANGTAG"
_HATHAT = "HATHAT"
_NUMBER = "NUMBER"
_BOOLEAN = "BOOLEAN"
_KW_A = "A"
_AT_PREFIX = "AT_PREFIX"
_AT_BASE = "AT_BASE"
_DOT = "DOT"
_SEMI = "SEMI"
_COMMA = "COMMA"
_LBRACKET = "LBRACKET"
_RBRACKET = "RBRACKET"
_LPAREN = "LPAREN"
_RPAREN = "RPAREN"
_EOF = "EOF"


@dataclass
class _Token:
    kind: str
    value: str
    line: int
    column: int
    # NUMBER tokens remember their xsd datatype
    extra: Optional[str] = None


_PN_LOCAL_EXTRA = "_-.%"
_LOCAL_ESCAPABLE = set("_~.-!$&'()*+,;=/?#@%")


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.column = 1

    def error(self, message: str, line: int | None = None, column: int | None = None):
        raise ParseError(line or self.line, column or self.column, message)

    def _peek(self, offset: int = 0) -> str:
        # NUL sentinel at EOF: never satisfies any membership test, unlike ""
        j = self.pos + offset
        return self.text[j] if j < len(self.text) else "\x00"

    def _advance(self) -> str:
        c = self.text[self.pos]
        self.pos += 1
        if c == "\n":
            self.line += 1
            self.column = 1
        else:
            self.column += 1
        return c

    def tokens(self) -> list[_Token]:
        out: list[_Token] = []
        while True:
            tok = self._next_token()
            out.append(tok)
            if tok.kind == _EOF:
                return out

    def _next_token(self) -> _Token:
        while self.pos < len(self.text):
            c = self._peek()
            if c in " \t\r\n":
                self._advance()
            elif c == "#":
                while self.pos < len(self.text) and self._peek() != "\n":
                    self._advance()
            else:
                break
        line, col = self.line, self.column
        if self.pos >= len(self.text):
            return _Token(_EOF, "", line, col)

        c = self._peek()
        if c == "<":
            return self._lex_iriref(line, col)
        if c in "\"'":
            return self._lex_string(line, col)
        if c == "@":
            return self._lex_at(line, col)
        if c == "^":
            self._advance()
            if self._peek() != "^":
                self.error("expected '^^'", line, col)
            self._advance()
            return _Token(_HATHAT, "^^", line, col)
        if c == "_" and self._peek(1) == ":":
            return self._lex_blank(line, col)
        punct = {".": _DOT, ";": _SEMI, ",": _COMMA, "[": _LBRACKET,
                 "]": _RBRACKET, "(": _LPAREN, ")": _RPAREN}
        if c in punct:
            # A dot followed by a digit starts a decimal like ".5"
            if not (c == "." and self._peek(1).isdigit()):
                self._advance()
                return _Token(punct[c], c, line, col)
        if c.isdigit() or c in "+-." :
            return self._lex_number(line, col)
        if c.isalpha() or c == ":":
            return self._lex_name(line, col)
        self.error(f"unexpected character {c!r}", line, col)

    def _lex_iriref(self, line: int, col: int) -> _Token:
        self._advance()  # '<'
        chars: list[str] = []
        while True:
            if self.pos >= len(self.text):
                self.error("unterminated IRI", line, col)
            c = self._advance()
            if c == ">":
                return _Token(_IRIREF, "".join(chars), line, col)
            if c == "\\":
                chars.append(self._unicode_escape(line, col, iri=True))
            elif c in " \t\n\r<\"{}|^`":
                self.error(f"illegal character {c!r} in IRI", line, col)
            else:
                chars.append(c)

    def _unicode_escape(self, line: int, col: int, iri: bool = False) -> str:
        if self.pos >= len(self.text):
            self.error("dangling escape", line, col)
        kind = self._advance()
        if kind in ("u", "U"):
            width = 4 if kind == "u" else 8
            digits = ""
            for _ in range(width):
                if self.pos >= len(self.text) or self._peek() not in "0123456789abcdefABCDEF":
                    self.error("bad unicode escape", line, col)
                digits += self._advance()
            return chr(int(digits, 16))
        if iri:
            self.error(f"illegal IRI escape '\\{kind}'", line, col)
        simple = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f",
                  '"': '"', "'": "'", "\\": "\\"}
        if kind not in simple:
            self.error(f"unknown escape '\\{kind}'", line, col)
        return simple[kind]

    def _lex_string(self, line: int, col: int) -> _Token:
        quote = self._advance()
        long_form = False
        if self._peek() == quote and self._peek(1) == quote:
            self._advance()
            self._advance()
            long_form = True
        chars: list[str] = []
        while True:
            if self.pos >= len(self.text):
                self.error("unterminated string", line, col)
            c = self._advance()
            if c == "\\":
                chars.append(self._unicode_escape(line, col))
            elif c == quote:
                if not long_form:
                    break
                run = 1
                while self._peek() == quote:
                    self._advance()
                    run += 1
                if run >= 3:
                    # last three quotes terminate; the rest were content
                    chars.append(quote * (run - 3))
                    break
                chars.append(quote * run)
            elif c in "\n\r" and not long_form:
                self.error("newline in single-line string", line, col)
            else:
                chars.append(c)
        return _Token(_STRING, "".join(chars), line, col)

    def _lex_at(self, line: int, col: int) -> _Token:
        self._advance()  # '@'
        word = ""
        while self._peek().isalpha() or (word and self._peek() in "-0123456789"):
            word += self._advance()
        if word == "prefix":
            return _Token(_AT_PREFIX, word, line, col)
        if word == "base":
            return _Token(_AT_BASE, word, line, col)
        if re.fullmatch(r"[A-Za-z]+(-[A-Za-z0-9]+)*", word):
            return _Token(_LANGTAG, word, line, col)
        self.error(f"malformed directive or language tag '@{word}'", line, col)

    def _lex_blank(self, line: int, col: int) -> _Token:
        self._advance()  # '_'
        self._advance()  # ':'
        label = ""
        while True:
            c = self._peek()
            if c.isalnum() or c == "_" or (label and c in "-."):
                label += self._advance()
            else:
                break
        while label.endswith("."):
            label = label[:-1]
            self.pos -= 1
            self.column -= 1
        if not label:
            self.error("empty blank node label", line, col)
        return _Token(_BLANK, label, line, col)

    def _lex_number(self, line: int, col: int) -> _Token:
        text = ""
        if self._peek() in "+-":
            text += self._advance()
        while self._peek().isdigit():
            text += self._advance()
        if self._peek() == "." and self._peek(1).isdigit():
            text += self._advance()
            while self._peek().isdigit():
                text += self._advance()
        has_exp = False
        if self._peek() in "eE" and (self._peek(1).isdigit() or
                                     (self._peek(1) in "+-" and self._peek(2).isdigit())):
            has_exp = True
            text += self._advance()
            if self._peek() in "+-":
                text += self._advance()
            while self._peek().isdigit():
                text += self._advance()
        if not any(ch.isdigit() for ch in text):
            self.error("malformed numeric literal", line, col)
        if has_exp:
            datatype = XSD_DOUBLE
        elif "." in text:
            datatype = XSD_DECIMAL
        else:
            datatype = XSD_INTEGER
        return _Token(_NUMBER, text, line, col, extra=datatype)

    def _lex_name(self, line: int, col: int) -> _Token:
        # Prefixed name, 'a', or boolean keyword.
        prefix = ""
        while True:
            c = self._peek()
            if c.isalnum() or c == "_" or (prefix and c in "-."):
                prefix += self._advance()
            else:
                break
        while prefix.endswith("."):
            prefix = prefix[:-1]
            self.pos -= 1
            self.column -= 1
        if self._peek() != ":":
            if prefix == "a":
                return _Token(_KW_A, "a", line, col)
            if prefix in ("true", "false"):
                return _Token(_BOOLEAN, prefix, line, col)
            self.error(f"unexpected bare word {prefix!r}", line, col)
        self._advance()  # ':'
        local = ""
        while True:
            c = self._peek()
            if c.isalnum() or c in _PN_LOCAL_EXTRA:
                if c == "%":
                    h1, h2 = self._peek(1), self._peek(2)
                    if not (h1 in "0123456789abcdefABCDEF" and h2 in "0123456789abcdefABCDEF"):
                        self.error("malformed percent escape in local name", line, col)
                    local += self._advance() + self._advance() + self._advance()
                    continue
                local += self._advance()
            elif c == "\\" and self._peek(1) in _LOCAL_ESCAPABLE:
                self._advance()
                local += self._advance()
            else:
                break
        # A trailing '.' belongs to the statement, not the name.
        while local.endswith("."):
            local = local[:-1]
            self.pos -= 1
            self.column -= 1
        return _Token(_PNAME, f"{prefix}:{local}", line, col)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

_SCHEME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:")


class _Parser:
    def __init__(self, text: str):
        self.tokens = _Lexer(text).tokens()
        self.index = 0
        self.graph = Graph()
        self.base: Optional[str] = None
        self._used_labels = {t.value for t in self.tokens if t.kind == _BLANK}
        self._blank_counter = 0

    # token helpers

    def _peek(self) -> _Token:
        return self.tokens[self.index]

    def _next(self) -> _Token:
        tok = self.tokens[self.index]
        if tok.kind != _EOF:
            self.index += 1
        return tok

    def _expect(self, kind: str) -> _Token:
        tok = self._next()
        if tok.kind != kind:
            raise ParseError(tok.line, tok.column,
                             f"expected {kind}, found {tok.kind} {tok.value!r}")
        return tok

    def _fresh_blank(self) -> BlankNode:
        while True:
            label = f"b{self._blank_counter}"
            self._blank_counter += 1
            if label not in self._used_labels:
                self._used_labels.add(label)
                return BlankNode(label)

    # grammar

    def parse(self) -> Graph:
        while self._peek().kind != _EOF:
            tok = self._peek()
            if tok.kind == _AT_PREFIX:
                self._parse_prefix()
            elif tok.kind == _AT_BASE:
                self._parse_base()
            else:
                self._parse_triples()
        self.graph.base = self.base
        return self.graph

    def _parse_prefix(self) -> None:
        self._next()
        tok = self._expect(_PNAME)
        prefix, _, local = tok.value.partition(":")
        if local:
            raise ParseError(tok.line, tok.column, "prefix declaration must end with ':'")
        iri_tok = self._expect(_IRIREF)
        self.graph.prefixes[prefix] = self._resolve(iri_tok)
        self._expect(_DOT)

    def _parse_base(self) -> None:
        self._next()
        iri_tok = self._expect(_IRIREF)
        self.base = self._resolve(iri_tok)
        self._expect(_DOT)

    def _resolve(self, tok: _Token) -> str:
        ref = tok.value
        if _SCHEME_RE.match(ref):
            return ref
        if self.base is None:
            raise ParseError(tok.line, tok.column,
                             f"relative IRI <{ref}> without a @base declaration")
        return urljoin(self.base, ref)

    def _expand_pname(self, tok: _Token) -> Iri:
        prefix, _, local = tok.value.partition(":")
        if prefix not in self.graph.prefixes:
            raise UnknownPrefixError(tok.line, tok.column, prefix)
        return Iri(self.graph.prefixes[prefix] + local)

    def _parse_triples(self) -> None:
        tok = self._peek()
        if tok.kind == _LBRACKET:
            subject = self._parse_bnode_property_list()
            # A bare "[ ... ] ." statement is legal; predicates optional here.
            if self._peek().kind != _DOT:
                self._parse_predicate_object_list(subject)
            self._expect(_DOT)
            return
        subject = self._parse_subject()
        self._parse_predicate_object_list(subject)
        self._expect(_DOT)

    def _parse_subject(self) -> SubjectTerm:
        tok = self._next()
        if tok.kind == _IRIREF:
            return Iri(self._resolve(tok))
        if tok.kind == _PNAME:
            return self._expand_pname(tok)
        if tok.kind == _BLANK:
            return BlankNode(tok.value)
        if tok.kind == _LPAREN:
            return self._parse_collection()
        raise ParseError(tok.line, tok.column,
                         f"expected subject, found {tok.kind} {tok.value!r}")

    def _parse_predicate(self) -> Iri:
        tok = self._next()
        if tok.kind == _KW_A:
            return Iri(RDF_TYPE)
        if tok.kind == _IRIREF:
            return Iri(self._resolve(tok))
        if tok.kind == _PNAME:
            return self._expand_pname(tok)
        raise ParseError(tok.line, tok.column,
                         f"expected predicate, found {tok.kind} {tok.value!r}")

    def _parse_predicate_object_list(self, subject: SubjectTerm) -> None:
        while True:
            predicate = self._parse_predicate()
            while True:
                obj = self._parse_object()
                self.graph.add(Triple(subject, predicate, obj))
                if self._peek().kind == _COMMA:
                    self._next()
                    continue
                break
            if self._peek().kind == _SEMI:
                while self._peek().kind == _SEMI:
                    self._next()
                if self._peek().kind in (_DOT, _RBRACKET):
                    return  # trailing ';'
                continue
            return

    def _parse_object(self) -> Term:
        tok = self._next()
        if tok.kind == _IRIREF:
            return Iri(self._resolve(tok))
        if tok.kind == _PNAME:
            return self._expand_pname(tok)
        if tok.kind == _BLANK:
            return BlankNode(tok.value)
        if tok.kind == _LPAREN:
            return self._parse_collection()
        if tok.kind == _LBRACKET:
            self.index -= 1
            return self._parse_bnode_property_list()
        if tok.kind == _STRING:
            return self._parse_literal_rest(tok)
        if tok.kind == _NUMBER:
            return Literal(tok.value, datatype=Iri(tok.extra or XSD_INTEGER))
        if tok.kind == _BOOLEAN:
            return Literal(tok.value, datatype=Iri(XSD_BOOLEAN))
        raise ParseError(tok.line, tok.column,
                         f"expected object, found {tok.kind} {tok.value!r}")

    def _parse_literal_rest(self, string_tok: _Token) -> Literal:
        nxt = self._peek()
        if nxt.kind == _LANGTAG:
            self._next()
            return Literal(string_tok.value, language=nxt.value)
        if nxt.kind == _HATHAT:
            self._next()
            dt_tok = self._next()
            if dt_tok.kind == _IRIREF:
                return Literal(string_tok.value, datatype=Iri(self._resolve(dt_tok)))
            if dt_tok.kind == _PNAME:
                return Literal(string_tok.value, datatype=self._expand_pname(dt_tok))
            raise ParseError(dt_tok.line, dt_tok.column, "expected datatype IRI after '^^'")
        return Literal(string_tok.value)

    def _parse_collection(self) -> Term:
        # '(' already consumed by caller.
        items: list[Term] = []
        while self._peek().kind != _RPAREN:
            if self._peek().kind == _EOF:
                tok = self._peek()
                raise ParseError(tok.line, tok.column, "unterminated collection")
            items.append(self._parse_object())
        self._next()  # ')'
        if not items:
            return Iri(RDF_NIL)
        head = self._fresh_blank()
        node = head
        for i, item in enumerate(items):
            self.graph.add(Triple(node, Iri(RDF_FIRST), item))
            if i + 1 < len(items):
                nxt = self._fresh_blank()
                self.graph.add(Triple(node, Iri(RDF_REST), nxt))
                node = nxt
            else:
                self.graph.add(Triple(node, Iri(RDF_REST), Iri(RDF_NIL)))
        return head

    def _parse_bnode_property_list(self) -> BlankNode:
        self._expect(_LBRACKET)
        node = self._fresh_blank()
        if self._peek().kind != _RBRACKET:
            self._parse_predicate_object_list(node)
        self._expect(_RBRACKET)
        return node


def parse_turtle(document: str) -> Graph:
    """Parse a Turtle document into a Graph.

    Raises ParseError (with line/column) on malformed syntax and
    UnknownPrefixError when a prefixed name uses an undeclared prefix.
    """
    return _Parser(document).parse()


# ---------------------------------------------------------------------------
# Serializer
# ---------------------------------------------------------------------------

_SAFE_LOCAL_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_\-]*$")


class _Serializer:
    def __init__(self, graph: Graph):
        self.graph = graph
        # Longest namespace first so the most specific prefix wins;
        # ties broken by prefix name for determinism.
        self.bindings = sorted(
            graph.prefixes.items(), key=lambda kv: (-len(kv[1]), kv[0])
        )

    def _render_iri(self, iri: Iri) -> str:
        for prefix, ns in self.bindings:
            if iri.value.startswith(ns):
                local = iri.value[len(ns):]
                if local == "" or _SAFE_LOCAL_RE.match(local):
                    return f"{prefix}:{local}"
        return f"<{iri.value}>"

    def _render_term(self, term: Term) -> str:
        if isinstance(term, Iri):
            return self._render_iri(term)
        if isinstance(term, BlankNode):
            return f"_:{term.label}"
        body = f'"{_escape_literal(term.lexical)}"'
        if term.language:
            return body + "@" + term.language
        if term.datatype:
            return body + "^^" + self._render_iri(term.datatype)
        return body

    def serialize(self) -> str:
        lines = [
            f"@prefix {prefix}: <{ns}> ."
            for prefix, ns in sorted(self.graph.prefixes.items())
        ]
        if lines and len(self.graph):
            lines.append("")

        by_subject: dict[str, list[Triple]] = {}
        subject_order: dict[str, SubjectTerm] = {}
        for t in self.graph:
            key = term_key(t.subject)
            by_subject.setdefault(key, []).append(t)
            subject_order[key] = t.subject

        for skey in sorted(by_subject):
            subject = subject_order[skey]
            groups: dict[str, list[Triple]] = {}
            for t in by_subject[skey]:
                groups.setdefault(t.predicate.value, []).append(t)
            # rdf:type first, then remaining predicates alphabetically
            predicates = sorted(groups, key=lambda p: (p != RDF_TYPE, p))
            parts = []
            for p in predicates:
                rendered_p = "a" if p == RDF_TYPE else self._render_iri(Iri(p))
                objs = sorted(
                    (self._render_term(t.object) for t in groups[p])
                )
                parts.append(f"{rendered_p} {', '.join(objs)}")
            subject_str = self._render_term(subject)
            sep = " ;\n" + " " * (len(subject_str) + 1)
            lines.append(f"{subject_str} {sep.join(parts)} .")
        return "\n".join(lines) + ("\n" if lines else "")


def serialize_turtle(graph: Graph) -> str:
    """Emit deterministic Turtle; declared prefixes are reused."""
    return _Serializer(graph).serialize()
