# -*- coding: utf-8 -*-
# pylint: disable=unnecessary-lambda
"""MiniOO Parser
===================

:mod:`mookit.lang.parser` contains the :mod:`pyparsing` grammar
of MiniOO and :func:`~mookit.lang.parser.parse_program`, which
turns source text into a :class:`~mookit.lang.ast.Program`.

The surface syntax is C-family::

    entry Main.main;

    class X {
        private Y y;
        static final Z z;
        static { z = new Z(Y.K); }
        X(Y y) { this.y = y; }
        protected int m(long j) { return y.n(j); }
        static int p(int i) { return z.q(i); }
    }

A missing ``entry`` line selects the first class declaring
``static void main()``.

"""
from typing import TYPE_CHECKING

import chardet
from pyparsing import Forward, Group, Keyword, Literal
from pyparsing import Optional as Opt
from pyparsing import (ParseBaseException, ParserElement, Regex, StringEnd, Suppress, ZeroOrMore,
                       col, cppStyleComment, delimitedList, infixNotation, lineno, opAssoc)

from mookit.lang import ast
from mookit.lang.reserved import KEYWORDS
from mookit.utilities.exceptions import DuplicateDeclaration, ParseError
from mookit.utilities.logging import logger

if TYPE_CHECKING:
    from typing import Any, Callable, Optional, Union

    from pyparsing import ParseResults

__all__ = ['parse_program', 'decode_source', 'GRAMMAR']

# Enable packrat for performance
ParserElement.enable_packrat()

###############################################################################
# Utilities
###############################################################################


def _pos(s: 'str', loc: 'int') -> 'tuple[int, int]':
    return lineno(loc, s), col(loc, s)


def _unescape(text: 'str') -> 'str':
    mapping = {'n': '\n', 't': '\t', 'r': '\r', '"': '"', '\\': '\\'}
    out = []  # type: list[str]
    chars = iter(text[1:-1])
    for char in chars:
        if char == '\\':
            nxt = next(chars)
            out.append(mapping.get(nxt, nxt))
        else:
            out.append(char)
    return ''.join(out)


def _action(builder: 'Callable[..., Any]') -> 'Callable[[str, int, ParseResults], Any]':
    """Wrap a node builder as a parse action receiving its position."""
    def action(s: 'str', loc: 'int', toks: 'ParseResults') -> 'Any':
        return builder(_pos(s, loc), *toks)
    return action


def _fold_binary(s: 'str', loc: 'int', toks: 'ParseResults') -> 'ast.Expr':
    items = toks[0]
    node = items[0]
    for index in range(1, len(items), 2):
        node = ast.Binary(items[index], node, items[index+1], pos=node.pos or _pos(s, loc))
    return node


def _fold_unary(s: 'str', loc: 'int', toks: 'ParseResults') -> 'ast.Expr':
    items = list(toks[0])
    node = items.pop()
    while items:
        node = ast.Unary(items.pop(), node, pos=_pos(s, loc))
    return node


def _fold_postfix(s: 'str', loc: 'int', toks: 'ParseResults') -> 'ast.Expr':
    node = toks[0]
    for suffix in toks[1:]:
        if len(suffix) == 1:
            node = ast.FieldGet(node, suffix[0], pos=node.pos)
        else:
            node = ast.Call(node, suffix[0], tuple(suffix[1]), pos=node.pos)
    return node


###############################################################################
# Grammar
###############################################################################

LPAR, RPAR, LBRACE, RBRACE, SEMI, COMMA, DOT, EQ = map(Suppress, '(){};,.=')

#: Identifier (keywords excluded).
IDENT = Regex(r'[A-Za-z_$][A-Za-z0-9_$]*').add_condition(lambda toks: toks[0] not in KEYWORDS)

#: Type name.
TYPE = (Keyword('int') | Keyword('long') | Keyword('bool') | Keyword('string') | Keyword('ref') | IDENT)
RETTYPE = Keyword('void') | TYPE

EXPR = Forward()
ARGS = Group(Opt(delimitedList(EXPR)), aslist=True)
CALLARGS = LPAR + ARGS + RPAR

INT_LIT = Regex(r'\d+L?').set_parse_action(
    lambda s, loc, t: ast.Literal(int(t[0].rstrip('L')), 'long' if t[0].endswith('L') else 'int', pos=_pos(s, loc)))
BOOL_LIT = (Keyword('true') | Keyword('false')).set_parse_action(
    lambda s, loc, t: ast.Literal(t[0] == 'true', 'bool', pos=_pos(s, loc)))
STR_LIT = Regex(r'"(?:[^"\\\n]|\\.)*"').set_parse_action(
    lambda s, loc, t: ast.Literal(_unescape(t[0]), 'string', pos=_pos(s, loc)))
NULL_LIT = Keyword('null').set_parse_action(lambda s, loc, t: ast.Literal(None, 'null', pos=_pos(s, loc)))
THIS = Keyword('this').set_parse_action(lambda s, loc, t: ast.This(pos=_pos(s, loc)))

NEW = (Suppress(Keyword('new')) + IDENT + CALLARGS).set_parse_action(
    _action(lambda pos, cls, args: ast.New(cls, tuple(args), pos=pos)))
INTRINSIC = (Suppress('@') + IDENT + CALLARGS).set_parse_action(
    _action(lambda pos, name, args: ast.Intrinsic(name, tuple(args), pos=pos)))
BARE_CALL = (IDENT + CALLARGS).set_parse_action(
    _action(lambda pos, name, args: ast.Call(None, name, tuple(args), pos=pos)))
VAR = IDENT.copy().add_parse_action(lambda s, loc, t: ast.Var(t[0], pos=_pos(s, loc)))

PRIMARY = (INT_LIT | BOOL_LIT | STR_LIT | NULL_LIT | THIS | NEW | INTRINSIC
           | BARE_CALL | VAR | (LPAR + EXPR + RPAR))
SUFFIX = Group(DOT + IDENT + Opt(CALLARGS))
POSTFIX = (PRIMARY + ZeroOrMore(SUFFIX)).set_parse_action(_fold_postfix)

EXPR <<= infixNotation(POSTFIX, [
    (Literal('-') | Literal('!'), 1, opAssoc.RIGHT, _fold_unary),
    (Literal('*') | Literal('/') | Literal('%'), 2, opAssoc.LEFT, _fold_binary),
    (Literal('+') | Literal('-'), 2, opAssoc.LEFT, _fold_binary),
    (Literal('<=') | Literal('>=') | Literal('<') | Literal('>'), 2, opAssoc.LEFT, _fold_binary),
    (Literal('==') | Literal('!='), 2, opAssoc.LEFT, _fold_binary),
    (Literal('&&'), 2, opAssoc.LEFT, _fold_binary),
    (Literal('||'), 2, opAssoc.LEFT, _fold_binary),
])

STMT = Forward()
BLOCK = (LBRACE + Group(ZeroOrMore(STMT), aslist=True) + RBRACE).set_parse_action(
    _action(lambda pos, stmts: ast.Block(tuple(stmts), pos=pos)))

LOCAL = (TYPE + IDENT + Opt(EQ + EXPR, default=None) + SEMI).set_parse_action(
    _action(lambda pos, type_, name, init: ast.LocalDecl(type_, name, init, pos=pos)))
ASSIGN = (EXPR + ~Literal('==') + EQ + EXPR + SEMI).set_parse_action(
    _action(lambda pos, target, value: ast.Assign(target, value, pos=pos)))
PRINT = (Suppress(Keyword('print')) + LPAR + EXPR + RPAR + SEMI).set_parse_action(
    _action(lambda pos, expr: ast.Print(expr, pos=pos)))
RETURN = (Suppress(Keyword('return')) + Opt(EXPR, default=None) + SEMI).set_parse_action(
    _action(lambda pos, value: ast.Return(value, pos=pos)))
IF = (Suppress(Keyword('if')) + LPAR + EXPR + RPAR + STMT
      + Opt(Suppress(Keyword('else')) + STMT, default=None)).set_parse_action(
    _action(lambda pos, cond, then, orelse: ast.If(cond, then, orelse, pos=pos)))
WHILE = (Suppress(Keyword('while')) + LPAR + EXPR + RPAR + STMT).set_parse_action(
    _action(lambda pos, cond, body: ast.While(cond, body, pos=pos)))
SUPER = (Suppress(Keyword('super')) + CALLARGS + SEMI).set_parse_action(
    _action(lambda pos, args: ast.SuperCall(tuple(args), pos=pos)))
EXPR_STMT = (EXPR + SEMI).set_parse_action(_action(lambda pos, expr: ast.ExprStmt(expr, pos=pos)))

STMT <<= BLOCK | PRINT | RETURN | IF | WHILE | SUPER | LOCAL | ASSIGN | EXPR_STMT

VISIBILITY = Keyword('public') | Keyword('protected') | Keyword('private')
MODIFIERS = Group(Opt(VISIBILITY, default='public')
                  + Opt(Keyword('static'), default='')
                  + Opt(Keyword('final'), default='')
                  + Opt(Keyword('native'), default=''), aslist=True)

PARAM = (TYPE + IDENT).set_parse_action(_action(lambda pos, type_, name: ast.Param(name, type_, pos=pos)))
PARAMS = LPAR + Group(Opt(delimitedList(PARAM)), aslist=True) + RPAR
BODY = BLOCK | Literal(';').set_parse_action(lambda s, loc, t: [None])

STATIC_INIT = (Suppress(Keyword('static')) + BLOCK).set_parse_action(
    lambda s, loc, t: ('static_init', t[0], _pos(s, loc)))
CTOR = (MODIFIERS + IDENT + PARAMS + BODY).set_parse_action(
    lambda s, loc, t: ('ctor', tuple(t), _pos(s, loc)))
METHOD = (MODIFIERS + RETTYPE + IDENT + PARAMS + BODY).set_parse_action(
    lambda s, loc, t: ('method', tuple(t), _pos(s, loc)))
FIELD = (MODIFIERS + TYPE + IDENT + SEMI).set_parse_action(
    lambda s, loc, t: ('field', tuple(t), _pos(s, loc)))
MEMBER = Group(STATIC_INIT | CTOR | METHOD | FIELD)

CLASS = (Opt(Keyword('builtin'), default='') + Suppress(Keyword('class')) - IDENT
         + Opt(Suppress(Keyword('extends')) + IDENT, default=None)
         + Group(Opt(Suppress(Keyword('implements')) + delimitedList(IDENT)), aslist=True)
         + LBRACE + Group(ZeroOrMore(MEMBER), aslist=True) + RBRACE)
SIGNATURE = (RETTYPE + IDENT + PARAMS + SEMI).set_parse_action(
    _action(lambda pos, ret, name, params: ast.MethodDecl(name, tuple(params), ret, pos=pos)))
INTERFACE = (Suppress(Keyword('interface')) - IDENT
             + Group(Opt(Suppress(Keyword('extends')) + delimitedList(IDENT)), aslist=True)
             + LBRACE + Group(ZeroOrMore(SIGNATURE), aslist=True) + RBRACE)

ENTRY = Group(Suppress(Keyword('entry')) + IDENT + DOT + IDENT + SEMI)

#: Complete program grammar.
GRAMMAR = (Opt(ENTRY, default=None)
           + Group(ZeroOrMore(CLASS | INTERFACE), aslist=True)
           + StringEnd())
GRAMMAR.ignore(cppStyleComment)


###############################################################################
# Assembly
###############################################################################


def _build_class(s: 'str', loc: 'int', toks: 'ParseResults') -> 'ast.ClassDecl':
    builtin, name, superclass, interfaces, members = toks
    pos = _pos(s, loc)

    fields = []  # type: list[ast.FieldDecl]
    static_fields = []  # type: list[ast.FieldDecl]
    methods = []  # type: list[ast.MethodDecl]
    static_methods = []  # type: list[ast.MethodDecl]
    ctors = []  # type: list[ast.CtorDecl]
    static_init = None

    seen = {False: {}, True: {}}  # type: dict[bool, dict[str, set[int]]]
    ctor_arity = set()  # type: set[int]

    def declare(static: 'bool', member: 'str', arity: 'int', where: 'tuple[int, int]') -> 'None':
        arities = seen[static].setdefault(member, set())
        # fields use arity -1; methods may overload by arity
        if arities and (arity == -1 or -1 in arities or arity in arities):
            raise DuplicateDeclaration(f'duplicate member {name}.{member}', pos=where)
        arities.add(arity)

    for (group,) in members:
        kind, data, where = group
        if kind == 'static_init':
            if static_init is not None:
                raise DuplicateDeclaration(f'duplicate static initialiser in {name}', pos=where)
            static_init = data
        elif kind == 'field':
            (visibility, static, final, native), type_, ident = data
            if native:
                raise ParseError(f'field {name}.{ident} cannot be native', pos=where)
            declare(bool(static), ident, -1, where)
            decl = ast.FieldDecl(ident, type_, visibility, bool(static), bool(final), pos=where)
            (static_fields if static else fields).append(decl)
        elif kind == 'ctor':
            (visibility, static, final, native), ident, params, body = data
            if ident != name:
                raise ParseError(f'constructor {ident!r} does not match class {name!r}', pos=where)
            if static or final or native:
                raise ParseError(f'invalid modifier on constructor of {name}', pos=where)
            if len(params) in ctor_arity:
                raise DuplicateDeclaration(f'duplicate constructor {name}/{len(params)}', pos=where)
            ctor_arity.add(len(params))
            ctors.append(ast.CtorDecl(tuple(params), visibility, body, pos=where))
        else:
            (visibility, static, final, native), ret, ident, params, body = data
            if final:
                raise ParseError(f'method {name}.{ident} cannot be final', pos=where)
            declare(bool(static), ident, len(params), where)
            decl = ast.MethodDecl(ident, tuple(params), ret, visibility, bool(static),
                                  bool(native), body, pos=where)
            (static_methods if static else methods).append(decl)

    return ast.ClassDecl(name, superclass, tuple(interfaces), bool(builtin),
                         tuple(fields), tuple(methods), tuple(ctors),
                         tuple(static_fields), tuple(static_methods), static_init, pos=pos)


def _build_interface(s: 'str', loc: 'int', toks: 'ParseResults') -> 'ast.InterfaceDecl':
    name, extends, methods = toks
    seen = set()  # type: set[tuple[str, int]]
    for method in methods:
        if (method.name, method.arity) in seen:
            raise DuplicateDeclaration(f'duplicate member {name}.{method.name}', pos=method.pos)
        seen.add((method.name, method.arity))
    return ast.InterfaceDecl(name, tuple(extends), tuple(methods), pos=_pos(s, loc))


CLASS.set_parse_action(_build_class)
INTERFACE.set_parse_action(_build_interface)


def decode_source(data: 'Union[str, bytes]') -> 'str':
    """Decode MiniOO source text.

    Args:
        data: Source as text, or as UTF-8 encoded bytes.

    Raises:
        ParseError: If the bytes are not valid UTF-8; the encoding
            detected by :mod:`chardet` is reported in the message.

    """
    if isinstance(data, str):
        return data
    try:
        return data.decode('utf-8')
    except UnicodeDecodeError as exc:
        guess = chardet.detect(data).get('encoding')
        raise ParseError(f'source is not UTF-8 (detected {guess or "unknown"} encoding)',
                         pos=(data[:exc.start].count(b'\n') + 1, 1)) from exc


def parse_program(source: 'Union[str, bytes]') -> 'ast.Program':
    """Parse MiniOO source text.

    Args:
        source: Program source.

    Returns:
        Syntax tree preserving declaration order.

    Raises:
        ParseError: On syntax errors, with line and column.
        DuplicateDeclaration: On duplicate classes, interfaces or members.

    """
    text = decode_source(source)
    try:
        result = GRAMMAR.parse_string(text, parse_all=True)
    except ParseBaseException as exc:
        raise ParseError(f'syntax error: {exc.msg}', pos=(exc.lineno, exc.col)) from None

    entry, decls = result[0], result[1]
    classes = []  # type: list[ast.ClassDecl]
    interfaces = []  # type: list[ast.InterfaceDecl]
    names = set()  # type: set[str]
    for decl in decls:
        if decl.name in names:
            raise DuplicateDeclaration(f'duplicate declaration of {decl.name}', pos=decl.pos)
        names.add(decl.name)
        (classes if isinstance(decl, ast.ClassDecl) else interfaces).append(decl)

    if entry is not None:
        entry_ = (entry[0], entry[1])  # type: Optional[tuple[str, str]]
    else:
        entry_ = _default_entry(classes)

    program = ast.Program(tuple(classes), tuple(interfaces), entry_, pos=(1, 1))
    logger.debug('parsed %d classes, %d interfaces', len(classes), len(interfaces))
    return program


def _default_entry(classes: 'list[ast.ClassDecl]') -> 'Optional[tuple[str, str]]':
    for decl in classes:
        main = decl.method('main', static=True, arity=0)
        if main is not None and main.ret == 'void':
            return decl.name, 'main'
    return None
