"""Short partizan games in canonical form.

Games are interned: every canonical form is constructed exactly once and
identified by a dense integer id, so structural equality is identity and
the recursive order/arithmetic routines can memoize on id pairs.  All
simplification follows the classical rules: remove dominated options,
bypass reversible options, and collapse {x|y} with numbers x < y to the
simplest number strictly between them.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .dyadic import Dyadic, simplest_between


class CycleError(ValueError):
    """Raised when a raw game's option structure contains a cycle."""


class Outcome(enum.Enum):
    P = "P"  # previous player (second) wins
    N = "N"  # next player (first) wins
    L = "L"  # Left wins regardless
    R = "R"  # Right wins regardless

    def __str__(self) -> str:
        return self.value


class Game:
    """An interned canonical game.  Never construct directly; use the
    module constructors or :func:`canonicalize`."""

    __slots__ = ("id", "left", "right", "_value", "_nim", "_birthday", "_neg")

    def __init__(self, gid: int, left: tuple["Game", ...], right: tuple["Game", ...]):
        self.id = gid
        self.left = left
        self.right = right
        self._value: Optional[Dyadic] = None
        self._nim: Optional[int] = None
        self._birthday: Optional[int] = None
        self._neg: Optional[Game] = None

    def __repr__(self) -> str:
        from .notation import print_game

        return f"<Game {self.id}: {print_game(self)}>"

    def __lt__(self, other: "Game") -> bool:  # ordering for stable sorts only
        return self.id < other.id

    @property
    def value(self) -> Optional[Dyadic]:
        """The dyadic value if this game is a number, else None."""
        return self._value

    @property
    def nim_value(self) -> Optional[int]:
        """k if this game is the nimber *k, else None."""
        return self._nim

    def is_number(self) -> bool:
        return self._value is not None


@dataclass(frozen=True)
class RawGame:
    """A pre-canonical game: option lists may contain duplicates,
    dominated entries, and reversible entries."""

    left: tuple[Union["RawGame", Game], ...]
    right: tuple[Union["RawGame", Game], ...]


def raw(left: Iterable[Union[RawGame, Game]], right: Iterable[Union[RawGame, Game]]) -> RawGame:
    return RawGame(tuple(left), tuple(right))


# ----------------------------------------------------------------------
# Interning table

_lock = threading.Lock()
_table: dict[tuple[tuple[int, ...], tuple[int, ...]], Game] = {}
_games: list[Game] = []
_numbers: dict[Dyadic, Game] = {}
_nimbers: dict[int, Game] = {}
_leq_memo: dict[tuple[int, int], bool] = {}
_add_memo: dict[tuple[int, int], Game] = {}
_osum_memo: dict[tuple[int, int], Game] = {}


def _intern(left: Iterable[Game], right: Iterable[Game]) -> Game:
    ls = tuple(sorted({g.id: g for g in left}.values(), key=lambda g: g.id))
    rs = tuple(sorted({g.id: g for g in right}.values(), key=lambda g: g.id))
    key = (tuple(g.id for g in ls), tuple(g.id for g in rs))
    g = _table.get(key)
    if g is not None:
        return g
    with _lock:
        g = _table.get(key)
        if g is not None:
            return g
        g = Game(len(_games), ls, rs)
        _derive_value(g)
        _games.append(g)
        _table[key] = g
        return g


def _derive_value(g: Game) -> None:
    """Recognize numbers and nimbers at intern time (canonical shapes only)."""
    ls, rs = g.left, g.right
    if not ls and not rs:
        g._value = Dyadic(0)
        g._nim = 0
        return
    if not rs and len(ls) == 1 and ls[0]._value is not None and ls[0]._value.is_integer():
        g._value = ls[0]._value + 1
        return
    if not ls and len(rs) == 1 and rs[0]._value is not None and rs[0]._value.is_integer():
        g._value = rs[0]._value - 1
        return
    if (
        len(ls) == 1
        and len(rs) == 1
        and ls[0]._value is not None
        and rs[0]._value is not None
        and ls[0]._value < rs[0]._value
    ):
        g._value = simplest_between(ls[0]._value, rs[0]._value)
    if ls == rs and all(o._nim is not None for o in ls):
        vals = sorted(o._nim for o in ls)
        if vals == list(range(len(vals))):
            g._nim = len(vals)


def table_size() -> int:
    return len(_games)


def all_interned() -> list[Game]:
    """Snapshot of every canonical form interned so far (test hook)."""
    return list(_games)


# ----------------------------------------------------------------------
# Order

def leq(g: Game, h: Game) -> bool:
    """Whether g <= h in the game order."""
    if g is h:
        return True
    if g._value is not None and h._value is not None:
        return g._value <= h._value
    key = (g.id, h.id)
    cached = _leq_memo.get(key)
    if cached is not None:
        return cached
    result = all(not leq(h, gl) for gl in g.left) and all(
        not leq(hr, g) for hr in h.right
    )
    _leq_memo[key] = result
    return result


def lt(g: Game, h: Game) -> bool:
    return g is not h and leq(g, h)


def confused(g: Game, h: Game) -> bool:
    return not leq(g, h) and not leq(h, g)


def _leq_gv(g: Game, vl: tuple[Game, ...], vr: tuple[Game, ...]) -> bool:
    """g <= {vl|vr} where the right side is a transient option-list pair."""
    return all(not _leq_vg(vl, vr, gl) for gl in g.left) and all(
        not leq(r, g) for r in vr
    )


def _leq_vg(vl: tuple[Game, ...], vr: tuple[Game, ...], h: Game) -> bool:
    """{vl|vr} <= h."""
    return all(not leq(h, l) for l in vl) and all(
        not _leq_gv(hr, vl, vr) for hr in h.right
    )


def outcome(g: Game) -> Outcome:
    z = zero()
    le = leq(g, z)
    ge = leq(z, g)
    if le and ge:
        return Outcome.P
    if ge:
        return Outcome.L
    if le:
        return Outcome.R
    return Outcome.N


def birthday(g: Game) -> int:
    if g._birthday is None:
        opts = g.left + g.right
        g._birthday = 1 + max((birthday(o) for o in opts), default=-1)
    return g._birthday


# ----------------------------------------------------------------------
# Simplification

def _remove_dominated(opts: tuple[Game, ...], keep_max: bool) -> tuple[Game, ...]:
    kept = []
    for a in opts:
        dominated = False
        for b in opts:
            if a is b:
                continue
            if (leq(a, b) if keep_max else leq(b, a)):
                # ties are impossible: equal canonical forms share an id
                dominated = True
                break
        if not dominated:
            kept.append(a)
    return tuple(kept)


def _simplify(left: Iterable[Game], right: Iterable[Game]) -> Game:
    """Reduce option lists to the canonical form of {left|right}."""
    ls = tuple({g.id: g for g in left}.values())
    rs = tuple({g.id: g for g in right}.values())

    if all(o._value is not None for o in ls) and all(o._value is not None for o in rs):
        lo = max((o._value for o in ls), default=None)
        hi = min((o._value for o in rs), default=None)
        if lo is None and hi is None:
            return zero()
        if lo is None or hi is None or lo < hi:
            return number(simplest_between(lo, hi))

    while True:
        ls = _remove_dominated(ls, keep_max=True)
        rs = _remove_dominated(rs, keep_max=False)
        bypassed = False
        for a in ls:
            for ar in a.right:
                if _leq_gv(ar, ls, rs):
                    ls = tuple({g.id: g for g in ls if g is not a}.values()) + tuple(
                        x for x in ar.left if all(x is not y for y in ls)
                    )
                    bypassed = True
                    break
            if bypassed:
                break
        if bypassed:
            continue
        for b in rs:
            for bl in b.left:
                if _leq_vg(ls, rs, bl):
                    rs = tuple({g.id: g for g in rs if g is not b}.values()) + tuple(
                        x for x in bl.right if all(x is not y for y in rs)
                    )
                    bypassed = True
                    break
            if bypassed:
                break
        if not bypassed:
            break

    # bypassing can reduce a side to all-numbers; re-check the number rule
    if all(o._value is not None for o in ls) and all(o._value is not None for o in rs):
        lo = max((o._value for o in ls), default=None)
        hi = min((o._value for o in rs), default=None)
        if lo is None and hi is None:
            return zero()
        if lo is None or hi is None or lo < hi:
            return number(simplest_between(lo, hi))

    return _intern(ls, rs)


def canonicalize(g: Union[RawGame, Game]) -> Game:
    """The unique canonical form of a raw game."""
    memo: dict[int, Game] = {}

    def rec(node: Union[RawGame, Game], path: frozenset[int]) -> Game:
        if isinstance(node, Game):
            return node
        key = id(node)
        if key in path:
            raise CycleError("option structure contains a cycle; not a short game")
        done = memo.get(key)
        if done is not None:
            return done
        sub = path | {key}
        ls = tuple(rec(o, sub) for o in node.left)
        rs = tuple(rec(o, sub) for o in node.right)
        result = _simplify(ls, rs)
        memo[key] = result
        return result

    return rec(g, frozenset())


# ----------------------------------------------------------------------
# Arithmetic

def zero() -> Game:
    return number(Dyadic(0))


def number(value: Union[Dyadic, int]) -> Game:
    if isinstance(value, int):
        value = Dyadic(value)
    g = _numbers.get(value)
    if g is not None:
        return g
    if value.is_integer():
        n = value.num
        if n == 0:
            g = _intern((), ())
        elif n > 0:
            g = _intern((number(n - 1),), ())
        else:
            g = _intern((), (number(n + 1),))
    else:
        lo = Dyadic(value.num - 1, value.exp)
        hi = Dyadic(value.num + 1, value.exp)
        g = _intern((number(lo),), (number(hi),))
    _numbers[value] = g
    return g


def integer(n: int) -> Game:
    return number(Dyadic(n))


def dyadic_game(p: int, e: int) -> Game:
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    return number(Dyadic(p, e))


def nimber(n: int) -> Game:
    if n < 0:
        raise ValueError("nimber index must be nonnegative")
    g = _nimbers.get(n)
    if g is None:
        opts = tuple(nimber(k) for k in range(n))
        g = _intern(opts, opts)
        _nimbers[n] = g
    return g


def star() -> Game:
    return nimber(1)


def neg(g: Game) -> Game:
    if g._neg is None:
        n = _intern(tuple(neg(r) for r in g.right), tuple(neg(l) for l in g.left))
        g._neg = n
        n._neg = g
    return g._neg


def add(g: Game, h: Game) -> Game:
    if g._value is not None and h._value is not None:
        return number(g._value + h._value)
    if g._value is not None and g._value.num == 0:
        return h
    if h._value is not None and h._value.num == 0:
        return g
    a, b = (g, h) if g.id <= h.id else (h, g)
    key = (a.id, b.id)
    cached = _add_memo.get(key)
    if cached is not None:
        return cached
    if a._value is not None or b._value is not None:
        # number translation: x + {hL|hR} = {x+hL | x+hR} stays canonical
        num, other = (a, b) if a._value is not None else (b, a)
        result = _intern(
            tuple(add(num, l) for l in other.left),
            tuple(add(num, r) for r in other.right),
        )
    else:
        result = _simplify(
            tuple(add(l, b) for l in a.left) + tuple(add(a, l) for l in b.left),
            tuple(add(r, b) for r in a.right) + tuple(add(a, r) for r in b.right),
        )
    _add_memo[key] = result
    return result


def sub(g: Game, h: Game) -> Game:
    return add(g, neg(h))


def ordinal_sum(x: Game, y: Game) -> Game:
    """The game (x:y): move in y keeping x as base, or abandon to x."""
    key = (x.id, y.id)
    cached = _osum_memo.get(key)
    if cached is not None:
        return cached
    result = _simplify(
        tuple(ordinal_sum(x, yl) for yl in y.left) + x.left,
        tuple(ordinal_sum(x, yr) for yr in y.right) + x.right,
    )
    _osum_memo[key] = result
    return result


# ----------------------------------------------------------------------
# Named constructors

def up_power(n: int) -> Game:
    """The uptimal power: up_power(1) is ^ = {0|*}; higher powers follow
    the canonical form {0 | -up_bracket(n-1) + *}."""
    if n < 1:
        raise ValueError("up_power requires n >= 1")
    if n == 1:
        return _simplify((zero(),), (star(),))
    return _simplify((zero(),), (add(neg(up_bracket(n - 1)), star()),))


def up_bracket(n: int) -> Game:
    """Partial sum of uptimal powers: {up_bracket(n-1) | *}."""
    if n < 1:
        raise ValueError("up_bracket requires n >= 1")
    if n == 1:
        return up_power(1)
    return _simplify((up_bracket(n - 1),), (star(),))


def up_multiple(n: int, with_star: bool = False) -> Game:
    """n copies of ^ (plus * when with_star), built by repeated addition."""
    if n < 0:
        raise ValueError("up_multiple requires n >= 0")
    g = zero()
    up = up_power(1)
    for _ in range(n):
        g = add(g, up)
    if with_star:
        g = add(g, star())
    return g


def semistar() -> Game:
    """The game */2 = {*, ^ | v*, 0}; */2 + */2 = *."""
    up = up_power(1)
    downstar = add(neg(up), star())
    return _simplify((star(), up), (downstar, zero()))


def switch(a: Union[Dyadic, int], b: Union[Dyadic, int]) -> Game:
    a = a if isinstance(a, Dyadic) else Dyadic(a)
    b = b if isinstance(b, Dyadic) else Dyadic(b)
    if not a > b:
        raise ValueError("switch requires a > b")
    return _simplify((number(a),), (number(b),))
