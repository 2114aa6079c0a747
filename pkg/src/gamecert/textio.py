"""Line-based text formats for every artifact the toolkit handles.

One fact per line, `#` starts a comment, the first significant line names
the artifact kind.  Serialization is canonical: facts appear in a fixed
order with sorted keys, so equal values produce byte-identical files.
Parsing accepts facts in any order and reports errors with line and
column.  Positions, states and memories are numbers; actions and alphabet
letters are referenced by name, so strategies, lassos and witnesses can
only be read back in the context of their game or automaton, which the
corresponding parse functions take as an argument.
"""

from __future__ import annotations

import re
from typing import Optional, Union

from .arena import (
    Arena,
    Automaton,
    Buechi,
    CoBuechi,
    Condition,
    Game,
    GeneralizedBuechi,
    Lasso,
    Muller,
    Parity,
    Rabin,
    Safety,
    Streett,
    Witness,
    make_lasso,
)
from .errors import ParseError
from .hardness import Hypergraph
from .strategy import (
    FiniteMemoryStrategy,
    PositionalStrategy,
    StandAloneStrategy,
    Strategy,
)

_NAME_RE = re.compile(r"^[A-Za-z0-9_.\-]+$")


def _check_name(name: str) -> str:
    if not _NAME_RE.match(name):
        raise ValueError(f"name {name!r} is not serializable")
    return name


# ---------------------------------------------------------------------------
# reading primitives


class _Reader:
    def __init__(self, text: str, kind: str):
        self.facts: list[tuple[int, str, str]] = []
        header = None
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if header is None:
                header = (lineno, line)
                continue
            if ":" not in line:
                raise ParseError("expected 'key: value'", lineno, 1)
            key, value = line.split(":", 1)
            self.facts.append((lineno, key.strip(), value.strip()))
        if header is None:
            raise ParseError(f"empty input, expected a {kind} header", 1, 1)
        self.header_line, self.header = header

    def expect_header(self, *alternatives: str) -> str:
        if self.header not in alternatives:
            raise ParseError(
                f"expected header {' or '.join(alternatives)!s}, got {self.header!r}",
                self.header_line,
                1,
            )
        return self.header

    def single(self, key: str) -> tuple[int, str]:
        hits = [(n, v) for n, k, v in self.facts if k == key]
        if not hits:
            raise ParseError(f"missing required section {key!r}", self.header_line, 1)
        if len(hits) > 1:
            raise ParseError(f"section {key!r} given twice", hits[1][0], 1)
        return hits[0]

    def optional(self, key: str) -> Optional[tuple[int, str]]:
        hits = [(n, v) for n, k, v in self.facts if k == key]
        if len(hits) > 1:
            raise ParseError(f"section {key!r} given twice", hits[1][0], 1)
        return hits[0] if hits else None

    def many(self, key: str) -> list[tuple[int, str]]:
        return [(n, v) for n, k, v in self.facts if k == key]

    def check_keys(self, allowed: set[str]) -> None:
        for n, k, _ in self.facts:
            if k not in allowed:
                raise ParseError(f"unknown section {k!r}", n, 1)


def _int(value: str, lineno: int, what: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise ParseError(f"{what} must be a number, got {value!r}", lineno, 1) from None


def _index_of(name: str, names: tuple[str, ...], lineno: int, what: str) -> int:
    try:
        return names.index(name)
    except ValueError:
        raise ParseError(f"unknown {what} {name!r}", lineno, 1) from None


def _in_range(i: int, count: int, lineno: int, what: str) -> int:
    if not 0 <= i < count:
        raise ParseError(f"{what} {i} out of range", lineno, 1)
    return i


# ---------------------------------------------------------------------------
# conditions


def _parse_id_set(text: str, lineno: int) -> frozenset[int]:
    return frozenset(_int(tok, lineno, "position") for tok in text.split())


def _parse_braced_sets(value: str, lineno: int) -> list[frozenset[int]]:
    out = []
    rest = value.strip()
    while rest:
        if not rest.startswith("{"):
            raise ParseError(f"expected '{{', got {rest!r}", lineno, 1)
        end = rest.find("}")
        if end < 0:
            raise ParseError("unterminated '{'", lineno, 1)
        out.append(_parse_id_set(rest[1:end], lineno))
        rest = rest[end + 1:].strip()
    return out


def _parse_pairs(value: str, lineno: int) -> list[tuple[frozenset[int], frozenset[int]]]:
    pairs = []
    for m in re.finditer(r"\(([^)]*)\)", value):
        inner = m.group(1)
        parts = re.findall(r"\{([^}]*)\}", inner)
        if len(parts) != 2:
            raise ParseError(f"a pair needs two brace groups: ({inner})", lineno, 1)
        pairs.append((_parse_id_set(parts[0], lineno), _parse_id_set(parts[1], lineno)))
    stripped = re.sub(r"\(([^)]*)\)", "", value).strip()
    if stripped:
        raise ParseError(f"stray text in pair list: {stripped!r}", lineno, 1)
    return pairs


def _parse_cond(value: str, lineno: int, v0_count: int) -> Condition:
    head, _, rest = value.partition(" ")
    rest = rest.strip()
    if head == "safety":
        if rest:
            raise ParseError("safety takes no arguments", lineno, 1)
        return Safety()
    if head == "buchi":
        return Buechi(_parse_id_set(rest, lineno))
    if head == "cobuchi":
        return CoBuechi(_parse_id_set(rest, lineno))
    if head == "genbuchi":
        return GeneralizedBuechi(_parse_braced_sets(rest, lineno))
    if head == "parity":
        colours: dict[int, int] = {}
        for tok in rest.split():
            pos_text, _, col_text = tok.partition(":")
            if not col_text:
                raise ParseError(f"expected position:colour, got {tok!r}", lineno, 1)
            pos = _int(pos_text, lineno, "position")
            colours[pos] = _int(col_text, lineno, "colour")
        missing = [v for v in range(v0_count) if v not in colours]
        if missing:
            raise ParseError(f"parity colour missing for position {missing[0]}", lineno, 1)
        extra = [v for v in colours if not 0 <= v < v0_count]
        if extra:
            raise ParseError(f"parity position {extra[0]} out of range", lineno, 1)
        return Parity(tuple(colours[v] for v in range(v0_count)))
    if head == "rabin":
        return Rabin(_parse_pairs(rest, lineno))
    if head == "streett":
        return Streett(_parse_pairs(rest, lineno))
    if head == "muller":
        return Muller(_parse_braced_sets(rest, lineno))
    raise ParseError(f"unknown condition {head!r}", lineno, 1)


def _fmt_set(s: frozenset[int]) -> str:
    return " ".join(str(v) for v in sorted(s))


def _fmt_cond(cond: Condition) -> str:
    if isinstance(cond, Safety):
        return "safety"
    if isinstance(cond, Buechi):
        return f"buchi {_fmt_set(cond.states)}".rstrip()
    if isinstance(cond, CoBuechi):
        return f"cobuchi {_fmt_set(cond.states)}".rstrip()
    if isinstance(cond, GeneralizedBuechi):
        return ("genbuchi " + " ".join("{" + _fmt_set(s) + "}" for s in cond.sets)).rstrip()
    if isinstance(cond, Parity):
        return "parity " + " ".join(f"{v}:{c}" for v, c in enumerate(cond.colour))
    if isinstance(cond, Rabin):
        body = " ".join(
            "({" + _fmt_set(f) + "},{" + _fmt_set(g) + "})" for f, g in cond.pairs
        )
        return f"rabin {body}".rstrip()
    if isinstance(cond, Streett):
        body = " ".join(
            "({" + _fmt_set(f) + "},{" + _fmt_set(g) + "})" for f, g in cond.pairs
        )
        return f"streett {body}".rstrip()
    if isinstance(cond, Muller):
        body = " ".join("{" + _fmt_set(s) + "}" for s in sorted(cond.family, key=sorted))
        return f"muller {body}".rstrip()
    raise TypeError(f"not a condition: {cond!r}")


# ---------------------------------------------------------------------------
# games


def parse_game(text: str) -> Game:
    r = _Reader(text, "game")
    r.expect_header("game")
    r.check_keys({"v0", "v1", "a0", "a1", "init", "e0", "e1", "cond"})
    n0_line, n0_text = r.single("v0")
    n1_line, n1_text = r.single("v1")
    v0_count = _int(n0_text, n0_line, "v0 count")
    v1_count = _int(n1_text, n1_line, "v1 count")
    a0_line, a0_text = r.single("a0")
    a1_line, a1_text = r.single("a1")
    actions0 = tuple(a0_text.split())
    actions1 = tuple(a1_text.split())
    if not actions0:
        raise ParseError("a0 needs at least one action", a0_line, 1)
    if not actions1:
        raise ParseError("a1 needs at least one action", a1_line, 1)
    init_line, init_text = r.single("init")
    init = _in_range(_int(init_text, init_line, "init"), v0_count, init_line, "init")
    e0: dict[tuple[int, int], int] = {}
    for lineno, value in r.many("e0"):
        parts = value.split()
        if len(parts) != 3:
            raise ParseError("e0 takes 'position action target'", lineno, 1)
        pos = _in_range(_int(parts[0], lineno, "position"), v0_count, lineno, "position")
        act = _index_of(parts[1], actions0, lineno, "player-0 action")
        tgt = _in_range(_int(parts[2], lineno, "target"), v1_count, lineno, "target")
        if (pos, act) in e0:
            raise ParseError(f"duplicate edge at position {pos}, action {parts[1]}", lineno, 1)
        e0[(pos, act)] = tgt
    e1: dict[tuple[int, int], int] = {}
    for lineno, value in r.many("e1"):
        parts = value.split()
        if len(parts) != 3:
            raise ParseError("e1 takes 'position action target'", lineno, 1)
        pos = _in_range(_int(parts[0], lineno, "position"), v1_count, lineno, "position")
        act = _index_of(parts[1], actions1, lineno, "player-1 action")
        tgt = _in_range(_int(parts[2], lineno, "target"), v0_count, lineno, "target")
        if (pos, act) in e1:
            raise ParseError(f"duplicate edge at position {pos}, action {parts[1]}", lineno, 1)
        e1[(pos, act)] = tgt
    cond_line, cond_text = r.single("cond")
    cond = _parse_cond(cond_text, cond_line, v0_count)
    arena = Arena(
        v0_count=v0_count,
        v1_count=v1_count,
        actions0=actions0,
        actions1=actions1,
        e0=e0,
        e1=e1,
        init=init,
    )
    return Game(arena, cond)


def serialize_game(game: Game) -> str:
    a = game.arena
    lines = ["game", f"v0: {a.v0_count}", f"v1: {a.v1_count}"]
    lines.append("a0: " + " ".join(_check_name(x) for x in a.actions0))
    lines.append("a1: " + " ".join(_check_name(x) for x in a.actions1))
    lines.append(f"init: {a.init}")
    for (pos, act), tgt in sorted(a.e0.items()):
        lines.append(f"e0: {pos} {a.actions0[act]} {tgt}")
    for (pos, act), tgt in sorted(a.e1.items()):
        lines.append(f"e1: {pos} {a.actions1[act]} {tgt}")
    lines.append("cond: " + _fmt_cond(game.condition))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# automata


def parse_automaton(text: str) -> tuple[Automaton, Condition]:
    r = _Reader(text, "automaton")
    r.expect_header("automaton")
    r.check_keys({"states", "alphabet", "init", "d", "cond"})
    n_line, n_text = r.single("states")
    count = _int(n_text, n_line, "state count")
    a_line, a_text = r.single("alphabet")
    alphabet = tuple(a_text.split())
    if not alphabet:
        raise ParseError("alphabet needs at least one letter", a_line, 1)
    init_line, init_text = r.single("init")
    init = _in_range(_int(init_text, init_line, "init"), count, init_line, "init")
    delta: dict[tuple[int, int], int] = {}
    for lineno, value in r.many("d"):
        parts = value.split()
        if len(parts) != 3:
            raise ParseError("d takes 'state letter state'", lineno, 1)
        q = _in_range(_int(parts[0], lineno, "state"), count, lineno, "state")
        a = _index_of(parts[1], alphabet, lineno, "letter")
        t = _in_range(_int(parts[2], lineno, "state"), count, lineno, "state")
        if (q, a) in delta:
            raise ParseError(f"duplicate transition at state {q}, letter {parts[1]}", lineno, 1)
        delta[(q, a)] = t
    cond_line, cond_text = r.single("cond")
    cond = _parse_cond(cond_text, cond_line, count)
    return Automaton(count, alphabet, delta, init), cond


def serialize_automaton(aut: Automaton, cond: Condition) -> str:
    lines = ["automaton", f"states: {aut.state_count}"]
    lines.append("alphabet: " + " ".join(_check_name(x) for x in aut.alphabet))
    lines.append(f"init: {aut.init}")
    for (q, a), t in sorted(aut.delta.items()):
        lines.append(f"d: {q} {aut.alphabet[a]} {t}")
    lines.append("cond: " + _fmt_cond(cond))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# hypergraphs


def parse_hypergraph(text: str) -> Hypergraph:
    r = _Reader(text, "hypergraph")
    r.expect_header("hypergraph")
    r.check_keys({"vertices", "k", "edge"})
    n_line, n_text = r.single("vertices")
    count = _int(n_text, n_line, "vertex count")
    k_line, k_text = r.single("k")
    k = _int(k_text, k_line, "k")
    edges = []
    for lineno, value in r.many("edge"):
        edges.append(frozenset(_int(tok, lineno, "vertex") for tok in value.split()))
    try:
        return Hypergraph(count, edges, k)
    except ValueError as exc:
        raise ParseError(str(exc), r.header_line, 1) from None


def serialize_hypergraph(h: Hypergraph) -> str:
    lines = ["hypergraph", f"vertices: {h.vertex_count}", f"k: {h.k}"]
    for e in h.edges:
        lines.append("edge: " + " ".join(str(v) for v in sorted(e)))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# strategies


def parse_strategy(text: str, game: Game) -> Strategy:
    r = _Reader(text, "strategy")
    kind = r.expect_header("strategy positional", "strategy memory", "strategy moore")
    a = game.arena
    if kind == "strategy positional":
        r.check_keys({"player", "choice"})
        p_line, p_text = r.single("player")
        player = _int(p_text, p_line, "player")
        if player not in (0, 1):
            raise ParseError("player must be 0 or 1", p_line, 1)
        own_count = a.v0_count if player == 0 else a.v1_count
        names = a.actions0 if player == 0 else a.actions1
        choice: dict[int, int] = {}
        for lineno, value in r.many("choice"):
            parts = value.split()
            if len(parts) != 2:
                raise ParseError("choice takes 'position action'", lineno, 1)
            pos = _in_range(_int(parts[0], lineno, "position"), own_count, lineno, "position")
            if pos in choice:
                raise ParseError(f"duplicate choice for position {pos}", lineno, 1)
            choice[pos] = _index_of(parts[1], names, lineno, "action")
        return PositionalStrategy(player, choice)
    if kind == "strategy memory":
        r.check_keys({"player", "memories", "init", "move", "update"})
        p_line, p_text = r.single("player")
        player = _int(p_text, p_line, "player")
        if player not in (0, 1):
            raise ParseError("player must be 0 or 1", p_line, 1)
        m_line, m_text = r.single("memories")
        memory_count = _int(m_text, m_line, "memory count")
        own_count = a.v0_count if player == 0 else a.v1_count
        names = a.actions0 if player == 0 else a.actions1
        move: dict[tuple[int, int], int] = {}
        update: dict[tuple[int, int], int] = {}
        for lineno, value in r.many("move"):
            parts = value.split()
            if len(parts) != 3:
                raise ParseError("move takes 'memory position action'", lineno, 1)
            m = _int(parts[0], lineno, "memory")
            pos = _in_range(_int(parts[1], lineno, "position"), own_count, lineno, "position")
            if (m, pos) in move:
                raise ParseError(f"duplicate move for memory {m}, position {pos}", lineno, 1)
            move[(m, pos)] = _index_of(parts[2], names, lineno, "action")
        for lineno, value in r.many("update"):
            parts = value.split()
            if len(parts) != 3:
                raise ParseError("update takes 'memory position memory'", lineno, 1)
            m = _int(parts[0], lineno, "memory")
            pos = _in_range(_int(parts[1], lineno, "position"), own_count, lineno, "position")
            if (m, pos) in update:
                raise ParseError(f"duplicate update for memory {m}, position {pos}", lineno, 1)
            update[(m, pos)] = _int(parts[2], lineno, "memory")
        init_facts = r.many("init")
        if not init_facts:
            raise ParseError("missing required section 'init'", r.header_line, 1)
        if player == 0:
            if len(init_facts) > 1:
                raise ParseError("player-0 strategies take a single init", init_facts[1][0], 1)
            lineno, value = init_facts[0]
            init_memory: Union[int, dict[int, int]] = _int(value, lineno, "init")
        else:
            init_map: dict[int, int] = {}
            for lineno, value in init_facts:
                parts = value.split()
                if len(parts) != 2:
                    raise ParseError("player-1 init takes 'position memory'", lineno, 1)
                pos = _in_range(_int(parts[0], lineno, "position"), own_count, lineno, "position")
                if pos in init_map:
                    raise ParseError(f"duplicate init for position {pos}", lineno, 1)
                init_map[pos] = _int(parts[1], lineno, "memory")
            init_memory = init_map
        return FiniteMemoryStrategy(player, memory_count, init_memory, move, update)
    r.check_keys({"states", "init", "label", "t"})
    n_line, n_text = r.single("states")
    count = _int(n_text, n_line, "state count")
    init_line, init_text = r.single("init")
    init = _in_range(_int(init_text, init_line, "init"), count, init_line, "init")
    labels: dict[int, int] = {}
    for lineno, value in r.many("label"):
        parts = value.split()
        if len(parts) != 2:
            raise ParseError("label takes 'state action'", lineno, 1)
        q = _in_range(_int(parts[0], lineno, "state"), count, lineno, "state")
        if q in labels:
            raise ParseError(f"duplicate label for state {q}", lineno, 1)
        labels[q] = _index_of(parts[1], a.actions0, lineno, "action")
    trans: dict[tuple[int, int], int] = {}
    for lineno, value in r.many("t"):
        parts = value.split()
        if len(parts) != 3:
            raise ParseError("t takes 'state action state'", lineno, 1)
        q = _in_range(_int(parts[0], lineno, "state"), count, lineno, "state")
        b = _index_of(parts[1], a.actions1, lineno, "action")
        if (q, b) in trans:
            raise ParseError(f"duplicate transition for state {q}, action {parts[1]}", lineno, 1)
        trans[(q, b)] = _in_range(_int(parts[2], lineno, "state"), count, lineno, "state")
    missing_label = [q for q in range(count) if q not in labels]
    if missing_label:
        raise ParseError(f"label missing for state {missing_label[0]}", r.header_line, 1)
    n1 = len(a.actions1)
    missing_t = [(q, b) for q in range(count) for b in range(n1) if (q, b) not in trans]
    if missing_t:
        q, b = missing_t[0]
        raise ParseError(
            f"transition missing for state {q}, action {a.actions1[b]}", r.header_line, 1
        )
    return StandAloneStrategy(
        count,
        init,
        tuple(labels[q] for q in range(count)),
        tuple(tuple(trans[(q, b)] for b in range(n1)) for q in range(count)),
    )


def serialize_strategy(game: Game, s: Strategy) -> str:
    a = game.arena
    if isinstance(s, PositionalStrategy):
        names = a.actions0 if s.player == 0 else a.actions1
        lines = ["strategy positional", f"player: {s.player}"]
        for pos, act in sorted(s.choice.items()):
            lines.append(f"choice: {pos} {names[act]}")
        return "\n".join(lines) + "\n"
    if isinstance(s, FiniteMemoryStrategy):
        names = a.actions0 if s.player == 0 else a.actions1
        lines = ["strategy memory", f"player: {s.player}", f"memories: {s.memory_count}"]
        if s.player == 0:
            lines.append(f"init: {s.init_memory}")
        else:
            for pos, m in sorted(s.init_memory.items()):
                lines.append(f"init: {pos} {m}")
        for (m, pos), act in sorted(s.move.items()):
            lines.append(f"move: {m} {pos} {names[act]}")
        for (m, pos), m2 in sorted(s.update.items()):
            lines.append(f"update: {m} {pos} {m2}")
        return "\n".join(lines) + "\n"
    if isinstance(s, StandAloneStrategy):
        lines = ["strategy moore", f"states: {s.moore_state_count}", f"init: {s.init}"]
        for q in range(s.moore_state_count):
            lines.append(f"label: {q} {a.actions0[s.label[q]]}")
        for q in range(s.moore_state_count):
            for b, t in enumerate(s.trans[q]):
                lines.append(f"t: {q} {a.actions1[b]} {t}")
        return "\n".join(lines) + "\n"
    raise TypeError(f"not a strategy: {s!r}")


# ---------------------------------------------------------------------------
# lassos and witnesses


def _parse_decisions(value: str, lineno: int, game: Game) -> list[tuple[int, int]]:
    tokens = value.split()
    if len(tokens) % 2 != 0:
        raise ParseError("decisions must alternate player-0 and player-1 actions", lineno, 1)
    a = game.arena
    pairs = []
    for i in range(0, len(tokens), 2):
        act0 = _index_of(tokens[i], a.actions0, lineno, "player-0 action")
        act1 = _index_of(tokens[i + 1], a.actions1, lineno, "player-1 action")
        pairs.append((act0, act1))
    return pairs


def parse_lasso(text: str, game: Game) -> Lasso:
    r = _Reader(text, "lasso")
    r.expect_header("lasso")
    r.check_keys({"stem", "cycle"})
    s_line, s_text = r.single("stem")
    c_line, c_text = r.single("cycle")
    stem = _parse_decisions(s_text, s_line, game)
    cycle = _parse_decisions(c_text, c_line, game)
    try:
        return make_lasso(game, stem, cycle)
    except ValueError as exc:
        raise ParseError(str(exc), c_line, 1) from None


def serialize_lasso(game: Game, lasso: Lasso) -> str:
    a = game.arena

    def fmt(pairs) -> str:
        return " ".join(
            f"{a.actions0[x]} {a.actions1[y]}" for x, y in pairs
        )

    lines = ["lasso", f"stem: {fmt(lasso.stem)}".rstrip(), f"cycle: {fmt(lasso.cycle)}"]
    return "\n".join(lines) + "\n"


def parse_witness(text: str, aut: Automaton) -> Witness:
    r = _Reader(text, "witness")
    header = r.header
    if not header.startswith("witness"):
        raise ParseError(f"expected a witness line, got {header!r}", r.header_line, 1)
    if r.facts:
        raise ParseError("a witness is a single line", r.facts[0][0], 1)
    m = re.match(r"^witness\s+u=(\S*)\s+v=(\S+)$", header)
    if m is None:
        raise ParseError("expected 'witness u=... v=...'", r.header_line, 1)

    def letters(csv: str) -> tuple[int, ...]:
        if not csv:
            return ()
        return tuple(
            _index_of(tok, aut.alphabet, r.header_line, "letter")
            for tok in csv.split(",")
        )

    try:
        return Witness(letters(m.group(1)), letters(m.group(2)))
    except ValueError as exc:
        raise ParseError(str(exc), r.header_line, 1) from None


def serialize_witness(aut: Automaton, w: Witness) -> str:
    u = ",".join(_check_name(aut.alphabet[x]) for x in w.u)
    v = ",".join(_check_name(aut.alphabet[x]) for x in w.v)
    return f"witness u={u} v={v}\n"
