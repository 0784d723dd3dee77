"""The catalogue of cubic planar Cayley graph families.

Rows are stored in ``data/catalog.json`` as relator templates over declared
generators.  Templates use ``{expr}`` for integer exponents computed from the
parameters (``+``, ``-``, ``*`` only) and ``{P}`` for word-valued parameters.
An exponent evaluating to zero deletes its atom.  A parameter set to infinity
deletes every relator that mentions it.
"""

from __future__ import annotations

import ast
import itertools
import json
import math
import re
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Any

from .graph import ColorLabel
from .patterns import PatternError, canonical, decompose_AZ, is_noncrossing, is_regular
from .presentation import Presentation, PresentationError
from .words import Letter, Word, cyclic_canonical, normalize, word_text

INF = math.inf


class DomainError(PresentationError):
    """Parameters outside the row's domain; the message names the constraint."""

    def __init__(self, entry: str, constraint: str, detail: str = ""):
        msg = f"{entry}: parameters violate {constraint}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.entry = entry
        self.constraint = constraint


class UnknownEntryError(KeyError):
    pass


# -- templates ---------------------------------------------------------------


_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


def eval_expr(expr: str, params: Mapping[str, Any]) -> float:
    """Integer arithmetic over parameter names; infinity propagates."""

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.Name):
            if node.id not in params:
                raise KeyError(node.id)
            return params[node.id]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        if isinstance(node, ast.BinOp):
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
        raise ValueError(f"unsupported expression {expr!r}")

    return ev(ast.parse(expr, mode="eval"))


def template_names(template: str) -> set[str]:
    """Parameter names mentioned inside ``{...}`` of a template."""
    out: set[str] = set()
    for body in re.findall(r"\{([^}]*)\}", template):
        out |= set(_NAME.findall(body))
    return out


class _Expander:
    def __init__(self, text: str, params: Mapping[str, Any], symbols: Sequence[str], limit: float = INF):
        self.limit = limit
        self.text = text
        self.pos = 0
        self.params = params
        self.symbols = set(symbols)

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def braced(self) -> str:
        end = self.text.index("}", self.pos)
        body = self.text[self.pos + 1:end]
        self.pos = end + 1
        return body

    def seq(self) -> list:
        out: list = []
        while True:
            ch = self.peek()
            if ch in ("", ")"):
                return out
            if ch == "(":
                self.pos += 1
                atom = self.seq()
                if self.peek() != ")":
                    raise ValueError(f"unbalanced template {self.text!r}")
                self.pos += 1
            elif ch == "{":
                value = self.params[self.braced().strip()]
                atom = [(x, 1) for x in str(value)]
            else:
                start = self.pos
                self.pos += 1
                while self.pos < len(self.text) and self.text[self.pos] == "*":
                    self.pos += 1
                s = self.text[start:self.pos]
                if s not in self.symbols:
                    raise ValueError(f"symbol {s!r} not declared in template {self.text!r}")
                atom = [(s, 1)]
            k = 1
            if self.peek() == "^":
                self.pos += 1
                if self.peek() == "{":
                    k = eval_expr(self.braced(), self.params)
                else:
                    m = re.compile(r"-?\d+").match(self.text, self.pos)
                    k = int(m.group())
                    self.pos = m.end()
            if len(out) + len(atom) * max(k, 1) > self.limit:
                raise _TooLong()
            if k == -1:
                out.extend((s, -e) for s, e in reversed(atom))
            elif k < 0 or k != int(k):
                raise ValueError(f"bad exponent {k} in {self.text!r}")
            else:
                out.extend(atom * int(k))


class _TooLong(ValueError):
    pass


def expand(
    template: str,
    params: Mapping[str, Any],
    symbols: Sequence[str],
    involutions: Iterable[str] = (),
    limit: float = INF,
) -> Word:
    """Word of a template for concrete finite parameters.

    Raises ``ValueError`` when the word would exceed ``limit`` letters.
    """
    e = _Expander(template, params, symbols, limit)
    w = e.seq()
    if e.peek():
        raise ValueError(f"unbalanced template {template!r}")
    return normalize(w, frozenset(involutions))


# -- rows --------------------------------------------------------------------


@dataclass(frozen=True)
class Entry:
    """One catalogue record (a table row or a degenerate family)."""

    data: Mapping[str, Any] = field(repr=False)

    @property
    def name(self) -> str:
        return self.data["name"]

    @property
    def id(self) -> int | None:
        return self.data.get("id")

    @property
    def degenerate(self) -> bool:
        return self.id is None

    @property
    def generators(self) -> tuple[str, ...]:
        return tuple(self.data["generators"])

    @property
    def involutions(self) -> frozenset[str]:
        return frozenset(self.data["involutions"])

    @property
    def params(self) -> list[dict]:
        return list(self.data["params"])

    @property
    def param_names(self) -> tuple[str, ...]:
        return tuple(p["name"] for p in self.params)

    @property
    def kappa(self) -> int | None:
        return self.data.get("kappa")

    @property
    def ends(self) -> str | None:
        return self.data.get("ends")

    @property
    def spin(self) -> dict[str, str] | None:
        return self.data.get("spin")

    @property
    def faces(self) -> str | None:
        return self.data.get("faces")

    @property
    def recipe(self) -> dict:
        return self.data.get("recipe", {"tag": "enumeration"})

    def param_set(self, which: str) -> dict[str, Any]:
        """Stored parameters: ``minimal``, ``representative`` or ``branching``."""
        got = self.data.get(which) or self.data.get("representative") or self.data.get("minimal") or {}
        return dict(got)

    def summary(self) -> dict:
        return {
            "id": self.id,
            "name": self.name,
            "generators": list(self.generators),
            "involutions": sorted(self.involutions),
            "relators": list(self.data["relators"]),
            "dividing": list(self.data["dividing"]),
            "params": self.params,
            "constraints": list(self.data.get("constraints", [])),
            "kappa": self.kappa,
            "ends": self.ends,
            "spin": self.spin,
            "note": self.data.get("note"),
        }


@lru_cache(maxsize=1)
def _load() -> dict:
    text = resources.files("planar_cayley").joinpath("data/catalog.json").read_text(encoding="utf-8")
    return json.loads(text)


def rows() -> list[Entry]:
    return [Entry(r) for r in _load()["rows"]]


def degenerate_entries() -> list[Entry]:
    return [Entry(r) for r in _load()["degenerate"]]


def all_entries() -> list[Entry]:
    return rows() + degenerate_entries()


def coincidences() -> list[dict]:
    return list(_load().get("coincidences", []))


def get_entry(entry_id: str | int | Entry) -> Entry:
    if isinstance(entry_id, Entry):
        return entry_id
    for e in all_entries():
        if e.name == entry_id or (e.id is not None and str(e.id) == str(entry_id)):
            return e
    raise UnknownEntryError(f"no catalogue entry {entry_id!r}")


# -- parameters ---------------------------------------------------------------


def parse_params(text: str | None) -> dict[str, Any]:
    """Parse ``k=v,...``; values are integers, ``inf`` or pattern words."""
    out: dict[str, Any] = {}
    if not text:
        return out
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise ValueError(f"parameter {item!r} is not of the form name=value")
        k, v = (x.strip() for x in item.split("=", 1))
        if v.lower() in ("inf", "infinity", "oo", "∞"):
            out[k] = INF
        elif re.fullmatch(r"-?\d+", v):
            out[k] = int(v)
        else:
            out[k] = v
    return out


def _pattern_value(entry: Entry, spec: dict, value: Any) -> str:
    try:
        from .patterns import as_letters

        text = str(value)
        if any(ch in text for ch in "()^{}"):
            text = "".join(x for x, _ in expand(text, {}, ("b", "c", "d"), frozenset("bcd")))
        w = as_letters(text)
    except (PatternError, ValueError) as exc:
        raise DomainError(entry.name, f"{spec['name']} is a pattern over b, c, d", str(exc)) from None
    res = is_noncrossing(w)
    if not res:
        raise DomainError(entry.name, f"{spec['name']} non-crossing", f"condition ({res.condition}): {res.reason}")
    if spec.get("require") == "noncrossing-nonregular" and is_regular(w):
        raise DomainError(entry.name, f"{spec['name']} not regular")
    return w


def validate_params(entry: str | int | Entry, params: Mapping[str, Any]) -> dict[str, Any]:
    """Check parameters against the row domain; returns a normalised copy."""
    e = get_entry(entry)
    names = set(e.param_names)
    extra = set(params) - names
    if extra:
        raise DomainError(e.name, f"parameters {', '.join(e.param_names) or 'none'}", f"unknown {', '.join(sorted(extra))}")
    out: dict[str, Any] = {}
    for spec in e.params:
        name = spec["name"]
        if name not in params:
            raise DomainError(e.name, f"{name} is required")
        v = params[name]
        if spec.get("kind") == "pattern":
            out[name] = _pattern_value(e, spec, v)
            continue
        if v == INF:
            if not spec.get("infinite"):
                raise DomainError(e.name, f"{name} finite")
            out[name] = INF
            continue
        if not isinstance(v, int) or isinstance(v, bool):
            raise DomainError(e.name, f"{name} is an integer", repr(v))
        if v < spec["min"]:
            raise DomainError(e.name, f"{name} >= {spec['min']}", f"{name}={v}")
        out[name] = v
    for c in e.data.get("constraints", []):
        lhs, rhs = c.split(">=")
        if any(out[n] == INF for n in template_names("{" + lhs + "}")):
            continue
        if eval_expr(lhs, out) < eval_expr(rhs, out):
            raise DomainError(e.name, c)
    return out


def _instantiate(e: Entry, params: Mapping[str, Any], templates: Sequence[str]) -> tuple[Word, ...]:
    out = []
    for t in templates:
        if any(params.get(n) == INF for n in template_names(t)):
            continue
        w = expand(t, params, e.generators, e.involutions)
        if w:
            out.append(w)
    return tuple(out)


def instantiate_entry(entry_id: str | int | Entry, params: Mapping[str, Any] | None = None) -> Presentation:
    """Presentation of a catalogue entry for concrete parameters.

    Raises :class:`DomainError` naming the violated constraint.
    """
    e = get_entry(entry_id)
    p = validate_params(e, params or {})
    gens = tuple(ColorLabel(s, s in e.involutions) for s in e.generators)
    return Presentation(gens, _instantiate(e, p, e.data["relators"]), _instantiate(e, p, e.data["dividing"]))


def format_params(params: Mapping[str, Any]) -> str:
    def fmt(v):
        return "inf" if v == INF else str(v)

    return " ".join(f"{k}={fmt(v)}" for k, v in params.items())


# -- classification -------------------------------------------------------------


@dataclass(frozen=True)
class Classification:
    entry: str | None
    params: dict[str, Any] = field(default_factory=dict)
    renaming: dict[str, str] = field(default_factory=dict)
    annotations: tuple[str, ...] = ()

    @property
    def known(self) -> bool:
        return self.entry is not None

    def text(self) -> str:
        if self.entry is None:
            return "unknown" + "".join(f" [{a}]" for a in self.annotations)
        head = f"{self.entry} {format_params(self.params)}".rstrip()
        return head + "".join(f" [{a}]" for a in self.annotations)

    def to_json(self) -> dict:
        return {
            "entry": self.entry,
            "params": {k: ("inf" if v == INF else v) for k, v in self.params.items()},
            "renaming": dict(sorted(self.renaming.items())),
            "annotations": list(self.annotations),
        }


def _renamings(e: Entry, p: Presentation) -> Iterable[dict[str, Letter]]:
    """Maps from input symbols to entry letters preserving involution flags."""
    src = list(e.generators)
    if len(src) != len(p.symbols):
        return
    for perm in itertools.permutations(src):
        if any((s in e.involutions) != p.is_involution(t) for s, t in zip(perm, p.symbols)):
            continue
        flips = [(1,) if s in e.involutions else (1, -1) for s in perm]
        for signs in itertools.product(*flips):
            yield {t: (s, sign) for t, s, sign in zip(p.symbols, perm, signs)}


def _rename(word: Word, mapping: Mapping[str, Letter], inv: frozenset[str]) -> Word:
    out = []
    for s, e in word:
        t, sign = mapping[s]
        out.append((t, 1) if t in inv else (t, e * sign))
    return tuple(out)


def _candidates(spec: dict, bound: int) -> list[Any]:
    vals: list[Any] = list(range(spec["min"], bound + 1))
    if spec.get("infinite"):
        vals.append(INF)
    return vals


@lru_cache(maxsize=200_000)
def _canonical_template(name: str, template: str, items: tuple, limit: int) -> Word | None:
    e = get_entry(name)
    try:
        w = expand(template, dict(items), e.generators, e.involutions, limit)
    except (KeyError, ValueError):
        return None
    return cyclic_canonical(w, e.involutions) if w else ()


def _match_entry(e: Entry, p: Presentation) -> tuple[dict, dict] | None:
    inv = e.involutions
    bound = max((len(w) for w in p.all_relators), default=0)
    templates = list(e.data["relators"]) + list(e.data["dividing"])
    specs = {s["name"]: s for s in e.params}
    pattern_names = [n for n, s in specs.items() if s.get("kind") == "pattern"]
    int_names = [n for n in e.param_names if n not in pattern_names]
    for ren in _renamings(e, p):
        renamed = [_rename(w, ren, inv) for w in p.all_relators]
        target = frozenset(cyclic_canonical(w, inv) for w in renamed)
        pattern_choices: list[dict] = [{}]
        if pattern_names:
            pattern_choices = []
            for w in renamed:
                txt = "".join(s for s, _ in w)
                if set(txt) <= set("bcd"):
                    pattern_choices.append({pattern_names[0]: txt})
        for base in pattern_choices:
            found = _search(e, templates, specs, int_names, dict(base), target, bound)
            if found is not None:
                shown = {t: s + ("" if sign == 1 else "^-1") for t, (s, sign) in ren.items()}
                return found, shown
    return None


def _search(e, templates, specs, int_names, params, target, bound):
    """Assign integer parameters relator by relator; returns validated params."""
    unknown = [n for n in int_names if n not in params]
    if not unknown:
        try:
            valid = validate_params(e, params)
        except (DomainError, PresentationError):
            return None
        got = {cyclic_canonical(w, e.involutions) for w in _instantiate(e, valid, templates)}
        return valid if got == target else None
    best = None
    for t in templates:
        u = [n for n in unknown if n in template_names(t)]
        if u and (best is None or len(u) < len(best[1])):
            best = (t, u)
    if best is None:
        for n in unknown:
            params[n] = specs[n]["min"]
        return _search(e, templates, specs, int_names, params, target, bound)
    t, u = best
    fixed = {n: params[n] for n in template_names(t) if n in params}
    for combo in itertools.product(*(_candidates(specs[n], bound) for n in u)):
        trial = dict(params, **dict(zip(u, combo)))
        if any(trial[n] == INF for n in template_names(t)):
            ok = True
        else:
            items = tuple(sorted(dict(fixed, **dict(zip(u, combo))).items()))
            w = _canonical_template(e.name, t, items, bound)
            ok = w is not None and (not w or w in target)
        if ok:
            res = _search(e, templates, specs, int_names, trial, target, bound)
            if res is not None:
                return res
    return None


def classify(p: Presentation) -> Classification:
    """Catalogue entry whose relator set matches ``p`` up to renaming.

    The split between local and dividing relators is ignored.  Table rows are
    tried in order before degenerate families; a non-cubic input is unknown.
    """
    for e in all_entries():
        m = _match_entry(e, p)
        if m is None:
            continue
        params, ren = m
        notes = []
        for d in degenerate_entries():
            if not e.degenerate and d.name != e.name and _match_entry(d, p) is not None:
                notes.append(f"also {d.name}")
        for c in coincidences():
            if c["entry"] == e.name and all(params.get(k) == v for k, v in c["params"].items()):
                notes.append(f"same group as {c['same_group_as']}")
        if e.degenerate:
            notes.append(e.data.get("note", "degenerate"))
        ordered = {n: params[n] for n in e.param_names}
        return Classification(e.name, ordered, ren, tuple(notes))
    notes = () if _is_cubic(p) else ("not cubic",)
    return Classification(None, {}, {}, notes)


def _is_cubic(p: Presentation) -> bool:
    return sum(1 if p.is_involution(s) else 2 for s in p.symbols) == 3


# -- expectations -------------------------------------------------------------------


def pattern_decomposition(params: Mapping[str, Any]):
    """``(A, Z, N)`` of the pattern parameter ``P``."""
    dec = decompose_AZ(params["P"])
    if dec is None:
        raise ValueError("pattern has no (AZ)^n decomposition")
    return dec


def expected_report(entry_id: str | int | Entry, params: Mapping[str, Any] | None = None) -> dict:
    """Properties the catalogue asserts for a row and parameters."""
    e = get_entry(entry_id)
    pres = instantiate_entry(e, params or {})
    valid = validate_params(e, params or {})
    faces = None
    if e.faces == "relators":
        faces = sorted({len(w) for w in pres.relators})
    elif e.faces == "none":
        faces = []
    return {
        "entry": e.name,
        "params": {k: ("inf" if v == INF else v) for k, v in valid.items()},
        "presentation": pres.to_text(),
        "kappa": e.kappa,
        "ends": e.ends,
        "spin": e.spin,
        "face_sizes": faces,
        "relators": [word_text(w) for w in pres.relators],
        "dividing": [word_text(w) for w in pres.dividing],
    }


def canonical_pattern(text: str) -> str:
    return canonical(text)
