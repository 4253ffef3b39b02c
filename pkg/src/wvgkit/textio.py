"""Game text formats and report rendering.

Two interchangeable representations of a game:

- bracket text, "[q; w1, w2, ...]": whitespace-insensitive, weights
  separated by commas and/or spaces;
- structured documents (plain dicts / JSON) with "quota" and "weights"
  fields whose values may be decimal strings, so arbitrarily large
  integers survive any JSON consumer.

Rendering is byte-deterministic: the same inputs always produce the same
text. Exact rationals are printed as num/den plus a decimal approximation
rounded to a number of significant digits, ties away from zero.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal, localcontext
from fractions import Fraction
from typing import Any, Mapping

from .errors import ParseError
from .game import WeightedVotingGame
from .indices import BanzhafResult, ShapleyResult
from .manipulation import (
    AnnexAction,
    ManipulationReport,
    MergeAction,
    SplitAction,
)

DEFAULT_DIGITS = 6

FORMATS = ("human", "structured", "tabular")


@dataclass(frozen=True)
class GameDocument:
    """A parsed game plus optional player labels and the source text."""

    game: WeightedVotingGame
    labels: tuple[str, ...] | None = None
    source: str | None = None

    def __post_init__(self):
        if self.labels is not None and len(self.labels) != self.game.n:
            raise ParseError(
                f"{len(self.labels)} labels for {self.game.n} players"
            )


def _parse_int(token: str, position: int, what: str) -> int:
    if not re.fullmatch(r"[+-]?\d+", token):
        raise ParseError(f"expected an integer {what}, got {token!r}", position)
    return int(token)


def parse_game(text: str) -> WeightedVotingGame:
    """Parse bracket text like "[5; 2, 2, 2]" (or a JSON document)."""
    if text.lstrip().startswith("{"):
        return parse_document(text).game
    open_at = text.find("[")
    if open_at < 0:
        raise ParseError("expected '['", 0)
    if text[:open_at].strip():
        raise ParseError("unexpected text before '['", 0)
    close_at = text.find("]", open_at)
    if close_at < 0:
        raise ParseError("missing closing ']'", len(text) - 1)
    if text[close_at + 1 :].strip():
        raise ParseError("unexpected text after ']'", close_at + 1)
    body = text[open_at + 1 : close_at]
    semi = body.find(";")
    if semi < 0:
        raise ParseError("expected ';' between quota and weights", open_at + 1)
    quota_token = body[:semi].strip()
    quota = _parse_int(quota_token, open_at + 1, "quota")
    weights: list[int] = []
    offset = open_at + 1 + semi + 1
    for match in re.finditer(r"[^,\s]+", body[semi + 1 :]):
        weights.append(
            _parse_int(match.group(), offset + match.start(), "weight")
        )
    if not weights:
        raise ParseError("no weights given", offset)
    return WeightedVotingGame(quota, tuple(weights))


def _document_int(value: Any, what: str) -> int:
    if isinstance(value, bool):
        raise ParseError(f"{what} must be an integer")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        return _parse_int(value.strip(), 0, what)
    raise ParseError(f"{what} must be an integer or a decimal string")


def parse_document(data: str | Mapping[str, Any]) -> GameDocument:
    """Parse a structured game document (a mapping or its JSON text)."""
    source = None
    if isinstance(data, str):
        source = data
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from exc
    if not isinstance(data, Mapping):
        raise ParseError("game document must be a JSON object")
    if "quota" not in data or "weights" not in data:
        raise ParseError("game document needs 'quota' and 'weights' fields")
    quota = _document_int(data["quota"], "quota")
    weights = tuple(_document_int(w, "weight") for w in data["weights"])
    labels = data.get("labels")
    if labels is not None:
        labels = tuple(str(x) for x in labels)
    return GameDocument(WeightedVotingGame(quota, weights), labels, source)


def game_to_text(game: WeightedVotingGame) -> str:
    return f"[{game.quota};{','.join(str(w) for w in game.weights)}]"


def game_to_document(
    game: WeightedVotingGame, labels: tuple[str, ...] | None = None
) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "quota": str(game.quota),
        "weights": [str(w) for w in game.weights],
    }
    if labels is not None:
        doc["labels"] = list(labels)
    return doc


def decimal_string(value: Fraction, digits: int = DEFAULT_DIGITS) -> str:
    """Decimal expansion with `digits` significant digits.

    The division is rounded in a single step (ties away from zero), so
    "0.411765" really is the closest 6-digit decimal to 7/17.
    """
    if digits < 1:
        raise ValueError("need at least one significant digit")
    if value == 0:
        return "0"
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_HALF_UP
        quotient = Decimal(value.numerator) / Decimal(value.denominator)
    return format(quotient, "f")


def exact_string(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_fraction(value: Fraction, digits: int = DEFAULT_DIGITS) -> str:
    """"7/17 (0.411765)"; integers print bare."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{exact_string(value)} ({decimal_string(value, digits)})"


def _fraction_doc(value: Fraction) -> dict[str, str]:
    return {"num": str(value.numerator), "den": str(value.denominator)}


def fraction_from_doc(doc: Mapping[str, str]) -> Fraction:
    return Fraction(int(doc["num"]), int(doc["den"]))


def _json_dumps(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ": "), indent=2)


def render_index_table(
    game: WeightedVotingGame,
    banzhaf: BanzhafResult,
    shapley: ShapleyResult | None,
    fmt: str = "human",
    digits: int = DEFAULT_DIGITS,
    method: str | None = None,
) -> str:
    """One row per player: weight, swing count and the index values."""
    if fmt == "structured":
        players = []
        for i in game.players:
            entry: dict[str, Any] = {
                "player": i,
                "weight": str(game.weights[i - 1]),
                "eta": str(banzhaf.counts.eta[i - 1]),
                "banzhaf": _fraction_doc(banzhaf.normalized.values[i - 1]),
                "banzhaf_prob": _fraction_doc(banzhaf.probabilistic.values[i - 1]),
            }
            if shapley is not None:
                entry["shapley_shubik"] = _fraction_doc(shapley.index.values[i - 1])
            players.append(entry)
        payload: dict[str, Any] = {"game": game_to_document(game), "players": players}
        if method:
            payload["method"] = method
        return _json_dumps(payload)

    header = ["player", "weight", "eta", "banzhaf", "banzhaf-prob"]
    if shapley is not None:
        header.append("shapley-shubik")
    rows = []
    for i in game.players:
        row = [
            str(i),
            str(game.weights[i - 1]),
            str(banzhaf.counts.eta[i - 1]),
        ]
        if fmt == "tabular":
            row.append(exact_string(banzhaf.normalized.values[i - 1]))
            row.append(exact_string(banzhaf.probabilistic.values[i - 1]))
            if shapley is not None:
                row.append(exact_string(shapley.index.values[i - 1]))
        else:
            row.append(format_fraction(banzhaf.normalized.values[i - 1], digits))
            row.append(format_fraction(banzhaf.probabilistic.values[i - 1], digits))
            if shapley is not None:
                row.append(format_fraction(shapley.index.values[i - 1], digits))
        rows.append(row)

    if fmt == "tabular":
        return "\n".join("\t".join(r) for r in [header] + rows)
    if fmt != "human":
        raise ValueError(f"unknown format {fmt!r}; choices: {', '.join(FORMATS)}")
    lines = [f"game {game_to_text(game)}  (n={game.n}, total weight {game.total_weight})"]
    if method:
        lines[0] += f"  method={method}"
    widths = [max(len(r[c]) for r in [header] + rows) for c in range(len(header))]
    lines.append("  ".join(h.ljust(w) for h, w in zip(header, widths)))
    for row in rows:
        lines.append("  ".join(v.ljust(w) for v, w in zip(row, widths)))
    return "\n".join(lines)


def describe_action(action) -> str:
    if isinstance(action, SplitAction):
        parts = ",".join(str(p) for p in action.parts)
        return f"split player {action.player} into ({parts})"
    if isinstance(action, MergeAction):
        ids = ",".join(str(i) for i in sorted(action.members))
        return f"merge players {{{ids}}}"
    if isinstance(action, AnnexAction):
        ids = ",".join(str(i) for i in sorted(action.annexed))
        return f"player {action.annexer} annexes {{{ids}}}"
    return str(action)


def _action_doc(action) -> dict[str, Any]:
    if isinstance(action, SplitAction):
        return {
            "type": "split",
            "player": action.player,
            "parts": [str(p) for p in action.parts],
        }
    if isinstance(action, MergeAction):
        return {"type": "merge", "members": sorted(action.members)}
    if isinstance(action, AnnexAction):
        return {
            "type": "annex",
            "annexer": action.annexer,
            "targets": sorted(action.annexed),
        }
    raise TypeError(f"not an action: {action!r}")


def render_report(
    report: ManipulationReport,
    fmt: str = "human",
    digits: int = DEFAULT_DIGITS,
) -> str:
    """Render one manipulation verdict."""
    verdict = "beneficial" if report.beneficial else (
        "neutral" if report.delta == 0 else "not beneficial"
    )
    if fmt == "structured":
        payload: dict[str, Any] = {
            "action": _action_doc(report.action),
            "index": report.index_kind.value,
            "before": _fraction_doc(report.before),
            "after": _fraction_doc(report.after),
            "delta": _fraction_doc(report.delta),
            "beneficial": report.beneficial,
            "remap": {str(k): list(v) for k, v in sorted(report.remap.items())},
        }
        if report.after_game is not None:
            payload["game_after"] = game_to_document(report.after_game)
        return _json_dumps(payload)

    rows = [
        ("action", describe_action(report.action)),
        ("index", report.index_kind.value),
        ("before", format_fraction(report.before, digits)),
        ("after", format_fraction(report.after, digits)),
        ("delta", format_fraction(report.delta, digits)),
        ("verdict", verdict),
    ]
    if report.after_game is not None:
        rows.insert(1, ("new game", game_to_text(report.after_game)))
    if fmt == "tabular":
        return "\n".join(f"{k}\t{v}" for k, v in rows)
    if fmt != "human":
        raise ValueError(f"unknown format {fmt!r}; choices: {', '.join(FORMATS)}")
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)
