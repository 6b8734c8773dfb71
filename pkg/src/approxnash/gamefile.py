"""Game file format: one JSON document, payoffs flat in player-major lexicographic order."""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

import numpy as np

from approxnash.game import Game, InvalidGame, check_game

FORMAT_VERSION = 1


class GameFileError(ValueError):
    pass


def dumps_game(game: Game) -> str:
    check_game(game)
    doc = {
        "version": FORMAT_VERSION,
        "num_players": game.num_players,
        "num_strategies": game.num_strategies,
        # float repr is the shortest string that round-trips exactly
        "payoffs": [float(x) for x in game.flat],
    }
    return json.dumps(doc) + "\n"


def loads_game(text: str) -> Game:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GameFileError(f"not a game document: {exc}") from exc
    if not isinstance(doc, dict):
        raise GameFileError("game document must be an object")
    missing = {"version", "num_players", "num_strategies", "payoffs"} - doc.keys()
    if missing:
        raise GameFileError(f"missing fields: {sorted(missing)}")
    if doc["version"] != FORMAT_VERSION:
        raise GameFileError(f"unsupported version {doc['version']!r}")
    try:
        game = Game(int(doc["num_players"]), int(doc["num_strategies"]), np.asarray(doc["payoffs"], dtype=np.float64))
        return check_game(game)
    except (TypeError, ValueError) as exc:
        raise GameFileError(str(exc)) from exc


def write_game(game: Game, path: str | Path) -> None:
    Path(path).write_text(dumps_game(game))


def read_game(path: str | Path) -> Game:
    return loads_game(Path(path).read_text())


def payoff_checksum(game: Game) -> str:
    """SHA-256 of the payoffs as little-endian float64, flat order."""
    return hashlib.sha256(game.flat.astype("<f8").tobytes()).hexdigest()


__all__ = [
    "GameFileError",
    "InvalidGame",
    "dumps_game",
    "loads_game",
    "payoff_checksum",
    "read_game",
    "write_game",
]
