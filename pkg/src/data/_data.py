import csv
import json
from typing import IO, Any

from src.structs import (
    Ballot,
    Cost,
    ExperimentConfig,
    Ordering,
    Profile,
    SummaryStats,
    Tournament,
    VertexId,
)
from src.utils import BallotError, ConfigError, FastError, TournamentError

CSV_HEADER = [
    "algo",
    "n",
    "model",
    "p",
    "trials",
    "seed",
    "mean_cost",
    "stderr",
    "min",
    "max",
    "mean_ratio",
]
CSV_EXTENDED_HEADER = CSV_HEADER + ["max_ratio", "mean_excess"]


def _content_lines(text: str) -> list[tuple[int, str]]:
    """Non-empty, non-comment lines with their 1-based line numbers"""
    lines: list[tuple[int, str]] = []
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped == "" or stripped.startswith("#"):
            continue
        lines.append((number, stripped))
    return lines


def parse_tournament(text: str) -> Tournament:
    """Parse a tournament. The text is expected to have the following format:
    tournament <n>

    <u> <v>

    ...

    Where the header gives the number of vertices and each following line is an edge u -> v.
    Every unordered pair must appear exactly once. Lines starting with '#' are comments.

    Params:
    -   text - The content of the file

    Returns:
        The parsed tournament
    """
    lines = _content_lines(text)
    if len(lines) == 0:
        raise TournamentError("Empty tournament file")
    number, header = lines[0]
    tokens = header.split()
    if len(tokens) != 2 or tokens[0] != "tournament":
        raise TournamentError(f"Line {number}: expected 'tournament <n>', got {header!r}")
    try:
        n = int(tokens[1])
    except ValueError:
        raise TournamentError(f"Line {number}: invalid vertex count {tokens[1]!r}") from None

    edges: list[tuple[VertexId, VertexId]] = []
    for number, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 2:
            raise TournamentError(f"Line {number}: expected '<u> <v>', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise TournamentError(f"Line {number}: invalid edge {line!r}") from None
        edges.append((u, v))
    return Tournament.from_edges(n, edges)


def format_tournament(t: Tournament) -> str:
    lines = [f"tournament {t.n}"]
    lines.extend(f"{u} {v}" for u, v in t.edges())
    return "\n".join(lines) + "\n"


def _read_text(path: str, error: type[FastError]) -> str:
    """Content of a UTF-8 text file; undecodable bytes raise `error`"""
    with open(path, mode="r", encoding="utf-8") as f:
        try:
            return f.read()
        except UnicodeDecodeError as e:
            raise error(f"{path} is not valid UTF-8: {e.reason} at byte {e.start}") from None


def read_tournament(path: str) -> Tournament:
    return parse_tournament(_read_text(path, TournamentError))


def write_tournament(t: Tournament, path: str) -> None:
    with open(path, mode="w", encoding="utf-8") as f:
        f.write(format_tournament(t))


def parse_ballots(text: str) -> Profile:
    """Parse ranked ballots: one ballot per line, whitespace-separated candidate names, best
    first. Lines starting with '#' are comments."""
    rankings = [line.split() for _, line in _content_lines(text)]
    if len(rankings) == 0:
        raise BallotError("No ballots found")
    return Profile(tuple(Ballot(tuple(ranking)) for ranking in rankings))


def read_ballots(path: str) -> Profile:
    return parse_ballots(_read_text(path, BallotError))


def read_experiment_config(path: str) -> ExperimentConfig:
    """Read an experiment configuration stored as a JSON object, for example
    {"algorithms": ["insertion", "quick"], "n": 20, "model": "uniform", "trials": 1000, "seed": 7}
    """
    text = _read_text(path, ConfigError)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"Invalid JSON in {path}: {e}") from None
    if not isinstance(data, dict):
        raise ConfigError(f"{path} must contain a JSON object")
    return ExperimentConfig.from_json(data)


def format_solution(ordering: Ordering, cost: Cost) -> str:
    return f"order {ordering}\ncost {cost}\n"


def parse_solution(text: str) -> tuple[Ordering, Cost]:
    """Parse the output of the solve subcommand"""
    fields: dict[str, str] = {}
    for _, line in _content_lines(text):
        key, _, value = line.partition(" ")
        fields[key] = value.strip()
    try:
        return Ordering.parse(fields["order"]), int(fields["cost"])
    except KeyError as e:
        raise TournamentError(f"Solution is missing the {e} line") from None


def _format_float(value: float | None) -> str:
    return "" if value is None else f"{value:.6f}"


def write_summary_csv(
    summaries: list[SummaryStats], stream: IO[str], extended: bool = False
) -> None:
    """Write one CSV row per (algorithm, config). The extended layout adds the maximum
    ratio and the mean excess cost over the optimum."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_EXTENDED_HEADER if extended else CSV_HEADER)
    for summary in summaries:
        config = summary.config
        for stats in summary:
            row: list[Any] = [
                stats.algorithm,
                config.n,
                config.model.value,
                config.p,
                stats.trials,
                config.seed,
                _format_float(stats.mean_cost),
                _format_float(stats.stderr),
                stats.min_cost,
                stats.max_cost,
                _format_float(stats.mean_ratio),
            ]
            if extended:
                row.extend(
                    [_format_float(stats.max_ratio), _format_float(stats.mean_excess)]
                )
            writer.writerow(row)


def read_summary_csv(stream: IO[str]) -> list[dict[str, str]]:
    return list(csv.DictReader(stream))
