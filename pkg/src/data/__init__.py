from ._data import (
    CSV_EXTENDED_HEADER,
    CSV_HEADER,
    format_solution,
    format_tournament,
    parse_ballots,
    parse_solution,
    parse_tournament,
    read_ballots,
    read_experiment_config,
    read_summary_csv,
    read_tournament,
    write_summary_csv,
    write_tournament,
)
from ._generate import gen_noisy_transitive, gen_transitive, gen_uniform, generate_tournament
from ._visualize import save_dot, tournament_to_dot

__all__ = [
    "parse_tournament",
    "format_tournament",
    "read_tournament",
    "write_tournament",
    "parse_ballots",
    "read_ballots",
    "read_experiment_config",
    "format_solution",
    "parse_solution",
    "write_summary_csv",
    "read_summary_csv",
    "CSV_HEADER",
    "CSV_EXTENDED_HEADER",
    "gen_uniform",
    "gen_transitive",
    "gen_noisy_transitive",
    "generate_tournament",
    "tournament_to_dot",
    "save_dot",
]
