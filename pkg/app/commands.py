"""
The table, asym and enumerate commands.

Each command takes a RunConfig and a text stream, writes its rows, and
returns the process exit code.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence, TextIO, Tuple

from asym import AsymStat, estimate
from closedform import FormulaDomainError
from combinum import bell, stirling1_signed, stirling2
from oracle import OracleCapExceeded, oracle_stats, oracle_stats_all
from rgf import enumerate_all, enumerate_rgfs, write_words
from app.config import RunConfig, UsageError
from app.output import AsymRow, RowWriter, TableRow, cell
from app.statistics import (
    STATISTICS,
    Scope,
    Statistic,
    closedform_value,
    oracle_value,
    param_range,
    series_value,
)

logger = logging.getLogger(__name__)

KERNEL_STATS = ("bell", "stirling2", "stirling1")
TABLE_STATS = KERNEL_STATS + tuple(STATISTICS)

Job = Tuple[int, Optional[int]]


def _filtered(values: Sequence[int], wanted: Optional[Tuple[int, ...]]) -> List[int]:
    if wanted is None:
        return list(values)
    allowed = set(wanted)
    return [v for v in values if v in allowed]


def _kernel_rows(name: str, n: int, config: RunConfig) -> List[TableRow]:
    if name == "bell":
        return [TableRow(name, str(n), "", "", str(bell(n)), "combinum")]
    read = stirling2 if name == "stirling2" else stirling1_signed
    return [
        TableRow(name, str(n), str(k), "", str(read(n, k)), "combinum")
        for k in _filtered(range(n + 1), config.k_values)
    ]


class TableBuilder:
    """
    Produces the rows of one (n, k) job of the table command.

    The closed-form source falls back to the oracle below a formula's
    validity range, provided n is within the enumeration cap.
    """

    def __init__(self, stat: Statistic, config: RunConfig) -> None:
        self.stat = stat
        self.config = config
        self.trunc = max(config.n_values)

    def _params(self, n: int, k: Optional[int]) -> List[Optional[int]]:
        if self.stat.scope is not Scope.CELL_PARAM:
            return [None]
        return _filtered(param_range(self.stat, n, k), self.config.param_values)

    def _oracle_rows(self, n: int, k: Optional[int], params: List[Optional[int]]) -> List[Tuple[object, str]]:
        if k is None:
            bundle = oracle_stats_all(n, cap=self.config.cap)
        else:
            bundle = oracle_stats(n, k, cap=self.config.cap)
        return [(oracle_value(self.stat, bundle, p), "oracle") for p in params]

    def _closedform_rows(self, n: int, k: Optional[int], params: List[Optional[int]]) -> List[Tuple[object, str]]:
        try:
            return [(closedform_value(self.stat, n, k, p), "closedform") for p in params]
        except FormulaDomainError as e:
            if n > self.config.cap:
                raise
            logger.debug(f"[CLI] {e}; answering n={n} from the oracle")
            return self._oracle_rows(n, k, params)

    def rows(self, job: Job) -> List[TableRow]:
        n, k = job
        params = self._params(n, k)
        if not params:
            return []
        source = self.config.source
        if source == "oracle":
            values = self._oracle_rows(n, k, params)
        elif source == "series":
            values = [(series_value(self.stat, n, k, p, self.trunc), "series") for p in params]
        else:
            values = self._closedform_rows(n, k, params)
        return [
            TableRow(self.stat.name, str(n), cell(k), cell(p), cell(value), origin)
            for p, (value, origin) in zip(params, values)
        ]


def _table_jobs(stat: Statistic, config: RunConfig) -> List[Job]:
    jobs: List[Job] = []
    for n in sorted(set(config.n_values)):
        if stat.scope is Scope.ALL:
            jobs.append((n, None))
        else:
            jobs.extend((n, k) for k in _filtered(range(1, n + 1), config.k_values))
    return jobs


def table_rows(config: RunConfig) -> List[TableRow]:
    """
    Rows of the table command, ordered by (n, k, param).

    Raises:
        UsageError: On an unknown statistic id
        OracleCapExceeded: If the oracle is needed beyond the cap
    """
    if config.stat not in TABLE_STATS:
        raise UsageError(f"--stat must be one of {', '.join(TABLE_STATS)}")
    if config.stat in KERNEL_STATS:
        rows: List[TableRow] = []
        for n in sorted(set(config.n_values)):
            rows.extend(_kernel_rows(config.stat, n, config))
        return rows

    stat = STATISTICS[config.stat]
    if config.source == "oracle" and max(config.n_values) > config.cap:
        raise OracleCapExceeded(max(config.n_values), config.cap)
    builder = TableBuilder(stat, config)
    jobs = _table_jobs(stat, config)
    logger.debug(f"[CLI] table {stat.name}: {len(jobs)} jobs on {config.threads} threads")
    with ThreadPoolExecutor(max_workers=config.threads) as executor:
        parts = list(executor.map(builder.rows, jobs))
    return [row for part in parts for row in part]


def cmd_table(config: RunConfig, stream: TextIO) -> int:
    RowWriter(config.output_format).write(stream, table_rows(config), TableRow)
    return 0


def asym_rows(config: RunConfig) -> List[AsymRow]:
    """
    Rows of the asym command, statistic by statistic in declared order.

    Raises:
        UsageError: On an unknown statistic or n < 2
    """
    if config.stat is None:
        stats = list(AsymStat)
    else:
        try:
            stats = [AsymStat(config.stat)]
        except ValueError:
            raise UsageError(
                f"--stat must be one of {', '.join(s.value for s in AsymStat)}"
            ) from None
    small = [n for n in config.n_values if n < 2]
    if small:
        raise UsageError(f"asymptotic estimates need n >= 2, got n={small[0]}")

    jobs = [(stat, n) for stat in stats for n in config.n_values]
    with ThreadPoolExecutor(max_workers=config.threads) as executor:
        results = list(executor.map(lambda job: estimate(*job), jobs))
    return [
        AsymRow(
            stat=r.stat.value,
            n=str(r.n),
            xi=repr(r.xi),
            estimate=repr(r.estimate),
            exact_ratio=repr(r.exact_ratio),
            rel_err=repr(r.rel_err),
        )
        for r in results
    ]


def cmd_asym(config: RunConfig, stream: TextIO) -> int:
    RowWriter(config.output_format).write(stream, asym_rows(config), AsymRow)
    return 0


def cmd_enumerate(config: RunConfig, stream: TextIO) -> int:
    """
    Write the words of P_{n,k} (or P_n without --k), one per line.

    Output is plain text whatever --format says.
    """
    if len(config.n_values) != 1:
        raise UsageError("enumerate takes a single --n")
    n = config.n_values[0]
    if n > config.cap:
        raise OracleCapExceeded(n, config.cap)
    if config.k_values is None:
        words = enumerate_all(n)
    elif len(config.k_values) == 1:
        words = enumerate_rgfs(n, config.k_values[0])
    else:
        raise UsageError("enumerate takes a single --k")
    count = write_words(stream, words)
    logger.info(f"[ENUM] wrote {count} words for n={n}")
    return 0
