"""Published partial-order counts and the derived rooted-poset counts.

``ORD(n)`` is the number of partial orders on an n-element set.  Only the
values for n <= 18 are known, so they ship as an embedded data file.
``ORD*(n)``, the number of partial orders on an n-set with a greatest
element, follows from ``ORD*(n+1) = (n+1) * ORD(n)`` and ``ORD*(1) = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .errors import ConfigurationError, DomainError

ORD_ENTRIES = 18
ORD_STAR_ENTRIES = ORD_ENTRIES + 1
_DATA_FILE = "ord.txt"


@dataclass(frozen=True)
class OrdTable:
    """``ORD(1..18)``, indexed from 1."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != ORD_ENTRIES:
            raise ConfigurationError(
                f"ORD table needs {ORD_ENTRIES} entries, got {len(self.values)}"
            )
        if self.values[0] != 1 or self.values[1] != 3:
            raise ConfigurationError("ORD table must start with 1, 3")
        if any(a >= b for a, b in zip(self.values, self.values[1:])):
            raise ConfigurationError("ORD table must be strictly increasing")

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= ORD_ENTRIES:
            raise DomainError(f"ORD({n}) is not published; known range is 1..{ORD_ENTRIES}")
        return self.values[n - 1]

    def __len__(self) -> int:
        return ORD_ENTRIES


@dataclass(frozen=True)
class OrdStarTable:
    """``ORD*(1..19)``, indexed from 1."""

    values: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= len(self.values):
            raise DomainError(
                f"ORD*({n}) needs ORD({n - 1}), which is not published; "
                f"known range is 1..{len(self.values)}"
            )
        return self.values[n - 1]

    def __len__(self) -> int:
        return len(self.values)

    @property
    def max_n(self) -> int:
        return len(self.values)


def parse_ord_data(text: str) -> OrdTable:
    """Parse the data file format: one decimal integer per line, line k = ORD(k)."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    values = []
    for lineno, line in enumerate(lines, 1):
        token = line.strip()
        if not token.isdigit() or not token.isascii():
            raise ConfigurationError(f"ORD data line {lineno} is not a decimal integer: {line!r}")
        values.append(int(token))
    return OrdTable(tuple(values))


@lru_cache(maxsize=None)
def load_ord_table() -> OrdTable:
    try:
        text = resources.files("zerodim.data").joinpath(_DATA_FILE).read_text("ascii")
    except (OSError, UnicodeDecodeError) as exc:
        raise ConfigurationError(f"cannot read embedded ORD data: {exc}") from exc
    return parse_ord_data(text)


def derive_ord_star(table: OrdTable) -> OrdStarTable:
    star = [1]
    for n in range(1, ORD_ENTRIES + 1):
        star.append((n + 1) * table[n])
    return OrdStarTable(tuple(star))


@lru_cache(maxsize=None)
def default_ord_star() -> OrdStarTable:
    return derive_ord_star(load_ord_table())
