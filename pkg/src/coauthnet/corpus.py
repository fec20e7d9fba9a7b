"""Publication corpus: member registry, paper records, and co-authorship edges.

Input is two CSV files. ``members.csv`` has the header ``id,name`` and one
member per row. ``papers.csv`` has the header ``paper_id,year,title,author_ids``
where ``author_ids`` is a semicolon-separated list of member ids. Titles
containing commas must be double-quoted (standard CSV quoting). Files are
UTF-8; LF and CRLF line endings are both accepted.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator

DEFAULT_YEAR_WINDOW = (1900, 2100)

_FORBIDDEN_ID_CHARS = (",", ";", "\n", "\r")


class CorpusError(ValueError):
    """Malformed input data; carries the file path and line number when known."""

    def __init__(self, reason: str, *, path: str | Path | None = None, line: int | None = None):
        self.reason = reason
        self.path = str(path) if path is not None else None
        self.line = line
        location = ""
        if self.path is not None:
            location = self.path + (f":{line}" if line is not None else "") + ": "
        super().__init__(location + reason)


@dataclass(frozen=True, order=True)
class YearRange:
    """Inclusive interval of calendar years."""

    start: int
    end: int

    def __post_init__(self) -> None:
        if self.start > self.end:
            raise ValueError(f"inverted year range {self.start}-{self.end}")

    def __contains__(self, year: object) -> bool:
        return isinstance(year, int) and self.start <= year <= self.end

    @property
    def label(self) -> str:
        return f"{self.start}-{self.end}"


@dataclass(frozen=True)
class Member:
    """A registered network member: unique id plus display name."""

    id: str
    name: str

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("empty member id")
        if any(ch in self.id for ch in _FORBIDDEN_ID_CHARS):
            raise ValueError(f"member id {self.id!r} contains a forbidden character (, ; or newline)")


class MemberRegistry:
    """Ordered collection of members with unique ids."""

    def __init__(self, members: Iterable[Member] = ()):
        self._members: list[Member] = []
        self._by_id: dict[str, Member] = {}
        for member in members:
            self.add(member)

    def add(self, member: Member) -> None:
        if member.id in self._by_id:
            raise ValueError(f"duplicate id {member.id!r}")
        self._members.append(member)
        self._by_id[member.id] = member

    def __len__(self) -> int:
        return len(self._members)

    def __iter__(self) -> Iterator[Member]:
        return iter(self._members)

    def __contains__(self, member_id: object) -> bool:
        return member_id in self._by_id

    def get(self, member_id: str) -> Member:
        try:
            return self._by_id[member_id]
        except KeyError:
            raise KeyError(f"unknown member id {member_id!r}") from None

    def name_of(self, member_id: str) -> str:
        return self.get(member_id).name


@dataclass(frozen=True)
class Publication:
    """One paper: id, year, title, and the distinct member ids of its authors."""

    paper_id: str
    year: int
    title: str
    author_ids: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.paper_id:
            raise ValueError("empty paper id")
        if len(self.author_ids) < 1:
            raise ValueError(f"paper {self.paper_id!r} has no authors")
        if len(set(self.author_ids)) != len(self.author_ids):
            raise ValueError(f"paper {self.paper_id!r} has duplicate author ids after deduplication")


@dataclass(frozen=True)
class PublicationSet:
    """Parsed publications plus any warnings produced while reading them."""

    publications: tuple[Publication, ...]
    warnings: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.publications)

    def __iter__(self) -> Iterator[Publication]:
        return iter(self.publications)

    @cached_property
    def _by_id(self) -> dict[str, Publication]:
        return {pub.paper_id: pub for pub in self.publications}

    def get(self, paper_id: str) -> Publication:
        try:
            return self._by_id[paper_id]
        except KeyError:
            raise KeyError(f"unknown paper id {paper_id!r}") from None

    def in_range(self, years: YearRange) -> list[Publication]:
        return [pub for pub in self.publications if pub.year in years]

    def year_bounds(self) -> tuple[int, int] | None:
        """(min, max) publication year, or None for an empty set."""
        if not self.publications:
            return None
        all_years = [pub.year for pub in self.publications]
        return min(all_years), max(all_years)


@dataclass(frozen=True)
class Corpus:
    """A member registry together with its publication records."""

    registry: MemberRegistry
    publications: PublicationSet


@dataclass(frozen=True)
class EdgeRecord:
    """Co-authorship link: pair of member ids with joint-paper count and ids.

    Endpoints are ordered ``a < b`` lexicographically, and the weight always
    equals the number of contributing papers.
    """

    a: str
    b: str
    weight: int
    paper_ids: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise ValueError(f"self-edge on {self.a!r}")
        if self.a > self.b:
            raise ValueError(f"edge endpoints out of order: {self.a!r} > {self.b!r}")
        if self.weight != len(self.paper_ids):
            raise ValueError(
                f"edge {self.a!r}-{self.b!r}: weight {self.weight} != {len(self.paper_ids)} papers"
            )


def _read_rows(path: str | Path, expected_header: list[str]):
    """Yield (line_number, row) for each data row, after checking the header."""
    with open(path, newline="", encoding="utf-8-sig") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header != expected_header:
            raise CorpusError(
                f"missing or malformed header, expected {','.join(expected_header)!r}",
                path=path,
                line=1,
            )
        for row in reader:
            if not row:
                continue  # tolerate blank lines
            if len(row) != len(expected_header):
                raise CorpusError(
                    f"expected {len(expected_header)} columns, got {len(row)}",
                    path=path,
                    line=reader.line_num,
                )
            yield reader.line_num, row


def parse_members(path: str | Path) -> MemberRegistry:
    """Parse ``members.csv`` into a registry, preserving file order."""
    registry = MemberRegistry()
    for line, (member_id, name) in _read_rows(path, ["id", "name"]):
        try:
            registry.add(Member(member_id, name))
        except ValueError as exc:
            raise CorpusError(str(exc), path=path, line=line) from None
    return registry


def parse_publications(
    path: str | Path,
    registry: MemberRegistry,
    year_window: tuple[int, int] = DEFAULT_YEAR_WINDOW,
) -> PublicationSet:
    """Parse ``papers.csv``, resolving author ids against the registry.

    Duplicate author ids within one paper are collapsed to a single copy and
    reported as a warning rather than an error.
    """
    publications: list[Publication] = []
    warnings: list[str] = []
    seen_ids: set[str] = set()
    for line, (paper_id, year_text, title, authors_text) in _read_rows(
        path, ["paper_id", "year", "title", "author_ids"]
    ):
        if not paper_id:
            raise CorpusError("empty paper id", path=path, line=line)
        if paper_id in seen_ids:
            raise CorpusError(f"duplicate paper_id {paper_id!r}", path=path, line=line)
        try:
            year = int(year_text)
        except ValueError:
            raise CorpusError(f"non-integer year {year_text!r}", path=path, line=line) from None
        if not year_window[0] <= year <= year_window[1]:
            raise CorpusError(
                f"year {year} outside sane window {year_window[0]}-{year_window[1]}",
                path=path,
                line=line,
            )
        author_ids: list[str] = []
        duplicated = False
        for token in authors_text.split(";"):
            token = token.strip()
            if not token:
                raise CorpusError("empty author id in author list", path=path, line=line)
            if token not in registry:
                raise CorpusError(f"unknown author id {token!r}", path=path, line=line)
            if token in author_ids:
                duplicated = True
            else:
                author_ids.append(token)
        if duplicated:
            warnings.append(
                f"{path}:{line}: duplicate author ids in paper {paper_id!r} were deduplicated"
            )
        seen_ids.add(paper_id)
        publications.append(Publication(paper_id, year, title, tuple(author_ids)))
    return PublicationSet(tuple(publications), tuple(warnings))


def load_corpus(
    members_path: str | Path,
    papers_path: str | Path,
    year_window: tuple[int, int] = DEFAULT_YEAR_WINDOW,
) -> Corpus:
    """Parse both input files into a Corpus."""
    registry = parse_members(members_path)
    return Corpus(registry, parse_publications(papers_path, registry, year_window))


def derive_edges(publications: PublicationSet, years: YearRange) -> list[EdgeRecord]:
    """Accumulate joint-paper counts for every co-author pair in the year range.

    Every publication whose year falls inside ``years`` and that has at least
    two distinct member authors contributes +1 weight to each unordered author
    pair. The result is sorted by endpoint pair; each record's paper ids are
    sorted by (year, paper_id) so the output is independent of input row order.
    """
    joint: dict[tuple[str, str], list[str]] = {}
    for pub in publications:
        if pub.year not in years or len(pub.author_ids) < 2:
            continue
        for a, b in combinations(sorted(pub.author_ids), 2):
            joint.setdefault((a, b), []).append(pub.paper_id)

    def paper_key(paper_id: str) -> tuple[int, str]:
        return publications.get(paper_id).year, paper_id

    return [
        EdgeRecord(a, b, len(paper_ids), tuple(sorted(paper_ids, key=paper_key)))
        for (a, b), paper_ids in sorted(joint.items())
    ]
