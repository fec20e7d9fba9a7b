from __future__ import annotations

from math import comb
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coauthnet.corpus import (
    CorpusError,
    EdgeRecord,
    Member,
    MemberRegistry,
    Publication,
    PublicationSet,
    YearRange,
    derive_edges,
    parse_members,
    parse_publications,
)


def write(tmp_path: Path, name: str, text: str) -> Path:
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


def registry_of(*ids: str) -> MemberRegistry:
    return MemberRegistry(Member(i, i.upper()) for i in ids)


def pubs_of(*pubs: Publication) -> PublicationSet:
    return PublicationSet(tuple(pubs))


class TestParseMembers:
    def test_two_rows(self, tmp_path):
        path = write(tmp_path, "m.csv", "id,name\nm1,Alice\nm2,Bob\n")
        registry = parse_members(path)
        assert len(registry) == 2
        assert registry.name_of("m1") == "Alice"
        assert [m.id for m in registry] == ["m1", "m2"]

    def test_header_only_is_empty_registry(self, tmp_path):
        path = write(tmp_path, "m.csv", "id,name\n")
        assert len(parse_members(path)) == 0

    def test_duplicate_id(self, tmp_path):
        path = write(tmp_path, "m.csv", "id,name\nm1,Alice\nm1,Carol\n")
        with pytest.raises(CorpusError, match="duplicate id 'm1'") as info:
            parse_members(path)
        assert info.value.line == 3

    def test_missing_header(self, tmp_path):
        path = write(tmp_path, "m.csv", "m1,Alice\nm2,Bob\n")
        with pytest.raises(CorpusError, match="header"):
            parse_members(path)

    def test_empty_id(self, tmp_path):
        path = write(tmp_path, "m.csv", "id,name\n,Alice\n")
        with pytest.raises(CorpusError, match="empty member id"):
            parse_members(path)

    def test_wrong_column_count(self, tmp_path):
        path = write(tmp_path, "m.csv", "id,name\nm1\n")
        with pytest.raises(CorpusError, match="expected 2 columns"):
            parse_members(path)

    def test_forbidden_characters_in_id(self, tmp_path):
        path = write(tmp_path, "m.csv", "id,name\nm;1,Alice\n")
        with pytest.raises(CorpusError, match="forbidden"):
            parse_members(path)

    def test_crlf_and_quoted_names(self, tmp_path):
        path = write(tmp_path, "m.csv", 'id,name\r\nm1,"Ray, Alice"\r\n')
        registry = parse_members(path)
        assert registry.name_of("m1") == "Ray, Alice"


class TestParsePublications:
    def test_two_authors(self, tmp_path):
        path = write(tmp_path, "p.csv", "paper_id,year,title,author_ids\np1,2012,On Surfaces,m1;m2\n")
        pubs = parse_publications(path, registry_of("m1", "m2"))
        assert len(pubs) == 1
        assert pubs.get("p1").author_ids == ("m1", "m2")
        assert pubs.get("p1").year == 2012

    def test_single_author_accepted(self, tmp_path):
        path = write(tmp_path, "p.csv", "paper_id,year,title,author_ids\np2,2012,Solo,m1\n")
        pubs = parse_publications(path, registry_of("m1"))
        assert pubs.get("p2").author_ids == ("m1",)
        assert derive_edges(pubs, YearRange(2012, 2012)) == []

    def test_duplicate_authors_deduplicated_with_warning(self, tmp_path):
        path = write(tmp_path, "p.csv", "paper_id,year,title,author_ids\np3,2012,X,m1;m1;m2\n")
        pubs = parse_publications(path, registry_of("m1", "m2"))
        assert pubs.get("p3").author_ids == ("m1", "m2")
        assert len(pubs.warnings) == 1
        assert "p3" in pubs.warnings[0]

    def test_unknown_author(self, tmp_path):
        path = write(tmp_path, "p.csv", "paper_id,year,title,author_ids\np1,2012,X,m9\n")
        with pytest.raises(CorpusError, match="unknown author id 'm9'") as info:
            parse_publications(path, registry_of("m1"))
        assert info.value.line == 2

    def test_non_integer_year(self, tmp_path):
        path = write(tmp_path, "p.csv", "paper_id,year,title,author_ids\np1,MMXII,X,m1\n")
        with pytest.raises(CorpusError, match="non-integer year"):
            parse_publications(path, registry_of("m1"))

    def test_year_window(self, tmp_path):
        path = write(tmp_path, "p.csv", "paper_id,year,title,author_ids\np1,1850,X,m1\n")
        with pytest.raises(CorpusError, match="outside sane window"):
            parse_publications(path, registry_of("m1"))

    def test_duplicate_paper_id(self, tmp_path):
        path = write(
            tmp_path, "p.csv",
            "paper_id,year,title,author_ids\np1,2012,X,m1\np1,2013,Y,m1\n",
        )
        with pytest.raises(CorpusError, match="duplicate paper_id"):
            parse_publications(path, registry_of("m1"))

    def test_quoted_title_with_comma(self, tmp_path):
        path = write(
            tmp_path, "p.csv",
            'paper_id,year,title,author_ids\np1,2012,"Knots, links, and braids",m1;m2\n',
        )
        pubs = parse_publications(path, registry_of("m1", "m2"))
        assert pubs.get("p1").title == "Knots, links, and braids"


class TestDeriveEdges:
    def test_triangle_from_three_author_paper(self):
        pubs = pubs_of(Publication("p1", 2012, "T", ("m1", "m2", "m3")))
        edges = derive_edges(pubs, YearRange(2011, 2012))
        assert [(e.a, e.b, e.weight) for e in edges] == [
            ("m1", "m2", 1), ("m1", "m3", 1), ("m2", "m3", 1),
        ]

    def test_weight_accumulates_with_paper_ids(self):
        pubs = pubs_of(
            Publication("p1", 2012, "A", ("m1", "m2")),
            Publication("p2", 2012, "B", ("m1", "m2")),
        )
        (edge,) = derive_edges(pubs, YearRange(2012, 2012))
        assert edge.weight == 2
        assert edge.paper_ids == ("p1", "p2")

    def test_out_of_range_paper_excluded(self):
        pubs = pubs_of(Publication("p1", 2013, "A", ("m1", "m2")))
        assert derive_edges(pubs, YearRange(2011, 2012)) == []

    def test_paper_ids_sorted_by_year_then_id(self):
        pubs = pubs_of(
            Publication("pz", 2011, "A", ("m1", "m2")),
            Publication("pa", 2012, "B", ("m1", "m2")),
        )
        (edge,) = derive_edges(pubs, YearRange(2011, 2012))
        assert edge.paper_ids == ("pz", "pa")

    def test_edge_record_invariants(self):
        with pytest.raises(ValueError, match="out of order"):
            EdgeRecord("m2", "m1", 1, ("p1",))
        with pytest.raises(ValueError, match="self-edge"):
            EdgeRecord("m1", "m1", 1, ("p1",))
        with pytest.raises(ValueError, match="weight"):
            EdgeRecord("m1", "m2", 2, ("p1",))


# Random author lists over a small pool; paper years in a tight band so ranges
# filter meaningfully.
_pub_lists = st.lists(
    st.tuples(
        st.integers(2011, 2016),
        st.sets(st.sampled_from([f"m{i}" for i in range(1, 8)]), min_size=1, max_size=5),
    ),
    max_size=12,
)


@st.composite
def publication_sets(draw) -> PublicationSet:
    entries = draw(_pub_lists)
    return pubs_of(
        *(
            Publication(f"p{i}", year, f"T{i}", tuple(sorted(authors)))
            for i, (year, authors) in enumerate(entries)
        )
    )


class TestDeriveEdgesProperties:
    @given(publication_sets())
    def test_total_weight_counts_author_pairs(self, pubs):
        years = YearRange(2011, 2016)
        edges = derive_edges(pubs, years)
        expected = sum(comb(len(p.author_ids), 2) for p in pubs if p.year in years)
        assert sum(e.weight for e in edges) == expected

    @given(publication_sets(), st.integers(2011, 2016), st.integers(0, 5))
    def test_widening_range_is_monotone(self, pubs, end, extra):
        narrow = {(e.a, e.b): e.weight for e in derive_edges(pubs, YearRange(2011, end))}
        wide = {(e.a, e.b): e.weight for e in derive_edges(pubs, YearRange(2011, end + extra))}
        for pair, weight in narrow.items():
            assert wide[pair] >= weight

    @given(publication_sets(), st.randoms(use_true_random=False))
    def test_row_order_does_not_matter(self, pubs, rng):
        shuffled = list(pubs.publications)
        rng.shuffle(shuffled)
        years = YearRange(2011, 2016)
        assert derive_edges(PublicationSet(tuple(shuffled)), years) == derive_edges(pubs, years)


class TestYearRange:
    def test_label_and_containment(self):
        years = YearRange(2011, 2013)
        assert years.label == "2011-2013"
        assert 2011 in years and 2013 in years and 2014 not in years

    def test_inverted_range_rejected(self):
        with pytest.raises(ValueError, match="inverted"):
            YearRange(2012, 2011)
