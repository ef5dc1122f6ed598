import json

import pytest

from fintopo import (
    FiniteSpace,
    NotClosedUnderUnion,
    ParseError,
    parse_map,
    parse_space,
    serialize_space,
    subset_from_spec,
)


GOOD = '{"points": 4, "labels": ["i", "j", "k", "l"], "opens": [[], ["j", "l"], ["i", "j", "l"], ["j", "k", "l"], ["i", "j", "k", "l"]]}'


class TestParseSpace:
    def test_labeled_document(self):
        doc = parse_space(GOOD)
        assert doc.space == FiniteSpace(4, (0, 10, 11, 14, 15))
        assert doc.labels == ("i", "j", "k", "l")
        assert doc.render_set(subset_from_spec(doc, "j,l")) == "{j,l}"

    def test_index_document(self):
        doc = parse_space('{"points": 2, "opens": [[], [0], [0, 1]]}')
        assert doc.space == FiniteSpace(2, (0, 1, 3))
        assert doc.labels is None

    def test_opens_order_irrelevant(self):
        a = parse_space('{"points": 2, "opens": [[0, 1], [], [0]]}')
        b = parse_space('{"points": 2, "opens": [[], [0], [0, 1]]}')
        assert a.space == b.space

    def test_malformed_json_reports_position(self):
        with pytest.raises(ParseError) as e:
            parse_space('{"points": 2,')
        assert "line" in str(e.value)

    def test_unknown_key_rejected(self):
        with pytest.raises(ParseError) as e:
            parse_space('{"points": 2, "opens": [[], [0, 1]], "extra": 1}')
        assert "extra" in str(e.value)

    def test_bad_point_entry_paths(self):
        with pytest.raises(ParseError) as e:
            parse_space('{"points": 2, "opens": [[], [true], [0, 1]]}')
        assert "boolean" in str(e.value)
        with pytest.raises(ParseError) as e:
            parse_space('{"points": 2, "opens": [[], [5], [0, 1]]}')
        assert "opens[1]" in str(e.value)
        with pytest.raises(ParseError):
            parse_space('{"points": 2, "labels": ["a", "b"], "opens": [[], ["c"], [0, 1]]}')

    def test_topology_violations_pass_through(self):
        with pytest.raises(NotClosedUnderUnion):
            parse_space('{"points": 3, "opens": [[], [0], [1], [0, 1, 2]]}')

    def test_non_object_rejected(self):
        with pytest.raises(ParseError):
            parse_space('[1, 2]')


class TestSerialize:
    def test_roundtrip_canonical(self):
        doc = parse_space(GOOD)
        text = serialize_space(doc)
        again = parse_space(text)
        assert again.space == doc.space
        assert again.labels == doc.labels
        assert serialize_space(again) == text

    def test_canonical_form_uses_indices(self):
        doc = parse_space(GOOD)
        obj = json.loads(serialize_space(doc))
        assert obj["opens"][1] == [1, 3]
        assert obj["points"] == 4


class TestParseMap:
    def test_good_map(self):
        text = json.dumps({
            "domain": {"points": 2, "opens": [[], [0], [0, 1]]},
            "codomain": {"points": 2, "opens": [[], [0, 1]]},
            "assignment": [1, 0],
        })
        f, dom, cod = parse_map(text)
        assert f.assignment == (1, 0)
        assert dom.space.size == 2 and cod.space.opens == (0, 3)

    def test_labeled_assignment(self):
        text = json.dumps({
            "domain": {"points": 2, "labels": ["a", "b"],
                       "opens": [[], ["a"], ["a", "b"]]},
            "codomain": {"points": 2, "labels": ["x", "y"],
                         "opens": [[], ["x", "y"]]},
            "assignment": ["y", "x"],
        })
        f, _, _ = parse_map(text)
        assert f.assignment == (1, 0)

    def test_missing_parts_rejected(self):
        with pytest.raises(ParseError):
            parse_map('{"domain": {"points": 1, "opens": [[], [0]]}}')

    def test_wrong_length_rejected(self):
        with pytest.raises(ParseError):
            parse_map(json.dumps({
                "domain": {"points": 2, "opens": [[], [0, 1]]},
                "codomain": {"points": 1, "opens": [[], [0]]},
                "assignment": [0],
            }))


class TestSubsetSpec:
    def test_blank_is_empty(self):
        doc = parse_space(GOOD)
        assert subset_from_spec(doc, "").mask == 0
        assert subset_from_spec(doc, "  ").mask == 0

    def test_labels_and_indices(self):
        doc = parse_space(GOOD)
        assert subset_from_spec(doc, "j,l").mask == 10
        assert subset_from_spec(doc, "1,3").mask == 10
        assert subset_from_spec(doc, " k , j ").mask == 6

    def test_bad_tokens(self):
        doc = parse_space(GOOD)
        with pytest.raises(ParseError):
            subset_from_spec(doc, "z")
        with pytest.raises(ParseError):
            subset_from_spec(doc, "9")
