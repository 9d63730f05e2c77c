from __future__ import annotations

import json

import pytest

from gaussreal import GaussWord, MalformedWord, ParseError, parse_gauss_code
from gaussreal.codec import (
    SCHEMA_VERSION,
    document_to_json,
    emit_batch,
    emit_gauss_code,
    new_document,
    parse_batch,
)


def test_parse_whitespace_separated_tokens():
    w = parse_gauss_code(" 1 2  10 1\t2 10 ")
    assert w.symbols == ("1", "2", "10", "1", "2", "10")


def test_parse_compact_single_character_form():
    assert parse_gauss_code("abab").symbols == ("a", "b", "a", "b")
    assert parse_gauss_code("1212").symbols == ("1", "2", "1", "2")


def test_parse_empty_is_the_empty_word():
    assert parse_gauss_code("").n == 0
    assert parse_gauss_code("  \n").n == 0


def test_parse_rejects_non_alphanumeric_compact_input():
    with pytest.raises(ParseError):
        parse_gauss_code("a-a")


def test_emit_roundtrips_and_ends_with_newline():
    w = parse_gauss_code("1 2 1 2")
    out = emit_gauss_code(w)
    assert out == "1 2 1 2\n"
    assert parse_gauss_code(out) == w


def test_batch_skips_blanks_and_comments_and_numbers_lines():
    text = "# header\n\n1 1\n  # note\n1 2 1 2\n"
    entries = parse_batch(text)
    assert [(line, w.text()) for line, w in entries] == [(3, "1 1"), (5, "1 2 1 2")]
    again = emit_batch([w for _, w in entries])
    assert parse_batch(again) == [(1, entries[0][1]), (2, entries[1][1])]


def test_batch_errors_carry_the_line_number():
    with pytest.raises(MalformedWord) as info:
        parse_batch("1 1\n\n1 2 3\n")
    assert "line 3" in str(info.value)
    with pytest.raises(ParseError) as info:
        parse_batch("1 1\na-a\n")
    assert "line 2" in str(info.value)


def test_document_json_is_canonical():
    a = document_to_json({"b": 1, "a": [2, 3]})
    b = document_to_json({"a": [2, 3], "b": 1})
    assert a == b
    assert a.endswith("\n")
    assert json.loads(a) == {"a": [2, 3], "b": 1}
    assert "  " in a  # indented, human-diffable


def test_new_document_carries_schema_version():
    doc = new_document("oracle")
    assert doc == {"schema_version": SCHEMA_VERSION, "kind": "oracle"}


def test_parse_accepts_gauss_word_text_of_any_labels():
    w = GaussWord.from_tokens(["x1", "y", "x1", "y"])
    assert parse_gauss_code(w.text()) == w
