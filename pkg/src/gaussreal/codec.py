"""Reading and writing Gauss codes and report documents.

Wire formats:

- *Gauss code text*: whitespace-separated tokens ("1 2 1 2").  When the
  input contains no whitespace at all it is read as the compact form, one
  alphanumeric character per token ("abab").  Emission always uses the
  spaced form, single spaces, newline-terminated.

- *Batch files*: one Gauss code per line; blank lines and lines starting
  with '#' are ignored.

- *Structured reports*: JSON documents with a top-level "schema_version"
  and "kind".  Serialisation is deterministic (sorted keys, fixed
  separators, trailing newline) so equal inputs produce byte-identical
  output; volatile data such as wall-clock time never enters the
  structured form.
"""

from __future__ import annotations

import json

from .core import GaussWord, MalformedWord

SCHEMA_VERSION = 1


class ParseError(ValueError):
    """Input text that cannot be tokenised as a Gauss code."""


def parse_gauss_code(text: str) -> GaussWord:
    """Parse spaced or compact Gauss code text into a validated word."""
    stripped = text.strip()
    if not stripped:
        return GaussWord(())
    if any(ch.isspace() for ch in stripped):
        tokens = stripped.split()
    else:
        # Compact form: one character per token.
        if not stripped.isalnum():
            raise ParseError(
                "compact Gauss code may only contain alphanumeric characters: %r"
                % text
            )
        tokens = list(stripped)
    return GaussWord.from_tokens(tokens)


def emit_gauss_code(word: GaussWord) -> str:
    """Canonical text form: tokens joined by single spaces, newline-terminated."""
    return word.text() + "\n"


def parse_batch(text: str) -> list[tuple[int, GaussWord]]:
    """Parse a batch file body into (line_number, word) pairs.

    Line numbers are 1-based and refer to the original text, so error
    messages and counterexample files can point back at their source.
    """
    out: list[tuple[int, GaussWord]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.strip()
        if not body or body.startswith("#"):
            continue
        try:
            out.append((lineno, parse_gauss_code(body)))
        except (ParseError, MalformedWord) as exc:
            raise type(exc)("line %d: %s" % (lineno, exc)) from None
    return out


def emit_batch(words) -> str:
    return "".join(emit_gauss_code(w) for w in words)


def document_to_json(document: dict) -> str:
    """Deterministic JSON serialisation for structured reports."""
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def new_document(kind: str) -> dict:
    return {"schema_version": SCHEMA_VERSION, "kind": kind}
