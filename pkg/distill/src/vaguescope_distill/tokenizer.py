"""Word tokenization for sentences exported by the scoring pipeline.

The regressor and the attribution code both operate on the same word and
number tokens the upstream scorer counts, so this module replicates that
tokenization contract exactly.  A parity test in the test suite checks the
two implementations against each other on a shared fixture.
"""

from __future__ import annotations

import re

_ACRONYM = r"(?:[^\W\d_]\.){2,}"
_NUMBER = r"\d+(?:[.,]\d+)*%?"
_WORD = r"\w+(?:[-'’]\w+)*"

_TOKEN_RE = re.compile(
    "|".join(
        (
            f"(?P<acronym>{_ACRONYM})",
            f"(?P<number>{_NUMBER})",
            f"(?P<word>{_WORD})",
        )
    )
)


def word_tokens(text: str) -> list[str]:
    """Return the word and number token surfaces of a sentence, in order.

    Punctuation is dropped; acronyms like "U.S." count as single word
    tokens, matching the upstream sentence scorer.
    """
    return [m.group(0) for m in _TOKEN_RE.finditer(text)]
