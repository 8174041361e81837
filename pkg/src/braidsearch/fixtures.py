"""Bundled known kernel elements of the mod-5 Burau representation on 4
strands, one per Garside length 54, 59, 65.

Each element is Delta^-d times a positive word; the word files hold those
positive words (162, 174 and 198 letters, with d = 27, 29, 33) and the
.braid.json files the full normal forms.  kernel_mod5_gl54.gnf0.json is
an independent transcription of the length-54 normal form with 0-based
generator labels ("label_base": 0); the loader shifts the labels so any
transcription slip is caught by the tests that compare the two routes.
"""

from __future__ import annotations

import json
from importlib import resources

from . import permutations as perm
from .braid import Braid, braid_from_json_dict, gnf_from_artin, parse_artin_text

GARSIDE_LENGTHS = (54, 59, 65)


def _read(name: str) -> str:
    return resources.files(__package__).joinpath("fixtures", name).read_text()


def fixture_path(name: str) -> str:
    """Filesystem path of a bundled fixture (for handing to the CLI)."""
    return str(resources.files(__package__).joinpath("fixtures", name))


def kernel_word(garside_length: int) -> list[int]:
    """The positive word whose Delta-power shift is a mod-5 kernel element."""
    return parse_artin_text(_read(f"kernel_mod5_gl{garside_length}.word"))


def kernel_braid(garside_length: int) -> Braid:
    """The bundled kernel element itself (negative inf, positive factors)."""
    return braid_from_json_dict(
        json.loads(_read(f"kernel_mod5_gl{garside_length}.braid.json"))
    )


def kernel_braid_from_word(garside_length: int) -> Braid:
    """Recompute the kernel element from its word file: normalize the
    positive word and shift inf down by exponent_sum / length(w_0)."""
    b = gnf_from_artin(kernel_word(garside_length), n=4)
    half = perm.length(perm.longest_element(b.n))
    d, rem = divmod(b.exponent_sum(), half)
    if b.inf != 0 or rem:
        raise ValueError("kernel word fixture is not a Delta-multiple positive word")
    return Braid(b.n, -d, b.factors)


def printed_normal_form() -> Braid:
    """The transcribed normal form of the length-54 element (labels shifted
    from the printed 0-based convention to the package's 1-based one)."""
    data = json.loads(_read("kernel_mod5_gl54.gnf0.json"))
    shift = 1 - int(data["label_base"])
    factors = tuple(
        perm.from_word(data["n"], [i + shift for i in word]) for word in data["factors"]
    )
    return Braid(data["n"], data["inf"], factors).check()
