"""
Helper utilities for reading command-line values.

Partitions and spectra arrive as comma-separated numbers ("3,1,-2.5") or as
``@path`` references to a JSON file holding an array of arrays. Values are
validated, never re-sorted.
"""
import json
import re
from pathlib import Path
from typing import List, Sequence

from src.utils.data_models import Partition, Spectrum
from src.utils.exceptions import InputParseError, InvalidPartitionError, InvalidSpectrumError

NEGATIVE_TOKEN = re.compile(r"^-[\d.]")


class InputParser:
    """Collection of parsing functions for the command-line surface."""

    @staticmethod
    def protect_negative_tokens(argv: Sequence[str]) -> List[str]:
        """
        Keep argparse from reading values like "-1,0,1" as options.

        A leading space makes the token positional; ``split_numbers`` strips it.
        """
        return [" " + token if NEGATIVE_TOKEN.match(token) else token for token in argv]

    @staticmethod
    def split_numbers(text: str) -> List[str]:
        text = text.strip()
        if text in ("", "∅"):
            return []
        return [item.strip() for item in text.split(",")]

    @staticmethod
    def parse_integers(text: str) -> List[int]:
        """
        Parse a comma-separated list of integers.

        Raises:
            InputParseError: With the 1-based position of the first bad entry
        """
        values = []
        for position, item in enumerate(InputParser.split_numbers(text), start=1):
            try:
                values.append(int(item))
            except ValueError:
                raise InputParseError(f"expected an integer, got {item!r}", position) from None
        return values

    @staticmethod
    def parse_reals(text: str) -> List[float]:
        values = []
        for position, item in enumerate(InputParser.split_numbers(text), start=1):
            try:
                values.append(float(item))
            except ValueError:
                raise InputParseError(f"expected a number, got {item!r}", position) from None
        return values

    @staticmethod
    def parse_partition(text: str) -> Partition:
        try:
            return Partition(tuple(InputParser.parse_integers(text)))
        except InvalidPartitionError as exc:
            raise InputParseError(f"invalid partition {text.strip()!r}: {exc}") from exc

    @staticmethod
    def parse_spectrum(text: str) -> Spectrum:
        values = InputParser.parse_reals(text)
        try:
            return Spectrum(tuple(values))
        except InvalidSpectrumError as exc:
            raise InputParseError(f"invalid spectrum {text.strip()!r}: {exc}") from exc

    @staticmethod
    def load_spectra_file(path: str) -> List[Spectrum]:
        """Read a JSON array of arrays of numbers, one spectrum per inner array."""
        try:
            payload = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise InputParseError(f"cannot read spectra from {path}: {exc}") from exc
        if not isinstance(payload, list) or not all(isinstance(row, list) for row in payload):
            raise InputParseError(f"{path} must hold a JSON array of arrays")
        spectra = []
        for position, row in enumerate(payload, start=1):
            try:
                spectra.append(Spectrum(tuple(float(x) for x in row)))
            except (TypeError, ValueError) as exc:
                raise InputParseError(f"invalid spectrum in {path}: {exc}", position) from exc
        return spectra

    @staticmethod
    def parse_spectra(tokens: Sequence[str]) -> List[Spectrum]:
        """Expand ``@path`` tokens and parse the rest as single spectra, in order."""
        spectra: List[Spectrum] = []
        for token in tokens:
            token = token.strip()
            if token.startswith("@"):
                spectra.extend(InputParser.load_spectra_file(token[1:]))
            else:
                spectra.append(InputParser.parse_spectrum(token))
        return spectra


def protect_negative_tokens(argv: Sequence[str]) -> List[str]:
    return InputParser.protect_negative_tokens(argv)


def parse_partition(text: str) -> Partition:
    return InputParser.parse_partition(text)


def parse_spectra(tokens: Sequence[str]) -> List[Spectrum]:
    return InputParser.parse_spectra(tokens)


def parse_integers(text: str) -> List[int]:
    return InputParser.parse_integers(text)


def parse_reals(text: str) -> List[float]:
    return InputParser.parse_reals(text)
