"""
Base class for the json documents read and written by the toolkit
"""
from __future__ import annotations

import abc
import json
import pathlib
import typing

from typing import Final

import typing_extensions

from pydantic import BaseModel
from pydantic import ValidationError

from anticipation_lab.exceptions import InputError

DocumentSource = typing.Union[dict, pathlib.Path, str, bytes]

JSON_OPENERS: Final[typing.Tuple[str, ...]] = ("{", "[")


def looks_like_json(text: str) -> bool:
    return text.lstrip().startswith(JSON_OPENERS)


class ParseableModel(abc.ABC, BaseModel):
    """
    A document that can be read from a dict, a file or raw json with one call
    """
    class Config:
        allow_population_by_field_name = True

    @classmethod
    def parse(cls, data: DocumentSource) -> typing_extensions.Self:
        """
        Read a document

        A string is taken as json when it opens with a brace or bracket and as a file path otherwise

        Args:
            data: A dict, a path, or json text

        Returns:
            The parsed document

        Raises:
            TypeError: if the data is none of the accepted kinds
            InputError: if the file is missing or the content does not describe this document
        """
        if isinstance(data, str) and not looks_like_json(data):
            data = pathlib.Path(data)

        if isinstance(data, pathlib.Path) and not data.is_file():
            raise InputError(f"No {cls.__name__} can be read from '{data}': it is not a file")

        if isinstance(data, pathlib.Path):
            reader = cls.parse_file
        elif isinstance(data, dict):
            reader = cls.parse_obj
        elif isinstance(data, (str, bytes)):
            reader = cls.parse_raw
        else:
            raise TypeError(f"A {cls.__name__} cannot be read from a '{type(data).__name__}'")

        try:
            return reader(data)
        except (ValidationError, json.JSONDecodeError, UnicodeDecodeError) as error:
            raise InputError(f"Could not read a {cls.__name__}: {error}") from error

    def to_json(self) -> str:
        """
        Indented json with aliased field names, declaration order and no null fields
        """
        return json.dumps(self.dict(by_alias=True, exclude_none=True), indent=4) + "\n"


def complex_pair(value: typing.SupportsComplex) -> typing.List[float]:
    """
    Write a complex number as a `[re, im]` pair
    """
    value = complex(value)
    return [value.real, value.imag]
