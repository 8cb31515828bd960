"""
The json document written by the self test
"""
import typing

from pydantic import Field

from .base import ParseableModel


class CriterionDocument(ParseableModel):
    name: str
    passed: bool
    elapsed: float = Field(description="Wall clock seconds")
    details: typing.Dict[str, typing.Any] = Field(default_factory=dict)


class SelfTestDocument(ParseableModel):
    """
    `{"passed": bool, "criteria": [{"name": str, "passed": bool, "elapsed": float, "details": {...}}, ...]}`
    """
    passed: bool
    quick: bool = False
    criteria: typing.List[CriterionDocument]
