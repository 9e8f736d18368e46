"""Pydantic request/response models for the HTTP service and the CLI.

Polynomials and rational functions travel as strings in the canonical
grammar ("t^-1 - 1 + t", "(t-1)/(t-1+t^-1)"); rational numbers as ints or
"p/q" strings; two-loop elements as strings in x and y.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Union

from pydantic import BaseModel, Field

Entry = Union[int, str]


class SeifertRequest(BaseModel):
    genus: int
    seifert_matrix: List[List[Entry]]


class AlexanderResponse(BaseModel):
    alexander: str
    factors: List[str]
    annihilator: str


class BlanchfieldRequest(BaseModel):
    seifert: SeifertRequest
    u: Optional[List[Entry]] = None
    w: Optional[List[Entry]] = None


class BlanchfieldResponse(BaseModel):
    alexander: str
    lk_e: Optional[str] = None
    pushoff_table: Optional[List[List[str]]] = None


class TableModel(BaseModel):
    """Named matrices of polynomial-fraction strings."""

    model_config = {"extra": "allow"}


class DehnRequest(BaseModel):
    delta: str
    annihilator: str
    p: int
    q: int
    genus: int
    table: Dict[str, List[List[Entry]]]


class ElementResponse(BaseModel):
    element: str
    aug: str


class TripleFormModel(BaseModel):
    g: int
    values: Dict[str, Entry] = Field(default_factory=dict)


class LPRequest(BaseModel):
    delta: str
    annihilator: str
    I_A: TripleFormModel
    I_B: TripleFormModel
    tables: Dict[str, List[List[Entry]]]


class ClasperRequest(BaseModel):
    delta: str
    annihilator: str
    tables: Dict[str, List[List[Entry]]]


class MoveModel(BaseModel):
    model_config = {"extra": "allow"}

    kind: str


class ScriptBase(BaseModel):
    alexander: str
    annihilator: str


class ScriptRequest(BaseModel):
    base: ScriptBase
    moves: List[MoveModel] = Field(default_factory=list)


class ScriptResponse(BaseModel):
    Q2: str
    aug: str
    # "lambda" is reserved in Python; serialized under its JSON name
    lam: Optional[str] = Field(default=None, alias="lambda")

    model_config = {"populate_by_name": True}


class PkRequest(BaseModel):
    delta: str
    annihilator: str
    k: int
    cutoff: Optional[int] = None


class PkResponse(BaseModel):
    p_big: str
    p_small: str
    augmentation: str


class ReduceRequest(BaseModel):
    delta: str
    annihilator: str
    element: str
    K: Optional[int] = None


class ReduceResponse(BaseModel):
    in_span: bool
    coefficients: Optional[List[str]] = None
    reduced: str
    augmentation: str
    cutoff: int


class VerifyRequest(BaseModel):
    seifert: Optional[SeifertRequest] = None
    seed: int = 0
    trials: int = 10


class FailureModel(BaseModel):
    check: str
    witness: str


class VerifyResponse(BaseModel):
    residuals_zero: bool
    checks: List[str]
    failures: List[FailureModel] = Field(default_factory=list)


class ErrorBody(BaseModel):
    type: str
    message: str


class ErrorResponse(BaseModel):
    error: ErrorBody
