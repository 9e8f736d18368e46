"""HTTP service exposing the toolkit; the CLI talks to this app in-process."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import schemas as sc
from .alexander import (SeifertData, alexander_from_polys, alexander_poly,
                        invariant_factors)
from .blanchfield import CurveClass, EqLinkingTable, eq_link_meridional, \
    surface_pushoff_table
from .laurent import (LaurentPoly, PolyError, RationalFunction, parse_fraction,
                      parse_poly, print_fraction, print_poly)
from .quotient import (QuotientContext, augmentation, reduce as quotient_reduce,
                       span_membership)
from .surgery import (ClasperMove, CobordismMove, ConnectSumMove, DehnMove,
                      FramingTwistMove, LPMove, TripleForm, clasper_S,
                      dehn_surgery_delta, dehn_table, lp_surgery_S, lp_tables,
                      script_evaluate)
from .symthree import parse_sym, print_sym
from .verify import random_seifert, verify_suite

import random

app = FastAPI(title="eqcube", version="0.1.0")


@app.exception_handler(PolyError)
async def poly_error_handler(request: Request, exc: PolyError):
    return JSONResponse(
        status_code=400,
        content={"error": {"type": "input_error", "message": str(exc)}},
    )


@app.exception_handler(ValueError)
async def value_error_handler(request: Request, exc: ValueError):
    return JSONResponse(
        status_code=400,
        content={"error": {"type": "input_error", "message": str(exc)}},
    )


def _fraction(entry) -> Fraction:
    return Fraction(entry)


def _seifert(model: sc.SeifertRequest) -> SeifertData:
    return SeifertData(model.genus, [[_fraction(e) for e in row]
                                     for row in model.seifert_matrix])


def _rf(entry) -> RationalFunction:
    if isinstance(entry, int):
        return RationalFunction(entry)
    return parse_fraction(entry)


def _rf_matrix(rows: List[List]) -> List[List[RationalFunction]]:
    return [[_rf(e) for e in row] for row in rows]


def _triple_form(model: sc.TripleFormModel) -> TripleForm:
    values = {}
    for key, val in model.values.items():
        parts = [int(p) for p in key.split(",")]
        if len(parts) != 3:
            raise PolyError("triple form key must be 'i,j,k': %r" % key)
        values[tuple(parts)] = _fraction(val)
    return TripleForm(model.g, values)


def _context(delta_text: str, ann_text: str, K=None) -> QuotientContext:
    return QuotientContext(parse_poly(delta_text), parse_poly(ann_text), K)


def _dehn_table(raw: Dict[str, List[List]], delta: LaurentPoly) -> EqLinkingTable:
    missing = {"cc", "cd", "dc", "dd"} - set(raw)
    if missing:
        raise PolyError("dehn table is missing %s" % sorted(missing))
    return dehn_table(_rf_matrix(raw["cc"]), _rf_matrix(raw["cd"]),
                      _rf_matrix(raw["dc"]), _rf_matrix(raw["dd"]), delta)


def _lp_tables(raw: Dict[str, List[List]], delta: LaurentPoly) -> EqLinkingTable:
    missing = {"zy", "zz", "yy"} - set(raw)
    if missing:
        raise PolyError("lp tables are missing %s" % sorted(missing))
    return lp_tables(_rf_matrix(raw["zy"]), _rf_matrix(raw["zz"]),
                     _rf_matrix(raw["yy"]), delta)


@app.post("/alexander", response_model=sc.AlexanderResponse)
def alexander(req: sc.SeifertRequest):
    data = invariant_factors(_seifert(req))
    return sc.AlexanderResponse(
        alexander=print_poly(data.delta),
        factors=[print_poly(f) for f in data.factors],
        annihilator=print_poly(data.annihilator),
    )


@app.post("/blanchfield", response_model=sc.BlanchfieldResponse,
          response_model_exclude_none=True)
def blanchfield(req: sc.BlanchfieldRequest):
    S = _seifert(req.seifert)
    out = sc.BlanchfieldResponse(alexander=print_poly(alexander_poly(S)))
    if req.u is not None and req.w is not None:
        u = CurveClass([_fraction(e) for e in req.u])
        w = CurveClass([_fraction(e) for e in req.w])
        out.lk_e = print_fraction(eq_link_meridional(S, u, w))
    else:
        out.pushoff_table = [
            [print_fraction(e) for e in row] for row in surface_pushoff_table(S)
        ]
    return out


@app.post("/dehn", response_model=sc.ElementResponse)
def dehn(req: sc.DehnRequest):
    alex = alexander_from_polys(parse_poly(req.delta), parse_poly(req.annihilator))
    table = _dehn_table(req.table, alex.delta)
    delta = dehn_surgery_delta(req.p, req.q, table, req.genus, alex)
    return sc.ElementResponse(element=print_sym(delta),
                              aug=str(augmentation(delta)))


@app.post("/lp", response_model=sc.ElementResponse)
def lp(req: sc.LPRequest):
    alex = alexander_from_polys(parse_poly(req.delta), parse_poly(req.annihilator))
    tables = _lp_tables(req.tables, alex.delta)
    S = lp_surgery_S(_triple_form(req.I_A), _triple_form(req.I_B), tables, alex)
    return sc.ElementResponse(element=print_sym(S), aug=str(augmentation(S)))


@app.post("/clasper", response_model=sc.ElementResponse)
def clasper(req: sc.ClasperRequest):
    alex = alexander_from_polys(parse_poly(req.delta), parse_poly(req.annihilator))
    tables = _lp_tables(req.tables, alex.delta)
    S = clasper_S(tables, alex)
    return sc.ElementResponse(element=print_sym(S), aug=str(augmentation(S)))


def _move(raw: sc.MoveModel, delta: LaurentPoly):
    extra = raw.model_dump()
    kind = extra.pop("kind")
    if kind == "dehn":
        table = _dehn_table(extra["table"], delta)
        lam = extra.get("lambda")
        return DehnMove(int(extra["p"]), int(extra["q"]), table,
                        int(extra["genus"]),
                        None if lam is None else _fraction(lam))
    if kind == "lp":
        return LPMove(
            _triple_form(sc.TripleFormModel(**extra["I_A"])),
            _triple_form(sc.TripleFormModel(**extra["I_B"])),
            _lp_tables(extra["tables"], delta),
        )
    if kind == "clasper":
        return ClasperMove(_lp_tables(extra["tables"], delta))
    if kind == "connect_sum":
        return ConnectSumMove(_fraction(extra["lambda"]))
    if kind == "framing":
        return FramingTwistMove(int(extra["count"]))
    if kind == "cobordism":
        return CobordismMove(tuple(_rf(p) for p in extra["pushoffs"]))
    raise PolyError("unknown move kind %r" % kind)


@app.post("/script", response_model=sc.ScriptResponse)
def script(req: sc.ScriptRequest):
    base = alexander_from_polys(parse_poly(req.base.alexander),
                                parse_poly(req.base.annihilator))
    moves = [_move(m, base.delta) for m in req.moves]
    state = script_evaluate(moves, base)
    return sc.ScriptResponse(
        Q2=print_sym(state.Q2),
        aug=str(state.augmentation()),
        lam=None if state.lam is None else str(state.lam),
    )


@app.post("/pk", response_model=sc.PkResponse)
def pk(req: sc.PkRequest):
    if req.k < 1:
        raise PolyError("k must be >= 1")
    ctx = _context(req.delta, req.annihilator, K=1)
    big = ctx.p_big(req.k)
    return sc.PkResponse(
        p_big=print_sym(big),
        p_small=print_poly(ctx.p_small(req.k)),
        augmentation=str(augmentation(big)),
    )


@app.post("/reduce", response_model=sc.ReduceResponse)
def reduce_endpoint(req: sc.ReduceRequest):
    ctx = _context(req.delta, req.annihilator, req.K)
    element = parse_sym(req.element)
    coeffs = span_membership(element, ctx)
    return sc.ReduceResponse(
        in_span=coeffs is not None,
        coefficients=None if coeffs is None else [str(c) for c in coeffs],
        reduced=print_sym(quotient_reduce(element, ctx)),
        augmentation=str(augmentation(element)),
        cutoff=ctx.K,
    )


@app.post("/verify", response_model=sc.VerifyResponse)
def verify(req: sc.VerifyRequest):
    if req.seifert is not None:
        S = _seifert(req.seifert)
    else:
        S = random_seifert(random.Random(req.seed))
    report = verify_suite(S, trials=req.trials, seed=req.seed)
    return sc.VerifyResponse(**report)
