"""FastAPI application exposing the library. Every computation is a pure
function of the request body, so responses are deterministic and the
service holds no state worth persisting."""
from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import agcodes, bounds, curves, qseries, report, riemannroch
from .errors import DomainError
from .schemas import (
    BoundsRequest,
    BoundsResponse,
    CodeRequest,
    CodeResponse,
    ConicExampleResponse,
    GenusRequest,
    GenusResponse,
    HeckeRequest,
    HeckeResponse,
    ModelRequest,
    ModelResponse,
    PointsRequest,
    PointsResponse,
    QSeriesRequest,
    QSeriesResponse,
    ReproduceRequest,
    ReproduceResponse,
    WeightsRequest,
    WeightsResponse,
)


def _resolve_model(level, family, p) -> tuple[curves.CurveModel, str, int]:
    """Model, descriptive label, and the y pole weight for one-point bases."""
    if (level is None) == (family is None):
        raise DomainError("give exactly one of level or family")
    if family == "xpx":
        if p < 3 or p % 2 == 0:
            raise DomainError("the y^2 = x^p - x family needs an odd prime p")
        f = [0] * (p + 1)
        f[1] = -1
        f[p] = 1
        model = curves.HyperellipticModel(f=tuple(f))
        return model, f"y^2 = x^{p} - x over GF({p})", p
    entry = curves.x0_model(level)
    weight = 3 if isinstance(entry.model, curves.WeierstrassModel) else None
    if weight is None:
        raise DomainError(
            f"level {level} uses a two-point-at-infinity model; one-point codes "
            "are built on the single-infinite-point models"
        )
    return entry.model, f"level-{level} model over GF({p})", weight


def _resolve_model_any(level, family, p):
    """Like _resolve_model but admits the two-point-at-infinity levels."""
    if (level is None) == (family is None):
        raise DomainError("give exactly one of level or family")
    if family == "xpx":
        return _resolve_model(level, family, p)
    entry = curves.x0_model(level)
    return entry.model, f"level-{level} model over GF({p})", 3


def _build_code(req) -> agcodes.LinearCode:
    model, label, weight = _resolve_model(req.level, req.family, req.p)
    pts = [pt for pt in curves.enumerate_points(model, req.p) if not pt.is_infinity]
    basis = riemannroch.one_point_basis(req.a, y_weight=weight)
    return agcodes.evaluation_code(
        basis, pts, req.p, provenance=f"{label}, pole bound {req.a} at infinity"
    )


def create_app() -> FastAPI:
    app = FastAPI(title="curvecodes", version="0.1.0")

    @app.exception_handler(DomainError)
    async def domain_error_handler(request: Request, exc: DomainError):
        return JSONResponse(
            status_code=400,
            content={"error": {"type": type(exc).__name__, "message": str(exc)}},
        )

    @app.exception_handler(ValueError)
    async def value_error_handler(request: Request, exc: ValueError):
        # argument-validation failures raised inside the library
        return JSONResponse(
            status_code=400,
            content={"error": {"type": "ValueError", "message": str(exc)}},
        )

    @app.get("/v1/health")
    def health():
        return {"status": "ok", "schema": 1}

    @app.post("/v1/points", response_model=PointsResponse)
    def points(req: PointsRequest) -> PointsResponse:
        model, _, _ = _resolve_model_any(req.level, req.family, req.p)
        pts = curves.enumerate_points(model, req.p)
        affine = [(pt.x, pt.y) for pt in pts if not pt.is_infinity]
        inf = sum(1 for pt in pts if pt.is_infinity)
        return PointsResponse(p=req.p, count=len(pts), affine=affine, infinity=inf)

    @app.post("/v1/model", response_model=ModelResponse)
    def model(req: ModelRequest) -> ModelResponse:
        entry = curves.x0_model(req.level)
        m = entry.model
        if isinstance(m, curves.WeierstrassModel):
            kind = "weierstrass"
            coeffs = {"a1": m.a1, "a2": m.a2, "a3": m.a3, "a4": m.a4, "a6": m.a6}
        else:
            kind = "hyperelliptic"
            coeffs = {"f": list(m.f), "h": list(m.h)}
        return ModelResponse(
            level=req.level,
            equation=entry.note,
            discriminant=entry.discriminant,
            kind=kind,
            coefficients=coeffs,
        )

    @app.post("/v1/genus", response_model=GenusResponse)
    def genus(req: GenusRequest) -> GenusResponse:
        g = bounds.genus_x0(req.N)
        return GenusResponse(
            N=g.N, mu=g.mu, mu2=g.mu2, mu3=g.mu3, mu_inf=g.mu_inf, genus=g.genus
        )

    @app.post("/v1/code", response_model=CodeResponse)
    def code(req: CodeRequest) -> CodeResponse:
        c = _build_code(req)
        kwargs = {"jobs": req.jobs}
        if req.max_words is not None:
            kwargs["max_words"] = req.max_words
        par = agcodes.code_parameters(c, **kwargs)
        resp = CodeResponse(
            p=c.p, n=par.n, k=par.k, d=par.d, mds=par.mds, t=par.t,
            provenance=c.provenance,
        )
        if req.with_matrices:
            sysm, perm = agcodes.systematic_form(c)
            h = agcodes.parity_check_matrix(c)
            resp.generator = c.generator.row_list()
            resp.systematic = sysm.row_list()
            resp.check = h.row_list()
            resp.column_permutation = list(perm)
        return resp

    @app.post("/v1/weights", response_model=WeightsResponse)
    def weights(req: WeightsRequest) -> WeightsResponse:
        c = _build_code(req)
        kwargs = {"strategy": req.strategy, "jobs": req.jobs}
        if req.max_words is not None:
            kwargs["max_words"] = req.max_words
        dist = agcodes.weight_distribution(c, **kwargs)
        return WeightsResponse(
            n=c.n,
            k=c.k,
            p=c.p,
            counts=list(dist.counts),
            polynomial=dist.polynomial_text(req.convention),
            convention=req.convention,
        )

    @app.post("/v1/bounds", response_model=BoundsResponse)
    def bounds_curve(req: BoundsRequest) -> BoundsResponse:
        columns = ["delta", "gv", "tvz"]
        with_prop7 = req.genus is not None and req.n is not None
        if with_prop7:
            columns.append("prop7")
        rows = []
        for i in range(req.grid + 1):
            delta = i / req.grid
            row = [delta, bounds.gv_bound(req.q, delta), bounds.tvz_line(req.q, delta)]
            if with_prop7:
                row.append(bounds.prop7_bound(req.genus, req.n))
            rows.append(row)
        return BoundsResponse(
            q=req.q,
            columns=columns,
            rows=rows,
            excess_interval=bounds.tvz_exceeds_gv(req.q, max(req.grid, 100)),
        )

    @app.post("/v1/qseries", response_model=QSeriesResponse)
    def qseries_endpoint(req: QSeriesRequest) -> QSeriesResponse:
        if req.which == "j":
            s = qseries.j_series(req.M)
        elif req.which == "delta":
            s = qseries.delta_series(req.M)
        elif req.which == "eta11":
            s = qseries.eta_quotient(qseries.LEVEL11_ETA_SPEC, req.M)
        elif req.which == "e4":
            s = qseries.eisenstein_normalized(4, req.M)
        elif req.which == "e6":
            s = qseries.eisenstein_normalized(6, req.M)
        else:
            if not req.eta_spec:
                raise DomainError("which == 'eta' needs eta_spec factors")
            spec = qseries.EtaQuotientSpec(tuple((d, e) for d, e in req.eta_spec))
            s = qseries.eta_quotient(spec, req.M)
        return QSeriesResponse(
            lowest_exponent=s.low,
            coefficients=list(s.coeffs),
            truncation=s.trunc,
            text=s.text(),
        )

    @app.post("/v1/hecke", response_model=HeckeResponse)
    def hecke(req: HeckeRequest) -> HeckeResponse:
        trace = curves.hecke_trace_by_count(req.N, req.p)
        coeff = None
        agree = None
        if req.N == 11:
            coeff = qseries.hecke_coeff_level11(req.p)
            agree = coeff == trace
            text = f"Tr(T_{req.p}) = {trace} (count) = {coeff} (eta)"
        else:
            text = f"Tr(T_{req.p}) = {trace} (count)"
        return HeckeResponse(
            N=req.N, p=req.p, trace_by_count=trace, coefficient=coeff, agree=agree, text=text
        )

    @app.post("/v1/conic-example", response_model=ConicExampleResponse)
    def conic_example() -> ConicExampleResponse:
        rep = report.build_report(only="example13")
        return ConicExampleResponse(rows=[r.as_dict() for r in rep.rows], ok=rep.ok)

    @app.post("/v1/reproduce", response_model=ReproduceResponse)
    def reproduce(req: ReproduceRequest) -> ReproduceResponse:
        rep = report.build_report(
            only=req.only, include_slow=req.include_slow, jobs=req.jobs
        )
        return ReproduceResponse(
            ok=rep.ok, rows=[r.as_dict() for r in rep.rows], text=rep.text()
        )

    return app


app = create_app()
