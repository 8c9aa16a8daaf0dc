import json
from pathlib import Path
from typing import Annotated, List, Literal, Union

from pydantic import BaseModel, Field, TypeAdapter, field_validator, model_validator

from mixvol.services.bodies import (
    Ball,
    Body,
    Polytope,
    Segment,
    TruncatedPrism,
    Zonotope,
)
from mixvol.services.mixed_volume import BodyArgs


class PolytopeIn(BaseModel):
    kind: Literal["polytope"] = "polytope"
    vertices: List[List[float]] = Field(min_length=1)

    @field_validator("vertices")
    @classmethod
    def validate_vertices(cls, v):
        dims = {len(p) for p in v}
        if len(dims) != 1 or dims.pop() not in (2, 3):
            raise ValueError("vertices must all be 2D or all be 3D points")
        return v

    def to_domain(self) -> Polytope:
        return Polytope(self.vertices)


class ZonotopeIn(BaseModel):
    kind: Literal["zonotope"] = "zonotope"
    center: List[float] = Field(min_length=1)
    generators: List[List[float]] = Field(default_factory=list)

    @model_validator(mode="after")
    def validate_dims(self):
        if any(len(g) != len(self.center) for g in self.generators):
            raise ValueError("every generator must have the dimension of the center")
        return self

    def to_domain(self) -> Zonotope:
        return Zonotope(self.center, self.generators)


class BallIn(BaseModel):
    kind: Literal["ball"] = "ball"
    center: List[float] = Field(min_length=1)
    radius: float = Field(ge=0.0)

    def to_domain(self) -> Ball:
        return Ball(self.center, self.radius)


class SegmentIn(BaseModel):
    kind: Literal["segment"] = "segment"
    a: List[float] = Field(min_length=1)
    b: List[float] = Field(min_length=1)

    @model_validator(mode="after")
    def validate_dims(self):
        if len(self.a) != len(self.b):
            raise ValueError("segment endpoints must have the same dimension")
        return self

    def to_domain(self) -> Segment:
        return Segment(self.a, self.b)


class TruncatedPrismIn(BaseModel):
    kind: Literal["truncated_prism"] = "truncated_prism"
    n: int = Field(ge=2)
    eps: float = Field(gt=0.0, lt=1.0)
    M: float = Field(gt=1.0)

    def to_domain(self) -> TruncatedPrism:
        return TruncatedPrism(self.n, self.eps, self.M)


BodyIn = Annotated[
    Union[PolytopeIn, ZonotopeIn, BallIn, SegmentIn, TruncatedPrismIn],
    Field(discriminator="kind"),
]

_body_adapter = TypeAdapter(BodyIn)


class BodySlot(BaseModel):
    body: BodyIn
    multiplicity: int = Field(default=1, ge=0)


class BodyArgsIn(BaseModel):
    items: List[BodySlot] = Field(min_length=1)


class BodySummary(BaseModel):
    kind: str
    dim: int
    affine_dim: int
    volume: float
    surface_area: float
    info: Union[float, None] = None
    body: BodyIn


def body_to_schema(K: Body):
    if isinstance(K, Polytope):
        return PolytopeIn(vertices=K.vertices.tolist())
    if isinstance(K, Zonotope):
        return ZonotopeIn(center=K.center.tolist(), generators=K.generators.tolist())
    if isinstance(K, Ball):
        return BallIn(center=K.center.tolist(), radius=K.radius)
    if isinstance(K, Segment):
        return SegmentIn(a=K.a.tolist(), b=K.b.tolist())
    if isinstance(K, TruncatedPrism):
        return TruncatedPrismIn(n=K.n, eps=K.eps, M=K.M)
    raise TypeError(f"no JSON form for {type(K).__name__}")


def parse_body(data) -> Body:
    return _body_adapter.validate_python(data).to_domain()


def load_body(path) -> Body:
    return parse_body(json.loads(Path(path).read_text()))


def load_body_args(path) -> BodyArgs:
    payload = BodyArgsIn.model_validate(json.loads(Path(path).read_text()))
    return BodyArgs(tuple((s.body.to_domain(), s.multiplicity) for s in payload.items))
