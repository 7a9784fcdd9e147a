"""
Serializers - تحويل النتائج إلى JSON
marshmallow schemas for the reports; exact counts travel as decimal strings
"""

import json
from typing import Any

from marshmallow import EXCLUDE, Schema, ValidationError as SchemaError, fields, post_load

from algebra.boolean_ring import Monomial
from models.reports import CosetRecord, PairRecord, Spectrum, WeightReport
from utils.validation_helpers import ValidationError


class MonomialField(fields.Field):
    """Monomial <-> sorted list of variable indices"""

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        return list(value.vars)

    def _deserialize(self, value, attr, data, **kwargs):
        if not isinstance(value, list) or not all(isinstance(i, int) and i >= 0 for i in value):
            raise SchemaError('Expected a list of variable indices')
        return Monomial.from_vars(value)


class ExactCount(fields.Integer):
    """Unbounded integer written as a decimal string"""

    def __init__(self, **kwargs):
        super().__init__(as_string=True, strict=False, **kwargs)


class PairRecordSchema(Schema):
    class Meta:
        ordered = True
        unknown = EXCLUDE

    f_row = fields.Integer(required=True)
    g_row = fields.Integer(required=True)
    f = MonomialField(required=True)
    g = MonomialField(required=True)
    h = MonomialField(required=True)
    f_over_h = MonomialField(required=True)
    g_over_h = MonomialField(required=True)
    lambda_h = fields.Integer(required=True)
    lambda_f_part = fields.Integer(required=True)
    lambda_g_part = fields.Integer(required=True)
    alpha = fields.Integer(required=True)
    exponent = fields.Integer(dump_only=True)
    count = ExactCount(required=True)

    @post_load
    def make_record(self, data, **kwargs):
        return PairRecord(**data)


class WeightReportSchema(Schema):
    class Meta:
        ordered = True
        unknown = EXCLUDE

    m = fields.Integer(required=True)
    r = fields.Integer(required=True)
    w_min = ExactCount(required=True, data_key='wmin')
    A_wmin = ExactCount(required=True)
    A_1p5wmin = ExactCount(required=True)
    pairs = fields.List(fields.Nested(PairRecordSchema), load_default=list)

    @post_load
    def make_report(self, data, **kwargs):
        data['pairs'] = tuple(data['pairs'])
        return WeightReport(**data)


class SpectrumSchema(Schema):
    class Meta:
        ordered = True

    K = fields.Integer(required=True)
    N = fields.Integer(required=True)
    counts = fields.Dict(keys=ExactCount(), values=ExactCount(), required=True)

    @post_load
    def make_spectrum(self, data, **kwargs):
        return Spectrum(**data)


class CosetRecordSchema(Schema):
    class Meta:
        ordered = True

    f_row = fields.Integer()
    g_row = fields.Integer()
    K_f = fields.List(fields.Integer())
    K_g = fields.List(fields.Integer())
    shared = fields.List(fields.Integer())
    r = fields.Integer()
    count = ExactCount()

    @post_load
    def make_record(self, data, **kwargs):
        for key in ('K_f', 'K_g', 'shared'):
            data[key] = tuple(data[key])
        return CosetRecord(**data)


def dump_json(schema: Schema, obj: Any, indent: int = 2, many: bool = False) -> str:
    """Serialize with the schema's field order preserved"""
    return json.dumps(schema.dump(obj, many=many), indent=indent, ensure_ascii=False)


def load_json(schema: Schema, text: str, many: bool = False) -> Any:
    """
    Parse JSON produced by dump_json back into model objects

    Raises:
        ValidationError: when the text is not valid JSON or does not match the schema
    """
    try:
        return schema.load(json.loads(text), many=many)
    except json.JSONDecodeError as e:
        raise ValidationError(f'Invalid JSON: {e.msg}', details={'line': e.lineno})
    except SchemaError as e:
        raise ValidationError('Report does not match its schema', details={'errors': e.messages})
