"""
📊 Enumeration APIs - واجهات عدّ الكلمات الرمزية
Group: Codes APIs (3 endpoints)
"""

from flask import Blueprint, current_app, jsonify, request

from algebra.boolean_ring import Monomial, monomial_of_row
from enumeration.weight_enumerator import count_1p5, union_bound
from groups.lta_group import iter_orbit, orbit_cardinality, orbit_exponent_breakdown
from models.code_model import CodeSpec, from_row_indices, reed_muller
from utils.logging_helpers import get_logger
from utils.response_helpers import success_response
from utils.serializers import WeightReportSchema
from utils.validation_helpers import (
    IndexOutOfRange, TooLarge, ValidationError, validate_code_source, validate_float, validate_int, validate_m
)

logger = get_logger(__name__)

# Create blueprint
codes_bp = Blueprint('codes', __name__, url_prefix='/api/codes')


def _json_body() -> dict:
    data = request.get_json(silent=True)
    if not isinstance(data, dict):
        raise ValidationError('Request body must be a JSON object')
    return data


def _code_from_body(data: dict) -> CodeSpec:
    rows, m, rm = validate_code_source(data)
    if rm is not None:
        return reed_muller(*rm)
    return from_row_indices(rows, m, strict=not bool(data.get('closure', False)))


@codes_bp.route('/enumerate', methods=['POST'])
def enumerate_code():
    """
    POST /api/codes/enumerate
    A_wmin and A_1.5wmin of a decreasing monomial code
    """
    data = _json_body()
    spec = _code_from_body(data)
    report = WeightReportSchema().dump(count_1p5(spec))
    if not data.get('pairs', False):
        report.pop('pairs')
    meta = {'N': spec.N, 'K': spec.K, 'closure_additions': list(spec.closure_additions)}
    return jsonify(success_response(report, message=spec.describe(), meta=meta))


@codes_bp.route('/orbit', methods=['POST'])
def list_orbit():
    """
    POST /api/codes/orbit
    Orbit of a monomial under its LTA subgroup
    """
    data = _json_body()
    if 'm' not in data:
        raise ValidationError('Missing required fields', details={'missing_fields': ['m']})
    m = validate_m(data['m'], current_app.config['MAX_M'])
    if 'row' in data:
        row = validate_int(data['row'], 'row')
        if not 0 <= row < (1 << m):
            raise IndexOutOfRange(f'Row {row} outside [0, {1 << m})', field='row')
        f = monomial_of_row(row, m)
    elif 'vars' in data:
        if not isinstance(data['vars'], list):
            raise ValidationError('vars must be a list of integers', field='vars')
        f = Monomial.from_vars(validate_int(i, 'vars') for i in data['vars'])
        if not f.fits(m):
            raise IndexOutOfRange(f'{f} uses a variable outside [0, {m})', field='vars')
    else:
        raise ValidationError('Give vars or row', field='monomial')

    size = orbit_cardinality(f)
    cap = current_app.config['ORBIT_CAP']
    if size > cap:
        raise TooLarge(f'Orbit of {size} polynomials exceeds the cap {cap}', details={'size': size})
    degree, lambdas = orbit_exponent_breakdown(f)
    polynomials = sorted(set(iter_orbit(f, f, m)), key=lambda P: P.canonical())
    return jsonify(success_response({
        'monomial': list(f.vars),
        'exponent': [degree, *lambdas],
        'cardinality': str(len(polynomials)),
        'orbit': [str(P) for P in polynomials],
    }))


@codes_bp.route('/bound', methods=['POST'])
def block_error_bound():
    """
    POST /api/codes/bound
    Truncated union bound at the requested Eb/N0 points
    """
    data = _json_body()
    spec = _code_from_body(data)
    ebn0_db = data.get('ebn0_db')
    if not isinstance(ebn0_db, list) or not ebn0_db:
        raise ValidationError('ebn0_db must be a non-empty list', field='ebn0_db')
    rate = validate_float(data.get('rate', spec.rate), 'rate')
    report = count_1p5(spec)
    ebn0_db = [validate_float(v, 'ebn0_db') for v in ebn0_db]
    bound = union_bound(report, rate, ebn0_db)
    logger.debug('bound_computed', N=spec.N, K=spec.K, points=len(bound))
    return jsonify(success_response({
        'rate': rate,
        'weights': [w for w, _ in report.terms()],
        'points': [{'ebn0_db': e, 'bound': b} for e, b in zip(ebn0_db, bound)],
    }))
