"""
HTTP API tests
اختبارات واجهات الـ API
"""

import pytest


class TestEnumerateEndpoint:
    """Test POST /api/codes/enumerate"""

    def test_reed_muller(self, client):
        response = client.post('/api/codes/enumerate', json={'rm': [2, 5]})
        assert response.status_code == 200
        body = response.get_json()
        assert body['success'] is True
        assert body['data']['A_wmin'] == '620'
        assert body['data']['wmin'] == '8'
        assert 'pairs' not in body['data']
        assert body['meta'] == {'N': 32, 'K': 16, 'closure_additions': []}

    def test_rows_with_closure_and_pairs(self, client):
        response = client.post('/api/codes/enumerate', json={
            'rows': [112, 104, 100, 98, 97, 88, 84], 'm': 7, 'closure': True, 'pairs': True
        })
        assert response.status_code == 200
        body = response.get_json()
        assert body['data']['A_1p5wmin'] == '5376'
        assert [p['count'] for p in body['data']['pairs']] == ['512', '256', '512', '1024', '1024', '2048']
        assert len(body['meta']['closure_additions']) == 36

    def test_not_decreasing(self, client):
        response = client.post('/api/codes/enumerate', json={'rows': [112, 104], 'm': 7})
        assert response.status_code == 422
        assert response.get_json()['error']['code'] == 'NOT_DECREASING'

    def test_unsupported_code(self, client):
        response = client.post('/api/codes/enumerate', json={'rm': [3, 3]})
        assert response.status_code == 422

    def test_missing_fields(self, client):
        response = client.post('/api/codes/enumerate', json={'rows': [0]})
        assert response.status_code == 400
        error = response.get_json()['error']
        assert error['code'] == 'VALIDATION_ERROR'
        assert error['details']['missing_fields'] == ['m']

    def test_body_must_be_json(self, client):
        response = client.post('/api/codes/enumerate', data='rows', content_type='text/plain')
        assert response.status_code == 400

    def test_row_out_of_range(self, client):
        response = client.post('/api/codes/enumerate', json={'rows': [40], 'm': 5})
        assert response.status_code == 400
        assert response.get_json()['error']['code'] == 'INDEX_OUT_OF_RANGE'

    @pytest.mark.parametrize('body, field', [
        ({'rm': ['a', 5]}, 'rm'),
        ({'rm': [2, None]}, 'rm'),
        ({'rows': [3], 'm': 'x'}, 'm'),
        ({'rows': [3], 'm': 2.5}, 'm'),
    ])
    def test_non_integer_fields(self, client, body, field):
        response = client.post('/api/codes/enumerate', json=body)
        assert response.status_code == 400
        error = response.get_json()['error']
        assert error['code'] == 'VALIDATION_ERROR'
        assert error['details']['field'] == field


class TestOrbitEndpoint:
    """Test POST /api/codes/orbit"""

    def test_vars(self, client):
        response = client.post('/api/codes/orbit', json={'vars': [0, 2], 'm': 3})
        assert response.status_code == 200
        data = response.get_json()['data']
        assert data['exponent'] == [2, 0, 1]
        assert data['cardinality'] == '8'
        assert len(data['orbit']) == 8

    def test_row(self, client):
        response = client.post('/api/codes/orbit', json={'row': 5, 'm': 3})
        assert response.get_json()['data']['monomial'] == [1]

    def test_orbit_cap(self, app, client):
        app.config['ORBIT_CAP'] = 16
        response = client.post('/api/codes/orbit', json={'vars': [3, 4], 'm': 5})
        assert response.status_code == 413
        assert response.get_json()['error']['code'] == 'TOO_LARGE'

    def test_missing_m(self, client):
        response = client.post('/api/codes/orbit', json={'vars': [0]})
        assert response.status_code == 400

    @pytest.mark.parametrize('body, field', [
        ({'row': 'abc', 'm': 3}, 'row'),
        ({'row': [5], 'm': 3}, 'row'),
        ({'vars': ['x'], 'm': 3}, 'vars'),
        ({'vars': '0,2', 'm': 3}, 'vars'),
        ({'vars': [0], 'm': 'three'}, 'm'),
    ])
    def test_non_integer_fields(self, client, body, field):
        response = client.post('/api/codes/orbit', json=body)
        assert response.status_code == 400
        error = response.get_json()['error']
        assert error['code'] == 'VALIDATION_ERROR'
        assert error['details']['field'] == field

    def test_variable_outside_m(self, client):
        response = client.post('/api/codes/orbit', json={'vars': [0, 4], 'm': 3})
        assert response.status_code == 400
        assert response.get_json()['error']['code'] == 'INDEX_OUT_OF_RANGE'


class TestBoundEndpoint:
    """Test POST /api/codes/bound"""

    def test_points(self, client):
        response = client.post('/api/codes/bound', json={'rm': [2, 5], 'ebn0_db': [0, 3, 6]})
        assert response.status_code == 200
        data = response.get_json()['data']
        assert data['rate'] == 0.5
        assert data['weights'] == [8, 12]
        bounds = [p['bound'] for p in data['points']]
        assert bounds == sorted(bounds, reverse=True)

    def test_needs_points(self, client):
        response = client.post('/api/codes/bound', json={'rm': [2, 5]})
        assert response.status_code == 400

    @pytest.mark.parametrize('extra, field', [
        ({'rate': 'half'}, 'rate'),
        ({'rate': None}, 'rate'),
        ({'ebn0_db': [0, 'high']}, 'ebn0_db'),
    ])
    def test_non_numeric_fields(self, client, extra, field):
        body = {'rm': [2, 5], 'ebn0_db': [0, 3]}
        body.update(extra)
        response = client.post('/api/codes/bound', json=body)
        assert response.status_code == 400
        assert response.get_json()['error']['details']['field'] == field


class TestServiceEndpoints:
    """Test index, health and error handlers"""

    def test_index(self, client):
        body = client.get('/').get_json()
        assert body['data']['endpoints']['enumerate'] == '/api/codes/enumerate'

    def test_health(self, client):
        response = client.get('/api/health')
        assert response.status_code == 200
        data = response.get_json()['data']
        assert data['status'] in ('healthy', 'degraded')
        assert data['limits']['oracle_k_limit'] == 20

    def test_not_found(self, client):
        response = client.get('/api/unknown')
        assert response.status_code == 404
        assert response.get_json()['error']['code'] == 'NOT_FOUND'

    @pytest.mark.parametrize('path', ['/api/codes/enumerate', '/api/codes/orbit'])
    def test_method_not_allowed(self, client, path):
        assert client.get(path).status_code == 405
