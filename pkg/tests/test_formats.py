"""
Tests for the JSON file formats.
"""

import json
from fractions import Fraction

import pytest

from slicejunta.core import MultilinearPolynomial, SliceFunction
from slicejunta.exceptions import FormatError
from slicejunta.extremal import eta
from slicejunta.formats import (
    encode_value,
    read_cube_function,
    read_eta_result,
    read_polynomial,
    read_slice_function,
    slice_function_to_dict,
    write_cube_function,
    write_eta_result,
    write_polynomial,
    write_slice_function,
)
from slicejunta.transfer import CubeFunction


def _write_json(path, data):
    path.write_text(json.dumps(data))
    return path


class TestValues:

    def test_encode(self):
        assert encode_value(Fraction(3)) == 3
        assert encode_value(Fraction(-1, 2)) == '-1/2'
        assert encode_value(0.1) == 0.1


class TestSliceFile:

    def test_round_trip(self, tmp_path, c42):
        f = SliceFunction(c42, [0, Fraction(1, 3), 2, Fraction(-5, 2), 1, 0])
        path = tmp_path / 'f.json'
        write_slice_function(f, path)
        assert read_slice_function(path) == f
        assert json.loads(path.read_text())['values'][1] == '1/3'

    def test_dictator_layout(self, dictator42):
        data = slice_function_to_dict(dictator42)
        assert data == {'n': 4, 'k': 2, 'order': 'colex', 'values': [1, 1, 0, 1, 0, 0]}

    def test_float_function_rejected(self, c42):
        with pytest.raises(FormatError):
            slice_function_to_dict(SliceFunction(c42, [0.5] * 6))

    def test_bad_value_names_rank(self, tmp_path):
        path = _write_json(tmp_path / 'f.json', {'n': 4, 'k': 2, 'values': [0, 1, 0, 'x/y', 1, 0]})
        with pytest.raises(FormatError, match=r'rank 3'):
            read_slice_function(path)

    def test_float_value_names_rank(self, tmp_path):
        path = _write_json(tmp_path / 'f.json', {'n': 4, 'k': 2, 'values': [0, 1, 0.5, 0, 1, 0]})
        with pytest.raises(FormatError, match=r'rank 2'):
            read_slice_function(path)

    def test_wrong_length(self, tmp_path):
        path = _write_json(tmp_path / 'f.json', {'n': 4, 'k': 2, 'values': [0, 1]})
        with pytest.raises(FormatError, match='values'):
            read_slice_function(path)

    def test_unknown_field(self, tmp_path):
        path = _write_json(tmp_path / 'f.json', {'n': 4, 'k': 2, 'values': [0] * 6, 'extra': 1})
        with pytest.raises(FormatError):
            read_slice_function(path)

    def test_wrong_order(self, tmp_path):
        path = _write_json(tmp_path / 'f.json', {'n': 4, 'k': 2, 'order': 'lex', 'values': [0] * 6})
        with pytest.raises(FormatError, match='order'):
            read_slice_function(path)

    def test_not_json(self, tmp_path):
        path = tmp_path / 'f.json'
        path.write_text('{"n": 4,')
        with pytest.raises(FormatError):
            read_slice_function(path)


class TestPolynomialFile:

    def test_round_trip(self, tmp_path):
        p = MultilinearPolynomial(3, {(): 1, (1, 3): Fraction(1, 2), (2,): -4})
        path = tmp_path / 'p.json'
        write_polynomial(p, path)
        assert read_polynomial(path) == p
        assert json.loads(path.read_text())['terms'][0] == {'vars': [], 'coeff': 1}

    @pytest.mark.parametrize("vars_", [[2, 1], [1, 1], [0], [4]])
    def test_bad_variables(self, tmp_path, vars_):
        path = _write_json(tmp_path / 'p.json', {'n': 3, 'terms': [{'vars': vars_, 'coeff': 1}]})
        with pytest.raises(FormatError, match='vars'):
            read_polynomial(path)

    def test_duplicate_monomial(self, tmp_path):
        terms = [{'vars': [1], 'coeff': 1}, {'vars': [1], 'coeff': '1/2'}]
        path = _write_json(tmp_path / 'p.json', {'n': 3, 'terms': terms})
        with pytest.raises(FormatError, match='twice'):
            read_polynomial(path)


class TestCubeAndEtaFiles:

    def test_cube_round_trip(self, tmp_path):
        g = CubeFunction.or_(3)
        path = tmp_path / 'g.json'
        write_cube_function(g, path)
        assert read_cube_function(path) == g
        assert json.loads(path.read_text())['order'] == 'binary-lsb'

    def test_cube_wrong_length(self, tmp_path):
        path = _write_json(tmp_path / 'g.json', {'m': 2, 'values': [0, 1, 1]})
        with pytest.raises(FormatError):
            read_cube_function(path)

    def test_eta_round_trip(self, tmp_path):
        result = eta(5)
        path = tmp_path / 'eta.json'
        write_eta_result(result, path)
        assert read_eta_result(path) == result
