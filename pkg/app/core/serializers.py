import math

from django.utils.translation import gettext_lazy as _
from rest_framework import serializers

from core.conf import get_tolerances
from core.exceptions import InvalidInputError
from core.models import BlaschkeProduct


def as_pair(z):
    z = complex(z)
    return [float(z.real), float(z.imag)]


class ComplexPointField(serializers.Field):
    """A complex number written as the pair [re, im]."""
    default_error_messages = {
        'invalid': _('Expected a pair [re, im] of numbers.'),
        'not_finite': _('Both components must be finite.'),
    }

    def to_internal_value(self, data):
        if not isinstance(data, (list, tuple)) or len(data) != 2:
            self.fail('invalid')
        if any(isinstance(x, bool) or not isinstance(x, (int, float))
               for x in data):
            self.fail('invalid')
        if not all(math.isfinite(x) for x in data):
            self.fail('not_finite')
        return complex(data[0], data[1])

    def to_representation(self, value):
        return as_pair(value)


class ComplexListField(serializers.ListField):
    child = ComplexPointField()


class BlaschkeProductSerializer(serializers.Serializer):
    """{"lambda": [re, im], "zeros": [[re, im], ...]}"""

    def get_fields(self):
        # "lambda" is a keyword, so the fields are declared here
        return {
            'lambda': ComplexPointField(source='lam'),
            'zeros': ComplexListField(min_length=1),
        }

    def validate_lambda(self, value):
        tol = get_tolerances(self.context.get('tol'))
        if abs(abs(value) - 1.0) > tol.unimodular:
            raise serializers.ValidationError(
                _('lambda must be unimodular.'), code='unimodular'
            )
        return value

    def validate_zeros(self, value):
        for index, a in enumerate(value):
            if not abs(a) < 1.0:
                raise serializers.ValidationError(
                    _('zero %(index)d lies outside the open unit disk.')
                    % {'index': index},
                    code='outside_disk'
                )
        return value

    def create(self, validated_data):
        try:
            return BlaschkeProduct(lam=validated_data['lam'],
                                   zeros=tuple(validated_data['zeros']))
        except InvalidInputError as exc:
            raise serializers.ValidationError(str(exc))


class CriticalDataSerializer(serializers.Serializer):
    critical_points = ComplexListField()
    critical_values = ComplexListField()
    critical_point_count = serializers.IntegerField(source='count')
