# apps/verification/serializers/validation_mixins.py
"""
Валидация параметров запуска до постановки задачи в очередь.
"""
from rest_framework import serializers
from django.utils.translation import gettext_lazy as _

from apps.algebra.coeff import field_from_spec
from apps.algebra.exceptions import FieldError, ShapeError
from apps.verification.services import ClaimId, instances_for, validate_instance
from apps.verification.services.registry import PARAMETERS

# верхняя граница числовых параметров одиночного экземпляра
MAX_PARAMETER = 6


class RunValidationMixin:
    """Миксин для проверки поля коэффициентов и параметров экземпляра."""

    def validate_field_spec(self, value):
        try:
            return field_from_spec(value).spec
        except FieldError as exc:
            raise serializers.ValidationError(str(exc))

    def validate_instance_params(self, attrs):
        claim = attrs.get('claim') or ''
        params = attrs.get('params') or {}
        if params and not claim:
            raise serializers.ValidationError({'params': _('Параметры задаются только вместе с утверждением')})
        if claim:
            unknown = sorted(set(params) - set(PARAMETERS[ClaimId(claim)]))
            if unknown:
                raise serializers.ValidationError({
                    'params': _('Неизвестные параметры: %(names)s') % {'names': ', '.join(unknown)}
                })
        for name, value in params.items():
            if name == 'kind':
                if value not in ('generic', 'symmetric', 'skew'):
                    raise serializers.ValidationError({'params': _('Неизвестный тип матрицы: %(kind)s') % {'kind': value}})
            elif not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise serializers.ValidationError({'params': _('Параметр %(name)s должен быть натуральным числом') % {'name': name}})
            elif value > MAX_PARAMETER:
                raise serializers.ValidationError({
                    'params': _('Параметр %(name)s не больше %(limit)s') % {'name': name, 'limit': MAX_PARAMETER}
                })
        if claim and params:
            self.validate_shape(ClaimId(claim), params, attrs.get('max_n', 2))
        return attrs

    def validate_shape(self, claim, params, max_n):
        """Экземпляр собирается так же, как при выполнении, и проверяется валидатором утверждения"""
        try:
            for instance in instances_for(claim, max_n=max_n, **params):
                validate_instance(instance)
        except (ValueError, ShapeError) as exc:
            raise serializers.ValidationError({'params': str(exc)})
