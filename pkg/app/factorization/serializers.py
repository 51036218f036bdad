from rest_framework import serializers

from core.serializers import (BlaschkeProductSerializer,
                              ComplexListField, ComplexPointField)
from monodromy.serializers import (BlockSystemSerializer,
                                   MonodromySerializer,
                                   PermutationSerializer)


class MobiusAutoSerializer(serializers.Serializer):
    a = ComplexPointField()
    rot = ComplexPointField()


class FactorizationSerializer(serializers.Serializer):
    outer = BlaschkeProductSerializer()
    inner = BlaschkeProductSerializer()
    block_system = BlockSystemSerializer(source='source_system')
    residual = serializers.FloatField()
    canonical = serializers.BooleanField()
    method = serializers.CharField()


class SynthesisFailureSerializer(serializers.Serializer):
    block_system = BlockSystemSerializer(source='source_system')
    message = serializers.CharField()
    residual = serializers.FloatField(allow_null=True)


class BlockSystemSummarySerializer(BlockSystemSerializer):
    blocks = serializers.ListField(source='system.one_indexed',
                                   child=serializers.ListField(
                                       child=serializers.IntegerField()))
    kernel_order = serializers.IntegerField(allow_null=True)
    block_action_order = serializers.IntegerField(allow_null=True)
    kernel_abelian = serializers.BooleanField(allow_null=True)


class NormalSubgroupSerializer(serializers.Serializer):
    order = serializers.IntegerField()
    abelian = serializers.BooleanField()
    generators = PermutationSerializer(many=True)


class AnalysisReportSerializer(serializers.Serializer):
    """The full report; key order here is the key order of the output."""
    input = BlaschkeProductSerializer(source='product')
    degree = serializers.IntegerField()
    normalization = MobiusAutoSerializer()
    critical_points = ComplexListField(source='critical.critical_points')
    critical_values = ComplexListField(source='critical.critical_values')
    critical_point_count = serializers.IntegerField(source='critical.count')
    monodromy = MonodromySerializer()
    group_order = serializers.IntegerField()
    transitive = serializers.BooleanField()
    block_systems = BlockSystemSummarySerializer(many=True)
    normal_subgroup_orders = serializers.ListField(
        child=serializers.IntegerField(), allow_null=True)
    normal_subgroups_declined = serializers.BooleanField(
        source='normal_subgroups.declined')
    normal_subgroups = NormalSubgroupSerializer(
        source='normal_subgroups.subgroups', many=True)
    factorizations = FactorizationSerializer(many=True)
    errors = SynthesisFailureSerializer(source='failures', many=True)
    timings = serializers.DictField(child=serializers.FloatField())
