from rest_framework import serializers

from core.serializers import ComplexListField, ComplexPointField


class PermutationSerializer(serializers.Serializer):
    """A generator as a 1-indexed cycle string and 0-indexed images."""
    cycles = serializers.CharField(source='cycle_string')
    images = serializers.ListField(child=serializers.IntegerField())


class BlockSystemSerializer(serializers.Serializer):
    blocks = serializers.ListField(source='one_indexed',
                                   child=serializers.ListField(
                                       child=serializers.IntegerField()))
    block_size = serializers.IntegerField()
    block_count = serializers.IntegerField()


class MonodromySerializer(serializers.Serializer):
    base_point = ComplexPointField()
    base_fiber = ComplexListField()
    punctures = ComplexListField()
    generators = PermutationSerializer(many=True)
    boundary_product = serializers.SerializerMethodField()
    branching_total = serializers.IntegerField()

    def get_boundary_product(self, obj):
        return obj.boundary_product().cycle_string()
