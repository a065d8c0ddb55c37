from rest_framework import serializers

from abelian.models import FiniteAbelianGroup
from cayley.graphs import make_genset
from core.exceptions import InvalidInput
from core.models import JobSpec
from gqd.algebra import normalize_word
from gqd.models import GqdElem, GqdGroup
from hamilton.models import GroupDoubleRay, HamCircle

FORMATS = ['json', 'dot', 'text']
COMMANDS = ['group-info', 'ham-ray', 'ham-circle', 'wall', 'verify']


class GroupSerializer(serializers.Serializer):
    invariant_factors = serializers.ListField(child=serializers.IntegerField(min_value=1), default=list)
    beta = serializers.ListField(child=serializers.IntegerField(), required=False, allow_null=True)

    def validate(self, attrs):
        try:
            attrs['instance'] = GqdGroup(FiniteAbelianGroup(tuple(attrs['invariant_factors'])), attrs.get('beta'))
        except InvalidInput as exc:
            raise serializers.ValidationError(str(exc))
        return attrs


class ElementSerializer(serializers.Serializer):
    """An element as {k, i, eps}, or as a word {"word": "a b'"} on input."""
    k = serializers.ListField(child=serializers.IntegerField(), required=False)
    i = serializers.IntegerField(default=0)
    eps = serializers.ChoiceField(choices=[0, 1], default=0)
    word = serializers.CharField(required=False, write_only=True)

    def to_element(self, G: GqdGroup, data) -> GqdElem:
        if data.get('word'):
            return normalize_word(G, data['word'])
        return G.element(data.get('k'), data['i'], data['eps'])


class RaySerializer(serializers.Serializer):
    motif = ElementSerializer(many=True)
    period = ElementSerializer()
    labels = serializers.ListField(child=serializers.IntegerField(min_value=0))

    def to_ray(self, G, gens, data) -> GroupDoubleRay:
        element = ElementSerializer()
        return GroupDoubleRay(
            G,
            tuple(gens),
            tuple(element.to_element(G, x) for x in data['motif']),
            element.to_element(G, data['period']),
            tuple(data['labels']),
        )


class CircleSerializer(serializers.Serializer):
    first = RaySerializer()
    second = RaySerializer()


class ReportSerializer(serializers.Serializer):
    passed = serializers.BooleanField()
    checked_inner_radius = serializers.IntegerField()
    covered = serializers.IntegerField()
    expected = serializers.IntegerField()
    duplicates = serializers.ListField(child=serializers.CharField())
    missing = serializers.ListField(child=serializers.CharField())
    non_edges = serializers.ListField(child=serializers.CharField())
    tail_status = serializers.DictField(child=serializers.BooleanField())
    notes = serializers.ListField(child=serializers.CharField())


class JobSpecSerializer(serializers.Serializer):
    group = GroupSerializer()
    gens = ElementSerializer(many=True)
    symmetrize = serializers.BooleanField(default=False)
    command = serializers.ChoiceField(choices=COMMANDS, required=False)
    radius = serializers.IntegerField(min_value=0, required=False)
    inner_radius = serializers.IntegerField(min_value=0, required=False)
    format = serializers.ChoiceField(choices=FORMATS, default='json')
    seed = serializers.IntegerField(default=0)
    ray = RaySerializer(required=False)
    circle = CircleSerializer(required=False)

    def validate(self, attrs):
        G = attrs['group']['instance']
        try:
            elements = [ElementSerializer().to_element(G, x) for x in attrs['gens']]
            attrs['genset'] = make_genset(G, elements, symmetric=attrs['symmetrize'])
            gens = attrs['genset'].gens
            if 'ray' in attrs:
                attrs['ray'] = RaySerializer().to_ray(G, gens, attrs['ray'])
            if 'circle' in attrs:
                rays = RaySerializer()
                attrs['circle'] = HamCircle(
                    rays.to_ray(G, gens, attrs['circle']['first']),
                    rays.to_ray(G, gens, attrs['circle']['second']),
                )
        except InvalidInput as exc:
            raise serializers.ValidationError(str(exc))
        return attrs

    def create(self, validated_data):
        return JobSpec(
            group=validated_data['group']['instance'],
            genset=validated_data['genset'],
            command=validated_data.get('command', ''),
            radius=validated_data.get('radius'),
            inner_radius=validated_data.get('inner_radius'),
            format=validated_data['format'],
            seed=validated_data['seed'],
            ray=validated_data.get('ray'),
            circle=validated_data.get('circle'),
        )


def load_job(data) -> JobSpec:
    """Validate a decoded job file; field errors become InvalidInput."""
    serializer = JobSpecSerializer(data=data)
    if not serializer.is_valid():
        raise InvalidInput(f'invalid job file: {serializer.errors}')
    return serializer.save()
