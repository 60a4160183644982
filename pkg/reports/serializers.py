"""
Reports - Serializers

Django REST Framework serializers for command options (input) and for every
result type that appears in a JSON report (output). Output field order is
declaration order.
"""
import random

from django.conf import settings
from rest_framework import serializers

from diagdist.services import DistanceMethod
from graphs.graph6 import graph6_or_none
from search.clique import CliqueMode
from structure.certificates import certificate_triangles


GENERATOR_CHOICES = ('cycle', 'complete', 'complete-bipartite', 'petersen', 'pg', 'random-c4-free')


# Fields

class BitVectorField(serializers.Field):
    """BitVector as a '0'/'1' string, coordinate 0 first."""

    def to_representation(self, value):
        return str(value)


class PauliField(serializers.Field):
    """PauliVector as an {I,X,Y,Z} label."""

    def to_representation(self, value):
        return value.to_label()


class SeedField(serializers.Field):
    """An integer seed, or the word 'random' for a fresh one."""

    def to_internal_value(self, data):
        if data is None or data == '':
            return settings.CWS_DEFAULT_SEED
        if isinstance(data, str) and data.strip().lower() == 'random':
            return random.SystemRandom().randrange(2 ** 31)
        try:
            seed = int(data)
        except (TypeError, ValueError):
            raise serializers.ValidationError("Seed must be an integer or 'random'.")
        if seed < 0:
            raise serializers.ValidationError("Seed must be non-negative.")
        return seed

    def to_representation(self, value):
        return value


# Input serializers

class GraphInputSerializer(serializers.Serializer):
    """
    Exactly one graph source: a graph6 string, a file (graph6 or adjacency
    list), or a named generator with its parameters.
    """
    graph6 = serializers.CharField(required=False, allow_null=True, default=None)
    graph_file = serializers.CharField(required=False, allow_null=True, default=None)
    gen = serializers.ChoiceField(choices=GENERATOR_CHOICES, required=False, allow_null=True, default=None)
    n = serializers.IntegerField(required=False, allow_null=True, default=None, min_value=1)
    a = serializers.IntegerField(required=False, allow_null=True, default=None, min_value=1)
    b = serializers.IntegerField(required=False, allow_null=True, default=None, min_value=1)
    q = serializers.IntegerField(required=False, allow_null=True, default=None, min_value=2)
    target = serializers.IntegerField(required=False, allow_null=True, default=None, min_value=0)
    seed = SeedField(required=False, default=None)

    def validate(self, data):
        sources = [key for key in ('graph6', 'graph_file', 'gen') if data.get(key)]
        if len(sources) != 1:
            raise serializers.ValidationError("Give exactly one of --graph6, --graph-file or --gen.")
        needs = {
            'cycle': ('n',),
            'complete': ('n',),
            'complete-bipartite': ('a', 'b'),
            'pg': ('q',),
            'random-c4-free': ('n', 'target'),
        }
        missing = [name for name in needs.get(data.get('gen'), ()) if data.get(name) is None]
        if missing:
            raise serializers.ValidationError(
                f"Generator '{data['gen']}' needs " + ', '.join(f"--{m}" for m in missing)
            )
        if data.get('seed') is None:
            data['seed'] = settings.CWS_DEFAULT_SEED
        return data


class DiagOptionsSerializer(GraphInputSerializer):
    oracle = serializers.BooleanField(default=False)
    fast_path = serializers.BooleanField(default=False)
    oracle_max_n = serializers.IntegerField(required=False, allow_null=True, default=None, min_value=1)


class ClassifyOptionsSerializer(serializers.Serializer):
    code_file = serializers.CharField()
    max_weight = serializers.IntegerField(required=False, allow_null=True, default=None, min_value=0)

    def validate_code_file(self, value):
        return value.strip()


class SearchOptionsSerializer(GraphInputSerializer):
    d = serializers.IntegerField(min_value=1)
    mode = serializers.ChoiceField(choices=CliqueMode.CHOICES, default=CliqueMode.EXACT)
    budget = serializers.FloatField(required=False, allow_null=True, default=None, min_value=0.0)
    max_vertices = serializers.IntegerField(required=False, allow_null=True, default=None, min_value=1)
    restarts = serializers.IntegerField(required=False, allow_null=True, default=None, min_value=1)


class VerifyOptionsSerializer(serializers.Serializer):
    suite = serializers.ListField(child=serializers.CharField(), allow_empty=False, default=lambda: ['all'])
    max_n = serializers.IntegerField(default=7, min_value=3, max_value=9)
    samples = serializers.IntegerField(default=500, min_value=0)
    seed = SeedField(required=False, default=None)

    def validate_suite(self, value):
        """Expand 'all' against the suite names passed in the serializer context."""
        known = list(self.context.get('suites', ()))
        names = []
        for name in value:
            if name == 'all':
                names.extend(known)
            elif name in known:
                names.append(name)
            else:
                raise serializers.ValidationError(
                    f"Unknown suite '{name}'. Known suites: all, {', '.join(known)}"
                )
        return list(dict.fromkeys(names))

    def validate(self, data):
        if data.get('seed') is None:
            data['seed'] = settings.CWS_DEFAULT_SEED
        return data


# Output serializers

class GraphSerializer(serializers.Serializer):
    """Graph summary; graph6 is null beyond the short-form limit."""
    graph6 = serializers.SerializerMethodField()
    n = serializers.IntegerField()
    edge_count = serializers.IntegerField()
    min_degree = serializers.IntegerField()
    max_degree = serializers.IntegerField()
    girth = serializers.SerializerMethodField()
    has_four_cycle = serializers.SerializerMethodField()
    min_degree_vertices = serializers.SerializerMethodField()

    def get_graph6(self, obj):
        return graph6_or_none(obj)

    def get_girth(self, obj):
        girth = obj.girth()
        return girth if girth is not None else 'acyclic'

    def get_has_four_cycle(self, obj):
        return obj.has_four_cycle()

    def get_min_degree_vertices(self, obj):
        return list(obj.min_degree_vertices())


class DiagDistanceResultSerializer(serializers.Serializer):
    value = serializers.IntegerField()
    witness_u = BitVectorField()
    witness_pauli = PauliField()
    method = serializers.ChoiceField(choices=DistanceMethod.CHOICES)


class DistanceResultSerializer(serializers.Serializer):
    status = serializers.CharField()
    value = serializers.IntegerField()
    searched_weight = serializers.IntegerField()
    errors_checked = serializers.IntegerField()
    witness = PauliField(allow_null=True)


class NecessaryConditionsSerializer(serializers.Serializer):
    has_short_cycle = serializers.BooleanField()
    classically_degenerate = serializers.BooleanField()
    degenerate_components = serializers.ListField(child=serializers.IntegerField())


class DegeneracyReportSerializer(serializers.Serializer):
    verdict = serializers.CharField()
    diag_distance = DiagDistanceResultSerializer()
    distance = DistanceResultSerializer()
    necessary_conditions = NecessaryConditionsSerializer()
    weight_budget = serializers.IntegerField()
    single_word = serializers.BooleanField()


class ConditionCheckSerializer(serializers.Serializer):
    name = serializers.CharField()
    passed = serializers.BooleanField()
    detail = serializers.CharField(allow_blank=True)


class NecessaryConditionResultSerializer(serializers.Serializer):
    passed = serializers.BooleanField()
    checks = ConditionCheckSerializer(many=True)


class ClassicalCodeSerializer(serializers.Serializer):
    length = serializers.IntegerField()
    provenance = serializers.CharField()
    size = serializers.IntegerField()
    words = serializers.ListField(child=BitVectorField())


class EndCorCertificateSerializer(serializers.Serializer):
    """V' certificate; triangles need the graph in the serializer context."""
    delta = serializers.IntegerField()
    v_prime = serializers.ListField(child=serializers.IntegerField())
    pairings = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))
    midpoints = serializers.SerializerMethodField()
    triangles = serializers.SerializerMethodField()

    def get_midpoints(self, obj):
        return [{'pair': list(pair), 'midpoint': m} for pair, m in obj.midpoints]

    def get_triangles(self, obj):
        graph = self.context.get('graph')
        if graph is None:
            return None
        return [list(t) for t in certificate_triangles(graph, obj)]


class GammaClassificationSerializer(serializers.Serializer):
    gamma = serializers.ListField(child=serializers.IntegerField())
    conditions = serializers.ListField(child=serializers.CharField())
    gamma1_size = serializers.IntegerField()
    gamma_delta_size = serializers.IntegerField()
    delta = serializers.IntegerField()


class SearchResultSerializer(serializers.Serializer):
    graph = GraphSerializer()
    words = serializers.ListField(child=BitVectorField())
    size = serializers.IntegerField()
    requested_d = serializers.IntegerField()
    verified_d = DistanceResultSerializer()
    clique_method = serializers.CharField()
    clique_complete = serializers.BooleanField()
    diag_distance = serializers.IntegerField()


class CounterexampleSerializer(serializers.Serializer):
    case = serializers.CharField()
    graph6 = serializers.CharField(allow_null=True)
    detail = serializers.DictField()


class FalsificationSerializer(serializers.Serializer):
    """A property that failed inside a command, with its counterexample."""
    property = serializers.CharField(source='property_name')
    counterexample = serializers.DictField()


class SuiteResultSerializer(serializers.Serializer):
    name = serializers.CharField()
    status = serializers.CharField()
    cases = serializers.IntegerField()
    passed = serializers.IntegerField()
    falsifications = CounterexampleSerializer(many=True)
    budget_exhausted = CounterexampleSerializer(many=True)
    tallies = serializers.DictField(child=serializers.IntegerField())


class ReportSerializer(serializers.Serializer):
    """Envelope shared by every command."""
    schema_version = serializers.CharField()
    command = serializers.ListField(child=serializers.CharField())
    inputs = serializers.DictField()
    results = serializers.DictField()
    timing = serializers.DictField()
