"""
diag - diagonal distance of one graph.

    python manage.py diag --graph6 Dhc
    python manage.py diag --gen pg --q 2 --fast-path --oracle
"""
from core.exceptions import ExitCode
from diagdist.services import diagonal_distance, oracle_diagonal_distance, theorem_a_value
from reports.commands import GRAPH_OPTION_KEYS, ReportCommand
from reports.serializers import (
    DiagDistanceResultSerializer,
    DiagOptionsSerializer,
    EndCorCertificateSerializer,
    GraphSerializer,
)
from reports.services import load_graph
from structure.certificates import end_cor_certificate


class Command(ReportCommand):
    help = "Compute the diagonal distance of a graph, optionally cross-checked by the brute-force oracle"

    command_name = "diag"
    options_serializer = DiagOptionsSerializer
    echo_keys = GRAPH_OPTION_KEYS + ('oracle', 'fast_path', 'oracle_max_n')

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_graph_arguments(parser)
        self.add_seed_argument(parser)
        parser.add_argument('--oracle', action='store_true', help="Cross-check with the exhaustive oracle")
        parser.add_argument(
            '--fast-path', dest='fast_path', action='store_true',
            help="Use the structural fast path (4-cycle-free graphs with minimum degree >= 2)",
        )
        parser.add_argument('--oracle-max-n', dest='oracle_max_n', type=int, help="Oracle vertex cap")

    def run(self, data, builder):
        with builder.timed('load'):
            loaded = load_graph(data)
        graph = loaded.graph
        builder.inputs.update({'source': loaded.source, 'seed': data['seed']})
        if loaded.target_met is not None:
            builder.inputs['target_met'] = loaded.target_met
        builder.results['graph'] = GraphSerializer(graph).data

        with builder.timed('diag_distance'):
            primary = theorem_a_value(graph) if data['fast_path'] else diagonal_distance(graph)
        builder.results['diag_distance'] = DiagDistanceResultSerializer(primary).data
        if data['fast_path']:
            certificate = end_cor_certificate(graph)
            builder.results['certificate'] = (
                EndCorCertificateSerializer(certificate, context={'graph': graph}).data if certificate is not None else None
            )

        if not data['oracle']:
            return ExitCode.OK
        with builder.timed('oracle'):
            oracle = oracle_diagonal_distance(graph, data.get('oracle_max_n'))
        agreement = oracle.value == primary.value
        builder.results['oracle'] = DiagDistanceResultSerializer(oracle).data
        builder.results['agreement'] = agreement
        return ExitCode.OK if agreement else ExitCode.FALSIFICATION
