"""
search - nondegenerate CWS code search by maximum clique.

    python manage.py search --graph6 Dhc --d 2 --mode exact
"""
from core.exceptions import ExitCode
from reports.commands import GRAPH_OPTION_KEYS, ReportCommand
from reports.serializers import SearchOptionsSerializer, SearchResultSerializer
from reports.services import load_graph
from search.clique import CliqueMode
from search.services import search_code


class Command(ReportCommand):
    help = "Search for a large CWS code of distance >= d on a graph"

    command_name = "search"
    options_serializer = SearchOptionsSerializer
    echo_keys = GRAPH_OPTION_KEYS + ('d', 'mode', 'budget', 'max_vertices', 'restarts')

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_graph_arguments(parser)
        self.add_seed_argument(parser)
        parser.add_argument('--d', type=int, required=True, help="Target distance")
        parser.add_argument('--mode', choices=CliqueMode.CHOICES, default=CliqueMode.EXACT)
        parser.add_argument('--budget', type=float, help="Clique search time budget in seconds")
        parser.add_argument('--max-vertices', dest='max_vertices', type=int, help="Vertex cap for exact clique search")
        parser.add_argument('--restarts', type=int, help="Restarts for greedy mode")

    def run(self, data, builder):
        with builder.timed('load'):
            loaded = load_graph(data)
        builder.inputs.update({
            'source': loaded.source,
            'seed': data['seed'],
            'd': data['d'],
            'mode': data['mode'],
            'budget': data.get('budget'),
        })
        with builder.timed('search'):
            result = search_code(
                loaded.graph,
                data['d'],
                data['mode'],
                time_budget=data.get('budget'),
                max_vertices=data.get('max_vertices'),
                restarts=data.get('restarts'),
                seed=data['seed'],
            )
        builder.results['search'] = SearchResultSerializer(result).data
        return ExitCode.OK
