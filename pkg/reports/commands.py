"""
Reports - Command Base

Shared plumbing for the management commands: option validation through a
serializer, graph input flags, report writing and exit-code mapping.
"""
import json
import logging
from typing import Any, Dict, Sequence, Type

from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers

from core.exceptions import CwsLabError, ExitCode, FalsificationError

from .serializers import GENERATOR_CHOICES, FalsificationSerializer
from .services import ReportBuilder, command_echo, write_report

logger = logging.getLogger(__name__)

GRAPH_OPTION_KEYS = ('graph6', 'graph_file', 'gen', 'n', 'a', 'b', 'q', 'target', 'seed')


class ReportCommand(BaseCommand):
    """
    Subclasses set `command_name`, `options_serializer` and `echo_keys`, and
    implement `run`, which fills the builder and returns an exit code.
    """

    command_name = ""
    options_serializer: Type[serializers.Serializer]
    echo_keys: Sequence[str] = ()

    def add_arguments(self, parser):
        parser.add_argument('--out', help="Write the JSON report to this path instead of stdout")

    def add_graph_arguments(self, parser):
        group = parser.add_argument_group('graph input')
        group.add_argument('--graph6', help="Graph in graph6 short form")
        group.add_argument('--graph-file', dest='graph_file', help="File with a graph6 line or an adjacency list")
        group.add_argument('--gen', choices=GENERATOR_CHOICES, help="Named generator")
        group.add_argument('--n', type=int, help="Vertex count for cycle, complete and random-c4-free")
        group.add_argument('--a', type=int, help="First part size for complete-bipartite")
        group.add_argument('--b', type=int, help="Second part size for complete-bipartite")
        group.add_argument('--q', type=int, help="Prime for the PG(2, q) incidence graph")
        group.add_argument('--target', type=int, help="Target minimum degree for random-c4-free")

    def add_seed_argument(self, parser):
        parser.add_argument('--seed', help="Integer seed, or 'random' (default: CWS_DEFAULT_SEED)")

    def serializer_data(self, options: Dict[str, Any]) -> Dict[str, Any]:
        fields = self.options_serializer().fields
        return {key: options[key] for key in fields if options.get(key) is not None}

    def serializer_context(self) -> Dict[str, Any]:
        return {}

    def run(self, data: Dict[str, Any], builder: ReportBuilder) -> int:
        raise NotImplementedError

    def handle(self, *args, **options):
        serializer = self.options_serializer(data=self.serializer_data(options), context=self.serializer_context())
        if not serializer.is_valid():
            logger.error(f"INVALID_OPTIONS: {json.dumps({'command': self.command_name, 'errors': serializer.errors})}")
            raise CommandError(
                f"Invalid options: {json.dumps(serializer.errors)}", returncode=ExitCode.PARSE_ERROR
            )
        data = serializer.validated_data
        builder = ReportBuilder(command_echo(self.command_name, data, self.echo_keys))

        try:
            exit_code = self.run(data, builder)
        except FalsificationError as exc:
            logger.error(
                f"COMMAND_FALSIFIED: {json.dumps({'command': builder.echo, 'property': exc.property_name}, default=str)}"
            )
            builder.results['falsification'] = FalsificationSerializer(exc).data
            exit_code = exc.exit_code
        except CwsLabError as exc:
            logger.error(
                f"COMMAND_FAILED: {json.dumps({'command': builder.echo, 'error': type(exc).__name__, 'message': str(exc)})}"
            )
            raise CommandError(str(exc), returncode=exc.exit_code)

        write_report(builder.build(), options.get('out'), self.stdout)
        if exit_code != ExitCode.OK:
            raise CommandError(self.failure_message(exit_code), returncode=exit_code)

    def failure_message(self, exit_code: int) -> str:
        if exit_code == ExitCode.FALSIFICATION:
            return "Falsification found; see the report for counterexamples"
        if exit_code == ExitCode.BUDGET_EXHAUSTED:
            return "Budget exhausted before every case completed"
        return f"{self.command_name} failed"
