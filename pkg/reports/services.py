"""
Reports - Services

Graph loading for the commands and the JSON report envelope.

Reports render through the REST framework JSON renderer with fixed field
order. Everything except `timing` is a function of the echoed command, so
re-running the echo reproduces the payload.
"""
import json
import logging
import time
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Optional

from django.conf import settings
from rest_framework.renderers import JSONRenderer

from core.exceptions import ParseError
from cws.codes import CwsCode, parse_cws_code
from graphs.generators import (
    complete,
    complete_bipartite,
    cycle,
    petersen,
    projective_plane_incidence,
    random_c4_free,
)
from graphs.graph6 import from_adjacency_list, from_graph6
from graphs.models import Graph

from .serializers import ReportSerializer

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LoadedGraph:
    graph: Graph
    source: str
    target_met: Optional[bool] = None    # random-c4-free only


def read_text(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(path, exc.strerror or str(exc))


def parse_graph_text(text: str, source: str = "graph file") -> Graph:
    """A graph6 line, or an adjacency list whose first line is the vertex count."""
    lines = [line.strip() for line in text.splitlines() if line.strip() and not line.strip().startswith('#')]
    if not lines:
        raise ParseError(source, "no graph found")
    if lines[0].isdigit():
        return from_adjacency_list('\n'.join(lines))
    if len(lines) > 1:
        raise ParseError(source, f"expected one graph6 line, found {len(lines)}")
    return from_graph6(lines[0])


def load_graph(options: Mapping[str, Any]) -> LoadedGraph:
    """Build the graph named by validated GraphInputSerializer data."""
    if options.get('graph6'):
        return LoadedGraph(from_graph6(options['graph6']), 'graph6')
    if options.get('graph_file'):
        path = options['graph_file']
        return LoadedGraph(parse_graph_text(read_text(path), path), 'graph_file')

    gen = options['gen']
    if gen == 'cycle':
        graph = cycle(options['n'])
    elif gen == 'complete':
        graph = complete(options['n'])
    elif gen == 'complete-bipartite':
        graph = complete_bipartite(options['a'], options['b'])
    elif gen == 'petersen':
        graph = petersen()
    elif gen == 'pg':
        graph = projective_plane_incidence(options['q'])
    elif gen == 'random-c4-free':
        generated = random_c4_free(options['n'], options['target'], options['seed'])
        return LoadedGraph(generated.graph, gen, generated.target_met)
    else:
        raise ParseError('--gen', f"unknown generator '{gen}'")
    return LoadedGraph(graph, gen)


def load_cws_code(path: str) -> CwsCode:
    return parse_cws_code(read_text(path), path)


def command_echo(command: str, options: Mapping[str, Any], keys: Iterable[str]) -> List[str]:
    """Argument list that re-runs the command with resolved options (seed included)."""
    echo = [command]
    for key in keys:
        value = options.get(key)
        if value is None or value is False:
            continue
        flag = f"--{key.replace('_', '-')}"
        if value is True:
            echo.append(flag)
        elif isinstance(value, (list, tuple)):
            for item in value:
                echo.extend([flag, str(item)])
        else:
            echo.extend([flag, str(value)])
    return echo


class ReportBuilder:
    """Collects inputs, results and section timings for one command run."""

    def __init__(self, echo: List[str]):
        self.echo = echo
        self.inputs: Dict[str, Any] = {}
        self.results: Dict[str, Any] = {}
        self.timing: Dict[str, float] = {}
        self._started = time.monotonic()

    @contextmanager
    def timed(self, section: str):
        started = time.monotonic()
        try:
            yield
        finally:
            self.timing[section] = round(time.monotonic() - started, 6)

    def build(self) -> Dict[str, Any]:
        timing = dict(self.timing)
        timing['total'] = round(time.monotonic() - self._started, 6)
        return ReportSerializer({
            'schema_version': settings.CWS_REPORT_SCHEMA_VERSION,
            'command': self.echo,
            'inputs': self.inputs,
            'results': self.results,
            'timing': timing,
        }).data


def render_report(report: Mapping[str, Any]) -> str:
    return JSONRenderer().render(report, renderer_context={'indent': 2}).decode('utf-8')


def write_report(report: Mapping[str, Any], out: Optional[str], stream) -> None:
    """Write to `out` when given, otherwise to `stream`."""
    text = render_report(report)
    if out:
        Path(out).write_text(text + '\n')
        logger.info(f"REPORT_WRITTEN: {json.dumps({'path': out, 'command': report['command']})}")
    else:
        stream.write(text)
