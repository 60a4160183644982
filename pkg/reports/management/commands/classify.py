"""
classify - degeneracy classification of a CWS code file.

The file holds a graph6 line, an optional `linear` line, then one codeword
(or generator row) per line.
"""
from core.exceptions import ExitCode
from cws.services import DegeneracyVerdict, degeneracy_classify
from cws.validators import check_necessary_conditions
from reports.commands import ReportCommand
from reports.serializers import (
    ClassicalCodeSerializer,
    ClassifyOptionsSerializer,
    DegeneracyReportSerializer,
    GraphSerializer,
    NecessaryConditionResultSerializer,
)
from reports.services import load_cws_code


class Command(ReportCommand):
    help = "Classify a CWS code as degenerate or nondegenerate and check the necessary conditions"

    command_name = "classify"
    options_serializer = ClassifyOptionsSerializer
    echo_keys = ('code_file', 'max_weight')

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('code_file', help="CWS code file")
        parser.add_argument('--max-weight', dest='max_weight', type=int, help="Largest error weight to search")

    def run(self, data, builder):
        with builder.timed('load'):
            cws = load_cws_code(data['code_file'])
        builder.inputs.update({'code_file': data['code_file'], 'max_weight': data.get('max_weight')})
        builder.results['graph'] = GraphSerializer(cws.graph).data
        builder.results['code'] = ClassicalCodeSerializer(cws.code).data

        with builder.timed('classify'):
            report = degeneracy_classify(cws, data.get('max_weight'))
        builder.results['degeneracy'] = DegeneracyReportSerializer(report).data

        if report.verdict != DegeneracyVerdict.DEGENERATE:
            builder.results['necessary_conditions_check'] = None
            return ExitCode.OK
        with builder.timed('necessary_conditions'):
            check = check_necessary_conditions(cws, report)
        builder.results['necessary_conditions_check'] = NecessaryConditionResultSerializer(check).data
        return ExitCode.OK if check.passed else ExitCode.FALSIFICATION
