"""
verify - run property suites over seeded corpora.

    python manage.py verify --suite theorem-a --max-n 7 --seed 1
    python manage.py verify --suite all

Exit code 4 when any suite finds a counterexample, 3 when cases ran out of
budget and nothing was falsified.
"""
from core.exceptions import ExitCode
from reports.commands import ReportCommand
from reports.serializers import SuiteResultSerializer, VerifyOptionsSerializer
from reports.suites import SUITES, SuiteContext, SuiteStatus, run_suites


class Command(ReportCommand):
    help = "Run the structural property suites and report pass/fail with counterexamples"

    command_name = "verify"
    options_serializer = VerifyOptionsSerializer
    echo_keys = ('suite', 'max_n', 'samples', 'seed')

    def serializer_context(self):
        return {'suites': SUITES}

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            '--suite', action='append',
            help="Suite name, repeatable; 'all' runs every suite (default)",
        )
        parser.add_argument('--max-n', dest='max_n', type=int, help="Largest n of the exhaustive corpus")
        parser.add_argument('--samples', type=int, help="Random graphs per corpus; code instances are four times this")
        self.add_seed_argument(parser)

    def run(self, data, builder):
        builder.inputs.update({'suites': data['suite'], 'max_n': data['max_n'], 'samples': data['samples'], 'seed': data['seed']})
        context = SuiteContext(max_n=data['max_n'], samples=data['samples'], seed=data['seed'])
        with builder.timed('suites'):
            results = run_suites(data['suite'], context)
        for result in results:
            builder.timing[result.name] = round(result.elapsed, 6)
        builder.results['suites'] = SuiteResultSerializer(results, many=True).data

        statuses = {result.status for result in results}
        if SuiteStatus.FAIL in statuses:
            return ExitCode.FALSIFICATION
        if SuiteStatus.BUDGET_EXHAUSTED in statuses:
            return ExitCode.BUDGET_EXHAUSTED
        return ExitCode.OK
