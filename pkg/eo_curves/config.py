import os

from eo_curves.errors import ConfigError

DEFAULT_CACHE_DIR = '~/.cache/eo_curves'
OUTPUT_FORMATS = ('json', 'csv', 'pretty')


class RunConfig(object):
    """Everything a run depends on; to_dict() is echoed in every report"""

    def __init__(self, command: str, subcommand: str = None, params: dict = None, output: str = 'json',
                 cache_dir: str = None, jobs: int = 1, tolerance: float = 1e-8, verbose: bool = False):
        if output not in OUTPUT_FORMATS:
            raise ConfigError('output must be one of %s, got %r' % (', '.join(OUTPUT_FORMATS), output))
        if jobs < 1:
            raise ConfigError('jobs must be positive, got %d' % jobs)
        if tolerance <= 0:
            raise ConfigError('tolerance must be positive, got %s' % tolerance)

        self.command = command
        self.subcommand = subcommand
        self.params = dict(params or {})
        self.output = output
        self.cache_dir = cache_dir or os.environ.get('EO_CACHE_DIR') or DEFAULT_CACHE_DIR
        self.jobs = jobs
        self.tolerance = tolerance
        self.verbose = verbose

    def to_dict(self):
        return {'command': self.command, 'subcommand': self.subcommand, 'params': dict(sorted(self.params.items())),
                'output': self.output, 'cache_dir': self.cache_dir, 'jobs': self.jobs, 'tolerance': self.tolerance}
