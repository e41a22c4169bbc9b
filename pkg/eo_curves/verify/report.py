import csv
import io
import json
import threading

import eo_curves


class Report(object):
    """Collects after_check records; overall status is fail iff any record fails"""

    def __init__(self, suite: str, config: dict = None, listeners=None):
        self.suite = suite
        self.config = config or {}
        self.records = []
        self._lock = threading.RLock()

        if listeners is not None:
            listeners += self.on_event

    def on_event(self, event):
        if event['type'] == 'after_check':
            with self._lock:
                self.records.append(event['record'])

    def sort(self, order):
        """Puts records in the static order of the suite"""
        index = {check_id: i for i, check_id in enumerate(order)}
        with self._lock:
            self.records.sort(key=lambda r: index.get(r['id'], len(index)))

    @property
    def status(self) -> str:
        return 'fail' if any(r['status'] == 'fail' for r in self.records) else 'pass'

    def exit_code(self) -> int:
        return 0 if self.status == 'pass' else 1

    def to_dict(self, timings: bool = True):
        records = self.records if timings else [{k: v for k, v in r.items() if k != 'seconds'} for r in self.records]
        return {'suite': self.suite, 'status': self.status, 'version': eo_curves.__version__, 'config': self.config, 'records': records}

    def render(self, output: str) -> str:
        if output == 'json':
            return json.dumps(self.to_dict(), sort_keys=True, indent=1)

        if output == 'csv':
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator='\n')
            writer.writerow(['id', 'reference', 'status', 'residual', 'seconds'])
            for r in self.records:
                writer.writerow([r['id'], r['reference'], r['status'], json.dumps(r['residual'], sort_keys=True), r['seconds']])
            return buffer.getvalue()

        lines = ['%s: %s' % (self.suite, self.status.upper())]
        for r in self.records:
            lines.append('  [%-7s] %-40s %s' % (r['status'], r['id'], r['reference']))
        return '\n'.join(lines)
