import logging
import threading


class MemoTable(object):
    """
    Idempotent concurrent cache. Values are computed outside the lock, so two threads
    may compute the same key; the first stored value wins and both see it.
    """

    def __init__(self, name: str, validator=None):
        self.name = name
        self.validator = validator
        self._lock = threading.RLock()
        self._values = dict()

    def get(self, key, compute):
        with self._lock:
            if key in self._values:
                return self._values[key]

        value = compute()

        with self._lock:
            return self._values.setdefault(key, value)

    def __contains__(self, key):
        with self._lock:
            return key in self._values

    def __len__(self):
        with self._lock:
            return len(self._values)

    def items(self):
        with self._lock:
            return list(self._values.items())

    def update(self, values: dict):
        """Preloads values, skipping the ones the validator rejects; returns the rejected keys"""
        rejected = []
        with self._lock:
            for k, v in values.items():
                if self.validator is not None and not self.validator(k, v):
                    rejected.append(k)
                    continue
                self._values[k] = v

        if rejected:
            logging.getLogger(__name__).warning('%s: rejected %d cache entries' % (self.name, len(rejected)))

        return rejected

    def clear(self):
        with self._lock:
            self._values.clear()
