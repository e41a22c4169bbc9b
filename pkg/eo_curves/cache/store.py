import json
import logging
import os
from typing import Callable

from pyevents.events import Listeners

from eo_curves.algebra import decode_rational
from eo_curves.cache.util import default_encoder, decode_key
from eo_curves.errors import CorruptCache
from eo_curves.memo import MemoTable


class CacheStore(object):
    """Saves memo tables as JSON snapshots, one file per table, under a cache directory"""

    def __init__(self, directory: str, encoder: Callable = None, listeners=None):
        self.directory = os.path.expanduser(directory)
        self._encoder = encoder if encoder is not None else default_encoder
        self.listeners = listeners if listeners is not None else Listeners()

    def path(self, name: str) -> str:
        return os.path.join(self.directory, name + '.json')

    def store(self, table: MemoTable):
        os.makedirs(self.directory, exist_ok=True)

        snapshot = self._encoder(dict(table.items()))
        with open(self.path(table.name), 'w', encoding='utf-8') as f:
            json.dump(snapshot, f, sort_keys=True, indent=1)

        logging.getLogger(__name__).debug("Stored %d entries of %s" % (len(snapshot), table.name))

        self.listeners({'type': 'store_table', 'name': table.name, 'entries': len(snapshot)})

    def load(self, table: MemoTable, value_decoder: Callable = decode_rational):
        """Restores a snapshot into table; returns the number of entries accepted"""
        values = CacheStore.restore(self.path(table.name), value_decoder)
        rejected = table.update(values)

        return len(values) - len(rejected)

    @staticmethod
    def restore(path: str, value_decoder: Callable = decode_rational):
        """
        Reads a snapshot; a missing file is a cold start and unreadable entries are skipped with a warning
        :param path: snapshot file
        :param value_decoder: decoder for a single value
        :return: dict of memo keys to decoded values
        """

        if not os.path.exists(path):
            logging.getLogger(__name__).debug("No cache at %s, cold start" % path)
            return dict()

        try:
            with open(path, encoding='utf-8') as f:
                data = json.load(f)
            if not isinstance(data, dict):
                raise CorruptCache('%s does not hold a JSON object' % path)
        except (ValueError, CorruptCache) as e:
            logging.getLogger(__name__).warning("Ignoring corrupt cache %s: %s" % (path, e))
            return dict()

        result = dict()
        for k, v in data.items():
            try:
                result[decode_key(k)] = value_decoder(v)
            except (ValueError, TypeError, AttributeError, ZeroDivisionError) as e:
                logging.getLogger(__name__).warning("%s" % CorruptCache('%s: entry %r=%r: %s' % (path, k, v, e)))

        return result
