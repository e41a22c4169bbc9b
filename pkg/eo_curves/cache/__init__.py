from eo_curves.cache.util import default_encoder, count_decoder, encode_key, decode_key
from eo_curves.cache.store import CacheStore
