from exteriorcov.schemas.cache import CACHE_FORMAT_VERSION, CacheEntry, CacheKey, CharacterPayload, CharacterTerm
from exteriorcov.schemas.report import FAIL, PASS, SKIPPED, Check, Report
