"""
On-disk cache of graded character expansions.

One JSON file per (type, rank, mode, format version) under the cache
directory; every entry carries a checksum of its payload.
"""
import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Optional, Tuple

from pydantic import ValidationError

from exteriorcov.config import get_settings
from exteriorcov.exceptions import CacheError
from exteriorcov.models.gradedchar import GradedCharacter, lambda_g_character
from exteriorcov.models.rootdata import RootSystem
from exteriorcov.schemas.cache import CACHE_FORMAT_VERSION, CacheEntry, CacheKey, CharacterPayload, CharacterTerm

logger = logging.getLogger(__name__)


def payload_checksum(payload: CharacterPayload) -> str:
    canonical = json.dumps(payload.model_dump(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


class CacheClient:
    """Singleton cache client for the process."""

    _instance = None

    def __new__(cls, *args, **kwargs):
        if cls._instance is None:
            cls._instance = super(CacheClient, cls).__new__(cls)
            cls._instance._initialized = False
        return cls._instance

    def __init__(self, cache_dir: Optional[Path] = None):
        """Bind the cache directory; an explicit directory rebinds the singleton."""
        if self._initialized and cache_dir is None:
            return
        self.cache_dir = Path(cache_dir) if cache_dir is not None else get_settings().cache_dir
        self.hits = 0
        self.misses = 0
        self._initialized = True

    @classmethod
    def reset(cls) -> None:
        cls._instance = None

    def path_for(self, key: CacheKey) -> Path:
        return self.cache_dir / key.filename()

    def load(self, rs: RootSystem, mode: str) -> Optional[GradedCharacter]:
        """
        Read a cached character.

        Returns:
            The character, or None when the entry is missing, stale or corrupt
        """
        key = CacheKey(type_tag=rs.type_tag, rank=rs.rank, mode=mode)
        path = self.path_for(key)
        if not path.exists():
            logger.info(f"Cache miss for {rs.name} ({mode})")
            return None
        try:
            entry = CacheEntry.model_validate_json(path.read_text(encoding="utf-8"))
        except (ValidationError, OSError, ValueError) as e:
            logger.warning(f"Unreadable cache entry {path}, recomputing: {str(e)}")
            return None
        if entry.key != key:
            logger.warning(f"Cache entry {path} has key {entry.key}, recomputing")
            return None
        if payload_checksum(entry.payload) != entry.checksum:
            logger.warning(f"Checksum mismatch in cache entry {path}, recomputing")
            return None
        mapping = {tuple(term.weight): term.coefficients for term in entry.payload.terms}
        logger.info(f"Cache hit for {rs.name} ({mode}): {len(mapping)} stored weights")
        return GradedCharacter.from_coefficients(rs, mode, mapping)

    def store(self, char: GradedCharacter) -> Path:
        """
        Write a character atomically: a temporary file in the cache directory
        is renamed over the target.

        Raises:
            CacheError: if the directory or file cannot be written
        """
        rs = char.owner
        key = CacheKey(type_tag=rs.type_tag, rank=rs.rank, mode=char.mode, format_version=CACHE_FORMAT_VERSION)
        payload = CharacterPayload(terms=[
            CharacterTerm(weight=list(weight), coefficients=coeffs)
            for weight, coeffs in char.export_terms().items()
        ])
        entry = CacheEntry(key=key, payload=payload, checksum=payload_checksum(payload))
        path = self.path_for(key)
        try:
            self.cache_dir.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.cache_dir, prefix=f".{key.filename()}.", suffix=".tmp")
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as handle:
                    handle.write(entry.model_dump_json())
                os.replace(tmp, path)
            except BaseException:
                if os.path.exists(tmp):
                    os.unlink(tmp)
                raise
        except OSError as e:
            logger.error(f"Failed to write cache entry {path}: {str(e)}")
            raise CacheError(f"cannot write cache entry {path}: {e}")
        logger.info(f"Cached {rs.name} ({char.mode}) at {path}")
        return path

    def get_character(self, rs: RootSystem, mode: str, max_terms: Optional[int] = None,
                      full_max_rank: Optional[int] = None) -> Tuple[GradedCharacter, bool]:
        """Cached character if valid, else a fresh expansion that is then stored. The flag is True on a hit."""
        cached = self.load(rs, mode)
        if cached is not None:
            self.hits += 1
            return cached, True
        self.misses += 1
        char = lambda_g_character(rs, mode, max_terms=max_terms, full_max_rank=full_max_rank)
        try:
            self.store(char)
        except CacheError as e:
            logger.warning(f"Continuing without cache: {str(e)}")
        return char, False


def get_cache_client(cache_dir: Optional[Path] = None) -> CacheClient:
    return CacheClient(cache_dir)
