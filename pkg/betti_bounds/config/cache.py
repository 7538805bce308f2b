"""
Caching Configuration and Management
JSON-lines result cache on disk, keyed by content hashes
"""

import hashlib
import json
import logging
import threading
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

# Configure logging
logger = logging.getLogger(__name__)

Records = List[Dict[str, Any]]


class CacheManager:
    """Disk cache manager with fallback to memory cache

    Every entry is a list of JSON records stored one per line in
    ``<cache_dir>/<key[:2]>/<key>.jsonl``.
    """

    def __init__(self, cache_dir: Optional[Path] = None, version_tag: str = '1.0', enabled: bool = True):
        self.cache_dir = Path(cache_dir) if cache_dir else None
        self.version_tag = version_tag
        self.enabled = enabled
        self.memory_cache: Dict[str, Records] = {}
        self._lock = threading.Lock()
        self._disk_ok = False
        if enabled:
            self._init_disk()

    def _init_disk(self):
        """Initialize the cache directory"""
        if self.cache_dir is None:
            logger.info("No cache directory configured, using memory cache")
            return
        try:
            self.cache_dir.mkdir(parents=True, exist_ok=True)
            marker = self.cache_dir / '.write-check'
            marker.write_text('ok', encoding='utf-8')
            marker.unlink()
            self._disk_ok = True
            logger.debug(f"Disk cache initialized at {self.cache_dir}")
        except OSError as e:
            logger.warning(f"Cache directory {self.cache_dir} not writable: {e}, using memory cache")
            self._disk_ok = False

    def generate_key(self, prefix: str, *args, **kwargs) -> str:
        """Generate cache key from arguments and the code version tag"""
        key_data = json.dumps(
            [prefix, list(args), sorted(kwargs.items()), self.version_tag],
            default=str, sort_keys=True,
        )
        return hashlib.sha256(key_data.encode('utf-8')).hexdigest()

    def _path(self, key: str) -> Path:
        return self.cache_dir / key[:2] / f"{key}.jsonl"

    def get(self, key: str) -> Optional[Records]:
        """Get records from cache"""
        if not self.enabled:
            return None
        try:
            if self._disk_ok:
                path = self._path(key)
                if path.exists():
                    with path.open('r', encoding='utf-8') as handle:
                        return [json.loads(line) for line in handle if line.strip()]
            else:
                with self._lock:
                    if key in self.memory_cache:
                        return list(self.memory_cache[key])
        except (OSError, ValueError) as e:
            logger.error(f"Cache get error: {e}")
        return None

    def set(self, key: str, records: Records) -> bool:
        """Store records in cache"""
        if not self.enabled:
            return False
        try:
            if self._disk_ok:
                path = self._path(key)
                path.parent.mkdir(parents=True, exist_ok=True)
                tmp = path.with_suffix('.tmp')
                with tmp.open('w', encoding='utf-8', newline='\n') as handle:
                    for record in records:
                        handle.write(json.dumps(record, sort_keys=True) + '\n')
                tmp.replace(path)
            else:
                with self._lock:
                    self.memory_cache[key] = list(records)
            return True
        except (OSError, TypeError) as e:
            logger.error(f"Cache set error: {e}")
            return False

    def delete(self, key: str) -> bool:
        """Delete an entry from cache"""
        try:
            if self._disk_ok:
                path = self._path(key)
                if path.exists():
                    path.unlink()
                    return True
            else:
                with self._lock:
                    return self.memory_cache.pop(key, None) is not None
        except OSError as e:
            logger.error(f"Cache delete error: {e}")
        return False

    def clear(self) -> int:
        """Remove every entry, returning the number removed"""
        removed = 0
        try:
            if self._disk_ok:
                for path in self.cache_dir.glob('*/*.jsonl'):
                    path.unlink()
                    removed += 1
            else:
                with self._lock:
                    removed = len(self.memory_cache)
                    self.memory_cache.clear()
        except OSError as e:
            logger.error(f"Cache clear error: {e}")
        return removed

    def get_or_set(self, key: str, func: Callable[..., Records], *args, **kwargs) -> Records:
        """Get records from cache or compute them using func"""
        value = self.get(key)
        if value is None:
            value = func(*args, **kwargs)
            self.set(key, value)
        return value


@dataclass
class CacheStats:
    """Lookup and write counters of one cache"""
    hits: int = 0
    misses: int = 0
    sets: int = 0
    deletes: int = 0

    @property
    def lookups(self) -> int:
        return self.hits + self.misses

    @property
    def hit_rate(self) -> float:
        """Share of lookups served from the cache, in [0, 1]"""
        return self.hits / self.lookups if self.lookups else 0.0

    def as_dict(self) -> Dict[str, Any]:
        return {**asdict(self), 'hit_rate': round(self.hit_rate, 4)}


class EnhancedCacheManager(CacheManager):
    """Cache manager with performance statistics"""

    def __init__(self, *args, **kwargs):
        self.stats = CacheStats()
        super().__init__(*args, **kwargs)

    def get(self, key: str) -> Optional[Records]:
        result = super().get(key)
        if result is not None:
            self.stats.hits += 1
            logger.debug(f"Cache hit for {key[:12]}")
        else:
            self.stats.misses += 1
            logger.debug(f"Cache miss for {key[:12]}")
        return result

    def set(self, key: str, records: Records) -> bool:
        result = super().set(key, records)
        if result:
            self.stats.sets += 1
        return result

    def delete(self, key: str) -> bool:
        result = super().delete(key)
        if result:
            self.stats.deletes += 1
        return result


def cache_from_config(config_class) -> EnhancedCacheManager:
    """Build the cache manager described by a config class"""
    return EnhancedCacheManager(
        cache_dir=config_class.CACHE_DIR,
        version_tag=config_class.CODE_VERSION_TAG,
        enabled=config_class.CACHE_ENABLED,
    )
