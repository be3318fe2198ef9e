"""Translation through a remote JSON endpoint.

Request body::

    {"q": ["uang", "aman"], "source": "id", "target": "en"}

Expected response::

    {"translations": ["money", "safe"]}

The API key comes from the TRANSLATE_API_KEY environment variable and is
sent as a bearer token.
"""

import logging
import os
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, List, Optional, Sequence

import requests

from ...errors import ProviderUnavailable, UsageError
from .base_provider import TranslationProvider

logger = logging.getLogger(__name__)

API_KEY_ENV = "TRANSLATE_API_KEY"
DEFAULT_BATCH_SIZE = 128
DEFAULT_MAX_RETRIES = 3
DEFAULT_TIMEOUT = 10.0
DEFAULT_MAX_WORKERS = 4

AUTH_FAILURES = (401, 403)


class HttpProvider(TranslationProvider):
    """Batched HTTP translation client with retries.

    Batches of ``batch_size`` words are sent concurrently; results are
    reassembled in input order. A failing batch is retried ``max_retries``
    times with exponential backoff (1s, 2s, 4s, ...). Authentication
    failures are not retried.

    Attributes:
        endpoint: Translation URL
        batch_size: Words per request
        max_retries: Retries per batch after the first attempt
        timeout: Per-request timeout in seconds
        max_workers: Concurrent requests
    """

    def __init__(
        self,
        endpoint: str,
        api_key: Optional[str],
        batch_size: int = DEFAULT_BATCH_SIZE,
        max_retries: int = DEFAULT_MAX_RETRIES,
        timeout: float = DEFAULT_TIMEOUT,
        max_workers: int = DEFAULT_MAX_WORKERS,
        session: Optional[requests.Session] = None,
        sleep: Callable[[float], None] = time.sleep,
    ) -> None:
        """Initialize the client.

        Args:
            endpoint: Translation URL
            api_key: Bearer token; None sends no Authorization header
            batch_size: Words per request (>= 1)
            max_retries: Retries per batch (>= 0)
            timeout: Per-request timeout in seconds
            max_workers: Concurrent requests (>= 1)
            session: Optional pre-configured requests session
            sleep: Backoff sleep function

        Raises:
            UsageError: If a numeric setting is out of range or the endpoint
                is empty
        """
        if not endpoint:
            raise UsageError("provider=http requires an endpoint")
        if batch_size < 1 or max_retries < 0 or max_workers < 1 or timeout <= 0:
            raise UsageError(
                "batch_size and max_workers must be >= 1, max_retries >= 0, timeout > 0"
            )
        super().__init__(name="http", version=endpoint)
        self.endpoint = endpoint
        self.batch_size = batch_size
        self.max_retries = max_retries
        self.timeout = timeout
        self.max_workers = max_workers
        self._sleep = sleep
        self._lock = threading.Lock()
        self._session = session or requests.Session()
        self._headers = {"Content-Type": "application/json"}
        if api_key:
            self._headers["Authorization"] = f"Bearer {api_key}"

    @classmethod
    def from_env(cls, endpoint: str, **kwargs: Any) -> "HttpProvider":
        """Build a client with the key from TRANSLATE_API_KEY."""
        api_key = os.environ.get(API_KEY_ENV)
        if not api_key:
            logger.warning("%s is not set; requests will be unauthenticated", API_KEY_ENV)
        return cls(endpoint, api_key, **kwargs)

    def translate(
        self, words: Sequence[str], source: str = "id", target: str = "en"
    ) -> List[str]:
        if not words:
            return []
        batches = [
            list(words[i : i + self.batch_size]) for i in range(0, len(words), self.batch_size)
        ]
        logger.info(
            "translating %d words in %d batches via %s", len(words), len(batches), self.endpoint
        )

        def run(batch: List[str]) -> List[str]:
            return self._translate_batch(batch, source, target)

        if len(batches) == 1:
            results = [run(batches[0])]
        else:
            with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
                results = list(executor.map(run, batches))
        return [word for batch in results for word in batch]

    def _translate_batch(self, batch: List[str], source: str, target: str) -> List[str]:
        payload = {"q": batch, "source": source, "target": target}
        last_error = ""
        for attempt in range(self.max_retries + 1):
            with self._lock:
                self.calls += 1
            try:
                response = self._session.post(
                    self.endpoint, json=payload, headers=self._headers, timeout=self.timeout
                )
                if response.status_code in AUTH_FAILURES:
                    raise ProviderUnavailable(
                        f"translation endpoint rejected credentials (HTTP {response.status_code}); "
                        f"check {API_KEY_ENV}"
                    )
                response.raise_for_status()
                return self._parse(response.json(), len(batch))
            except ProviderUnavailable:
                raise
            except (requests.exceptions.RequestException, ValueError) as e:
                last_error = str(e)
                if attempt < self.max_retries:
                    wait_time = 2**attempt
                    logger.warning(
                        "translation request failed, retrying in %ss (%d/%d)",
                        wait_time,
                        attempt + 1,
                        self.max_retries,
                    )
                    logger.debug("error details: %s", e)
                    self._sleep(wait_time)

        logger.error("translation failed after %d retries: %s", self.max_retries, last_error)
        raise ProviderUnavailable(
            f"translation endpoint {self.endpoint} unavailable after {self.max_retries} "
            f"retries: {last_error}; retry later or set provider=dictionary"
        )

    @staticmethod
    def _parse(body: Any, expected: int) -> List[str]:
        if not isinstance(body, dict) or not isinstance(body.get("translations"), list):
            raise ValueError("response has no 'translations' list")
        translations = body["translations"]
        if len(translations) != expected:
            raise ValueError(f"expected {expected} translations, got {len(translations)}")
        if not all(isinstance(t, str) for t in translations):
            raise ValueError("translations must be strings")
        return [" ".join(t.lower().split()) for t in translations]

    def health_check(self) -> Dict[str, Any]:
        status = super().health_check()
        status["endpoint"] = self.endpoint
        status["authenticated"] = "Authorization" in self._headers
        return status
