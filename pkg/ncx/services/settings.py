# Singleton Pattern - One settings object per process
import logging
import os

from dotenv import load_dotenv


class Settings:
    """Simple singleton holding defaults read from the environment / .env"""
    _instance = None

    def __new__(cls):
        # Only create one instance
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._loaded = False
        return cls._instance

    def __init__(self):
        if self._loaded:
            return
        load_dotenv()
        self.default_field = os.getenv("NCX_DEFAULT_FIELD", "q")
        self.log_level = os.getenv("NCX_LOG_LEVEL", "WARNING").upper()
        self.selftest_cases = _int_env("NCX_SELFTEST_CASES", 200)
        self.seed = _int_env("NCX_SEED", 0)
        self.api_host = os.getenv("NCX_API_HOST", "127.0.0.1")
        self.api_port = _int_env("NCX_API_PORT", 5000)
        self._loaded = True

    @classmethod
    def reset(cls) -> None:
        """Forget the instance so the next call re-reads the environment"""
        cls._instance = None

    def configure_logging(self, level: str = None) -> None:
        logging.basicConfig(
            level=getattr(logging, (level or self.log_level).upper(), logging.WARNING),
            format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        )


def _int_env(name: str, default: int) -> int:
    value = os.getenv(name)
    if value is None or value == "":
        return default
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {value!r}") from None
