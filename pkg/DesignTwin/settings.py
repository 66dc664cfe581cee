"""Project settings.

Values come from the environment (prefix ``DESIGNTWIN_``), after loading a
``.env`` file from the project root. Under pytest ``.env.test`` is preferred.
"""

import sys
from functools import lru_cache
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

BASE_DIR = Path(__file__).resolve().parent.parent

# If running tests, prefer .env.test over .env
if "pytest" in sys.modules:
    test_env_path = BASE_DIR / ".env.test"
    if test_env_path.exists():
        load_dotenv(test_env_path, override=True)
    else:
        load_dotenv(BASE_DIR / ".env", override=True)
else:
    load_dotenv(BASE_DIR / ".env")


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="DESIGNTWIN_", extra="ignore")

    # Relative input and output paths resolve against this directory
    DATA_DIR: Optional[Path] = None
    LOG_LEVEL: str = "INFO"
    DEFAULT_SEED: int = Field(default=0, ge=0, lt=2**64)
    LOG_FORMAT: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"

    def resolve(self, path: Path) -> Path:
        """Resolve ``path`` against ``DATA_DIR`` when it is relative."""
        path = Path(path)
        if path.is_absolute() or self.DATA_DIR is None:
            return path
        return self.DATA_DIR / path


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()
