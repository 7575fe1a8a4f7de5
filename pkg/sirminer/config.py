from pydantic_settings import BaseSettings, SettingsConfigDict
from typing import List

class Settings(BaseSettings):
    # Mining defaults (negative Average Product, tau=1, six-month minimum)
    default_measure: str = "nap"
    default_tau: float = 1.0
    default_lmin: int = 6

    # Candidate pair filtering
    max_abs_corr: float = 0.25

    # Oracle Configuration
    oracle_max_n: int = 18

    # Activity scoring
    activity_window: int = 6
    top_windows: int = 10

    # Batch Configuration
    batch_workers: int = 4
    batch_standardize: str = "monthly"

    # Benchmark Configuration
    bench_lengths: List[int] = [120, 240, 360, 480, 600, 720, 840, 960, 1080]
    bench_pairs_per_length: int = 20
    bench_planted_density: float = 0.05
    bench_planted_length: int = 12

    # Verification Configuration
    verify_cases: int = 1000

    # Logging
    log_level: str = "INFO"
    log_format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    model_config = SettingsConfigDict(
        env_prefix="SIRMINER_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )

# Global settings instance
settings = Settings()

# Oracle settings
ORACLE_MAX_N = settings.oracle_max_n
