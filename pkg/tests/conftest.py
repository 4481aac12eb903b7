import os

from dotenv import find_dotenv, load_dotenv

# Settings read by the container; telemetry stays off and block sums run on one worker.
TEST_ENVIRONMENT_DEFAULTS = {
    "LOGFIRE_ENABLED": "false",
    "PARALLEL_THREADS": "1",
}


def configure_environment_for_tests() -> None:
    load_dotenv()

    for candidate in (".env.test", ".env.test.example"):
        env_path = find_dotenv(candidate, raise_error_if_not_found=False)
        if env_path:
            load_dotenv(env_path, override=True)
            break

    for name, value in TEST_ENVIRONMENT_DEFAULTS.items():
        os.environ.setdefault(name, value)


configure_environment_for_tests()
