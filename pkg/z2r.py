import sys
from src import config
from src.run_logger import setup_logger
from src.commands import run

# Setup logging
logger = setup_logger("z2r")


def main() -> int:
    logger.debug(f"Span limit {config.SPAN_LIMIT}, {config.SEARCH_THREADS} search threads")
    try:
        return run(sys.argv[1:])
    except KeyboardInterrupt:
        logger.info("Keyboard interrupt received")
        return 130
    except Exception as e:
        logger.error(f"z2r crashed: {e}")
        raise


if __name__ == "__main__":
    sys.exit(main())
