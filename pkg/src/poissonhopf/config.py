#!/usr/bin/env python
import logging
import os

datadir = os.path.join(os.path.dirname(os.path.realpath(__file__)), 'data')

# Defaults for the command line and the randomized consequence checks.
DEFAULT_SEED = int(os.environ.get('POISSONHOPF_SEED', 0))
DEFAULT_THREADS = int(os.environ.get('POISSONHOPF_THREADS', 1))
LOG_LEVEL = os.environ.get('POISSONHOPF_LOGLEVEL', 'WARNING')

# Number of random inputs drawn per randomized check in `check all`.
SAMPLES = {
    'identities': 12,
    'relations': 200,
    'confluence': 200,
    'cochains': 50,
    'chains': 50,
    'module-algebra': 6,
}

LOG_FORMAT = '%(levelname)s %(name)s: %(message)s'


def setup_logging(level=None):
    '''Configure the package logger (stderr) once.'''
    logger = logging.getLogger('poissonhopf')
    level = (level or LOG_LEVEL)
    if isinstance(level, str):
        level = getattr(logging, level.upper(), logging.WARNING)
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)
    logger.setLevel(level)
    return logger
