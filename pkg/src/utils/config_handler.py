import os

import yaml

from src.utils.exceptions import ConfigError

DEFAULTS = {
    "precision_bits": 128,
    "q_terms": 64,
    "mmax": 60,
    "coth_nmax": 4000,
    "coth_mode": "periodic",
    "oracle_threads": 1,
    "verify_tolerance": 1e-6,
    "sweep_tolerance": 1e-8,
    "sweep_max_weight": 12,
    "sweep_max_depth": 4,
    "sweep_taus": ["0+2i", "0.5+2i"],
    "coth_cases": [],
    "report_dir": "logs/verification",
    "log_level": "INFO",
}

_INTEGER_KEYS = ("precision_bits", "q_terms", "mmax", "coth_nmax", "oracle_threads", "sweep_max_weight",
                 "sweep_max_depth")

_FLOAT_KEYS = ("verify_tolerance", "sweep_tolerance")


def load_configuration(path="config.yml"):
    """
    Read config.yml and fill in every missing key from DEFAULTS.

    Parameters
    ----------
    path : str
        Location of the YAML file. A missing file yields the defaults.

    Returns
    -------
    dict
        Complete configuration.
    """

    conf = {}

    if path is not None and os.path.exists(path):

        try:
            with open(path, "rb") as f:
                conf = yaml.load(f, Loader=yaml.FullLoader) or {}

        except yaml.YAMLError as error:
            raise ConfigError(f"cannot parse {path}: {error}") from error

        if not isinstance(conf, dict):
            raise ConfigError(f"{path} must hold a mapping of configuration keys")

    elif path is not None and path != "config.yml":
        raise ConfigError(f"configuration file {path} does not exist")

    configuration = {key: conf.get(key, default) for key, default in DEFAULTS.items()}

    try:
        for key in _INTEGER_KEYS:
            configuration[key] = int(configuration[key])

        for key in _FLOAT_KEYS:
            configuration[key] = float(configuration[key])

    except (TypeError, ValueError) as error:
        raise ConfigError(f"invalid numeric value in configuration: {error}") from error

    if configuration["precision_bits"] < 53:
        raise ConfigError("precision_bits must be at least 53")

    if configuration["coth_mode"] not in ("periodic", "direct"):
        raise ConfigError(f"coth_mode must be 'periodic' or 'direct', got {configuration['coth_mode']!r}")

    if configuration["oracle_threads"] < 1 or configuration["mmax"] < 1:
        raise ConfigError("oracle_threads and mmax must be >= 1")

    return configuration
