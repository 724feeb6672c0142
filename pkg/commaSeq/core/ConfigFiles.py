# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2024 commaSeq authors
#
# THE PROGRAM IS PROVIDED "AS IS" WITHOUT WARRANTY OF ANY KIND.
#

"""
This modules defines classes for commaSeq config file handling.

Settings are resolved with the precedence schema defaults < config file < environment < command line.
"""

import json
import logging
import os
from pathlib import Path
from jsonschema import Draft7Validator, validators
from jsonschema.exceptions import ValidationError
from commaSeq.core.Exceptions import ConfigError

logger = logging.getLogger(__name__)

ENV_CACHE_DIR = "COMMASEQ_CACHE_DIR"
ENV_OFFLINE = "COMMASEQ_OFFLINE"

def extendWithDefault(validatorClass):
    """
    see https://python-jsonschema.readthedocs.io/en/stable/faq/

    :param validatorClass: a jsonschema validator class
    :return: a validator class which fills in the default values of the schema
    """
    validate_properties = validatorClass.VALIDATORS["properties"]
    def setDefaults(validator, properties, instance, schema):
        for jsonProperty, subschema in properties.items():
            if "default" in subschema:
                instance.setdefault(jsonProperty, subschema["default"])
        for error in validate_properties(validator, properties, instance, schema):
            yield error
    return validators.extend(
        validatorClass, {"properties": setDefaults},
    )

def loadValidator(schemaFile):
    """
    Loads a json schema and creates a default-injecting Draft 7 validator for it.

    :param schemaFile: a Path instance
    :return: the validator
    """
    with schemaFile.open("rb") as fp:
        schema = json.load(fp)
    return extendWithDefault(Draft7Validator)(schema)

def _envFlag(value):
    return value.strip().lower() in ("1", "true", "yes", "on")

class ConfigFileLoader:
    """
    Class for loading configurations from disk using a json format along with an appropriate schema.
    """
    _validator = None

    @staticmethod
    def _getValidator():
        if ConfigFileLoader._validator is None:
            ConfigFileLoader._validator = loadValidator(Path(__file__).parent / "ConfigFileSchema.json")
        return ConfigFileLoader._validator

    @staticmethod
    def validate(cfg):
        """
        Validate a configuration dictionary and fill in the default values (in place).

        :param cfg: dictionary
        :return: cfg
        """
        try:
            ConfigFileLoader._getValidator().validate(cfg)
        except ValidationError as e:
            raise ConfigError(f"invalid configuration: {e.message}") from e
        return cfg

    @staticmethod
    def defaults():
        """
        :return: dictionary with the default values of all settings
        """
        return ConfigFileLoader.validate({})

    @staticmethod
    def load(file):
        """
        Load configuration from file.

        :param file: string or Path instance
        :return: dictionary with configuration contents (default values from schema are already applied)
        """
        if not isinstance(file, Path):
            file = Path(file)
        try:
            with file.open("r", encoding='utf-8') as fp:
                cfg = json.load(fp)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"cannot read configuration file {file}: {e}") from e
        ConfigFileLoader.validate(cfg)
        logger.debug("loaded configuration from %s", file)
        return cfg

    @staticmethod
    def resolve(file=None, environ=None, overrides=None):
        """
        Resolve the effective settings.

        :param file: optional configuration file
        :param environ: environment mapping (defaults to os.environ)
        :param overrides: dictionary of command line settings; None values are ignored
        :return: dictionary with all settings
        """
        cfg = ConfigFileLoader.load(file) if file is not None else ConfigFileLoader.defaults()
        environ = os.environ if environ is None else environ
        if environ.get(ENV_CACHE_DIR):
            cfg["cacheDir"] = environ[ENV_CACHE_DIR]
        if environ.get(ENV_OFFLINE):
            cfg["offline"] = _envFlag(environ[ENV_OFFLINE])
        for k, v in (overrides or {}).items():
            if v is not None:
                cfg[k] = v
        ConfigFileLoader.validate(cfg)
        if cfg["cacheDir"] is None:
            cfg["cacheDir"] = str(Path.home() / ".cache" / "commaSeq")
        logger.internal("effective settings: %s", cfg)
        return cfg
