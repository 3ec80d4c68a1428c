# ============================================================================ #
#
#                             Copyright (c) 2023
#                               Sebastian Thiem
#
#                 Permission is hereby granted, free of charge,
#                to any person obtaining a copy of this software
#              and associated documentation files (the "Software"),
#                 to deal in the Software without restriction,
#                 including without limitation the rights to
#            use, copy, modify, merge, publish, distribute, sublicense,
#                     and/or sell copies of the Software,
#         and to permit persons to whom the Software is furnished to do so,
#                    subject to the following conditions:
#
#     The above copyright notice and this permission notice shall be included
#             in all copies or substantial portions of the Software.
#
#         THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
#               EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO
#                      THE WARRANTIES OF MERCHANTABILITY,
#             FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT.
#             IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS BE
#               LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
#              WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE,
#            ARISING FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE
#                 OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.
# ============================================================================ #
#
# Description:  Configuration loading for the extension engine scripts.
#
# ============================================================================ #
import configparser
import logging
import os
from os.path import isdir

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

DEFAULT_CONFIG = "config.ini"

DEFAULTS = {
    "limits": {"MaxProjectivePaths": "10000"},
    "sweep": {"MaxLength": "4", "Parallel": "1"},
    "output": {"Format": "text"},
    "logging": {"Level": "WARNING"},
    "data": {"TriangulationFolder": "data/triangulations/"},
}


def load_config(path: str | None = None) -> configparser.ConfigParser:
    """Read the config file, falling back to built in defaults for any
    missing section or key.

    The path is taken from, in order: the argument, the GENTLE_EXT_CONFIG
    environment variable (a `.env` file is honoured), then `config.ini`.

    Args:
        path (str | None): Explicit config path.

    Returns:
        configparser.ConfigParser: The loaded configuration.
    """
    load_dotenv(".env")
    path = path or os.getenv("GENTLE_EXT_CONFIG", DEFAULT_CONFIG)

    config = configparser.ConfigParser()
    config.optionxform = str
    config.read_dict(DEFAULTS)
    if os.path.isfile(path):
        config.read(path)
    else:
        logger.info("No config file at %s, using defaults", path)

    level = os.getenv("GENTLE_EXT_LOG_LEVEL")
    if level:
        config["logging"]["Level"] = level

    return config


def check_for_config_issues(config: configparser.ConfigParser,
                            required_parameters: list[tuple[str, str]] = [],
                            folder_parameters: list[tuple[str, str]] = []) -> bool:
    """Check that the config passed contains all the necessary information,
    and that no folders are missing.

    Args:
        config (ConfigParser): The configuration to inspect.
        required_parameters (list): (section, key) pairs that must be set.
        folder_parameters (list): (section, key) pairs naming folders
            that must exist.

    Returns:
        bool: True if the config is valid, false if not.
    """
    config_valid = True

    # Check that required params are present and non-empty
    for category, parameter in required_parameters:
        if category not in config or not config[category].get(parameter, "").strip():
            config_valid = False
            print(f"Required parameter \"{parameter}\" under category "
                  f"\"{category}\" is missing from the config.")

    # Check that the folders exist
    for category, parameter in folder_parameters:
        folder = config[category].get(parameter, "") if category in config else ""
        if not isdir(folder):
            config_valid = False
            print(f"{parameter} configured as {folder} , which does not exist.")

    # Integers that must parse
    for category, parameter in (("limits", "MaxProjectivePaths"),
                                ("sweep", "MaxLength"),
                                ("sweep", "Parallel")):
        try:
            if int(config[category][parameter]) < 0:
                raise ValueError
        except (KeyError, ValueError):
            config_valid = False
            print(f"{parameter} under \"{category}\" must be a non-negative integer.")

    return config_valid
