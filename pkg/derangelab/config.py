# -*- coding: utf-8 -*-
import logging
import os
from dataclasses import dataclass
from typing import Optional

from .budget import BIDER, PERM, SWEEP, Budgets
from .configsource import Commandline, Defaults, Environment, INIFile, YAMLFile
from .errors import UsageError
from .settings import LayeredSettings

log = logging.getLogger(__name__)

FORMATS = ("text", "json", "csv")
ENV_PREFIX = "DERANGE_LAB_"
FAMILIES = (PERM, SWEEP, BIDER)


def default_settings():
    return {'format': 'text',
            'max_n': int,
            'jobs': 1,
            'timings': False,
            'config': str,
            PERM: {'max_n': 10},
            SWEEP: {'max_n': 8},
            BIDER: {'max_n': 5}}


@dataclass(frozen=True)
class RunConfig(object):
    """Everything a command needs to know about how to run. There is no
    seed; every computation is deterministic."""
    output_format: str = "text"
    max_n: Optional[int] = None
    budgets: Budgets = Budgets()
    jobs: int = 1
    timings: bool = False

    def __post_init__(self):
        if self.output_format not in FORMATS:
            raise UsageError("format must be one of %s, not %r" %
                             (", ".join(FORMATS), self.output_format))
        if self.max_n is not None and self.max_n < 1:
            raise UsageError("max-n must be at least 1, got %s" % self.max_n)
        if self.jobs < 1:
            raise UsageError("jobs must be at least 1, got %s" % self.jobs)

    @classmethod
    def from_settings(cls, settings):
        """
        :type settings: derangelab.settings.LayeredSettings
        :rtype: RunConfig
        """
        try:
            max_n = LayeredSettings.get(settings, 'max_n')
            budgets = Budgets(**dict(
                ("%s_max_n" % family, int(getattr(settings, family).max_n))
                for family in FAMILIES))
            config = cls(output_format=str(settings.format),
                         max_n=max_n,
                         budgets=budgets.with_override(max_n),
                         jobs=int(settings.jobs),
                         timings=bool(settings.timings))
        except (TypeError, ValueError) as e:
            raise UsageError("bad setting: %s" % e)
        log.debug("run config: %s", config)
        return config


def config_file_source(path):
    """The right source for ``path`` judging by its extension."""
    if path.endswith((".yaml", ".yml")):
        return YAMLFile(path, identifier="configfile")
    if path.endswith((".ini", ".cfg")):
        return INIFile(path, identifier="configfile")
    raise UsageError("don't know how to read config file %s "
                     "(use .ini, .cfg, .yaml or .yml)" % path)


def load_settings(namespace=None, environ=None, configfile=None):
    """Stacks code defaults, an optional config file, the environment
    and the command line, in that order of precedence."""
    if environ is None:
        environ = os.environ
    if configfile is None and namespace is not None:
        configfile = getattr(namespace, 'config', None)
    if configfile is None:
        configfile = environ.get(ENV_PREFIX + "CONFIG")
    sources = [Defaults(default_settings())]
    if configfile:
        sources.append(config_file_source(configfile))
    sources.append(Environment(environ, prefix=ENV_PREFIX))
    if namespace is not None:
        sources.append(Commandline(namespace, sections=FAMILIES))
    return LayeredSettings(*sources)


def load_run_config(namespace=None, environ=None, configfile=None):
    return RunConfig.from_settings(load_settings(namespace, environ,
                                                 configfile))
