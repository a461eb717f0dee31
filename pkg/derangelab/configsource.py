# -*- coding: utf-8 -*-
"""Read-only configuration sources that :py:class:`LayeredSettings`
stacks on top of each other."""
import configparser
import inspect
import logging
import os
from abc import ABCMeta, abstractmethod

import yaml

log = logging.getLogger(__name__)


def boolconvert(value):
    """``"true"``/``"1"``/``"yes"`` -> True, ``"false"``/``"0"``/``"no"``
    -> False (case insensitive). Anything else is returned unchanged."""
    lowered = value.strip().lower()
    if lowered in ("true", "1", "yes", "on"):
        return True
    if lowered in ("false", "0", "no", "off"):
        return False
    return value


class ConfigSource(metaclass=ABCMeta):

    identifier = None
    """A string naming this source, used in log messages and by
    :py:meth:`LayeredSettings.where`."""

    parent = None
    """The source this one is a subsection of, or None."""

    source = None
    """Whatever backing object the subclass reads from."""

    @abstractmethod  # subclasses still call it through super()
    def __init__(self, **kwargs):
        self.identifier = kwargs.get('identifier',
                                     self.__class__.__name__.lower())
        self.parent = kwargs.get('parent')
        self.source = None

    @abstractmethod
    def has(self, key):
        """True if ``key`` carries a real value in this source. Typing
        placeholders do not count."""

    @abstractmethod
    def get(self, key):
        """The raw value of ``key``. Untyped sources return strings and
        leave conversion to :py:meth:`typevalue` of a typed source."""

    @abstractmethod
    def keys(self):
        pass  # pragma: no cover

    @abstractmethod
    def typed(self, key):
        """True if this source knows the data type of ``key``."""

    @abstractmethod
    def subsections(self):
        pass  # pragma: no cover

    @abstractmethod
    def subsection(self, key):
        """A new source of the same class scoped to section ``key``."""

    def typevalue(self, key, value):
        """Converts the untyped string ``value`` to the type that this
        source's value for ``key`` has."""
        default = self.get(key)
        kind = default if inspect.isclass(default) else type(default)
        if kind is bool:
            return boolconvert(value)
        if kind is type(None):
            return value
        return kind(value)


class DictSource(ConfigSource):
    """Base for sources whose data is (or can be made into) a nested
    dict. Nested dicts are sections."""

    def __init__(self, **kwargs):
        super(DictSource, self).__init__(**kwargs)
        self.source = {}

    def subsections(self):
        for (k, v) in self.source.items():
            if isinstance(v, dict):
                yield k

    def keys(self):
        for (k, v) in self.source.items():
            if not isinstance(v, (dict, type)):
                yield k

    def subsection(self, key):
        return self.__class__(defaults=self.source[key],
                              parent=self,
                              identifier=self.identifier)

    def typed(self, key):
        return key in self.source and self.source[key] is not None

    def has(self, key):
        return key in self.source and not isinstance(self.source[key],
                                                     (type, dict))

    def get(self, key):
        return self.source[key]


class Defaults(DictSource):
    def __init__(self, defaults=None, **kwargs):
        """Settings embedded in code.

        :param defaults: keys and values; dict values become sections,
                         and a type (eg ``int``) in place of a value
                         gives typing without a value.
        :type defaults: dict
        """
        super(Defaults, self).__init__(**kwargs)
        if defaults:
            self.source = defaults


class YAMLFile(DictSource):
    def __init__(self, yamlfilename=None, **kwargs):
        """Loads a YAML file with :py:func:`yaml.safe_load`. YAML values
        carry their own types.

        :param yamlfilename: path of the file; a missing file gives an
                             empty source and a warning.
        :type yamlfilename: str
        """
        super(YAMLFile, self).__init__(**kwargs)
        self.yamlfilename = yamlfilename
        if 'defaults' in kwargs:
            self.source = kwargs['defaults']
        elif yamlfilename and os.path.exists(yamlfilename):
            with open(yamlfilename, encoding="utf-8") as fp:
                self.source = yaml.safe_load(fp) or {}
        elif yamlfilename:
            log.warning("YAML file %s does not exist", yamlfilename)


class INIFile(ConfigSource):
    def __init__(self, inifilename=None, rootsection="__root__", **kwargs):
        """Loads an INI file with :py:mod:`configparser`. Keys of the
        ``[__root__]`` section are top level settings, every other
        section becomes a subsection. INI files are untyped.

        :param inifilename: path of the file; a missing file gives an
                            empty source and a warning.
        :type inifilename: str
        """
        super(INIFile, self).__init__(**kwargs)
        self.rootsection = rootsection
        self.inifilename = inifilename
        if 'config' in kwargs:
            self.source = kwargs['config']
        else:
            self.source = configparser.RawConfigParser()
            if inifilename and os.path.exists(inifilename):
                with open(inifilename, encoding="utf-8") as fp:
                    self.source.read_file(fp)
            elif inifilename:
                log.warning("INI file %s does not exist", inifilename)
        self.sectionkey = kwargs.get('section', rootsection)

    def typed(self, key):
        return False

    def subsections(self):
        if self.sectionkey != self.rootsection:
            return []
        return [s for s in self.source.sections() if s != self.rootsection]

    def subsection(self, key):
        return INIFile(config=self.source, section=key,
                       rootsection=self.rootsection,
                       parent=self, identifier=self.identifier)

    def has(self, key):
        return self.source.has_option(self.sectionkey, key)

    def get(self, key):
        return self.source.get(self.sectionkey, key)

    def keys(self):
        if self.source.has_section(self.sectionkey):
            for k in self.source.options(self.sectionkey):
                yield k


class Environment(ConfigSource):
    def __init__(self, environ=None, prefix="", sectionsep="__", **kwargs):
        """Settings from environment variables. With prefix
        ``DERANGE_LAB_``, ``DERANGE_LAB_JOBS`` is the setting ``jobs``
        and ``DERANGE_LAB_BIDER__MAX_N`` is ``max_n`` in section
        ``bider``.

        :param environ: a mapping like :py:data:`os.environ` (the
                        default)
        :param prefix: only variables starting with this are read
        :param sectionsep: separates section from key; a double
                           underscore leaves single underscores to key
                           names
        """
        super(Environment, self).__init__(**kwargs)
        if environ is None:
            environ = {} if kwargs.get("empty") else os.environ
        self.source = environ
        self.prefix = prefix
        self.sectionsep = sectionsep

    def _internalkeys(self):
        return [k[len(self.prefix):].lower() for k in self.source
                if k.startswith(self.prefix)]

    def keys(self):
        for k in self._internalkeys():
            if self.sectionsep not in k:
                yield k

    def has(self, key):
        return self.prefix + key.upper() in self.source

    def get(self, key):
        return self.source[self.prefix + key.upper()]

    def typed(self, key):
        return False

    def subsections(self):
        seen = []
        for k in self._internalkeys():
            if self.sectionsep in k:
                section = k.split(self.sectionsep)[0]
                if section not in seen:
                    seen.append(section)
        return seen

    def subsection(self, key):
        head = self.prefix + key.upper() + self.sectionsep
        environ = dict((self.prefix + k[len(head):], v)
                       for k, v in self.source.items() if k.startswith(head))
        return Environment(environ, prefix=self.prefix,
                           sectionsep=self.sectionsep,
                           parent=self, identifier=self.identifier)


class Commandline(ConfigSource):
    def __init__(self, namespace=None, sectionsep="_", sections=(), **kwargs):
        """Settings from a parsed :py:class:`argparse.Namespace`. Only
        attributes that are not None count as present, so options the
        user did not give fall through to lower layers. Attribute
        ``bider_max_n`` with ``sections=("bider",)`` is ``max_n`` in
        section ``bider``.

        :param namespace: result of :py:meth:`ArgumentParser.parse_args`
        :param sections: attribute name prefixes to treat as sections
        """
        super(Commandline, self).__init__(**kwargs)
        if 'values' in kwargs:
            self.source = kwargs['values']
        else:
            self.source = dict(vars(namespace)) if namespace is not None else {}
        self.sectionsep = sectionsep
        self.sections = tuple(sections)

    def _section_of(self, k):
        for s in self.sections:
            if k.startswith(s + self.sectionsep):
                return s
        return None

    def keys(self):
        for k, v in self.source.items():
            if v is not None and self._section_of(k) is None:
                yield k

    def has(self, key):
        return self.source.get(key) is not None

    def get(self, key):
        return self.source[key]

    def typed(self, key):
        # argparse has already applied type= for us
        return self.has(key) and not isinstance(self.source[key], str)

    def subsections(self):
        return [s for s in self.sections
                if any(self._section_of(k) == s and v is not None
                       for k, v in self.source.items())]

    def subsection(self, key):
        head = key + self.sectionsep
        values = dict((k[len(head):], v) for k, v in self.source.items()
                      if k.startswith(head))
        return Commandline(values=values, parent=self,
                           identifier=self.identifier)
