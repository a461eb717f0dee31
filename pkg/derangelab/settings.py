# -*- coding: utf-8 -*-
import itertools
import logging

log = logging.getLogger(__name__)


class LayeredSettings(object):
    def __init__(self, *sources):
        """Unified, read-only access to settings coming from several
        sources. Sources are given lowest precedence first; the last
        source that has a key wins. Values from untyped sources (INI
        files, environment variables) are converted to the type the
        same key has in a lower, typed source such as
        :py:class:`~derangelab.configsource.Defaults`.

        Settings are read as attributes, sections are nested
        LayeredSettings objects::

            settings = LayeredSettings(Defaults({'jobs': 1,
                                                 'bider': {'max_n': 5}}),
                                       Environment(prefix='DERANGE_LAB_'))
            settings.jobs          # 1, or int(os.environ['DERANGE_LAB_JOBS'])
            settings.bider.max_n

        :param \\*sources: initialized ConfigSource objects
        """
        self._sources = sources
        self._subsections = {}
        self._parent = None
        self._sectionkey = None

        sectionkeys = []
        for src in self._sources:
            for k in src.subsections():
                if k not in sectionkeys:
                    sectionkeys.append(k)

        for k in sectionkeys:
            # every layer gets a source for every section, an empty one
            # where the real source lacks it, so layers stay aligned
            s = []
            for src in self._sources:
                if k in list(src.subsections()):
                    s.append(src.subsection(k))
                else:
                    s.append(src.__class__(parent=src,
                                           identifier=src.identifier,
                                           empty=True))
            c = self.__class__(*s)
            c._sectionkey = k
            c._parent = self
            self._subsections[k] = c

    @staticmethod
    def get(settings, key, default=None):
        """Like :py:meth:`dict.get`."""
        if hasattr(settings, key):
            return getattr(settings, key)
        return default

    @staticmethod
    def where(settings, key):
        """Identifier of the source a key's value comes from, or None."""
        for source in reversed(settings._sources):
            if source.has(key):
                return source.identifier
        return None

    @staticmethod
    def dump(settings):
        """The resolved settings as a nested dict.

        :rtype: dict
        """
        def _dump(element):
            section = dict()
            for key, subsection in element._subsections.items():
                section[key] = _dump(subsection)
            for key in element:
                section[key] = getattr(element, key)
            return section

        return _dump(settings)

    def __repr__(self):
        return self.dump(self).__repr__()

    def __iter__(self):
        seen = set()
        for k in itertools.chain(*[s.keys() for s in self._sources]):
            if k not in seen and k not in self._subsections:
                seen.add(k)
                yield k

    def __getattr__(self, name):
        if name.startswith("_"):
            raise AttributeError(name)
        if name in self._subsections:
            return self._subsections[name]

        for source in reversed(self._sources):
            if source.has(name):
                break
        else:
            raise AttributeError("Setting %s doesn't exist" % name)

        if source.typed(name):
            return source.get(name)
        for typesource in reversed(self._sources):
            if typesource.typed(name):
                log.debug("typing %s from %s as found in %s", name,
                          source.identifier, typesource.identifier)
                return typesource.typevalue(name, source.get(name))
        return source.get(name)

    def __setattr__(self, name, value):
        if name.startswith("_"):
            object.__setattr__(self, name, value)
            return
        raise AttributeError("Settings are read-only (tried to set %s)" % name)
