# aoistat.reporting.base
# Code for the creation of Reports
#
# Created:  Sat Oct 17 18:20:46 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: base.py [] $

"""
Code for the creation of Reports
"""

##########################################################################
## Imports
##########################################################################

from jinja2 import Environment, PackageLoader, select_autoescape

from aoistat.reader import format_number
from aoistat.exceptions import ImproperlyConfigured, WriterException

##########################################################################
## Report Object
##########################################################################

class Report(object):
    """
    Base class that wraps the templating language in a Django-like way.
    Rendering is deterministic: no timestamps, and newlines are kept as
    written in the template.
    """

    template_name = None

    def __init__(self, **kwargs):
        """
        Constructor. Per-instance override of class based configuration.
        """
        for key, value in kwargs.items():
            setattr(self, key, value)

    @property
    def environment(self):
        """
        The Jinja2 Environment and Template Loader
        """
        if not hasattr(self, '_environment'):
            loader = PackageLoader('aoistat.reporting', 'templates')
            self._environment = Environment(
                loader=loader,
                autoescape=select_autoescape(['svg']),
                keep_trailing_newline=True,
                trim_blocks=True,
                lstrip_blocks=True,
            )
            self._environment.filters['number'] = format_number
        return self._environment

    def render(self, path, **kwargs):
        """
        Renders the report with the template and the context data to the
        output file at path.
        """
        context  = self.get_context_data(**kwargs)
        template = self.get_template()
        try:
            template.stream(context).dump(path, encoding='utf-8')
        except OSError as e:
            raise WriterException("could not write '%s': %s" % (path, e.strerror or e))
        return path

    def render_string(self, **kwargs):
        context  = self.get_context_data(**kwargs)
        return self.get_template().render(context)

    def get_template(self):
        """
        Uses Jinja2 to fetch the template from the Environment
        """
        if self.template_name is None:
            raise ImproperlyConfigured(
                "Report requires either a definition of "
                "'template_name' or an implementation of 'get_template()'")
        return self.environment.get_template(self.template_name)

    def get_context_data(self, **kwargs):
        """
        Construct context data on a per report basis to render the report.
        """
        if 'report' not in kwargs:
            kwargs['report'] = self
        return kwargs

##########################################################################
## Text reports
##########################################################################

class AnalyticReport(Report):
    """
    Ages of both sources at one load point. Expects a `row` attribute.
    """

    template_name = "analytic.txt"

    def get_context_data(self, **kwargs):
        kwargs.setdefault('row', getattr(self, 'row', None))
        return super(AnalyticReport, self).get_context_data(**kwargs)


class ValidationReport(Report):
    """
    Worst relative error of each check. Expects a `suite` attribute.
    """

    template_name = "validate.txt"

    def get_context_data(self, **kwargs):
        suite = kwargs.setdefault('suite', getattr(self, 'suite', None))
        kwargs.setdefault('worst', [
            (policy.label, suite.worst(policy)) for policy in suite.policies
        ])
        return super(ValidationReport, self).get_context_data(**kwargs)
