# aoistat.reporting.plots
# Single-series SVG polylines of sweeps and trade-off curves
#
# Created:  Sat Oct 17 18:57:12 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: plots.py [] $

"""
Single-series SVG polylines of sweeps and trade-off curves
"""

##########################################################################
## Imports
##########################################################################

import math

from aoistat.reporting.base import Report
from aoistat.exceptions import ImproperlyConfigured

##########################################################################
## Polyline Plot
##########################################################################

class PolylinePlot(Report):
    """
    Draws one series of (x, y) points as a polyline with labelled axes and
    the extreme values as ticks.
    """

    template_name = "plot.svg"

    title  = ""
    xlabel = "x"
    ylabel = "y"
    width  = 640
    height = 480
    margin = 64

    def get_context_data(self, **kwargs):
        points = [(float(x), float(y)) for x, y in kwargs.pop('points', getattr(self, 'points', ()))]
        if len(points) < 2:
            raise ImproperlyConfigured("a plot needs at least two points, got %i" % len(points))
        if not all(math.isfinite(v) for point in points for v in point):
            raise ImproperlyConfigured("plot points must be finite")

        xs, ys = [p[0] for p in points], [p[1] for p in points]
        xmin, xmax = min(xs), max(xs)
        ymin, ymax = min(ys), max(ys)
        xspan = (xmax - xmin) or 1.0
        yspan = (ymax - ymin) or 1.0

        left, bottom = self.margin, self.height - self.margin
        inner_w = self.width - 2 * self.margin
        inner_h = self.height - 2 * self.margin

        coords = [
            (left + (x - xmin) / xspan * inner_w, bottom - (y - ymin) / yspan * inner_h)
            for x, y in points
        ]

        kwargs.update({
            'title': self.title,
            'xlabel': self.xlabel,
            'ylabel': self.ylabel,
            'width': self.width,
            'height': self.height,
            'left': left,
            'right': self.width - self.margin,
            'top': self.margin,
            'bottom': bottom,
            'polyline': " ".join("%.2f,%.2f" % c for c in coords),
            'xticks': (("%.4g" % xmin, left), ("%.4g" % xmax, self.width - self.margin)),
            'yticks': (("%.4g" % ymin, bottom), ("%.4g" % ymax, self.margin)),
        })
        return super(PolylinePlot, self).get_context_data(**kwargs)
