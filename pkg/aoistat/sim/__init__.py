# aoistat.sim
# Discrete-event simulation of the packet management policies
#
# Created:  Sat Oct 17 13:08:12 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: __init__.py [] $

"""
Discrete-event simulation of the packet management policies
"""

##########################################################################
## Imports
##########################################################################

from .base import Packet, Delivery, Arrival, ServiceCompletion, SystemState, PacketPolicy
from .policies import POLICIES, get_policy, step_policy
from .engine import SimConfig, SimResult, simulate, run_replication, aoi_area_increment
