# pyzeta - Numerical laboratory for the Riemann zeta function, its zeros and the primes
#
# Copyright (C) 2026 pyzeta developers. All rights reserved.
#
# This program is free software; you can redistribute it and/or
# modify it under the terms of the GNU General Public License
# as published by the Free Software Foundation; either version 2
# of the License, or (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# Author:
#   pyzeta developers
#

# External imports
import numpy as np
from scapy.packet import Packet
from scapy.fields import Field, StrLenField


class PacketNoPadded(Packet):
    """Regular scapy packet with no padding.
    """
    def extract_padding(self, s):
        return b'', s


class NumpyArrayField(StrLenField):
    """Variable length field holding a flat numpy array.

    The array is stored as its raw little-endian buffer with the dtype given
    at construction time; the length in bytes is taken from another field.
    """
    __slots__ = ["dtype"]

    def __init__(self, name, default, dtype, length_from=None):
        """
        :param dtype: element type of the stored array (e.g. "<u8")
        :type dtype: ``str`` or :class:`numpy.dtype`

        :param length_from: function to obtain the field length in bytes
        :type length_from: C{callable}
        """
        StrLenField.__init__(self, name, default, length_from=length_from)
        self.dtype = np.dtype(dtype)

    def any2i(self, pkt, x):
        if x is None or isinstance(x, np.ndarray):
            return x
        if isinstance(x, bytes):
            return self.m2i(pkt, x)
        return np.asarray(x, dtype=self.dtype)

    def i2m(self, pkt, x):
        if x is None:
            return b""
        return np.ascontiguousarray(x, dtype=self.dtype).tobytes()

    def m2i(self, pkt, x):
        if len(x) % self.dtype.itemsize:
            raise ValueError("Truncated array payload")
        return np.frombuffer(x, dtype=self.dtype)

    def i2len(self, pkt, x):
        return len(self.i2m(pkt, x))

    def i2repr(self, pkt, x):
        if x is None:
            return repr(x)
        return "<%s array of %d>" % (self.dtype.str, len(x))


class LEDoubleField(Field):
    """Little-endian IEEE 754 double"""
    def __init__(self, name, default):
        Field.__init__(self, name, default, "<d")
