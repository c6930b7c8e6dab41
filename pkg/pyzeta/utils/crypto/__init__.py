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

# Standard imports
from binascii import hexlify
# External imports
from cryptography.hazmat.primitives import constant_time
from cryptography.hazmat.backends import default_backend
from cryptography.hazmat.primitives.hashes import Hash, SHA256


DIGEST_SIZE = 32
"""Size in bytes of the payload digests stored in caches and manifests"""

FILE_BLOCK_SIZE = 1 << 20
"""Block size used when hashing files"""


def sha256_digest(*chunks):
    """Computes the SHA-256 digest of the concatenation of the chunks given.

    :param chunks: data to hash
    :type chunks: ``bytes``

    :return: raw digest
    :rtype: ``bytes``
    """
    digest = Hash(SHA256(), backend=default_backend())
    for chunk in chunks:
        digest.update(bytes(chunk))
    return digest.finalize()


def sha256_file(filename):
    """Computes the SHA-256 digest of a file, as an hex string.

    :param filename: path of the file to hash
    :type filename: ``str``

    :return: hex digest
    :rtype: ``str``

    :raise IOError: if the file can't be read
    """
    digest = Hash(SHA256(), backend=default_backend())
    with open(filename, "rb") as fd:
        while True:
            block = fd.read(FILE_BLOCK_SIZE)
            if not block:
                break
            digest.update(block)
    return hexlify(digest.finalize()).decode("ascii")


def digests_match(expected, actual):
    """Compares two digests in constant time."""
    if isinstance(expected, str):
        expected = expected.encode("ascii")
    if isinstance(actual, str):
        actual = actual.encode("ascii")
    return constant_time.bytes_eq(expected, actual)
